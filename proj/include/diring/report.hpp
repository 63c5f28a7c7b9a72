// Analysis reports as JSON and as text. Elements are always referenced by
// label. Requires nlohmann/json.

#ifndef DIRING_REPORT_HPP_
#define DIRING_REPORT_HPP_

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diring.hpp"
#include "enumeration.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "radical.hpp"
#include "suites.hpp"

namespace diring {

  using Json = nlohmann::ordered_json;

  inline constexpr int kReportSchemaVersion = 1;

  inline Json labels_json(DiringTable const& d, SubsetMask const& m) {
    return Json(labels_of(d, m));
  }

  inline Json masks_json(DiringTable const& d, std::vector<SubsetMask> const& ms) {
    Json out = Json::array();
    for (auto const& m : ms) {
      out.push_back(labels_json(d, m));
    }
    return out;
  }

  inline Json violations_json(ValidationReport const& r) {
    Json out = Json::array();
    for (auto const& v : r.violations()) {
      out.push_back(Json{{"axiom", v.axiom}, {"message", v.message}});
    }
    return out;
  }

  inline Json radical_json(DiringTable const& d, RadicalReport const& r) {
    return Json{
        {"three_maximal_left_ideals", masks_json(d, r.three_maximal_left_ideals)},
        {"primitive_ideals", masks_json(d, r.primitive_ideals)},
        {"rad3_via_annihilators", labels_json(d, r.rad3_via_annihilators)},
        {"rad3_via_primitive_ideals", labels_json(d, r.rad3_via_primitive_ideals)},
        {"agrees", r.agrees},
        {"family_empty", r.family_empty},
    };
  }

  inline Json suites_json(SuiteRunner const& run) {
    Json out = Json::object();
    for (auto const& t : run.tallies()) {
      out[t.name] = Json{{"instances", t.instances},
                         {"vacuous", t.vacuous},
                         {"violations", t.violations},
                         {"findings", t.findings},
                         {"messages", t.messages}};
    }
    return out;
  }

  inline Json halos_json(DiringTable const& d) {
    Halos const& h = d.halos();
    return Json{{"left", labels_json(d, h.left)},
                {"right", labels_json(d, h.right)},
                {"two_sided", labels_json(d, h.two_sided)},
                {"additive", labels_json(d, h.additive)}};
  }

  // Full report for a validated one-sided diring. Left-diring theory
  // (ideals, radical, suites) is included only for left dirings. Module
  // suites use all modules of order ≤ max_module_order when the diring is
  // small enough for the module census, else the regular module only.
  inline Json analysis_json(DiringTable const& d, std::string const& name, std::size_t max_module_order = 4) {
    Json out;
    out["schema_version"] = kReportSchemaVersion;
    out["name"]           = name;
    out["kind"]           = "diring";
    out["valid"]          = true;
    out["order"]          = d.order();
    out["elements"]       = d.group().names();
    out["is_left_diring"] = d.is_left();
    out["is_right_diring"] = d.is_right();
    out["is_diring"]      = d.is_diring();
    out["halos"]          = halos_json(d);
    if (!d.is_left()) {
      return out;
    }
    DiringRef const ref = share(d);
    out["ideals"]        = masks_json(d, ideal_masks(d, IdealKind::two_sided));
    out["left_ideals"]   = masks_json(d, ideal_masks(d, IdealKind::left));
    out["simplicity"]    = to_string(simplicity_class(d));
    RadicalReport const rad = rad3(ref);
    out["three_maximal_left_ideals"] = masks_json(d, rad.three_maximal_left_ideals);
    out["primitive_ideals"]          = masks_json(d, rad.primitive_ideals);
    out["rad3"]                      = radical_json(d, rad);
    out["three_primitive"]           = is_3_primitive(ref).primitive;
    if (d.order() > 1) {
      out["three_semi_primitive"] = is_3_semi_primitive(ref);
    } else {
      out["three_semi_primitive"] = nullptr;
    }
    SuiteRunner run;
    if (d.order() <= kCensusCap) {
      run.run(ref, name, max_module_order);
    } else {
      run.run(ref, name, std::vector<LeftModuleTable>{regular_module(ref)});
    }
    out["suites"] = suites_json(run);
    out["suite_violations"] = run.total_violations();
    out["suite_findings"]   = run.total_findings();
    return out;
  }

  inline std::string list_text(DiringTable const& d, std::vector<SubsetMask> const& ms) {
    std::string s = "[";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      s += (i ? ", " : "") + d.format(ms[i]);
    }
    return s + "]";
  }

  // Human-readable summary of the same report.
  inline std::string analysis_text(Json const& j) {
    std::ostringstream os;
    auto set = [](Json const& arr) {
      std::string s = "{";
      for (std::size_t i = 0; i < arr.size(); ++i) {
        s += (i ? "," : "") + arr[i].get<std::string>();
      }
      return s + "}";
    };
    auto sets = [&](Json const& arr) {
      std::string s = "[";
      for (std::size_t i = 0; i < arr.size(); ++i) {
        s += (i ? ", " : "") + set(arr[i]);
      }
      return s + "]";
    };
    os << "structure: " << j["name"].get<std::string>() << " (order " << j["order"].get<std::size_t>() << ")\n";
    os << "left diring: " << (j["is_left_diring"].get<bool>() ? "yes" : "no")
       << ", right diring: " << (j["is_right_diring"].get<bool>() ? "yes" : "no")
       << ", diring: " << (j["is_diring"].get<bool>() ? "yes" : "no") << '\n';
    os << "left halo: " << set(j["halos"]["left"]) << '\n';
    os << "right halo: " << set(j["halos"]["right"]) << '\n';
    os << "two-sided halo: " << set(j["halos"]["two_sided"]) << '\n';
    os << "additive halo: " << set(j["halos"]["additive"]) << '\n';
    if (!j.contains("ideals")) {
      return os.str();
    }
    os << "ideals: " << sets(j["ideals"]) << '\n';
    os << "left ideals: " << sets(j["left_ideals"]) << '\n';
    os << "class: " << j["simplicity"].get<std::string>() << '\n';
    os << "3-maximal left ideals: " << sets(j["three_maximal_left_ideals"]) << '\n';
    os << "3-primitive ideals: " << sets(j["primitive_ideals"]) << '\n';
    auto const& r = j["rad3"];
    os << "rad3: " << set(r["rad3_via_annihilators"]) << " (via primitive ideals " << set(r["rad3_via_primitive_ideals"])
       << ", agrees=" << (r["agrees"].get<bool>() ? "true" : "false")
       << ", family_empty=" << (r["family_empty"].get<bool>() ? "true" : "false") << ")\n";
    os << "3-primitive: " << (j["three_primitive"].get<bool>() ? "yes" : "no") << '\n';
    if (!j["three_semi_primitive"].is_null()) {
      os << "3-semi-primitive: " << (j["three_semi_primitive"].get<bool>() ? "yes" : "no") << '\n';
    }
    os << "property suites: " << j["suite_violations"].get<std::size_t>() << " violations, "
       << j["suite_findings"].get<std::size_t>() << " findings\n";
    for (auto const& [name, t] : j["suites"].items()) {
      os << "  " << name << ": " << t["instances"].get<std::size_t>() << " instances, "
         << t["violations"].get<std::size_t>() << " violations";
      if (t["findings"].get<std::size_t>() != 0) {
        os << ", " << t["findings"].get<std::size_t>() << " findings";
      }
      os << '\n';
      for (auto const& m : t["messages"]) {
        os << "    " << m.get<std::string>() << '\n';
      }
    }
    return os.str();
  }

  inline Json census_record_json(DiringRecord const& r) {
    InvariantSummary const& s = r.summary;
    return Json{{"group", r.group},
                {"canonical_form", to_hex(r.canonical_form)},
                {"halo_sizes", {s.left_halo, s.right_halo, s.two_sided_halo, s.additive_halo}},
                {"ideals", s.ideals},
                {"left_ideals", s.left_ideals},
                {"simplicity", to_string(s.simplicity)},
                {"rad3_size", s.rad3_size},
                {"family_empty", s.family_empty},
                {"three_primitive", s.primitive},
                {"three_semi_primitive", s.semi_primitive}};
  }

}  // namespace diring

#endif  // DIRING_REPORT_HPP_
