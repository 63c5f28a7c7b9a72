// Command-line front end: verify, analyze, radical, quotient, census,
// modules, hom, props.
//
// Exit codes: 0 ok, 1 axiom or property violation, 2 parse error,
// 3 other runtime error (cap exceeded, unreadable file), 64 bad usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diring/enumeration.hpp"
#include "diring/io.hpp"
#include "diring/radical.hpp"
#include "diring/report.hpp"
#include "diring/suites.hpp"

namespace {

  using namespace diring;

  constexpr int kOk        = 0;
  constexpr int kViolation = 1;
  constexpr int kParse     = 2;
  constexpr int kRuntime   = 3;
  constexpr int kUsage     = 64;

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + path);
    }
    out << text;
  }

  // First structure of the file, which must be a valid diring.
  DiringTable first_diring(std::string const& path, std::string* name = nullptr) {
    auto loaded = load_file(path);
    for (auto& s : loaded) {
      if (s.diring) {
        if (!s.diring->ok()) {
          throw Error(path + ": diring '" + s.file.name + "' is invalid:\n" + s.diring->report().str());
        }
        if (name) {
          *name = s.file.name;
        }
        return s.diring->value();
      }
    }
    throw Error(path + ": no diring in file");
  }

  int cmd_verify(std::string const& path) {
    auto loaded = load_file(path);
    int  rc     = kOk;
    for (auto const& s : loaded) {
      if (s.ok()) {
        std::string what = "module";
        if (s.diring) {
          DiringTable const& d = s.diring->value();
          what = d.is_diring() ? "diring" : d.is_left() ? "left diring (not a diring)" : "right diring (not a diring)";
        }
        std::cout << "ok: " << s.file.name << ": " << what << '\n';
      } else {
        rc = kViolation;
        std::cout << "invalid: " << s.file.name << '\n';
        ValidationReport const rep = s.report();
        for (auto const& v : rep.violations()) {
          std::cout << "  " << v.axiom << ": " << v.message << '\n';
        }
      }
    }
    return rc;
  }

  Json module_json(LeftModuleTable const& m, std::string const& name) {
    Json out;
    out["schema_version"] = kReportSchemaVersion;
    out["name"]           = name;
    out["kind"]           = "module";
    out["valid"]          = true;
    out["order"]          = m.order();
    out["elements"]       = m.carrier().names();
    auto mask             = [&m](SubsetMask const& s) {
      std::vector<std::string> v;
      for (Elem x : s.elements()) {
        v.push_back(m.name(x));
      }
      return Json(v);
    };
    out["additive_halo"] = mask(m.halo());
    auto const dec       = decompose(m);
    out["even_part"]     = mask(dec.even);
    Json subs            = Json::array();
    for (auto const& s : enumerate_submodules(m)) {
      subs.push_back(mask(s));
    }
    out["submodules"]         = subs;
    out["three_irreducible"]  = is_3_irreducible(m);
    auto const red            = is_completely_3_reducible(m);
    out["completely_three_reducible"] = red.completely_reducible;
    out["annihilator"]        = labels_json(m.ring(), annihilator(m));
    out["faithful"]           = is_faithful(m);
    ValidationReport checks   = module_halo_check(m);
    checks.merge(left_translation_check(m), "translations");
    out["violations"] = violations_json(checks);
    return out;
  }

  int cmd_analyze(std::string const& path, std::string const& json_out, std::size_t max_module_order) {
    auto loaded = load_file(path);
    auto const& s = loaded.front();
    if (!s.ok()) {
      std::cout << "invalid: " << s.file.name << '\n' << s.report().str();
      return kViolation;
    }
    Json j;
    if (s.diring) {
      j = analysis_json(s.diring->value(), s.file.name, max_module_order);
    } else {
      j = module_json(s.module->value(), s.file.name);
    }
    if (!json_out.empty()) {
      write_output(json_out, j.dump(2) + "\n");
    }
    if (json_out != "-") {
      if (s.diring) {
        std::cout << analysis_text(j);
      } else {
        std::cout << j.dump(2) << '\n';
      }
    }
    bool const bad = (j.contains("suite_violations") && j["suite_violations"].get<std::size_t>() != 0)
                     || (j.contains("violations") && !j["violations"].empty());
    return bad ? kViolation : kOk;
  }

  int cmd_radical(std::string const& path, bool json) {
    std::string       name;
    DiringTable const d = first_diring(path, &name);
    if (!d.is_left()) {
      throw Error(name + " is not a left diring");
    }
    RadicalReport const r = rad3(d);
    if (json) {
      Json j{{"schema_version", kReportSchemaVersion}, {"name", name}, {"rad3", radical_json(d, r)}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "3-maximal left ideals: " << list_text(d, r.three_maximal_left_ideals) << '\n'
                << "3-primitive ideals: " << list_text(d, r.primitive_ideals) << '\n'
                << "rad3 via annihilators: " << d.format(r.rad3_via_annihilators) << '\n'
                << "rad3 via primitive ideals: " << d.format(r.rad3_via_primitive_ideals) << '\n'
                << "agrees: " << (r.agrees ? "true" : "false") << '\n'
                << "family_empty: " << (r.family_empty ? "true" : "false") << '\n';
    }
    return r.agrees ? kOk : kViolation;
  }

  int cmd_quotient(std::string const& path, std::vector<std::string> const& labels, std::string const& out) {
    std::string       name;
    DiringTable const d = first_diring(path, &name);
    SubsetMask const  i = mask_from_labels(d, labels);
    auto const        r = is_ideal(d, i, IdealKind::two_sided);
    if (!r.ok()) {
      std::cout << d.format(i) << " is not a two-sided ideal\n" << r.str();
      return kViolation;
    }
    write_output(out, serialize(quotient_diring(d, i).diring, name + "_quotient"));
    return kOk;
  }

  FiniteAbelianGroup group_argument(std::string const& arg, std::string& spec) {
    if (std::filesystem::exists(arg)) {
      auto loaded = load_file(arg);
      auto const& s = loaded.front();
      if (s.diring && s.diring->ok()) {
        spec = s.file.name;
        return s.diring->value().group();
      }
      if (s.module && s.module->ok()) {
        spec = s.file.name;
        return s.module->value().carrier();
      }
      throw Error(arg + ": first structure is invalid");
    }
    spec = arg;
    return group_from_spec(arg);
  }

  int cmd_census(std::vector<std::string> const& groups, std::size_t up_to, std::size_t jobs, bool force,
                 bool tables, std::string const& json_out) {
    std::vector<std::pair<std::string, FiniteAbelianGroup>> todo;
    for (std::size_t n = 1; n <= up_to; ++n) {
      for (auto const& spec : abelian_group_specs(n)) {
        todo.emplace_back(spec, group_from_spec(spec));
      }
    }
    for (auto const& g : groups) {
      std::string spec;
      auto        grp = group_argument(g, spec);
      todo.emplace_back(spec, std::move(grp));
    }
    if (todo.empty()) {
      throw CLI::ValidationError("census", "give --group or --up-to");
    }
    CensusOptions opts{jobs, force};
    Json          all = Json::array();
    std::size_t   total = 0;
    for (auto const& [spec, grp] : todo) {
      auto const recs = enumerate_left_dirings(grp, spec, opts);
      for (std::size_t k = 0; k < recs.size(); ++k) {
        auto const& r = recs[k];
        std::cout << "# " << spec << " #" << k << " canonical=" << to_hex(r.canonical_form) << ' '
                  << r.summary.str() << '\n';
        if (tables) {
          std::cout << serialize(r.structure, spec + "_" + std::to_string(k)) << '\n';
        }
        all.push_back(census_record_json(r));
      }
      std::cout << "summary: " << spec << ": " << recs.size()
                << " left dirings up to isomorphism (count computed by this tool)\n";
      total += recs.size();
    }
    if (todo.size() > 1) {
      std::cout << "summary: total " << total << " left dirings\n";
    }
    if (!json_out.empty()) {
      Json j{{"schema_version", kReportSchemaVersion}, {"records", all}};
      write_output(json_out, j.dump(2) + "\n");
    }
    return kOk;
  }

  int cmd_modules(std::string const& path, std::size_t max_order, bool tables, bool force) {
    std::string     name;
    DiringRef const d = share(first_diring(path, &name));
    if (!d->is_left()) {
      throw Error(name + " is not a left diring");
    }
    CensusOptions opts{0, force};
    for (std::size_t m = 1; m <= max_order; ++m) {
      auto const recs = enumerate_modules(d, m, opts);
      for (std::size_t k = 0; k < recs.size(); ++k) {
        auto const& r  = recs[k];
        auto const& mm = r.structure;
        std::cout << "# order " << m << " " << r.group << " #" << k << " canonical=" << to_hex(r.canonical_form)
                  << " halo=" << mm.format(mm.halo()) << " submodules=" << enumerate_submodules(mm).size()
                  << (is_3_irreducible(mm) ? " 3-irreducible" : "") << (is_faithful(mm) ? " faithful" : "")
                  << '\n';
        if (tables) {
          std::cout << serialize(mm, name + "_M" + std::to_string(m) + "_" + std::to_string(k), name) << '\n';
        }
      }
      std::cout << "summary: order " << m << ": " << recs.size() << " modules up to isomorphism\n";
    }
    return kOk;
  }

  std::string format_map(std::vector<Elem> const& map, FiniteAbelianGroup const& src, FiniteAbelianGroup const& tgt) {
    std::string s;
    for (std::size_t x = 0; x < map.size(); ++x) {
      s += (x ? " " : "") + src.name(static_cast<Elem>(x)) + "->" + tgt.name(map[x]);
    }
    return s;
  }

  int cmd_hom(std::string const& p1, std::string const& p2, bool iso) {
    auto a = load_file(p1);
    auto b = load_file(p2);
    // Use the last structure of each file, so a module file (diring then
    // module) selects its module.
    auto const& x = a.back();
    auto const& y = b.back();
    if (!x.ok() || !y.ok()) {
      std::cout << "invalid input structure\n";
      return kViolation;
    }
    std::size_t count = 0;
    if (x.diring && y.diring) {
      DiringTable const& s = x.diring->value();
      DiringTable const& t = y.diring->value();
      if (!s.is_left() || !t.is_left()) {
        throw Error("hom: both dirings must be left dirings");
      }
      for (auto const& h : enumerate_diring_homs(s, t)) {
        if (iso && !(s.order() == t.order() && image(s, t, h).is_full())) {
          continue;
        }
        std::cout << format_map(h.map, s.group(), t.group()) << '\n';
        ++count;
      }
    } else if (x.module && y.module) {
      LeftModuleTable const& s = x.module->value();
      LeftModuleTable const& t = y.module->value();
      for (auto const& h : hom_group(s, t)) {
        if (iso && !is_bijective(h, t.order())) {
          continue;
        }
        std::cout << format_map(h.map, s.carrier(), t.carrier()) << '\n';
        ++count;
      }
    } else {
      throw Error("hom: both files must hold dirings or both modules");
    }
    std::cout << "summary: " << count << (iso ? " isomorphisms" : " homomorphisms") << '\n';
    return kOk;
  }

  int cmd_props(std::string const& target, std::size_t max_module_order) {
    SuiteRunner run;
    if (std::filesystem::exists(target)) {
      std::string     name;
      DiringRef const d = share(first_diring(target, &name));
      if (!d->is_left()) {
        throw Error(name + " is not a left diring");
      }
      if (d->order() <= kCensusCap) {
        run.run(d, name, max_module_order);
      } else {
        run.run(d, name, std::vector<LeftModuleTable>{regular_module(d)});
      }
    } else {
      // "all:N" runs every group of order ≤ N; otherwise a single group spec.
      std::vector<std::string> specs;
      if (target.rfind("all:", 0) == 0) {
        std::size_t const n = std::stoul(target.substr(4));
        for (std::size_t k = 1; k <= n; ++k) {
          for (auto const& s : abelian_group_specs(k)) {
            specs.push_back(s);
          }
        }
      } else {
        specs.push_back(target);
      }
      for (auto const& spec : specs) {
        auto const recs = enumerate_left_dirings(spec);
        for (std::size_t k = 0; k < recs.size(); ++k) {
          run.run(share(recs[k].structure), spec + "#" + std::to_string(k), max_module_order);
        }
      }
    }
    std::cout << "dirings: " << run.dirings_processed() << ", modules: " << run.modules_processed() << '\n';
    for (auto const& t : run.tallies()) {
      std::cout << t.name << ": " << t.instances << " instances (" << t.vacuous << " vacuous), " << t.violations
                << " violations, " << t.findings << " findings\n";
      for (auto const& m : t.messages) {
        std::cout << "  " << m << '\n';
      }
    }
    return run.total_violations() == 0 ? kOk : kViolation;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite left dirings: validation, ideals, modules, radicals and census"};
  app.require_subcommand(1);

  std::string file, file2, json_out, out_path;
  std::size_t max_module_order = 4, jobs = 0, up_to = 0, max_order = 1;
  bool        json = false, force = false, tables = false, iso = false;
  std::vector<std::string> labels, groups;

  auto* verify = app.add_subcommand("verify", "Validate every structure in a file");
  verify->add_option("file", file, "Structure file")->required();

  auto* analyze = app.add_subcommand("analyze", "Full analysis of the first structure in a file");
  analyze->add_option("file", file, "Structure file")->required();
  analyze->add_option("--json", json_out, "Write the JSON report to this path ('-' for stdout only)");
  analyze->add_option("--max-module-order", max_module_order, "Module order bound for the property suites")
      ->capture_default_str();

  auto* radical = app.add_subcommand("radical", "The 3-radical by both formulas");
  radical->add_option("file", file, "Diring file")->required();
  radical->add_flag("--json", json, "Print JSON");

  auto* quotient = app.add_subcommand("quotient", "Quotient by a two-sided ideal");
  quotient->add_option("file", file, "Diring file")->required();
  quotient->add_option("--ideal", labels, "Labels of the ideal's elements")->required();
  quotient->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* census = app.add_subcommand("census", "All left dirings on a group, up to isomorphism");
  census->add_option("--group", groups, "Group spec such as Z2xZ2, or a structure file");
  census->add_option("--up-to", up_to, "Every abelian group of order 1..N");
  census->add_option("--jobs", jobs, "Worker threads (default: DIRING_JOBS or 1)");
  census->add_flag("--force", force, "Allow orders above the census cap");
  census->add_flag("--tables", tables, "Print each record as a structure file");
  census->add_option("--json", json_out, "Write records as JSON to this path");

  auto* modules = app.add_subcommand("modules", "All modules over a diring, up to isomorphism");
  modules->add_option("file", file, "Diring file")->required();
  modules->add_option("--max-order", max_order, "Largest carrier order")->required();
  modules->add_flag("--tables", tables, "Print each module as a structure file");
  modules->add_flag("--force", force, "Allow orders above the census cap");

  auto* hom = app.add_subcommand("hom", "Homomorphisms between two dirings or two modules");
  hom->add_option("source", file, "Source file")->required();
  hom->add_option("target", file2, "Target file")->required();
  hom->add_flag("--iso", iso, "Only isomorphisms");

  auto* props = app.add_subcommand("props", "Run the property suites");
  props->add_option("target", file, "Diring file, group spec, or all:N")->required();
  props->add_option("--max-module-order", max_module_order, "Module order bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      return cmd_verify(file);
    }
    if (*analyze) {
      return cmd_analyze(file, json_out, max_module_order);
    }
    if (*radical) {
      return cmd_radical(file, json);
    }
    if (*quotient) {
      return cmd_quotient(file, labels, out_path);
    }
    if (*census) {
      return cmd_census(groups, up_to, jobs, force, tables, json_out);
    }
    if (*modules) {
      return cmd_modules(file, max_order, tables, force);
    }
    if (*hom) {
      return cmd_hom(file, file2, iso);
    }
    if (*props) {
      return cmd_props(file, max_module_order);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (CLI::ValidationError const& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (InvariantViolation const& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kViolation;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
