// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "diring/io.hpp"
#include "diring/report.hpp"

using namespace diring;

namespace {

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string data(std::string const& name) {
    return std::string(DIRING_DATA_DIR) + "/" + name;
  }

  std::vector<std::string> labels(Json const& arr) {
    return arr.get<std::vector<std::string>>();
  }

  std::vector<std::vector<std::string>> label_sets(Json const& arr) {
    return arr.get<std::vector<std::vector<std::string>>>();
  }

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  int failures = 0;

  void report(int n, Outcome const& o) {
    std::printf("criterion %d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }

  Outcome guarded(std::function<Outcome()> const& f) {
    try {
      return f();
    } catch (std::exception const& e) {
      return Outcome{false, std::string("exception: ") + e.what()};
    }
  }

  Json load_and_analyze(std::string const& path) {
    auto const loaded = load_file(path);
    if (loaded.empty() || !loaded.front().diring || !loaded.front().ok()) {
      throw Error(path + " does not hold a valid diring");
    }
    return analysis_json(loaded.front().diring->value(), loaded.front().file.name);
  }

  Outcome h_exact() {
    auto const t0 = Clock::now();
    Json const j  = load_and_analyze(data("H.diring"));
    double const dt = seconds_since(t0);
    bool const ok = labels(j["halos"]["left"]) == std::vector<std::string>{"a", "b"}
                    && j["halos"]["right"].empty() && j["is_left_diring"] == true && j["is_diring"] == false;
    return Outcome{ok && dt < 1.0, "left halo " + j["halos"]["left"].dump() + ", right halo "
                                       + j["halos"]["right"].dump() + ", left diring "
                                       + j["is_left_diring"].dump() + ", diring " + j["is_diring"].dump()
                                       + ", " + std::to_string(dt) + " s"};
  }

  Outcome h_derived() {
    using Sets       = std::vector<std::vector<std::string>>;
    auto const   t0  = Clock::now();
    Json const   j   = load_and_analyze(data("H.diring"));
    double const dt  = seconds_since(t0);
    bool         ok  = true;
    std::string  bad;
    auto expect = [&](bool c, char const* what) {
      if (!c) {
        ok = false;
        bad += std::string(" ") + what;
      }
    };
    expect(labels(j["halos"]["additive"]) == std::vector<std::string>{"0", "c"}, "additive-halo");
    expect(label_sets(j["ideals"]) == Sets{{"0"}, {"0", "c"}, {"0", "a", "b", "c"}}, "ideals");
    expect(j["simplicity"] == "3-simple", "simplicity");
    expect(label_sets(j["left_ideals"]) == Sets{{"0"}, {"0", "b"}, {"0", "c"}, {"0", "a", "b", "c"}},
           "left-ideals");
    expect(j["three_maximal_left_ideals"].empty(), "3-maximal");
    expect(labels(j["rad3"]["rad3_via_annihilators"]) == std::vector<std::string>{"0", "a", "b", "c"}, "rad3");
    expect(j["rad3"]["family_empty"] == true, "family_empty");
    expect(j["rad3"]["agrees"] == true, "agrees");
    expect(dt < 1.0, "runtime");
    return Outcome{ok, "additive halo " + j["halos"]["additive"].dump() + ", " + std::to_string(j["ideals"].size())
                           + " ideals, " + std::to_string(j["left_ideals"].size()) + " left ideals, class "
                           + j["simplicity"].get<std::string>() + ", rad3 "
                           + j["rad3"]["rad3_via_annihilators"].dump() + ", " + std::to_string(dt) + " s"
                           + (ok ? "" : "; failed:" + bad)};
  }

  // Runs every suite once over the census; shared by criteria 3 and 4.
  struct CensusRun {
    std::vector<DiringRecord> census;
    SuiteRunner               suites;
    double                    seconds = 0;
  };

  CensusRun const& census_run() {
    static CensusRun const run = [] {
      CensusRun  r;
      auto const t0 = Clock::now();
      r.census      = census_up_to(kCensusCap);
      for (auto const& rec : r.census) {
        r.suites.run(share(rec.structure), rec.group + "/" + to_hex(rec.canonical_form), kCensusCap);
      }
      r.seconds = seconds_since(t0);
      return r;
    }();
    return run;
  }

  Outcome suites_clean() {
    CensusRun const& r = census_run();
    std::string      detail;
    bool             ok = r.suites.total_violations() == 0 && r.seconds < 600.0;
    for (auto const& t : r.suites.tallies()) {
      if (t.violations != 0) {
        detail += " " + t.name + "=" + std::to_string(t.violations);
        for (auto const& m : t.messages) {
          std::cout << "  " << t.name << ": " << m << '\n';
        }
      }
    }
    return Outcome{ok, std::to_string(r.suites.dirings_processed()) + " dirings, "
                           + std::to_string(r.suites.modules_processed()) + " modules, "
                           + std::to_string(r.suites.total_violations()) + " violations"
                           + (detail.empty() ? "" : " (" + detail + " )") + ", "
                           + std::to_string(r.seconds) + " s"};
  }

  Outcome semi_primitive_constructions() {
    std::size_t sp = 0, not_sp = 0, disagree = 0;
    for (auto const& rec : census_run().census) {
      if (rec.structure.order() == 1) {
        continue;
      }
      DiringRef const d = share(rec.structure);
      auto const      c = semi_primitivity_characterizations(d);
      bool            ok;
      if (c.semi_primitive) {
        ++sp;
        ok = c.faithful_reducible && c.subdirect && c.report.ok() && c.module && is_faithful(*c.module)
             && is_completely_3_reducible(*c.module).completely_reducible;
      } else {
        ++not_sp;
        ok = !c.faithful_reducible && !c.subdirect;
      }
      disagree += ok ? 0 : 1;
    }
    std::size_t const findings = census_run().suites.tally("irreducible-characterizations").findings;
    return Outcome{disagree == 0, std::to_string(sp) + " semi-primitive (constructions verified), "
                                      + std::to_string(not_sp) + " not, " + std::to_string(disagree)
                                      + " disagreements, " + std::to_string(findings)
                                      + " irreducibility findings"};
  }

  Outcome ring_product_digroup() {
    std::size_t instances = 0, violations = 0;
    for (auto const& rec : census_run().census) {
      DiringTable const& d = rec.structure;
      for (Elem e : d.halos().two_sided.elements()) {
        ++instances;
        bool const ring = unital_ring_product(d, e).ring_report.ok();
        bool const dig  = uplus_digroup_check(d, e).ok();  // includes digroup halo = additive halo
        violations += (ring ? 0 : 1) + (dig ? 0 : 1);
      }
    }
    return Outcome{violations == 0 && instances > 0, std::to_string(instances) + " (diring, two-sided bar-unit) pairs, "
                                                         + std::to_string(violations) + " violations"};
  }

  // Everything a census run and the reports produce, as one string.
  std::string census_bytes(std::size_t jobs) {
    CensusOptions const opts{jobs, false};
    Json                out = Json::array();
    for (auto const& rec : census_up_to(kCensusCap, opts)) {
      Json j      = census_record_json(rec);
      j["table"]  = serialize(rec.structure, "R");
      DiringRef d = share(rec.structure);
      Json mods   = Json::array();
      for (std::size_t m = 1; m <= kCensusCap; ++m) {
        for (auto const& mr : enumerate_modules(d, m, opts)) {
          mods.push_back(to_hex(mr.canonical_form));
        }
      }
      j["modules"]  = mods;
      j["analysis"] = analysis_json(rec.structure, "R");
      out.push_back(j);
    }
    out.push_back(load_and_analyze(data("H.diring")));
    return out.dump();
  }

  Outcome determinism() {
    std::string const a = census_bytes(1);
    std::string const b = census_bytes(1);
    std::string const c = census_bytes(4);
    std::string const d = census_bytes(4);
    bool const        ok = a == b && a == c && a == d;
    return Outcome{ok, std::to_string(a.size()) + " bytes of census and report JSON; runs "
                           + (a == b ? "equal" : "differ") + ", jobs 1 vs 4 " + (a == c && c == d ? "equal" : "differ")};
  }

  Outcome dual_routes() {
    std::size_t colon = 0, prim = 0, rad = 0, semi = 0, disagree = 0;
    std::vector<DiringTable> instances;
    for (auto const& rec : census_up_to(kCensusCap)) {
      instances.push_back(rec.structure);
    }
    instances.push_back(load_diring(data("H.diring")));
    for (auto const& dt : instances) {
      DiringRef const d = share(dt);
      for (auto const& i : ideal_masks(*d, IdealKind::left)) {
        ++colon;
        disagree += colon_ideal_scan(*d, i) == colon_ideal_via_annihilator(d, i) ? 0 : 1;
      }
      ++prim;
      disagree += three_primitive_ideals(d) == three_primitive_ideals_by_definition(d) ? 0 : 1;
      ++rad;
      try {
        disagree += rad3(d).agrees ? 0 : 1;
      } catch (InvariantViolation const&) {
        ++disagree;
      }
      if (d->order() > 1) {
        ++semi;
        try {
          (void) is_3_semi_primitive(d);  // throws when the two routes differ
        } catch (InvariantViolation const&) {
          ++disagree;
        }
      }
    }
    return Outcome{disagree == 0, std::to_string(instances.size()) + " dirings: " + std::to_string(colon)
                                      + " colon ideals, " + std::to_string(prim) + " primitive-ideal sets, "
                                      + std::to_string(rad) + " radicals, " + std::to_string(semi)
                                      + " semi-primitivity tests; " + std::to_string(disagree) + " disagreements"};
  }

}  // namespace

int main() {
  report(1, guarded(h_exact));
  report(2, guarded(h_derived));
  report(3, guarded(suites_clean));
  report(4, guarded(semi_primitive_constructions));
  report(5, guarded(ring_product_digroup));
  report(6, guarded(determinism));
  report(7, guarded(dual_routes));
  std::printf("%s: %d of 7 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
