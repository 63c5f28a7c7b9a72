// Runs every property check in the library over a left diring and a list of
// modules over it, tallying instances, violations and findings per suite.
//
// A violation is a failed check of a proven statement, or an
// InvariantViolation raised by a cross-checked computation. A finding is a
// disagreement among the characterizations of 3-irreducibility, which is
// recorded but not treated as a failure.

#ifndef DIRING_SUITES_HPP_
#define DIRING_SUITES_HPP_

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "diring.hpp"
#include "enumeration.hpp"
#include "ideal.hpp"
#include "module.hpp"
#include "radical.hpp"

namespace diring {

  struct SuiteTally {
    std::string              name;
    std::size_t              instances  = 0;
    std::size_t              vacuous    = 0;
    std::size_t              violations = 0;
    std::size_t              findings   = 0;
    std::vector<std::string> messages;  // first few violations and findings
  };

  inline constexpr char const* kSuiteNames[] = {
      "halo-identities",
      "left-translations",
      "module-halo",
      "hom-halo",
      "quotient-halo",
      "schur",
      "annihilator-sums",
      "inflation",
      "colon-ideals",
      "primitive-ideals",
      "radical-formulas",
      "semi-primitivity",
      "radical-quotient",
      "semi-primitive-equivalence",
      "irreducible-characterizations",
      "ring-product-digroup",
  };

  class SuiteRunner {
   public:
    SuiteRunner() {
      for (char const* n : kSuiteNames) {
        tallies_.push_back(SuiteTally{n, 0, 0, 0, 0, {}});
      }
    }

    std::vector<SuiteTally> const& tallies() const noexcept { return tallies_; }

    SuiteTally const& tally(std::string const& name) const {
      for (auto const& t : tallies_) {
        if (t.name == name) {
          return t;
        }
      }
      throw Error("unknown suite " + name);
    }

    std::size_t total_violations() const {
      std::size_t v = 0;
      for (auto const& t : tallies_) {
        v += t.violations;
      }
      return v;
    }

    std::size_t total_findings() const {
      std::size_t v = 0;
      for (auto const& t : tallies_) {
        v += t.findings;
      }
      return v;
    }

    std::size_t dirings_processed() const noexcept { return dirings_; }
    std::size_t modules_processed() const noexcept { return modules_; }

    // Runs every suite on d and the given modules over d.
    void run(DiringRef const& d, std::string const& label, std::vector<LeftModuleTable> const& modules) {
      ++dirings_;
      modules_ += modules.size();
      diring_suites(d, label);
      module_suites(d, label, modules);
    }

    void run(DiringRef const& d, std::string const& label, std::size_t max_module_order) {
      std::vector<LeftModuleTable> modules;
      for (std::size_t m = 1; m <= max_module_order; ++m) {
        for (auto& rec : enumerate_modules(d, m)) {
          modules.push_back(std::move(rec.structure));
        }
      }
      run(d, label, modules);
    }

   private:
    SuiteTally& get(char const* name) {
      for (auto& t : tallies_) {
        if (t.name == name) {
          return t;
        }
      }
      throw Error(std::string("unknown suite ") + name);
    }

    static void note(SuiteTally& t, std::string msg) {
      if (t.messages.size() < 8) {
        t.messages.push_back(std::move(msg));
      }
    }

    // Runs one instance; a non-ok report or any library exception counts as
    // one violation. The callback returns the report and whether the
    // instance was vacuous.
    void check(char const* suite, std::string const& where,
               std::function<std::pair<ValidationReport, bool>()> const& body) {
      SuiteTally& t = get(suite);
      ++t.instances;
      try {
        auto const [rep, vacuous] = body();
        if (vacuous) {
          ++t.vacuous;
        }
        if (!rep.ok()) {
          ++t.violations;
          note(t, where + ": " + rep.str());
        }
      } catch (Error const& e) {
        ++t.violations;
        note(t, where + ": " + e.what());
      }
    }

    static std::pair<ValidationReport, bool> plain(ValidationReport r) {
      return {std::move(r), false};
    }

    void diring_suites(DiringRef const& d, std::string const& label) {
      check("halo-identities", label, [&] {
        ValidationReport r = halo_identities_check(*d);
        r.merge(distributivity_consequences_check(*d), "distributivity");
        return plain(std::move(r));
      });
      check("colon-ideals", label, [&] {
        ValidationReport r;
        for (auto const& i : ideal_masks(*d, IdealKind::left)) {
          SubsetMask const c = colon_ideal(d, i);  // throws when the two routes differ
          if (d->is_diring() && !c.subset_of(i)) {
            r.add("colon-inside", i.elements(), "(I:R) is not inside I = " + d->format(i));
          }
        }
        return plain(std::move(r));
      });
      check("primitive-ideals", label, [&] { return plain(primitive_ideals_check(d)); });
      check("radical-formulas", label, [&] {
        ValidationReport   r;
        RadicalReport const rad = rad3(d);
        if (!rad.agrees) {
          r.add("agree", {}, "rad3 via annihilators " + d->format(rad.rad3_via_annihilators)
                                 + " != via primitive ideals " + d->format(rad.rad3_via_primitive_ideals));
        }
        if (rad.family_empty != rad.three_maximal_left_ideals.empty()
            || (rad.family_empty && !rad.rad3_via_annihilators.is_full())) {
          r.add("empty-family", {}, "empty-family convention not applied");
        }
        return std::make_pair(std::move(r), rad.family_empty);
      });
      if (d->order() > 1) {
        SemiPrimitivityReport chars;
        bool                  have_chars = false;
        check("semi-primitivity", label, [&] {
          ValidationReport r;
          bool const       sp = is_3_semi_primitive(d);  // throws when the two routes differ
          chars               = semi_primitivity_characterizations(d);
          have_chars          = true;
          if (sp != chars.subdirect) {
            r.add("subdirect", {}, "semi-primitivity and the subdirect product criterion disagree");
          }
          return plain(std::move(r));
        });
        check("semi-primitive-equivalence", label, [&] {
          ValidationReport r;
          if (!have_chars) {
            chars = semi_primitivity_characterizations(d);
          }
          r.merge(chars.report);
          if (!chars.agree()) {
            r.add("agree", {},
                  std::string("semi-primitive=") + (chars.semi_primitive ? "1" : "0") + " faithful-reducible="
                      + (chars.faithful_reducible ? "1" : "0") + " subdirect=" + (chars.subdirect ? "1" : "0"));
          }
          return plain(std::move(r));
        });
      }
      check("radical-quotient", label, [&] {
        auto r = radical_quotient_check(d);
        return std::make_pair(std::move(r.report), r.vacuous);
      });
      check("ring-product-digroup", label, [&] {
        ValidationReport r;
        for (Elem e : d->halos().two_sided.elements()) {
          r.merge(unital_ring_product(*d, e).ring_report, "ring-product/" + d->name(e));
          r.merge(uplus_digroup_check(*d, e), "digroup/" + d->name(e));
        }
        return std::make_pair(std::move(r), d->halos().two_sided.empty());
      });
    }

    void module_suites(DiringRef const& d, std::string const& label, std::vector<LeftModuleTable> const& mods) {
      for (std::size_t i = 0; i < mods.size(); ++i) {
        LeftModuleTable const& m     = mods[i];
        std::string const      where = label + " module#" + std::to_string(i) + " (order " + std::to_string(m.order()) + ")";
        check("left-translations", where, [&] { return plain(left_translation_check(m)); });
        check("module-halo", where, [&] { return plain(module_halo_check(m)); });
        check("quotient-halo", where, [&] {
          ValidationReport r;
          for (auto const& n : enumerate_submodules(m)) {
            r.merge(quotient_halo_check(m, n));
            (void) is_3_maximal(m, n);  // throws when the criteria differ
          }
          return plain(std::move(r));
        });
        check("inflation", where, [&] {
          ValidationReport r;
          SubsetMask const ann = annihilator(m);
          for (auto const& h : ideal_masks(*d, IdealKind::two_sided)) {
            if (h.subset_of(ann)) {
              r.merge(inflation_check(m, h));
            }
          }
          return plain(std::move(r));
        });
        SubsetMask const zero = m.carrier().zero_mask();
        if (m.halo() != zero && !m.halo().is_full()) {
          SuiteTally& t = get("irreducible-characterizations");
          ++t.instances;
          try {
            auto const c = irreducibility_characterizations(m);
            if (!c.agree()) {
              ++t.findings;
              note(t, where + ": irreducible=" + std::to_string(c.irreducible) + " cyclic="
                          + std::to_string(c.cyclic_generation) + " regular-quotient="
                          + std::to_string(c.regular_quotient));
            }
          } catch (Error const& e) {
            ++t.violations;
            note(t, where + ": " + e.what());
          }
        }
      }
      for (std::size_t i = 0; i < mods.size(); ++i) {
        for (std::size_t j = 0; j < mods.size(); ++j) {
          LeftModuleTable const& m     = mods[i];
          LeftModuleTable const& n     = mods[j];
          std::string const      where = label + " modules#" + std::to_string(i) + "," + std::to_string(j);
          check("hom-halo", where, [&] {
            ValidationReport r;
            for (auto const& f : hom_group(m, n)) {
              r.merge(hom_halo_check(m, n, f));
              if (!r.ok()) {
                break;
              }
            }
            return plain(std::move(r));
          });
          check("schur", where, [&] {
            bool const vacuous = !is_3_irreducible(m) || !is_3_irreducible(n);
            return std::make_pair(schur_check(m, n), vacuous);
          });
          if (j < i || m.order() * n.order() > kLatticeCap) {
            continue;
          }
          check("annihilator-sums", where, [&] {
            ValidationReport      r;
            LeftModuleTable const s = direct_sum(d, {m, n});
            if (annihilator(s) != (annihilator(m) & annihilator(n))) {
              r.add("meet", {}, "ann(M ⊕ N) != ann M ∩ ann N");
            }
            return plain(std::move(r));
          });
        }
      }
    }

    std::vector<SuiteTally> tallies_;
    std::size_t             dirings_ = 0;
    std::size_t             modules_ = 0;
  };

}  // namespace diring

#endif  // DIRING_SUITES_HPP_
