// Exhaustive generation of left dirings on a fixed abelian group and of
// modules over a fixed left diring, up to isomorphism.
//
// Both products of a left diring are additive in each argument, so they are
// drawn from the bi-additive maps G × G → G. Candidates are filtered by the
// dimonoid identities and the bar-unit requirement, then reduced to a
// canonical form: the lexicographically least table serialization over all
// additive automorphisms.

#ifndef DIRING_ENUMERATION_HPP_
#define DIRING_ENUMERATION_HPP_

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "core.hpp"
#include "diring.hpp"
#include "finite_group.hpp"
#include "ideal.hpp"
#include "module.hpp"
#include "radical.hpp"

namespace diring {

  inline constexpr std::size_t kCensusCap = 4;

  struct CensusOptions {
    std::size_t jobs  = 0;  // 0: DIRING_JOBS or 1
    bool        force = false;
  };

  inline std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs != 0) {
      return jobs;
    }
    if (char const* env = std::getenv("DIRING_JOBS")) {
      try {
        long const v = std::stol(env);
        if (v > 0) {
          return static_cast<std::size_t>(v);
        }
      } catch (std::exception const&) {
      }
    }
    return 1;
  }

  struct InvariantSummary {
    std::size_t left_halo        = 0;
    std::size_t right_halo       = 0;
    std::size_t two_sided_halo   = 0;
    std::size_t additive_halo    = 0;
    std::size_t ideals           = 0;
    std::size_t left_ideals      = 0;
    Simplicity  simplicity       = Simplicity::neither;
    std::size_t rad3_size        = 0;
    bool        family_empty     = false;
    bool        primitive        = false;
    bool        semi_primitive   = false;

    std::string str() const {
      return "halos=" + std::to_string(left_halo) + "/" + std::to_string(right_halo) + "/"
             + std::to_string(two_sided_halo) + "/" + std::to_string(additive_halo)
             + " ideals=" + std::to_string(ideals) + " left_ideals=" + std::to_string(left_ideals)
             + " class=" + to_string(simplicity) + " rad3=" + std::to_string(rad3_size)
             + (family_empty ? " family_empty" : "") + (primitive ? " 3-primitive" : "")
             + (semi_primitive ? " 3-semi-primitive" : "");
    }
  };

  inline InvariantSummary summarize(DiringRef const& d) {
    InvariantSummary s;
    Halos const&     h = d->halos();
    s.left_halo        = h.left.count();
    s.right_halo       = h.right.count();
    s.two_sided_halo   = h.two_sided.count();
    s.additive_halo    = h.additive.count();
    s.ideals           = ideal_masks(*d, IdealKind::two_sided).size();
    s.left_ideals      = ideal_masks(*d, IdealKind::left).size();
    s.simplicity       = simplicity_class(*d);
    auto const rad     = rad3(d);
    s.rad3_size        = rad.rad3_via_annihilators.count();
    s.family_empty     = rad.family_empty;
    s.primitive        = is_3_primitive(d).primitive;
    s.semi_primitive   = d->order() > 1 && is_3_semi_primitive(d);
    return s;
  }

  template <typename Structure>
  struct CensusRecord {
    std::string      group;  // spec of the additive group, e.g. "Z2xZ2"
    Structure        structure;
    std::string      canonical_form;
    InvariantSummary summary;  // left unset for modules
  };

  using DiringRecord = CensusRecord<DiringTable>;
  using ModuleRecord = CensusRecord<LeftModuleTable>;

  inline std::string to_hex(std::string const& bytes) {
    static char const* digits = "0123456789abcdef";
    std::string        out;
    for (unsigned char c : bytes) {
      out += digits[c >> 4];
      out += digits[c & 15];
    }
    return out;
  }

  namespace detail {
    // σ(T) with σ(T)(σx, σy) = σ(T(x, y)), appended row-major.
    inline void push_transformed(std::string& out, Table const& t, std::vector<Elem> const& sigma,
                                 std::vector<Elem> const& inv) {
      for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
          out.push_back(static_cast<char>(sigma[t(inv[i], inv[j])]));
        }
      }
    }

    inline std::vector<Elem> inverse_perm(std::vector<Elem> const& sigma) {
      std::vector<Elem> inv(sigma.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        inv[sigma[i]] = static_cast<Elem>(i);
      }
      return inv;
    }

    inline Table table_from_bytes(std::string const& bytes, std::size_t offset, std::size_t rows, std::size_t cols) {
      Table t(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          t(i, j) = static_cast<Elem>(static_cast<unsigned char>(bytes[offset + i * cols + j]));
        }
      }
      return t;
    }

    // For modules only the carrier is relabelled: T'(a, σx) = σ(T(a, x)).
    inline void push_module_transformed(std::string& out, Table const& t, std::vector<Elem> const& sigma,
                                        std::vector<Elem> const& inv) {
      for (std::size_t a = 0; a < t.rows(); ++a) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
          out.push_back(static_cast<char>(sigma[t(a, inv[j])]));
        }
      }
    }
  }  // namespace detail

  // Least serialization of (lprod, rprod) over additive automorphisms.
  inline std::string canonical_form(FiniteAbelianGroup const&             g,
                                    Table const&                          l,
                                    Table const&                          r,
                                    std::vector<std::vector<Elem>> const& autos) {
    std::string best, cur;
    bool        first = true;
    for (auto const& sigma : autos) {
      auto const inv = detail::inverse_perm(sigma);
      cur.clear();
      detail::push_transformed(cur, l, sigma, inv);
      detail::push_transformed(cur, r, sigma, inv);
      if (first || cur < best) {
        best  = cur;
        first = false;
      }
    }
    (void) g;
    return best;
  }

  inline std::string canonical_form(DiringTable const& d) {
    return canonical_form(d.group(), d.lprod(), d.rprod(), additive_automorphisms(d.group()));
  }

  inline std::string module_canonical_form(LeftModuleTable const& m, std::vector<std::vector<Elem>> const& autos) {
    std::string best, cur;
    bool        first = true;
    for (auto const& sigma : autos) {
      auto const inv = detail::inverse_perm(sigma);
      cur.clear();
      detail::push_module_transformed(cur, m.lact_table(), sigma, inv);
      detail::push_module_transformed(cur, m.ract_table(), sigma, inv);
      if (first || cur < best) {
        best  = cur;
        first = false;
      }
    }
    return best;
  }

  inline std::string module_canonical_form(LeftModuleTable const& m) {
    return module_canonical_form(m, additive_automorphisms(m.carrier()));
  }

  namespace detail {
    inline bool associative(std::size_t n, Table const& t) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem const xy = t(x, y);
          for (std::size_t z = 0; z < n; ++z) {
            if (t(xy, z) != t(x, t(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    inline bool has_identity_row(std::size_t n, Table const& t) {
      for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = t(a, x) == x;
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }

    // The mixed dimonoid identities between an associative ⇀· and ↼·.
    inline bool mixed_dimonoid(std::size_t n, Table const& l, Table const& r) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (l(x, r(y, z)) != l(x, l(y, z)) || l(r(x, y), z) != r(x, l(y, z))
                || r(l(x, y), z) != r(r(x, y), z)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // Every left diring on g, once per isomorphism class, sorted by canonical
  // form. Each representative is the canonical relabelling.
  inline std::vector<DiringRecord> enumerate_left_dirings(FiniteAbelianGroup const& g,
                                                          std::string const&        spec,
                                                          CensusOptions const&      opts = {}) {
    if (!opts.force) {
      require_cap(g.order(), kCensusCap, "enumerate_left_dirings");
    }
    std::size_t const n     = g.order();
    auto const        maps  = enumerate_biadditive_maps(g, g, g);
    auto const        autos = additive_automorphisms(g);
    std::vector<Table const*> lcands, rcands;
    for (auto const& t : maps) {
      if (detail::associative(n, t)) {
        lcands.push_back(&t);
        if (detail::has_identity_row(n, t)) {
          rcands.push_back(&t);
        }
      }
    }
    std::size_t const jobs = std::max<std::size_t>(1, std::min(resolve_jobs(opts.jobs), lcands.size()));
    std::vector<std::map<std::string, bool>> found(jobs);
    auto worker = [&](std::size_t w) {
      for (std::size_t i = w; i < lcands.size(); i += jobs) {
        for (Table const* r : rcands) {
          if (!detail::mixed_dimonoid(n, *lcands[i], *r)) {
            continue;
          }
          found[w].emplace(canonical_form(g, *lcands[i], *r, autos), true);
        }
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < jobs; ++w) {
        pool.emplace_back(worker, w);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    std::map<std::string, bool> merged;
    for (auto const& f : found) {
      merged.insert(f.begin(), f.end());
    }
    std::vector<DiringRecord> out;
    for (auto const& [canon, unused] : merged) {
      (void) unused;
      Table l       = detail::table_from_bytes(canon, 0, n, n);
      Table r       = detail::table_from_bytes(canon, n * n, n, n);
      auto  checked = verify_left_diring(g, std::move(l), std::move(r));
      if (!checked) {
        throw InvariantViolation("census candidate fails verification:\n" + checked.report().str());
      }
      DiringRef ref = share(std::move(checked).value());
      out.push_back(DiringRecord{spec, *ref, canon, summarize(ref)});
    }
    return out;
  }

  inline std::vector<DiringRecord> enumerate_left_dirings(std::string const& spec, CensusOptions const& opts = {}) {
    return enumerate_left_dirings(group_from_spec(spec), spec, opts);
  }

  // The full census over every abelian group of each order in 1..max_order.
  inline std::vector<DiringRecord> census_up_to(std::size_t max_order, CensusOptions const& opts = {}) {
    std::vector<DiringRecord> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto const& spec : abelian_group_specs(n)) {
        auto part = enumerate_left_dirings(spec, opts);
        std::move(part.begin(), part.end(), std::back_inserter(out));
      }
    }
    return out;
  }

  // A left diring isomorphism X -> Y, if one exists.
  inline std::optional<DiringHom> are_isomorphic(DiringTable const& x, DiringTable const& y) {
    if (x.order() != y.order()) {
      return std::nullopt;
    }
    Halos const &hx = x.halos(), &hy = y.halos();
    if (hx.left.count() != hy.left.count() || hx.right.count() != hy.right.count()
        || hx.additive.count() != hy.additive.count()) {
      return std::nullopt;
    }
    for (auto& m : enumerate_group_homs(x.group(), y.group())) {
      if (!SubsetMask::of_range(y.order(), m).is_full()) {
        continue;
      }
      DiringHom h{std::move(m)};
      if (verify_hom(x, y, h).ok()) {
        return h;
      }
    }
    return std::nullopt;
  }

  inline std::optional<ModHom> are_isomorphic(LeftModuleTable const& x, LeftModuleTable const& y) {
    return find_module_isomorphism(x, y);
  }

  // Every left module over d on an abelian group of order m, once per
  // isomorphism class; sorted by carrier spec, then canonical form.
  inline std::vector<ModuleRecord> enumerate_modules(DiringRef const& d, std::size_t m,
                                                     CensusOptions const& opts = {}) {
    if (!opts.force) {
      require_cap(m, kCensusCap, "enumerate_modules");
      require_cap(d->order(), kCensusCap, "enumerate_modules");
    }
    std::size_t const         nr = d->order();
    std::vector<ModuleRecord> out;
    for (auto const& spec : abelian_group_specs(m)) {
      FiniteAbelianGroup const g     = group_from_spec(spec);
      auto const               maps  = enumerate_biadditive_maps(d->group(), g, g);
      auto const               autos = additive_automorphisms(g);
      std::vector<Table const*> lcands, rcands;
      for (auto const& t : maps) {
        bool lok = true, rok = true;
        for (std::size_t a = 0; a < nr && (lok || rok); ++a) {
          for (std::size_t b = 0; b < nr && (lok || rok); ++b) {
            Elem const ab = d->lmul(static_cast<Elem>(a), static_cast<Elem>(b));
            Elem const ar = d->rmul(static_cast<Elem>(a), static_cast<Elem>(b));
            for (std::size_t x = 0; x < m; ++x) {
              Elem const bx = t(b, x);
              lok           = lok && t(ab, x) == t(a, bx);
              rok           = rok && t(ab, x) == t(a, bx) && t(ar, x) == t(a, bx);
            }
          }
        }
        if (rok) {
          bool unit = false;
          for (Elem e : d->halos().left.elements()) {
            bool id = true;
            for (std::size_t x = 0; x < m && id; ++x) {
              id = t(e, x) == x;
            }
            unit = unit || id;
          }
          rok = unit;
        }
        if (lok) {
          lcands.push_back(&t);
        }
        if (rok) {
          rcands.push_back(&t);
        }
      }
      std::map<std::string, bool> seen;
      for (Table const* r : rcands) {
        for (Table const* l : lcands) {
          bool ok = true;
          for (std::size_t a = 0; a < nr && ok; ++a) {
            for (std::size_t b = 0; b < nr && ok; ++b) {
              Elem const ab = d->lmul(static_cast<Elem>(a), static_cast<Elem>(b));
              Elem const ar = d->rmul(static_cast<Elem>(a), static_cast<Elem>(b));
              for (std::size_t x = 0; x < m && ok; ++x) {
                ok = (*l)(ab, x) == (*l)(a, (*r)(b, x)) && (*l)(ar, x) == (*r)(a, (*l)(b, x));
              }
            }
          }
          if (!ok) {
            continue;
          }
          auto checked = verify_module(d, g, *l, *r);
          if (!checked) {
            continue;
          }
          seen.emplace(module_canonical_form(checked.value(), autos), true);
        }
      }
      for (auto const& [canon, unused] : seen) {
        (void) unused;
        auto checked = verify_module(d, g, detail::table_from_bytes(canon, 0, nr, m),
                                     detail::table_from_bytes(canon, nr * m, nr, m));
        if (!checked) {
          throw InvariantViolation("module census candidate fails verification:\n" + checked.report().str());
        }
        out.push_back(ModuleRecord{spec, std::move(checked).value(), canon, {}});
      }
    }
    return out;
  }

}  // namespace diring

#endif  // DIRING_ENUMERATION_HPP_
