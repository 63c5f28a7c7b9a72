// Ideals, left ideals, quotient dirings, subdirings and diring homomorphisms.

#ifndef DIRING_IDEAL_HPP_
#define DIRING_IDEAL_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "diring.hpp"
#include "finite_group.hpp"

namespace diring {

  enum class IdealKind { two_sided, left };

  struct IdealHandle {
    SubsetMask mask;
    IdealKind  kind;

    friend bool operator==(IdealHandle const&, IdealHandle const&) = default;
  };

  // A map between left dirings, given as target indices per source element.
  struct DiringHom {
    std::vector<Elem> map;

    Elem operator()(Elem x) const { return map.at(x); }
    friend bool operator==(DiringHom const&, DiringHom const&) = default;
  };

  // Subgroup plus absorption: R∗S ⊆ S always, and S∗R ⊆ S for two-sided
  // ideals. The first failing product is reported.
  inline ValidationReport is_ideal(DiringTable const& d, SubsetMask const& s, IdealKind kind) {
    ValidationReport rep;
    if (s.size() != d.order() || !is_subgroup(d.group(), s)) {
      rep.add("subgroup", {}, d.format(s) + " is not an additive subgroup");
      return rep;
    }
    auto const& nm = d.group().names();
    for (std::size_t xi = 0; xi < d.order(); ++xi) {
      for (std::size_t yi = 0; yi < d.order(); ++yi) {
        Elem const x = static_cast<Elem>(xi), y = static_cast<Elem>(yi);
        for (Product p : {Product::left, Product::right}) {
          char const* sym = p == Product::left ? "⇀·" : "↼·";
          Elem const  v   = d.mul(p, x, y);
          if (s.contains(v)) {
            continue;
          }
          if (s.contains(y)) {
            rep.add("left-absorption", {x, y},
                    nm[x] + sym + nm[y] + " = " + nm[v] + " is not in " + d.format(s));
            return rep;
          }
          if (kind == IdealKind::two_sided && s.contains(x)) {
            rep.add("right-absorption", {x, y},
                    nm[x] + sym + nm[y] + " = " + nm[v] + " is not in " + d.format(s));
            return rep;
          }
        }
      }
    }
    return rep;
  }

  inline std::vector<IdealHandle> enumerate_ideals(DiringTable const& d, IdealKind kind) {
    std::vector<IdealHandle> out;
    for (auto const& s : enumerate_subgroups(d.group())) {
      if (is_ideal(d, s, kind).ok()) {
        out.push_back(IdealHandle{s, kind});
      }
    }
    return out;
  }

  inline std::vector<SubsetMask> ideal_masks(DiringTable const& d, IdealKind kind) {
    std::vector<SubsetMask> out;
    for (auto const& h : enumerate_ideals(d, kind)) {
      out.push_back(h.mask);
    }
    return out;
  }

  enum class Simplicity { three_simple, two_simple, neither };

  inline char const* to_string(Simplicity s) {
    switch (s) {
      case Simplicity::three_simple: return "3-simple";
      case Simplicity::two_simple: return "2-simple";
      case Simplicity::neither: return "neither";
    }
    return "?";
  }

  inline Simplicity simplicity_class(DiringTable const& d) {
    auto const        ideals = ideal_masks(d, IdealKind::two_sided);
    SubsetMask const& plus   = d.halos().additive;
    SubsetMask const  zero   = d.group().zero_mask();
    if (plus != zero && ideals.size() == 3) {
      // {0, ℏ+, R} are always ideals here, so three ideals means exactly these.
      return Simplicity::three_simple;
    }
    if (ideals.size() == 2) {
      if (plus != zero) {
        throw InvariantViolation("two ideals but nonzero additive halo");
      }
      return Simplicity::two_simple;
    }
    return Simplicity::neither;
  }

  struct QuotientDiring {
    DiringTable       diring;
    DiringHom         projection;
    std::vector<Elem> representatives;
  };

  // R/I with (x+I)∗(y+I) = x∗y + I. Representative independence is checked
  // by a scan over all coset members.
  inline QuotientDiring quotient_diring(DiringTable const& d, SubsetMask const& ideal) {
    if (!is_ideal(d, ideal, IdealKind::two_sided).ok()) {
      throw Error("quotient_diring: " + d.format(ideal) + " is not a two-sided ideal");
    }
    auto              q = quotient_group(d.group(), ideal);
    std::size_t const k = q.group.order();
    Table             l(k, k), r(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        l(i, j) = q.projection[d.lmul(q.representatives[i], q.representatives[j])];
        r(i, j) = q.projection[d.rmul(q.representatives[i], q.representatives[j])];
      }
    }
    for (std::size_t x = 0; x < d.order(); ++x) {
      for (std::size_t y = 0; y < d.order(); ++y) {
        auto const px = q.projection[x], py = q.projection[y];
        if (q.projection[d.lmul(static_cast<Elem>(x), static_cast<Elem>(y))] != l(px, py)
            || q.projection[d.rmul(static_cast<Elem>(x), static_cast<Elem>(y))] != r(px, py)) {
          throw InvariantViolation("quotient_diring: coset products depend on representatives");
        }
      }
    }
    auto checked = verify_left_diring(q.group, std::move(l), std::move(r));
    if (!checked) {
      throw InvariantViolation("quotient_diring: quotient is not a left diring:\n"
                               + checked.report().str());
    }
    return QuotientDiring{std::move(checked).value(), DiringHom{q.projection}, q.representatives};
  }

  // Additivity, both products, and φ(left halo) ∩ left halo ≠ ∅.
  inline ValidationReport verify_hom(DiringTable const& src, DiringTable const& tgt, DiringHom const& phi) {
    ValidationReport rep;
    if (phi.map.size() != src.order()) {
      rep.add("total", {}, "map must have one image per source element");
      return rep;
    }
    for (std::size_t x = 0; x < src.order(); ++x) {
      if (phi.map[x] >= tgt.order()) {
        rep.add("range", {static_cast<Elem>(x)}, "image out of range");
        return rep;
      }
    }
    auto const& nm = src.group().names();
    for (std::size_t xi = 0; xi < src.order(); ++xi) {
      for (std::size_t yi = 0; yi < src.order(); ++yi) {
        Elem const x = static_cast<Elem>(xi), y = static_cast<Elem>(yi);
        if (phi(src.add(x, y)) != tgt.add(phi(x), phi(y)) && !rep.has("additive")) {
          rep.add("additive", {x, y}, "φ(" + nm[x] + "+" + nm[y] + ") != φ(" + nm[x] + ")+φ(" + nm[y] + ")");
        }
        if (phi(src.lmul(x, y)) != tgt.lmul(phi(x), phi(y)) && !rep.has("left-product")) {
          rep.add("left-product", {x, y}, "φ(" + nm[x] + "⇀·" + nm[y] + ") != φ(" + nm[x] + ")⇀·φ(" + nm[y] + ")");
        }
        if (phi(src.rmul(x, y)) != tgt.rmul(phi(x), phi(y)) && !rep.has("right-product")) {
          rep.add("right-product", {x, y}, "φ(" + nm[x] + "↼·" + nm[y] + ") != φ(" + nm[x] + ")↼·φ(" + nm[y] + ")");
        }
      }
    }
    bool meets = false;
    for (Elem u : src.halos().left.elements()) {
      meets = meets || tgt.halos().left.contains(phi(u));
    }
    if (!meets) {
      bool const only = rep.ok();
      rep.add("halo-intersection", {},
              std::string("φ(left halo) does not meet the target's left halo")
                  + (only ? " (addition and both products are preserved; only this condition fails)" : ""));
    }
    return rep;
  }

  inline SubsetMask image(DiringTable const& src, DiringTable const& tgt, DiringHom const& phi) {
    SubsetMask out(tgt.order());
    for (std::size_t x = 0; x < src.order(); ++x) {
      out.insert(phi(static_cast<Elem>(x)));
    }
    return out;
  }

  inline IdealHandle kernel(DiringTable const& src, DiringTable const& /*tgt*/, DiringHom const& phi) {
    SubsetMask k(src.order());
    for (std::size_t x = 0; x < src.order(); ++x) {
      if (phi(static_cast<Elem>(x)) == 0) {
        k.insert(static_cast<Elem>(x));
      }
    }
    if (!is_ideal(src, k, IdealKind::two_sided).ok()) {
      throw InvariantViolation("kernel " + src.format(k) + " is not an ideal");
    }
    return IdealHandle{k, IdealKind::two_sided};
  }

  // Subgroup, closed under both products, and meets the parent's left halo.
  inline bool is_subdiring(DiringTable const& d, SubsetMask const& s) {
    if (s.size() != d.order() || !is_subgroup(d.group(), s)) {
      return false;
    }
    for (Elem x : s.elements()) {
      for (Elem y : s.elements()) {
        if (!s.contains(d.lmul(x, y)) || !s.contains(d.rmul(x, y))) {
          return false;
        }
      }
    }
    return !(s & d.halos().left).empty();
  }

  // Verifies that a + Ker φ ↦ φ(a) is a well-defined bijective left diring
  // homomorphism from src/Ker φ onto Im φ, and that Im φ is a subdiring.
  inline bool first_iso_check(DiringTable const& src, DiringTable const& tgt, DiringHom const& phi) {
    if (!verify_hom(src, tgt, phi).ok()) {
      return false;
    }
    auto const       ker = kernel(src, tgt, phi);
    SubsetMask const img = image(src, tgt, phi);
    if (!is_subdiring(tgt, img)) {
      return false;
    }
    auto const        q = quotient_diring(src, ker.mask);
    std::size_t const k = q.diring.order();
    std::vector<Elem> induced(k);
    for (std::size_t c = 0; c < k; ++c) {
      induced[c] = phi(q.representatives[c]);
    }
    for (std::size_t x = 0; x < src.order(); ++x) {
      if (induced[q.projection(static_cast<Elem>(x))] != phi(static_cast<Elem>(x))) {
        return false;
      }
    }
    SubsetMask hit(tgt.order());
    for (Elem v : induced) {
      if (hit.contains(v)) {
        return false;
      }
      hit.insert(v);
    }
    if (hit != img) {
      return false;
    }
    DiringHom const bar{induced};
    return verify_hom(q.diring, tgt, bar).ok();
  }

  // All left diring homomorphisms src -> tgt.
  inline std::vector<DiringHom> enumerate_diring_homs(DiringTable const& src, DiringTable const& tgt) {
    require_cap(src.order(), 8, "enumerate_diring_homs");
    std::vector<DiringHom> out;
    for (auto& m : enumerate_group_homs(src.group(), tgt.group())) {
      DiringHom h{std::move(m)};
      if (verify_hom(src, tgt, h).ok()) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

  inline DiringHom identity_hom(DiringTable const& d) {
    DiringHom h;
    for (std::size_t x = 0; x < d.order(); ++x) {
      h.map.push_back(static_cast<Elem>(x));
    }
    return h;
  }

}  // namespace diring

#endif  // DIRING_IDEAL_HPP_
