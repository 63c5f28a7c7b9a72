// Annihilators, (I:R), 3-primitive ideals, the 3-radical, and direct and
// subdirect products of left dirings.
//
// Quantities with two characterizations are computed both ways; a mismatch
// raises InvariantViolation.

#ifndef DIRING_RADICAL_HPP_
#define DIRING_RADICAL_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "diring.hpp"
#include "finite_group.hpp"
#include "ideal.hpp"
#include "module.hpp"

namespace diring {

  // {a | a⇀⊙M = 0 and a↼⊙M = 0}, a two-sided ideal of R.
  inline SubsetMask annihilator(LeftModuleTable const& m) {
    DiringTable const& r = m.ring();
    SubsetMask         ann(r.order());
    for (std::size_t a = 0; a < r.order(); ++a) {
      bool kills = true;
      for (std::size_t x = 0; x < m.order() && kills; ++x) {
        kills = m.lact(static_cast<Elem>(a), static_cast<Elem>(x)) == 0
                && m.ract(static_cast<Elem>(a), static_cast<Elem>(x)) == 0;
      }
      if (kills) {
        ann.insert(static_cast<Elem>(a));
      }
    }
    if (!is_ideal(r, ann, IdealKind::two_sided).ok()) {
      throw InvariantViolation("annihilator " + r.format(ann) + " is not a two-sided ideal");
    }
    return ann;
  }

  inline bool is_faithful(LeftModuleTable const& m) {
    return annihilator(m) == m.ring().group().zero_mask();
  }

  // {a | a⇀·R ⊆ I and a↼·R ⊆ I}, straight from the tables.
  inline SubsetMask colon_ideal_scan(DiringTable const& d, SubsetMask const& left_ideal) {
    SubsetMask out(d.order());
    for (std::size_t a = 0; a < d.order(); ++a) {
      bool in = true;
      for (std::size_t x = 0; x < d.order() && in; ++x) {
        in = left_ideal.contains(d.lmul(static_cast<Elem>(a), static_cast<Elem>(x)))
             && left_ideal.contains(d.rmul(static_cast<Elem>(a), static_cast<Elem>(x)));
      }
      if (in) {
        out.insert(static_cast<Elem>(a));
      }
    }
    return out;
  }

  // ann_R(R/I).
  inline SubsetMask colon_ideal_via_annihilator(DiringRef const& d, SubsetMask const& left_ideal) {
    return annihilator(quotient_module(regular_module(d), left_ideal).module);
  }

  // (I:R), computed both ways; also checks that it is the largest two-sided
  // ideal whose elements satisfy the defining condition, i.e. that every
  // two-sided ideal K ⊆ I lies in (I:R).
  inline SubsetMask colon_ideal(DiringRef const& d, SubsetMask const& left_ideal) {
    if (!is_ideal(*d, left_ideal, IdealKind::left).ok()) {
      throw Error("colon_ideal: " + d->format(left_ideal) + " is not a left ideal");
    }
    SubsetMask const scan = colon_ideal_scan(*d, left_ideal);
    SubsetMask const ann  = colon_ideal_via_annihilator(d, left_ideal);
    if (scan != ann) {
      throw InvariantViolation("(I:R) for I=" + d->format(left_ideal) + ": scan gives " + d->format(scan)
                               + ", annihilator of R/I gives " + d->format(ann));
    }
    for (auto const& k : ideal_masks(*d, IdealKind::two_sided)) {
      if (k.subset_of(left_ideal) && !k.subset_of(scan)) {
        throw InvariantViolation("(I:R) misses the ideal " + d->format(k) + " inside " + d->format(left_ideal));
      }
    }
    return scan;
  }

  inline SubsetMask colon_ideal(DiringTable const& d, SubsetMask const& left_ideal) {
    return colon_ideal(share(d), left_ideal);
  }

  inline std::vector<SubsetMask> three_maximal_left_ideals(DiringTable const& d) {
    return three_maximal_left_ideals(share(d));
  }

  struct Primitivity {
    bool                           primitive = false;
    std::optional<SubsetMask>      left_ideal;  // I with (I:R) = 0
    std::optional<LeftModuleTable> witness;     // R/I
  };

  // R has a faithful 3-irreducible module, searched among the R/I for
  // 3-maximal left ideals I.
  inline Primitivity is_3_primitive(DiringRef const& d) {
    Primitivity      out;
    SubsetMask const zero = d->group().zero_mask();
    for (auto const& i : three_maximal_left_ideals(d)) {
      if (colon_ideal(d, i) == zero) {
        out.primitive  = true;
        out.left_ideal = i;
        out.witness    = quotient_module(regular_module(d), i).module;
        if (!is_faithful(*out.witness) || !is_3_irreducible(*out.witness)) {
          throw InvariantViolation("3-primitivity witness is not faithful and 3-irreducible");
        }
        return out;
      }
    }
    return out;
  }

  inline Primitivity is_3_primitive(DiringTable const& d) {
    return is_3_primitive(share(d));
  }

  inline std::vector<SubsetMask> sorted_unique(std::vector<SubsetMask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  // {(I:R) | I 3-maximal}.
  inline std::vector<SubsetMask> three_primitive_ideals(DiringRef const& d) {
    std::vector<SubsetMask> out;
    for (auto const& i : three_maximal_left_ideals(d)) {
      out.push_back(colon_ideal(d, i));
    }
    return sorted_unique(std::move(out));
  }

  // {H two-sided | R/H is 3-primitive}.
  inline std::vector<SubsetMask> three_primitive_ideals_by_definition(DiringRef const& d) {
    std::vector<SubsetMask> out;
    for (auto const& h : ideal_masks(*d, IdealKind::two_sided)) {
      if (is_3_primitive(share(quotient_diring(*d, h).diring)).primitive) {
        out.push_back(h);
      }
    }
    return sorted_unique(std::move(out));
  }

  // Double inclusion between the two descriptions of the 3-primitive ideals.
  inline ValidationReport primitive_ideals_check(DiringRef const& d) {
    ValidationReport rep;
    auto const       via_colon = three_primitive_ideals(d);
    auto const       via_def   = three_primitive_ideals_by_definition(d);
    for (auto const& h : via_colon) {
      if (std::find(via_def.begin(), via_def.end(), h) == via_def.end()) {
        rep.add("colon-is-primitive", h.elements(), "(I:R) = " + d->format(h) + " but R/H is not 3-primitive");
      }
    }
    for (auto const& h : via_def) {
      if (std::find(via_colon.begin(), via_colon.end(), h) == via_colon.end()) {
        rep.add("primitive-is-colon", h.elements(),
                "R/H is 3-primitive for H = " + d->format(h) + " but H is no (I:R)");
      }
    }
    return rep;
  }

  struct RadicalReport {
    std::vector<SubsetMask> three_maximal_left_ideals;
    std::vector<SubsetMask> primitive_ideals;
    SubsetMask              rad3_via_annihilators;
    SubsetMask              rad3_via_primitive_ideals;
    bool                    agrees       = false;
    bool                    family_empty = false;
  };

  // rad₃R as ∩ ann(R/I) over 3-maximal I and as ∩ of the 3-primitive ideals
  // found by definition. An empty family gives R.
  inline RadicalReport rad3(DiringRef const& d) {
    RadicalReport out;
    out.three_maximal_left_ideals = three_maximal_left_ideals(d);
    out.family_empty              = out.three_maximal_left_ideals.empty();
    SubsetMask const full         = d->group().full();

    out.rad3_via_annihilators = full;
    LeftModuleTable const reg = regular_module(d);
    for (auto const& i : out.three_maximal_left_ideals) {
      out.rad3_via_annihilators = out.rad3_via_annihilators & annihilator(quotient_module(reg, i).module);
    }
    auto const check = primitive_ideals_check(d);
    if (!check.ok()) {
      throw InvariantViolation("3-primitive ideals disagree:\n" + check.str());
    }
    out.primitive_ideals          = three_primitive_ideals_by_definition(d);
    out.rad3_via_primitive_ideals = full;
    for (auto const& h : out.primitive_ideals) {
      out.rad3_via_primitive_ideals = out.rad3_via_primitive_ideals & h;
    }
    out.agrees = out.rad3_via_annihilators == out.rad3_via_primitive_ideals;
    for (auto const& h : out.primitive_ideals) {
      if (!out.rad3_via_annihilators.subset_of(h)) {
        throw InvariantViolation("3-primitive ideal " + d->format(h) + " does not contain rad3");
      }
    }
    return out;
  }

  inline RadicalReport rad3(DiringTable const& d) {
    return rad3(share(d));
  }

  // rad₃R = 0, cross-checked against the elementwise definition: every a ≠ 0
  // acts nontrivially on some R/I with I 3-maximal.
  inline bool is_3_semi_primitive(DiringRef const& d) {
    if (d->order() == 1) {
      throw Error("is_3_semi_primitive: the zero diring is excluded");
    }
    bool const by_radical = rad3(d).rad3_via_annihilators == d->group().zero_mask();
    auto const maximal    = three_maximal_left_ideals(d);
    bool       by_def     = true;
    for (std::size_t a = 1; a < d->order() && by_def; ++a) {
      bool separated = false;
      for (auto const& i : maximal) {
        for (std::size_t x = 0; x < d->order() && !separated; ++x) {
          separated = !i.contains(d->lmul(static_cast<Elem>(a), static_cast<Elem>(x)))
                      || !i.contains(d->rmul(static_cast<Elem>(a), static_cast<Elem>(x)));
        }
      }
      by_def = separated;
    }
    if (by_radical != by_def) {
      throw InvariantViolation("3-semi-primitivity: radical and elementwise criteria disagree");
    }
    return by_radical;
  }

  inline bool is_3_semi_primitive(DiringTable const& d) {
    return is_3_semi_primitive(share(d));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  struct DirectProduct {
    DiringTable            product;
    std::vector<DiringHom> projections;
  };

  // Componentwise operations on the tuples, first factor most significant.
  inline DirectProduct direct_product(std::vector<DiringTable> const& factors) {
    if (factors.empty()) {
      throw Error("direct_product: empty list of factors");
    }
    std::vector<FiniteAbelianGroup> groups;
    std::vector<std::size_t>        orders;
    double                          total = 1;
    for (auto const& f : factors) {
      groups.push_back(f.group());
      orders.push_back(f.order());
      total *= static_cast<double>(f.order());
    }
    if (total > static_cast<double>(kMaxOrder)) {
      throw CapExceeded("direct_product: order exceeds cap " + std::to_string(kMaxOrder));
    }
    FiniteAbelianGroup g      = product_group(groups);
    auto const         coords = detail::coordinates(orders);
    std::size_t const  n      = g.order();
    Table              l(n, n), r(n, n);
    std::vector<Elem>  tmp(factors.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < factors.size(); ++k) {
          tmp[k] = factors[k].lmul(coords[i][k], coords[j][k]);
        }
        l(i, j) = static_cast<Elem>(detail::encode(orders, tmp));
        for (std::size_t k = 0; k < factors.size(); ++k) {
          tmp[k] = factors[k].rmul(coords[i][k], coords[j][k]);
        }
        r(i, j) = static_cast<Elem>(detail::encode(orders, tmp));
      }
    }
    auto checked = verify_left_diring(std::move(g), std::move(l), std::move(r));
    if (!checked) {
      throw InvariantViolation("direct product is not a left diring:\n" + checked.report().str());
    }
    DirectProduct out{std::move(checked).value(), {}};
    Halos const&  h = out.product.halos();
    for (std::size_t i = 0; i < n; ++i) {
      bool left = true, plus = true;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        left = left && factors[k].halos().left.contains(coords[i][k]);
        plus = plus && factors[k].halos().additive.contains(coords[i][k]);
      }
      if (left != h.left.contains(static_cast<Elem>(i)) || plus != h.additive.contains(static_cast<Elem>(i))) {
        throw InvariantViolation("halos of a direct product are not the products of the halos");
      }
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      DiringHom p;
      for (std::size_t i = 0; i < n; ++i) {
        p.map.push_back(coords[i][k]);
      }
      if (!verify_hom(out.product, factors[k], p).ok() || !image(out.product, factors[k], p).is_full()) {
        throw InvariantViolation("projection " + std::to_string(k) + " is not a surjective homomorphism");
      }
      out.projections.push_back(std::move(p));
    }
    return out;
  }

  // φ: D -> ∏ factors is an injective homomorphism and every π_λ∘φ is onto.
  inline ValidationReport subdirect_product_verify(DiringTable const&              d,
                                                   std::vector<DiringTable> const& factors,
                                                   DirectProduct const&            prod,
                                                   DiringHom const&                phi) {
    ValidationReport rep;
    ValidationReport hom = verify_hom(d, prod.product, phi);
    if (!hom.ok()) {
      rep.merge(hom, "hom");
      return rep;
    }
    SubsetMask seen(prod.product.order());
    for (std::size_t x = 0; x < d.order(); ++x) {
      if (seen.contains(phi(static_cast<Elem>(x)))) {
        rep.add("injective", {static_cast<Elem>(x)}, "φ is not injective at " + d.name(static_cast<Elem>(x)));
        break;
      }
      seen.insert(phi(static_cast<Elem>(x)));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      SubsetMask hit(factors[k].order());
      for (std::size_t x = 0; x < d.order(); ++x) {
        hit.insert(prod.projections[k](phi(static_cast<Elem>(x))));
      }
      if (!hit.is_full()) {
        rep.add("surjective-component", {static_cast<Elem>(k)},
                "π_" + std::to_string(k) + "∘φ is not onto");
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Change of rings along R -> R/H
  ////////////////////////////////////////////////////////////////////////

  // A module over R/H viewed over R via a∗x := (a+H)∗x.
  inline LeftModuleTable inflate_module(DiringRef const& d, SubsetMask const& h, LeftModuleTable const& m_bar) {
    auto const q = quotient_diring(*d, h);
    if (!(m_bar.ring() == q.diring)) {
      throw Error("inflate_module: module is not over R/H");
    }
    std::size_t const n = d->order(), nm = m_bar.order();
    Table             l(n, nm), r(n, nm);
    for (std::size_t a = 0; a < n; ++a) {
      Elem const pa = q.projection(static_cast<Elem>(a));
      for (std::size_t x = 0; x < nm; ++x) {
        l(a, x) = m_bar.lact(pa, static_cast<Elem>(x));
        r(a, x) = m_bar.ract(pa, static_cast<Elem>(x));
      }
    }
    auto m = verify_module(d, m_bar.carrier(), std::move(l), std::move(r));
    if (!m) {
      throw InvariantViolation("inflated module fails the module axioms:\n" + m.report().str());
    }
    return std::move(m).value();
  }

  // A module over R with H ⊆ ann(M) viewed over R/H.
  inline LeftModuleTable deflate_module(LeftModuleTable const& m, SubsetMask const& h) {
    if (!h.subset_of(annihilator(m))) {
      throw Error("deflate_module: " + m.ring().format(h) + " is not inside the annihilator");
    }
    auto              q  = quotient_diring(m.ring(), h);
    std::size_t const k  = q.diring.order(), nm = m.order();
    Table             l(k, nm), r(k, nm);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t x = 0; x < nm; ++x) {
        l(c, x) = m.lact(q.representatives[c], static_cast<Elem>(x));
        r(c, x) = m.ract(q.representatives[c], static_cast<Elem>(x));
      }
    }
    auto out = verify_module(share(std::move(q.diring)), m.carrier(), std::move(l), std::move(r));
    if (!out) {
      throw InvariantViolation("deflated module fails the module axioms:\n" + out.report().str());
    }
    return std::move(out).value();
  }

  // Round trip, preservation of 3-irreducibility, and ann over R/H equal to
  // ann(M)/H.
  inline ValidationReport inflation_check(LeftModuleTable const& m, SubsetMask const& h) {
    ValidationReport      rep;
    LeftModuleTable const bar  = deflate_module(m, h);
    LeftModuleTable const back = inflate_module(m.ring_ref(), h, bar);
    if (!(back.lact_table() == m.lact_table()) || !(back.ract_table() == m.ract_table())) {
      rep.add("round-trip", {}, "inflate(deflate(M)) != M");
    }
    if (is_3_irreducible(m) != is_3_irreducible(bar)) {
      rep.add("irreducibility", {}, "3-irreducibility changes under R -> R/H");
    }
    auto const q   = quotient_diring(m.ring(), h);
    SubsetMask img(q.diring.order());
    for (Elem a : annihilator(m).elements()) {
      img.insert(q.projection(a));
    }
    if (img != annihilator(bar)) {
      rep.add("annihilator", {}, "ann over R/H is not ann(M)/H");
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semi-primitivity characterizations
  ////////////////////////////////////////////////////////////////////////

  struct SemiPrimitivityReport {
    bool semi_primitive      = false;  // rad₃R = 0
    bool faithful_reducible  = false;  // ⊕ R/I is faithful and completely 3-reducible
    bool subdirect           = false;  // R embeds subdirectly in ∏ R/ann(R/I), factors 3-primitive
    std::optional<LeftModuleTable> module;
    ValidationReport               report;  // failures of the constructions themselves
    bool agree() const { return semi_primitive == faithful_reducible && semi_primitive == subdirect; }
  };

  // Evaluates the three equivalent conditions constructively. Summands R/I
  // with the same annihilator are used once, which leaves the annihilator of
  // the sum unchanged.
  inline SemiPrimitivityReport semi_primitivity_characterizations(DiringRef const& d) {
    if (d->order() == 1) {
      throw Error("semi_primitivity_characterizations: the zero diring is excluded");
    }
    SemiPrimitivityReport          out;
    out.semi_primitive        = is_3_semi_primitive(d);
    LeftModuleTable const reg = regular_module(d);

    std::vector<LeftModuleTable> parts;
    std::vector<SubsetMask>      anns;
    SubsetMask                   meet = d->group().full();
    double                       size = 1;
    for (auto const& i : three_maximal_left_ideals(d)) {
      auto       q   = quotient_module(reg, i);
      SubsetMask ann = annihilator(q.module);
      if (std::find(anns.begin(), anns.end(), ann) != anns.end()) {
        continue;
      }
      anns.push_back(ann);
      meet = meet & ann;
      size *= static_cast<double>(q.module.order());
      parts.push_back(std::move(q.module));
    }
    if (size > static_cast<double>(kLatticeCap)) {
      throw CapExceeded("semi_primitivity_characterizations: direct sum exceeds lattice cap");
    }
    LeftModuleTable sum = direct_sum(d, parts);
    if (annihilator(sum) != meet) {
      out.report.add("sum-annihilator", {}, "ann of the direct sum is not the meet of the annihilators");
    }
    out.faithful_reducible = is_faithful(sum) && is_completely_3_reducible(sum).completely_reducible;
    out.module             = sum;

    if (!anns.empty()) {
      std::vector<DiringTable> factors;
      std::vector<QuotientDiring> qs;
      bool                     all_primitive = true;
      for (auto const& h : anns) {
        qs.push_back(quotient_diring(*d, h));
        factors.push_back(qs.back().diring);
        all_primitive = all_primitive && is_3_primitive(share(factors.back())).primitive;
      }
      DirectProduct const prod = direct_product(factors);
      std::vector<std::size_t> orders;
      for (auto const& f : factors) {
        orders.push_back(f.order());
      }
      DiringHom         phi;
      std::vector<Elem> tmp(factors.size());
      for (std::size_t a = 0; a < d->order(); ++a) {
        for (std::size_t k = 0; k < qs.size(); ++k) {
          tmp[k] = qs[k].projection(static_cast<Elem>(a));
        }
        phi.map.push_back(static_cast<Elem>(detail::encode(orders, tmp)));
      }
      ValidationReport const sub = subdirect_product_verify(*d, factors, prod, phi);
      if (!all_primitive) {
        out.report.add("factor-primitive", {}, "a factor R/ann(R/I) is not 3-primitive");
      }
      out.subdirect = all_primitive && sub.ok();
    }
    if (out.semi_primitive && !(out.faithful_reducible && out.subdirect)) {
      out.report.add("construction", {}, "semi-primitive diring but a construction failed");
    }
    return out;
  }

  inline SemiPrimitivityReport semi_primitivity_characterizations(DiringTable const& d) {
    return semi_primitivity_characterizations(share(d));
  }

  struct RadicalQuotientReport {
    bool             vacuous = false;
    ValidationReport report;
  };

  // rad₃(R/rad₃R) = 0 together with the correspondence between ideals of
  // R/rad₃R and ideals of R containing rad₃R. Vacuous when rad₃R = R.
  inline RadicalQuotientReport radical_quotient_check(DiringRef const& d) {
    RadicalQuotientReport     out;
    SubsetMask const rad = rad3(d).rad3_via_annihilators;
    if (rad.is_full()) {
      out.vacuous = true;
      return out;
    }
    auto const q    = quotient_diring(*d, rad);
    auto const qrad = rad3(share(q.diring));
    if (qrad.rad3_via_annihilators != q.diring.group().zero_mask()) {
      out.report.add("quotient-radical", {},
                     "rad3(R/rad3 R) = " + q.diring.format(qrad.rad3_via_annihilators) + " is not zero");
    }
    std::vector<SubsetMask> above;
    for (auto const& k : ideal_masks(*d, IdealKind::two_sided)) {
      if (rad.subset_of(k)) {
        above.push_back(k);
      }
    }
    std::vector<SubsetMask> pulled;
    for (auto const& kb : ideal_masks(q.diring, IdealKind::two_sided)) {
      SubsetMask pre(d->order());
      for (std::size_t a = 0; a < d->order(); ++a) {
        if (kb.contains(q.projection(static_cast<Elem>(a)))) {
          pre.insert(static_cast<Elem>(a));
        }
      }
      pulled.push_back(pre);
    }
    if (sorted_unique(above) != sorted_unique(pulled)) {
      out.report.add("ideal-correspondence", {}, "ideals of R/rad3 R do not match ideals of R above rad3 R");
    }
    return out;
  }

  inline RadicalQuotientReport radical_quotient_check(DiringTable const& d) {
    return radical_quotient_check(share(d));
  }

}  // namespace diring

#endif  // DIRING_RADICAL_HPP_
