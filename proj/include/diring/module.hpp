// Left modules over a left diring R: an abelian group M with two actions
// R × M → M, written a ⇀⊙ x (lact) and a ↼⊙ x (ract), satisfying
//   a∗(x+y) = a∗x + a∗y          (a+b)∗x = a∗x + b∗x
//   (a⇀·b)⇀⊙x = a⇀⊙(b∗x)         (a↼·b)⇀⊙x = a↼⊙(b⇀⊙x)
//   (a⋄b)↼⊙x = a↼⊙(b↼⊙x)         e↼⊙x = x
// for ∗ ∈ {⇀⊙, ↼⊙}, ⋄ ∈ {⇀·, ↼·} and a left bar-unit e of R.

#ifndef DIRING_MODULE_HPP_
#define DIRING_MODULE_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "diring.hpp"
#include "finite_group.hpp"
#include "ideal.hpp"

namespace diring {

  class LeftModuleTable;
  Checked<LeftModuleTable> verify_module(DiringRef ring, FiniteAbelianGroup carrier, Table lact, Table ract);

  class LeftModuleTable {
   public:
    DiringTable const&        ring() const noexcept { return *ring_; }
    DiringRef const&          ring_ref() const noexcept { return ring_; }
    FiniteAbelianGroup const& carrier() const noexcept { return carrier_; }
    std::size_t               order() const noexcept { return carrier_.order(); }

    Elem add(Elem x, Elem y) const noexcept { return carrier_.add(x, y); }
    Elem neg(Elem x) const noexcept { return carrier_.neg(x); }
    Elem sub(Elem x, Elem y) const noexcept { return carrier_.sub(x, y); }
    Elem lact(Elem a, Elem x) const noexcept { return lact_(a, x); }
    Elem ract(Elem a, Elem x) const noexcept { return ract_(a, x); }
    Elem act(Product p, Elem a, Elem x) const noexcept {
      return p == Product::left ? lact_(a, x) : ract_(a, x);
    }

    Table const& lact_table() const noexcept { return lact_; }
    Table const& ract_table() const noexcept { return ract_; }

    // The left bar-unit used for the halo and the even/odd decomposition.
    Elem              chosen_e() const noexcept { return chosen_e_; }
    SubsetMask const& halo() const noexcept { return halo_; }

    std::string const& name(Elem x) const { return carrier_.name(x); }
    std::string        format(SubsetMask const& m) const { return carrier_.format(m); }

    friend bool operator==(LeftModuleTable const& a, LeftModuleTable const& b) {
      return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.carrier_ == b.carrier_
             && a.lact_ == b.lact_ && a.ract_ == b.ract_;
    }

   private:
    friend Checked<LeftModuleTable> verify_module(DiringRef, FiniteAbelianGroup, Table, Table);

    LeftModuleTable(DiringRef r, FiniteAbelianGroup c, Table l, Table rt, Elem e, SubsetMask h)
        : ring_(std::move(r)),
          carrier_(std::move(c)),
          lact_(std::move(l)),
          ract_(std::move(rt)),
          chosen_e_(e),
          halo_(h) {}

    DiringRef          ring_;
    FiniteAbelianGroup carrier_;
    Table              lact_;
    Table              ract_;
    Elem               chosen_e_;
    SubsetMask         halo_;
  };

  // Exhaustive axiom scan; each violated axiom is reported once with its
  // first witness (a, b, x) or (a, x, y).
  inline Checked<LeftModuleTable> verify_module(DiringRef ring, FiniteAbelianGroup carrier, Table lact, Table ract) {
    if (!ring) {
      throw Error("verify_module: null ring");
    }
    DiringTable const& r = *ring;
    if (!r.is_left()) {
      throw Error("verify_module: the ring is not a left diring");
    }
    ValidationReport  rep;
    std::size_t const nr = r.order();
    std::size_t const nm = carrier.order();
    for (Table const* t : {&lact, &ract}) {
      char const* id = t == &lact ? "lact" : "ract";
      if (t->rows() != nr || t->cols() != nm) {
        rep.add(std::string("shape/") + id, {},
                std::string(id) + " must be " + std::to_string(nr) + "x" + std::to_string(nm));
        return rep;
      }
      for (std::size_t a = 0; a < nr; ++a) {
        for (std::size_t x = 0; x < nm; ++x) {
          if ((*t)(a, x) >= nm) {
            rep.add(std::string("closure/") + id, {static_cast<Elem>(a), static_cast<Elem>(x)},
                    "action value out of range");
            return rep;
          }
        }
      }
    }
    auto const& rn = r.group().names();
    auto const& mn = carrier.names();
    auto E = [](std::size_t v) { return static_cast<Elem>(v); };
    auto note = [&rep](std::string const& id, std::vector<Elem> w, std::string msg) {
      if (!rep.has(id)) {
        rep.add(id, std::move(w), std::move(msg));
      }
    };

    for (Table const* t : {&lact, &ract}) {
      std::string const id  = t == &lact ? "lact" : "ract";
      std::string const sym = t == &lact ? "⇀⊙" : "↼⊙";
      for (std::size_t a = 0; a < nr; ++a) {
        for (std::size_t x = 0; x < nm; ++x) {
          for (std::size_t y = 0; y < nm; ++y) {
            if ((*t)(a, carrier.add(E(x), E(y))) != carrier.add((*t)(a, x), (*t)(a, y))) {
              note("module-additive/" + id, {E(a), E(x), E(y)},
                   rn[a] + sym + "(" + mn[x] + "+" + mn[y] + ") is not additive");
            }
          }
        }
      }
      for (std::size_t a = 0; a < nr; ++a) {
        for (std::size_t b = 0; b < nr; ++b) {
          for (std::size_t x = 0; x < nm; ++x) {
            if ((*t)(r.add(E(a), E(b)), x) != carrier.add((*t)(a, x), (*t)(b, x))) {
              note("ring-additive/" + id, {E(a), E(b), E(x)},
                   "(" + rn[a] + "+" + rn[b] + ")" + sym + mn[x] + " is not additive");
            }
          }
        }
      }
    }
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t b = 0; b < nr; ++b) {
        Elem const ab_l = r.lmul(E(a), E(b));
        Elem const ab_r = r.rmul(E(a), E(b));
        for (std::size_t x = 0; x < nm; ++x) {
          std::string const at = " at a=" + rn[a] + ", b=" + rn[b] + ", x=" + mn[x];
          if (lact(ab_l, x) != lact(a, lact(b, x))) {
            note("lprod-lact/lact", {E(a), E(b), E(x)}, "(a⇀·b)⇀⊙x != a⇀⊙(b⇀⊙x)" + at);
          }
          if (lact(ab_l, x) != lact(a, ract(b, x))) {
            note("lprod-lact/ract", {E(a), E(b), E(x)}, "(a⇀·b)⇀⊙x != a⇀⊙(b↼⊙x)" + at);
          }
          if (lact(ab_r, x) != ract(a, lact(b, x))) {
            note("rprod-lact", {E(a), E(b), E(x)}, "(a↼·b)⇀⊙x != a↼⊙(b⇀⊙x)" + at);
          }
          if (ract(ab_l, x) != ract(a, ract(b, x))) {
            note("ract-product/lprod", {E(a), E(b), E(x)}, "(a⇀·b)↼⊙x != a↼⊙(b↼⊙x)" + at);
          }
          if (ract(ab_r, x) != ract(a, ract(b, x))) {
            note("ract-product/rprod", {E(a), E(b), E(x)}, "(a↼·b)↼⊙x != a↼⊙(b↼⊙x)" + at);
          }
        }
      }
    }
    std::optional<Elem> chosen;
    for (Elem e : r.halos().left.elements()) {
      bool ok = true;
      for (std::size_t x = 0; x < nm && ok; ++x) {
        ok = ract(e, x) == x;
      }
      if (ok) {
        chosen = e;
        break;
      }
    }
    if (!chosen) {
      rep.add("bar-unit-action", {}, "no left bar-unit e of the ring has e↼⊙x = x for all x");
    }
    if (!rep.ok()) {
      return rep;
    }
    auto halo_for = [&](Elem e) {
      SubsetMask h(nm);
      for (std::size_t x = 0; x < nm; ++x) {
        if (lact(e, x) == 0) {
          h.insert(E(x));
        }
      }
      return h;
    };
    SubsetMask const halo = halo_for(*chosen);
    for (Elem e : r.halos().left.elements()) {
      if (halo_for(e) != halo) {
        rep.add("module-halo-independence", {e},
                "additive halo changes with the left bar-unit " + rn[e]);
        break;
      }
    }
    for (Elem e : r.halos().left.elements()) {
      SubsetMask even(nm);
      for (std::size_t x = 0; x < nm; ++x) {
        even.insert(lact(e, x));
      }
      if ((even & halo) != SubsetMask::singleton(nm, 0)) {
        rep.add("halo-decomposition", {e}, "e⇀⊙M meets the halo nontrivially for e=" + rn[e]);
        break;
      }
      if (!set_sum(carrier, even, halo).is_full()) {
        rep.add("halo-decomposition", {e}, "e⇀⊙M + halo != M for e=" + rn[e]);
        break;
      }
    }
    if (!rep.ok()) {
      return rep;
    }
    return LeftModuleTable(std::move(ring), std::move(carrier), std::move(lact), std::move(ract), *chosen, halo);
  }

  // _RR: the ring acting on itself by its two products.
  inline LeftModuleTable regular_module(DiringRef ring) {
    FiniteAbelianGroup g = ring->group();
    Table              l = ring->lprod();
    Table              r = ring->rprod();
    auto               m = verify_module(std::move(ring), std::move(g), std::move(l), std::move(r));
    if (!m) {
      throw InvariantViolation("regular module fails the module axioms:\n" + m.report().str());
    }
    return std::move(m).value();
  }

  inline LeftModuleTable zero_module(DiringRef ring) {
    std::size_t const n = ring->order();
    return verify_module(std::move(ring), FiniteAbelianGroup(), Table(n, 1, 0), Table(n, 1, 0)).value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Left translations
  ////////////////////////////////////////////////////////////////////////

  using Endo = std::vector<Elem>;

  // Builds the actions a⇀⊙x := lmaps[a][x], a↼⊙x := rmaps[a][x].
  inline Checked<LeftModuleTable> module_from_translations(DiringRef                ring,
                                                          FiniteAbelianGroup       carrier,
                                                          std::vector<Endo> const& lmaps,
                                                          std::vector<Endo> const& rmaps) {
    std::size_t const nr = ring->order(), nm = carrier.order();
    if (lmaps.size() != nr || rmaps.size() != nr) {
      throw Error("module_from_translations: one map per ring element required");
    }
    Table l(nr, nm), r(nr, nm);
    for (std::size_t a = 0; a < nr; ++a) {
      if (lmaps[a].size() != nm || rmaps[a].size() != nm) {
        throw Error("module_from_translations: map has wrong length");
      }
      for (std::size_t x = 0; x < nm; ++x) {
        l(a, x) = lmaps[a][x];
        r(a, x) = rmaps[a][x];
      }
    }
    return verify_module(std::move(ring), std::move(carrier), std::move(l), std::move(r));
  }

  // Checks that a ↦ ⇀L_a and a ↦ ↼L_a are additive maps into End(M) with
  //   ⇀L_a⇀L_b = ⇀L_a↼L_b = ⇀L_{a⇀·b},  ↼L_a↼L_b = ↼L_{a∗b},
  //   ↼L_a⇀L_b = ⇀L_{a↼·b},  ↼L_a↼L_e = ↼L_a,  ↼L_e = 1,
  // and that the module rebuilt from these maps is M itself.
  inline ValidationReport left_translation_check(LeftModuleTable const& m) {
    DiringTable const& r  = m.ring();
    std::size_t const  nr = r.order(), nm = m.order();
    std::vector<Endo>  lm(nr, Endo(nm)), rm(nr, Endo(nm));
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t x = 0; x < nm; ++x) {
        lm[a][x] = m.lact(static_cast<Elem>(a), static_cast<Elem>(x));
        rm[a][x] = m.ract(static_cast<Elem>(a), static_cast<Elem>(x));
      }
    }
    auto compose = [nm](Endo const& f, Endo const& g) {
      Endo h(nm);
      for (std::size_t x = 0; x < nm; ++x) {
        h[x] = f[g[x]];
      }
      return h;
    };
    ValidationReport rep;
    auto const&      rn = r.group().names();
    auto note = [&rep](std::string const& id, std::vector<Elem> w, std::string msg) {
      if (!rep.has(id)) {
        rep.add(id, std::move(w), std::move(msg));
      }
    };
    for (std::size_t a = 0; a < nr; ++a) {
      Elem const ea = static_cast<Elem>(a);
      if (!is_group_hom(m.carrier(), m.carrier(), lm[a]) || !is_group_hom(m.carrier(), m.carrier(), rm[a])) {
        note("translation-endomorphism", {ea}, "translation by " + rn[a] + " is not additive");
      }
      for (std::size_t b = 0; b < nr; ++b) {
        Elem const eb = static_cast<Elem>(b);
        Elem const s  = r.add(ea, eb);
        for (std::size_t x = 0; x < nm; ++x) {
          if (lm[s][x] != m.add(lm[a][x], lm[b][x]) || rm[s][x] != m.add(rm[a][x], rm[b][x])) {
            note("translation-additive", {ea, eb}, "L_{a+b} != L_a + L_b at a=" + rn[a] + ", b=" + rn[b]);
          }
        }
        std::string const at = " at a=" + rn[a] + ", b=" + rn[b];
        Endo const        ll = compose(lm[a], lm[b]);
        Endo const        lr = compose(lm[a], rm[b]);
        if (ll != lm[r.lmul(ea, eb)] || lr != lm[r.lmul(ea, eb)]) {
          note("compose-lact", {ea, eb}, "⇀L_a⇀L_b = ⇀L_a↼L_b = ⇀L_{a⇀·b} fails" + at);
        }
        Endo const rr = compose(rm[a], rm[b]);
        if (rr != rm[r.lmul(ea, eb)] || rr != rm[r.rmul(ea, eb)]) {
          note("compose-ract", {ea, eb}, "↼L_a↼L_b = ↼L_{a∗b} fails" + at);
        }
        if (compose(rm[a], lm[b]) != lm[r.rmul(ea, eb)]) {
          note("compose-mixed", {ea, eb}, "↼L_a⇀L_b = ⇀L_{a↼·b} fails" + at);
        }
      }
    }
    Elem const e = m.chosen_e();
    Endo       id(nm);
    for (std::size_t x = 0; x < nm; ++x) {
      id[x] = static_cast<Elem>(x);
    }
    if (rm[e] != id) {
      note("unit-translation", {e}, "↼L_e is not the identity");
    }
    for (std::size_t a = 0; a < nr; ++a) {
      if (compose(rm[a], rm[e]) != rm[a]) {
        note("unit-translation", {static_cast<Elem>(a), e}, "↼L_a↼L_e != ↼L_a");
      }
    }
    auto rebuilt = module_from_translations(m.ring_ref(), m.carrier(), lm, rm);
    if (!rebuilt || !(rebuilt.value() == m)) {
      note("round-trip", {}, "module rebuilt from its translations differs");
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Halo and decomposition
  ////////////////////////////////////////////////////////////////////////

  inline SubsetMask module_halo(LeftModuleTable const& m) {
    return m.halo();
  }

  struct Decomposition {
    SubsetMask even;  // e ⇀⊙ M
    SubsetMask odd;   // the additive halo
  };

  inline Decomposition decompose(LeftModuleTable const& m, std::optional<Elem> e = std::nullopt) {
    Elem const unit = e.value_or(m.chosen_e());
    if (!m.ring().halos().left.contains(unit)) {
      throw Error("decompose: not a left bar-unit");
    }
    SubsetMask even(m.order()), odd(m.order());
    for (std::size_t x = 0; x < m.order(); ++x) {
      even.insert(m.lact(unit, static_cast<Elem>(x)));
      if (m.lact(unit, static_cast<Elem>(x)) == 0) {
        odd.insert(static_cast<Elem>(x));
      }
    }
    return Decomposition{even, odd};
  }

  // x = x0 + x1 with x0 = e⇀⊙x even and x1 = x − x0 in the halo.
  inline std::pair<Elem, Elem> components(LeftModuleTable const& m, Elem x, std::optional<Elem> e = std::nullopt) {
    Elem const unit = e.value_or(m.chosen_e());
    Elem const x0   = m.lact(unit, x);
    return {x0, m.sub(x, x0)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Submodules and quotients
  ////////////////////////////////////////////////////////////////////////

  inline bool is_submodule(LeftModuleTable const& m, SubsetMask const& s) {
    if (s.size() != m.order() || !is_subgroup(m.carrier(), s)) {
      return false;
    }
    for (std::size_t a = 0; a < m.ring().order(); ++a) {
      for (Elem x : s.elements()) {
        if (!s.contains(m.lact(static_cast<Elem>(a), x)) || !s.contains(m.ract(static_cast<Elem>(a), x))) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<SubsetMask> enumerate_submodules(LeftModuleTable const& m) {
    require_cap(m.order(), kLatticeCap, "enumerate_submodules");
    std::vector<SubsetMask> out;
    for (auto const& s : enumerate_subgroups(m.carrier())) {
      if (is_submodule(m, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  // A submodule as a module in its own right; elements keep their labels and
  // relative order.
  inline LeftModuleTable restrict_to_submodule(LeftModuleTable const& m, SubsetMask const& s) {
    if (!is_submodule(m, s)) {
      throw Error("restrict_to_submodule: " + m.format(s) + " is not a submodule");
    }
    auto const               xs = s.elements();
    std::vector<Elem>        pos(m.order(), 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      pos[xs[i]] = static_cast<Elem>(i);
      names.push_back(m.name(xs[i]));
    }
    std::size_t const k = xs.size();
    Table             add(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        add(i, j) = pos[m.add(xs[i], xs[j])];
      }
    }
    std::size_t const nr = m.ring().order();
    Table             l(nr, k), r(nr, k);
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t i = 0; i < k; ++i) {
        l(a, i) = pos[m.lact(static_cast<Elem>(a), xs[i])];
        r(a, i) = pos[m.ract(static_cast<Elem>(a), xs[i])];
      }
    }
    auto g = validate_abelian_group(std::move(names), add).value();
    return verify_module(m.ring_ref(), std::move(g), std::move(l), std::move(r)).value();
  }

  // ℏ+(M) is the unique proper submodule strictly between 0 and M; in
  // particular 0 ≠ ℏ+(M) ≠ M.
  inline bool is_3_irreducible(LeftModuleTable const& m) {
    SubsetMask const zero = m.carrier().zero_mask();
    SubsetMask const full = m.carrier().full();
    if (m.halo() == zero || m.halo() == full) {
      return false;
    }
    for (auto const& s : enumerate_submodules(m)) {
      if (s != zero && s != full && s != m.halo()) {
        return false;
      }
    }
    return true;
  }

  struct QuotientModule {
    LeftModuleTable   module;
    std::vector<Elem> projection;
    std::vector<Elem> representatives;
  };

  // M/N with a∗(x+N) = a∗x + N.
  inline QuotientModule quotient_module(LeftModuleTable const& m, SubsetMask const& n) {
    if (!is_submodule(m, n)) {
      throw Error("quotient_module: " + m.format(n) + " is not a submodule");
    }
    auto              q  = quotient_group(m.carrier(), n);
    std::size_t const k  = q.group.order();
    std::size_t const nr = m.ring().order();
    Table             l(nr, k), r(nr, k);
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t c = 0; c < k; ++c) {
        l(a, c) = q.projection[m.lact(static_cast<Elem>(a), q.representatives[c])];
        r(a, c) = q.projection[m.ract(static_cast<Elem>(a), q.representatives[c])];
      }
    }
    auto checked = verify_module(m.ring_ref(), q.group, std::move(l), std::move(r));
    if (!checked) {
      throw InvariantViolation("quotient module fails the module axioms:\n" + checked.report().str());
    }
    return QuotientModule{std::move(checked).value(), std::move(q.projection), std::move(q.representatives)};
  }

  // ℏ+(M/N) = (N + ℏ+(M))/N.
  inline ValidationReport quotient_halo_check(LeftModuleTable const& m, SubsetMask const& n) {
    auto const       q = quotient_module(m, n);
    SubsetMask const s = set_sum(m.carrier(), n, m.halo());
    SubsetMask       expected(q.module.order());
    for (Elem x : s.elements()) {
      expected.insert(q.projection[x]);
    }
    ValidationReport rep;
    if (expected != q.module.halo()) {
      rep.add("quotient-halo", {},
              "halo of M/" + m.format(n) + " is " + q.module.format(q.module.halo()) + ", expected "
                  + q.module.format(expected));
    }
    return rep;
  }

  // N + ℏ+(M) is the unique proper submodule strictly between N and M.
  inline bool is_3_maximal_by_lattice(LeftModuleTable const& m, SubsetMask const& n) {
    if (!is_submodule(m, n)) {
      throw Error("is_3_maximal: " + m.format(n) + " is not a submodule");
    }
    SubsetMask const middle = set_sum(m.carrier(), n, m.halo());
    SubsetMask const full   = m.carrier().full();
    if (middle == n || middle == full) {
      return false;
    }
    for (auto const& s : enumerate_submodules(m)) {
      if (n.subset_of(s) && s != n && s != full && s != middle) {
        return false;
      }
    }
    return true;
  }

  // M/N is 3-irreducible. Cross-checked against the lattice criterion.
  inline bool is_3_maximal(LeftModuleTable const& m, SubsetMask const& n) {
    bool const by_quotient = is_3_irreducible(quotient_module(m, n).module);
    if (by_quotient != is_3_maximal_by_lattice(m, n)) {
      throw InvariantViolation("3-maximality of " + m.format(n)
                               + ": quotient and lattice criteria disagree");
    }
    return by_quotient;
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct sums
  ////////////////////////////////////////////////////////////////////////

  // External direct sum of a finite list with componentwise operations; the
  // empty sum is the zero module. Tuples are ordered with the first summand
  // most significant.
  inline LeftModuleTable direct_sum(DiringRef ring, std::vector<LeftModuleTable> const& parts) {
    if (parts.empty()) {
      return zero_module(std::move(ring));
    }
    for (auto const& p : parts) {
      if (!(p.ring() == *ring)) {
        throw Error("direct_sum: summands are modules over different dirings");
      }
    }
    std::vector<FiniteAbelianGroup> groups;
    std::vector<std::size_t>        orders;
    for (auto const& p : parts) {
      groups.push_back(p.carrier());
      orders.push_back(p.order());
    }
    FiniteAbelianGroup g      = product_group(groups);
    auto const         coords = detail::coordinates(orders);
    std::size_t const  n      = g.order();
    std::size_t const  nr     = ring->order();
    Table              l(nr, n), r(nr, n);
    std::vector<Elem>  tmp(parts.size());
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
          tmp[k] = parts[k].lact(static_cast<Elem>(a), coords[i][k]);
        }
        l(a, i) = static_cast<Elem>(detail::encode(orders, tmp));
        for (std::size_t k = 0; k < parts.size(); ++k) {
          tmp[k] = parts[k].ract(static_cast<Elem>(a), coords[i][k]);
        }
        r(a, i) = static_cast<Elem>(detail::encode(orders, tmp));
      }
    }
    auto checked = verify_module(ring, std::move(g), std::move(l), std::move(r));
    if (!checked) {
      throw InvariantViolation("direct sum fails the module axioms:\n" + checked.report().str());
    }
    LeftModuleTable sum = std::move(checked).value();
    for (std::size_t i = 0; i < n; ++i) {
      bool in_all = true;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        in_all = in_all && parts[k].halo().contains(coords[i][k]);
      }
      if (in_all != sum.halo().contains(static_cast<Elem>(i))) {
        throw InvariantViolation("halo of a direct sum is not the sum of the halos");
      }
    }
    return sum;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct ModHom {
    std::vector<Elem> map;

    Elem operator()(Elem x) const { return map.at(x); }
    friend bool operator==(ModHom const&, ModHom const&) = default;
  };

  inline bool is_module_hom(LeftModuleTable const& m, LeftModuleTable const& n, ModHom const& f) {
    if (!is_group_hom(m.carrier(), n.carrier(), f.map)) {
      return false;
    }
    for (std::size_t a = 0; a < m.ring().order(); ++a) {
      for (std::size_t x = 0; x < m.order(); ++x) {
        Elem const ea = static_cast<Elem>(a), ex = static_cast<Elem>(x);
        if (f(m.lact(ea, ex)) != n.lact(ea, f(ex)) || f(m.ract(ea, ex)) != n.ract(ea, f(ex))) {
          return false;
        }
      }
    }
    return true;
  }

  // Hom_R(M, N), in enumeration order of the additive homomorphisms.
  inline std::vector<ModHom> hom_group(LeftModuleTable const& m, LeftModuleTable const& n) {
    if (!(m.ring() == n.ring())) {
      throw Error("hom_group: modules over different dirings");
    }
    auto const gens = generating_set(m.carrier());
    double     cost = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      cost *= static_cast<double>(n.order());
    }
    if (cost > 1e7) {
      throw CapExceeded("hom_group: too many candidate maps");
    }
    std::vector<ModHom> out;
    for (auto& map : enumerate_group_homs(m.carrier(), n.carrier())) {
      ModHom f{std::move(map)};
      if (is_module_hom(m, n, f)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  inline SubsetMask hom_kernel(LeftModuleTable const& m, ModHom const& f) {
    SubsetMask k(m.order());
    for (std::size_t x = 0; x < m.order(); ++x) {
      if (f(static_cast<Elem>(x)) == 0) {
        k.insert(static_cast<Elem>(x));
      }
    }
    return k;
  }

  inline SubsetMask hom_image(LeftModuleTable const& m, LeftModuleTable const& n, ModHom const& f) {
    SubsetMask img(n.order());
    for (std::size_t x = 0; x < m.order(); ++x) {
      img.insert(f(static_cast<Elem>(x)));
    }
    return img;
  }

  inline bool is_bijective(ModHom const& f, std::size_t target_order) {
    if (f.map.size() != target_order) {
      return false;
    }
    return SubsetMask::of_range(target_order, f.map).is_full();
  }

  // An R-isomorphism M -> N, if one exists.
  inline std::optional<ModHom> find_module_isomorphism(LeftModuleTable const& m, LeftModuleTable const& n) {
    if (m.order() != n.order() || !(m.ring() == n.ring())) {
      return std::nullopt;
    }
    for (auto& map : enumerate_group_homs(m.carrier(), n.carrier())) {
      ModHom f{std::move(map)};
      if (is_bijective(f, n.order()) && is_module_hom(m, n, f)) {
        return f;
      }
    }
    return std::nullopt;
  }

  // Kernel and image are submodules, φ(ℏ+(M)) ⊆ ℏ+(N) ∩ Im φ, and the halo of
  // Im φ as a module is ℏ+(N) ∩ Im φ.
  inline ValidationReport hom_halo_check(LeftModuleTable const& m, LeftModuleTable const& n, ModHom const& f) {
    ValidationReport rep;
    SubsetMask const ker = hom_kernel(m, f);
    SubsetMask const img = hom_image(m, n, f);
    if (!is_submodule(m, ker)) {
      rep.add("kernel-submodule", {}, "kernel " + m.format(ker) + " is not a submodule");
    }
    if (!is_submodule(n, img)) {
      rep.add("image-submodule", {}, "image " + n.format(img) + " is not a submodule");
      return rep;
    }
    SubsetMask mapped(n.order());
    for (Elem x : m.halo().elements()) {
      mapped.insert(f(x));
    }
    SubsetMask const meet = n.halo() & img;
    if (!mapped.subset_of(meet)) {
      rep.add("halo-image", {}, "φ(ℏ+(M)) = " + n.format(mapped) + " is not inside " + n.format(meet));
    }
    LeftModuleTable const sub = restrict_to_submodule(n, img);
    auto const            xs  = img.elements();
    SubsetMask            sub_halo(n.order());
    for (Elem i : sub.halo().elements()) {
      sub_halo.insert(xs[i]);
    }
    if (sub_halo != meet) {
      rep.add("image-halo", {}, "ℏ+(Im φ) = " + n.format(sub_halo) + " != " + n.format(meet));
    }
    return rep;
  }

  struct EndRing {
    std::vector<ModHom> elements;
    Table               add;
    Table               mul;  // mul(f, g) = f ∘ g
    Elem                zero     = 0;
    Elem                identity = 0;
  };

  // End_R(M) under pointwise addition and composition.
  inline EndRing end_ring(LeftModuleTable const& m) {
    EndRing                               out;
    out.elements = hom_group(m, m);
    std::size_t const                     k = out.elements.size();
    std::map<std::vector<Elem>, Elem>     index;
    for (std::size_t i = 0; i < k; ++i) {
      index.emplace(out.elements[i].map, static_cast<Elem>(i));
    }
    std::vector<Elem> id(m.order()), zero(m.order(), 0);
    for (std::size_t x = 0; x < m.order(); ++x) {
      id[x] = static_cast<Elem>(x);
    }
    out.zero     = index.at(zero);
    out.identity = index.at(id);
    out.add      = Table(k, k);
    out.mul      = Table(k, k);
    std::vector<Elem> tmp(m.order());
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto const& f = out.elements[i].map;
        auto const& g = out.elements[j].map;
        for (std::size_t x = 0; x < m.order(); ++x) {
          tmp[x] = m.add(f[x], g[x]);
        }
        out.add(i, j) = index.at(tmp);
        for (std::size_t x = 0; x < m.order(); ++x) {
          tmp[x] = f[g[x]];
        }
        out.mul(i, j) = index.at(tmp);
      }
    }
    return out;
  }

  // Schur: for 3-irreducible M and N every nonzero R-homomorphism M -> N is an
  // isomorphism, and End_R M, End_R N are division rings. Vacuous (ok) when
  // either module is not 3-irreducible.
  inline ValidationReport schur_check(LeftModuleTable const& m, LeftModuleTable const& n) {
    ValidationReport rep;
    if (!is_3_irreducible(m) || !is_3_irreducible(n)) {
      return rep;
    }
    for (auto const& f : hom_group(m, n)) {
      bool const zero = std::all_of(f.map.begin(), f.map.end(), [](Elem v) { return v == 0; });
      if (!zero && !(m.order() == n.order() && is_bijective(f, n.order()))) {
        rep.add("nonzero-hom-not-iso", f.map, "a nonzero homomorphism is not bijective");
        break;
      }
    }
    for (LeftModuleTable const* x : {&m, &n}) {
      EndRing const     end = end_ring(*x);
      std::size_t const k   = end.elements.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (i == end.zero) {
          continue;
        }
        bool invertible = false;
        for (std::size_t j = 0; j < k && !invertible; ++j) {
          invertible = end.mul(i, j) == end.identity && end.mul(j, i) == end.identity;
        }
        if (!invertible) {
          rep.add("division-ring", end.elements[i].map, "a nonzero endomorphism has no inverse");
          break;
        }
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Complete 3-reducibility
  ////////////////////////////////////////////////////////////////////////

  struct Reducibility {
    bool                    completely_reducible = false;
    bool                    empty_decomposition  = false;
    std::vector<SubsetMask> summands;
  };

  // Searches for an internal direct sum decomposition of M into 3-irreducible
  // submodules. The zero module is the empty direct sum.
  inline Reducibility is_completely_3_reducible(LeftModuleTable const& m) {
    require_cap(m.order(), kLatticeCap, "is_completely_3_reducible");
    Reducibility out;
    if (m.order() == 1) {
      out.completely_reducible = true;
      out.empty_decomposition  = true;
      return out;
    }
    std::vector<SubsetMask> irreducible;
    for (auto const& s : enumerate_submodules(m)) {
      if (s.count() > 1 && is_3_irreducible(restrict_to_submodule(m, s))) {
        irreducible.push_back(s);
      }
    }
    SubsetMask const         zero = m.carrier().zero_mask();
    SubsetMask const         full = m.carrier().full();
    std::set<std::uint64_t>  dead;
    std::vector<SubsetMask>  path;
    std::function<bool(SubsetMask const&)> search = [&](SubsetMask const& sum) -> bool {
      if (sum == full) {
        return true;
      }
      if (dead.count(sum.bits()) != 0) {
        return false;
      }
      for (auto const& s : irreducible) {
        if ((s & sum) != zero) {
          continue;
        }
        SubsetMask const next = set_sum(m.carrier(), sum, s);
        path.push_back(s);
        if (search(next)) {
          return true;
        }
        path.pop_back();
      }
      dead.insert(sum.bits());
      return false;
    };
    if (search(zero)) {
      out.completely_reducible = true;
      out.summands             = path;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Characterizations of 3-irreducibility
  ////////////////////////////////////////////////////////////////////////

  struct IrreducibilityReport {
    bool irreducible;         // M is 3-irreducible
    bool cyclic_generation;   // M = R⇀⊙x0 and ℏ+(M) = R↼⊙x1 for all nonzero x0, x1
    bool regular_quotient;    // M ≅ R/I for a 3-maximal left ideal I
    bool agree() const { return irreducible == cyclic_generation && irreducible == regular_quotient; }
  };

  inline std::vector<SubsetMask> three_maximal_left_ideals(DiringRef const& ring);

  // Requires 0 ≠ ℏ+(M) ≠ M.
  inline IrreducibilityReport irreducibility_characterizations(LeftModuleTable const& m) {
    SubsetMask const zero = m.carrier().zero_mask();
    if (m.halo() == zero || m.halo().is_full()) {
      throw Error("irreducibility_characterizations: requires 0 != halo != M");
    }
    IrreducibilityReport      res{};
    res.irreducible  = is_3_irreducible(m);
    auto const dec   = decompose(m);
    bool       gen   = true;
    std::size_t const nr = m.ring().order();
    for (Elem x0 : dec.even.elements()) {
      if (x0 == 0) {
        continue;
      }
      SubsetMask orbit(m.order());
      for (std::size_t a = 0; a < nr; ++a) {
        orbit.insert(m.lact(static_cast<Elem>(a), x0));
      }
      gen = gen && orbit.is_full();
    }
    for (Elem x1 : m.halo().elements()) {
      if (x1 == 0) {
        continue;
      }
      SubsetMask orbit(m.order());
      for (std::size_t a = 0; a < nr; ++a) {
        orbit.insert(m.ract(static_cast<Elem>(a), x1));
      }
      gen = gen && orbit == m.halo();
    }
    res.cyclic_generation = gen;
    res.regular_quotient  = false;
    LeftModuleTable const reg = regular_module(m.ring_ref());
    for (auto const& ideal : three_maximal_left_ideals(m.ring_ref())) {
      if (reg.order() / ideal.count() != m.order()) {
        continue;
      }
      if (find_module_isomorphism(quotient_module(reg, ideal).module, m)) {
        res.regular_quotient = true;
        break;
      }
    }
    return res;
  }

  // The 3-maximal submodules of _RR.
  inline std::vector<SubsetMask> three_maximal_left_ideals(DiringRef const& ring) {
    LeftModuleTable const   reg = regular_module(ring);
    std::vector<SubsetMask> out;
    for (auto const& s : enumerate_submodules(reg)) {
      if (is_3_maximal(reg, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  // The basic facts about ℏ+(M), checked for every left bar-unit e:
  //   R⇀⊙ℏ+(M) = 0;  ℏ+(R)↼⊙M = 0;  ℏ+(R)⇀⊙M ⊆ ℏ+(M);
  //   M = e⇀⊙M ⊕ ℏ+(M) and e⇀⊙x0 = x0 on e⇀⊙M.
  inline ValidationReport module_halo_check(LeftModuleTable const& m) {
    ValidationReport   rep;
    DiringTable const& r  = m.ring();
    SubsetMask const&  hm = m.halo();
    SubsetMask const&  hr = r.halos().additive;
    auto note = [&rep](std::string const& id, std::vector<Elem> w, std::string msg) {
      if (!rep.has(id)) {
        rep.add(id, std::move(w), std::move(msg));
      }
    };
    for (std::size_t a = 0; a < r.order(); ++a) {
      Elem const ea = static_cast<Elem>(a);
      for (std::size_t x = 0; x < m.order(); ++x) {
        Elem const ex = static_cast<Elem>(x);
        if (hm.contains(ex) && m.lact(ea, ex) != 0) {
          note("ring-kills-halo", {ea, ex}, r.name(ea) + "⇀⊙" + m.name(ex) + " != 0");
        }
        if (hr.contains(ea)) {
          if (m.ract(ea, ex) != 0) {
            note("ring-halo-kills", {ea, ex}, r.name(ea) + "↼⊙" + m.name(ex) + " != 0");
          }
          if (!hm.contains(m.lact(ea, ex))) {
            note("ring-halo-into-halo", {ea, ex}, r.name(ea) + "⇀⊙" + m.name(ex) + " is not in ℏ+(M)");
          }
        }
      }
    }
    for (Elem e : r.halos().left.elements()) {
      auto const dec = decompose(m, e);
      if (dec.odd != hm) {
        note("halo-independence", {e}, "halo depends on the left bar-unit " + r.name(e));
      }
      if ((dec.even & dec.odd) != m.carrier().zero_mask() || !set_sum(m.carrier(), dec.even, dec.odd).is_full()) {
        note("direct-decomposition", {e}, "M != e⇀⊙M ⊕ ℏ+(M) for e=" + r.name(e));
      }
      for (Elem x0 : dec.even.elements()) {
        if (m.lact(e, x0) != x0) {
          note("even-fixed", {e, x0}, "e⇀⊙x0 != x0 for x0=" + m.name(x0));
        }
      }
      for (std::size_t x = 0; x < m.order(); ++x) {
        auto const [x0, x1] = components(m, static_cast<Elem>(x), e);
        if (!dec.even.contains(x0) || !dec.odd.contains(x1) || m.add(x0, x1) != x) {
          note("components", {e, static_cast<Elem>(x)}, "bad even/odd split of " + m.name(static_cast<Elem>(x)));
        }
      }
    }
    return rep;
  }

}  // namespace diring

#endif  // DIRING_MODULE_HPP_
