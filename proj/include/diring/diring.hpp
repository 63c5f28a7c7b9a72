// One-sided dirings: an abelian group with two distributive products forming
// a dimonoid that has a one-sided bar-unit.
//
// Notation used throughout the library:
//   lmul(x, y)  the left product  x ⇀· y
//   rmul(x, y)  the right product x ↼· y
// A left bar-unit e satisfies e ↼· x = x for all x, a right bar-unit
// satisfies x ⇀· e = x for all x. The five dimonoid identities are
//   (x⇀·y)⇀·z = x⇀·(y⇀·z)      x⇀·(y↼·z) = x⇀·(y⇀·z)
//   (x↼·y)⇀·z = x↼·(y⇀·z)      (x⇀·y)↼·z = (x↼·y)↼·z
//   x↼·(y↼·z) = (x↼·y)↼·z

#ifndef DIRING_DIRING_HPP_
#define DIRING_DIRING_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "finite_group.hpp"

namespace diring {

  enum class Product { left, right };

  enum class Side { left, right, any };

  struct Halos {
    SubsetMask left;       // left bar-units
    SubsetMask right;      // right bar-units
    SubsetMask two_sided;  // left ∩ right
    SubsetMask additive;   // {x | e ⇀· x = 0} for a left bar-unit e
  };

  class DiringTable;
  Checked<DiringTable> verify_diring(FiniteAbelianGroup group, Table lprod, Table rprod, Side side);

  // A validated one-sided diring. Immutable.
  class DiringTable {
   public:
    FiniteAbelianGroup const& group() const noexcept { return group_; }
    std::size_t               order() const noexcept { return group_.order(); }

    Elem add(Elem x, Elem y) const noexcept { return group_.add(x, y); }
    Elem neg(Elem x) const noexcept { return group_.neg(x); }
    Elem sub(Elem x, Elem y) const noexcept { return group_.sub(x, y); }
    Elem lmul(Elem x, Elem y) const noexcept { return lprod_(x, y); }
    Elem rmul(Elem x, Elem y) const noexcept { return rprod_(x, y); }
    Elem mul(Product p, Elem x, Elem y) const noexcept {
      return p == Product::left ? lprod_(x, y) : rprod_(x, y);
    }

    Table const& lprod() const noexcept { return lprod_; }
    Table const& rprod() const noexcept { return rprod_; }
    Halos const& halos() const noexcept { return halos_; }

    bool is_left() const noexcept { return !halos_.left.empty(); }
    bool is_right() const noexcept { return !halos_.right.empty(); }
    // Has a two-sided bar-unit.
    bool is_diring() const noexcept { return !halos_.two_sided.empty(); }

    // Least-index left bar-unit; throws on a diring with none.
    Elem left_unit() const {
      auto e = halos_.left.first();
      if (!e) {
        throw Error("diring has no left bar-unit");
      }
      return *e;
    }

    std::string const& name(Elem x) const { return group_.name(x); }
    std::string        format(SubsetMask const& m) const { return group_.format(m); }

    friend bool operator==(DiringTable const& a, DiringTable const& b) {
      return a.group_ == b.group_ && a.lprod_ == b.lprod_ && a.rprod_ == b.rprod_;
    }

   private:
    friend Checked<DiringTable> verify_diring(FiniteAbelianGroup, Table, Table, Side);

    DiringTable(FiniteAbelianGroup g, Table l, Table r, Halos h)
        : group_(std::move(g)), lprod_(std::move(l)), rprod_(std::move(r)), halos_(std::move(h)) {}

    FiniteAbelianGroup group_;
    Table              lprod_;
    Table              rprod_;
    Halos              halos_;
  };

  using DiringRef = std::shared_ptr<DiringTable const>;

  inline DiringRef share(DiringTable d) {
    return std::make_shared<DiringTable const>(std::move(d));
  }

  namespace detail {
    inline Elem e(std::size_t x) {
      return static_cast<Elem>(x);
    }

    template <typename Mul>
    SubsetMask left_units(std::size_t n, Mul&& rmul) {
      SubsetMask out(n);
      for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = rmul(a, x) == x;
        }
        if (ok) {
          out.insert(e(a));
        }
      }
      return out;
    }

    template <typename Mul>
    SubsetMask right_units(std::size_t n, Mul&& lmul) {
      SubsetMask out(n);
      for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = lmul(x, a) == x;
        }
        if (ok) {
          out.insert(e(a));
        }
      }
      return out;
    }
  }  // namespace detail

  // Full axiom scan. `side` selects which bar-unit must exist. Every violated
  // axiom is reported once, with the first witness in row-major order.
  inline Checked<DiringTable> verify_diring(FiniteAbelianGroup group,
                                            Table              lprod,
                                            Table              rprod,
                                            Side               side) {
    using detail::e;
    ValidationReport  report;
    std::size_t const n = group.order();
    for (auto const* t : {&lprod, &rprod}) {
      if (t->rows() != n || t->cols() != n) {
        report.add(t == &lprod ? "shape/lprod" : "shape/rprod", {},
                   "product table must be " + std::to_string(n) + "x" + std::to_string(n));
        return report;
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if ((*t)(x, y) >= n) {
            report.add(t == &lprod ? "closure/lprod" : "closure/rprod", {e(x), e(y)},
                       "product of " + group.name(e(x)) + " and " + group.name(e(y))
                           + " is not an element");
            return report;
          }
        }
      }
    }
    auto const& nm = group.names();
    auto L = [&](std::size_t x, std::size_t y) { return lprod(x, y); };
    auto R = [&](std::size_t x, std::size_t y) { return rprod(x, y); };
    auto A = [&](std::size_t x, std::size_t y) { return group.add(e(x), e(y)); };

    // Distributivity.
    struct Named {
      char const*  id;
      Table const* t;
      char const*  sym;
    };
    for (Named const& p : {Named{"lprod", &lprod, "⇀·"}, Named{"rprod", &rprod, "↼·"}}) {
      Table const& t    = *p.t;
      bool         left = false, right = false;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (!left && t(x, A(y, z)) != A(t(x, y), t(x, z))) {
              left = true;
              report.add(std::string("left-distributive/") + p.id, {e(x), e(y), e(z)},
                         nm[x] + p.sym + "(" + nm[y] + "+" + nm[z] + ") != " + nm[x] + p.sym
                             + nm[y] + "+" + nm[x] + p.sym + nm[z]);
            }
            if (!right && t(A(y, z), x) != A(t(y, x), t(z, x))) {
              right = true;
              report.add(std::string("right-distributive/") + p.id, {e(x), e(y), e(z)},
                         "(" + nm[y] + "+" + nm[z] + ")" + p.sym + nm[x] + " != " + nm[y] + p.sym
                             + nm[x] + "+" + nm[z] + p.sym + nm[x]);
            }
          }
        }
      }
    }

    // Dimonoid identities.
    bool seen[5] = {false, false, false, false, false};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          bool const holds[5] = {
              L(L(x, y), z) == L(x, L(y, z)),
              L(x, R(y, z)) == L(x, L(y, z)),
              L(R(x, y), z) == R(x, L(y, z)),
              R(L(x, y), z) == R(R(x, y), z),
              R(x, R(y, z)) == R(R(x, y), z),
          };
          static char const* const text[5] = {
              "(x⇀·y)⇀·z != x⇀·(y⇀·z)",
              "x⇀·(y↼·z) != x⇀·(y⇀·z)",
              "(x↼·y)⇀·z != x↼·(y⇀·z)",
              "(x⇀·y)↼·z != (x↼·y)↼·z",
              "x↼·(y↼·z) != (x↼·y)↼·z",
          };
          for (int k = 0; k < 5; ++k) {
            if (!holds[k] && !seen[k]) {
              seen[k] = true;
              report.add("dimonoid-" + std::to_string(k + 1), {e(x), e(y), e(z)},
                         std::string(text[k]) + " at x=" + nm[x] + ", y=" + nm[y]
                             + ", z=" + nm[z]);
            }
          }
        }
      }
    }

    Halos h;
    h.left      = detail::left_units(n, R);
    h.right     = detail::right_units(n, L);
    h.two_sided = h.left & h.right;
    h.additive  = SubsetMask(n);

    if (side == Side::left && h.left.empty()) {
      report.add("left-bar-unit", {}, "no left bar-unit: no a with a↼·x = x for all x");
    }
    if (side == Side::right && h.right.empty()) {
      report.add("right-bar-unit", {}, "no right bar-unit: no a with x⇀·a = x for all x");
    }
    if (side == Side::any && h.left.empty() && h.right.empty()) {
      report.add("bar-unit", {}, "no one-sided bar-unit");
    }

    if (report.ok()) {
      if (!h.left.empty()) {
        // Additive halo from each left bar-unit; all must agree, and
        // e⇀·x = 0 must imply x↼·e = 0 (so the halo is also
        // {x | e⇀·x = 0 = x↼·e}). The converse is not required.
        std::optional<SubsetMask> first;
        for (Elem u : h.left.elements()) {
          SubsetMask k(n);
          for (std::size_t x = 0; x < n; ++x) {
            bool const killed = L(u, x) == 0;
            if (killed) {
              k.insert(e(x));
            }
            if (killed && R(x, u) != 0 && !report.has("additive-halo-description")) {
              report.add("additive-halo-description", {u, e(x)},
                         "e⇀·x = 0 but x↼·e != 0 at e=" + nm[u] + ", x=" + nm[x]);
            }
          }
          if (!first) {
            first = k;
          } else if (*first != k && !report.has("additive-halo-independence")) {
            report.add("additive-halo-independence", {u},
                       "additive halo depends on the left bar-unit " + nm[u]);
          }
        }
        h.additive = *first;
      } else {
        // Right-sided: the mirror image {x | x ↼· e_r = 0}.
        Elem const u = *h.right.first();
        for (std::size_t x = 0; x < n; ++x) {
          if (R(x, u) == 0) {
            h.additive.insert(e(x));
          }
        }
      }
    }
    if (!report.ok()) {
      return report;
    }
    return DiringTable(std::move(group), std::move(lprod), std::move(rprod), std::move(h));
  }

  inline Checked<DiringTable> verify_left_diring(FiniteAbelianGroup g, Table l, Table r) {
    return verify_diring(std::move(g), std::move(l), std::move(r), Side::left);
  }

  inline Checked<DiringTable> verify_right_diring(FiniteAbelianGroup g, Table l, Table r) {
    return verify_diring(std::move(g), std::move(l), std::move(r), Side::right);
  }

  // Builds a left diring from tables indexed in the caller's label order
  // (names[i] labels row/column i); the zero need not come first.
  inline Checked<DiringTable> make_left_diring(std::vector<std::string> const&        names,
                                               std::vector<std::vector<Elem>> const& add,
                                               std::vector<std::vector<Elem>> const& lprod,
                                               std::vector<std::vector<Elem>> const& rprod,
                                               Side side = Side::left) {
    std::size_t const n = names.size();
    auto to_table = [n](std::vector<std::vector<Elem>> const& rows) {
      Table t(n, n);
      if (rows.size() != n) {
        throw Error("make_left_diring: table must have one row per element");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
          throw Error("make_left_diring: ragged table");
        }
        for (std::size_t j = 0; j < n; ++j) {
          t(i, j) = rows[i][j];
        }
      }
      return t;
    };
    auto g = validate_abelian_group(names, to_table(add));
    if (!g) {
      return g.report();
    }
    FiniteAbelianGroup const& grp = g.value();
    std::vector<Elem>         pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = *grp.index_of(names[i]);
    }
    auto remap = [&](std::vector<std::vector<Elem>> const& rows) {
      Table t(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Elem const v  = rows.at(i).at(j);
          t(pos[i], pos[j]) = v < n ? pos[v] : static_cast<Elem>(n);
        }
      }
      return t;
    };
    return verify_diring(grp, remap(lprod), remap(rprod), side);
  }

  // A ring with identity viewed as a diring with both products equal.
  inline Checked<DiringTable> ring_as_diring(FiniteAbelianGroup g, Table const& mul) {
    return verify_diring(std::move(g), mul, mul, Side::left);
  }

  // Z/n with ordinary multiplication, as a diring.
  inline DiringTable zmod_diring(std::size_t n) {
    auto  g = cyclic_group(n);
    Table mul(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mul(i, j) = static_cast<Elem>((i * j) % n);
      }
    }
    return ring_as_diring(std::move(g), mul).value();
  }

  inline DiringTable trivial_diring() {
    return zmod_diring(1);
  }

  inline Halos const& halos(DiringTable const& d) {
    return d.halos();
  }

  // x ∘⇀ y := y ↼· x, x ∘↼ y := y ⇀· x. Exchanges the left and right halos.
  inline DiringTable opposite(DiringTable const& d) {
    std::size_t const n = d.order();
    Table             l(n, n), r(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        l(x, y) = d.rmul(detail::e(y), detail::e(x));
        r(x, y) = d.lmul(detail::e(y), detail::e(x));
      }
    }
    return verify_diring(d.group(), std::move(l), std::move(r), Side::any).value();
  }

  // A ∗ B for subsets of a diring.
  inline SubsetMask set_op(DiringTable const& d, SubsetMask const& a, SubsetMask const& b, SetOp op) {
    SubsetMask out(d.order());
    for (Elem x : a.elements()) {
      for (Elem y : b.elements()) {
        switch (op) {
          case SetOp::sum: out.insert(d.add(x, y)); break;
          case SetOp::left_product: out.insert(d.lmul(x, y)); break;
          case SetOp::right_product: out.insert(d.rmul(x, y)); break;
        }
      }
    }
    return out;
  }

  inline void require_two_sided_unit(DiringTable const& d, Elem e, char const* what) {
    if (!d.halos().two_sided.contains(e)) {
      throw Error(std::string(what) + ": " + (e < d.order() ? d.name(e) : std::to_string(e))
                  + " is not a two-sided bar-unit");
    }
  }

  struct UnitalRingProduct {
    Table            product;
    ValidationReport ring_report;
  };

  // x•y = x↼·y + x⇀·y − (x↼·e)⇀·y, with the equality (x↼·e)⇀·y = x↼·(e⇀·y)
  // checked rather than assumed. ring_report covers the ring axioms for
  // (R, +, •) with identity e.
  inline UnitalRingProduct unital_ring_product(DiringTable const& d, Elem e) {
    require_two_sided_unit(d, e, "unital_ring_product");
    std::size_t const n = d.order();
    auto const&       nm = d.group().names();
    UnitalRingProduct        out{Table(n, n), {}};
    for (std::size_t xi = 0; xi < n; ++xi) {
      for (std::size_t yi = 0; yi < n; ++yi) {
        Elem const x     = detail::e(xi);
        Elem const y     = detail::e(yi);
        Elem const third = d.lmul(d.rmul(x, e), y);
        if (third != d.rmul(x, d.lmul(e, y)) && !out.ring_report.has("parenthesization")) {
          out.ring_report.add("parenthesization", {x, y},
                              "(x↼·e)⇀·y != x↼·(e⇀·y) at x=" + nm[x] + ", y=" + nm[y]);
        }
        out.product(x, y) = d.sub(d.add(d.rmul(x, y), d.lmul(x, y)), third);
      }
    }
    Table const& P = out.product;
    auto&        rep = out.ring_report;
    for (std::size_t x = 0; x < n; ++x) {
      if ((P(e, x) != x || P(x, e) != x) && !rep.has("identity")) {
        rep.add("identity", {detail::e(x)}, "e is not a two-sided identity for • at " + nm[x]);
      }
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (P(P(x, y), z) != P(x, P(y, z)) && !rep.has("associativity")) {
            rep.add("associativity", {detail::e(x), detail::e(y), detail::e(z)},
                    "• is not associative at " + nm[x] + "," + nm[y] + "," + nm[z]);
          }
          Elem const yz = d.add(detail::e(y), detail::e(z));
          if (P(x, yz) != d.add(P(x, y), P(x, z)) && !rep.has("left-distributive")) {
            rep.add("left-distributive", {detail::e(x), detail::e(y), detail::e(z)},
                    "• fails x(y+z)=xy+xz at " + nm[x] + "," + nm[y] + "," + nm[z]);
          }
          if (P(yz, x) != d.add(P(y, x), P(z, x)) && !rep.has("right-distributive")) {
            rep.add("right-distributive", {detail::e(x), detail::e(y), detail::e(z)},
                    "• fails (y+z)x=yx+zx at " + nm[x] + "," + nm[y] + "," + nm[z]);
          }
        }
      }
    }
    return out;
  }

  // Checks that x⊎⇀y = x + e⇀·y and x⊎↼y = x↼·e + y form a digroup with
  // bar-unit 0 under the one-sided-inverse reading (every x has some z with
  // z⊎⇀x = 0 and some y with x⊎↼y = 0), and that its halo of two-sided
  // bar-units equals the additive halo.
  inline ValidationReport uplus_digroup_check(DiringTable const& d, Elem e) {
    require_two_sided_unit(d, e, "uplus_digroup_check");
    std::size_t const n  = d.order();
    auto const&       nm = d.group().names();
    Table             L(n, n), R(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        L(x, y) = d.add(detail::e(x), d.lmul(e, detail::e(y)));
        R(x, y) = d.add(d.rmul(detail::e(x), e), detail::e(y));
      }
    }
    ValidationReport rep;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          bool const holds[5] = {
              L(L(x, y), z) == L(x, L(y, z)),
              L(x, R(y, z)) == L(x, L(y, z)),
              L(R(x, y), z) == R(x, L(y, z)),
              R(L(x, y), z) == R(R(x, y), z),
              R(x, R(y, z)) == R(R(x, y), z),
          };
          for (int k = 0; k < 5; ++k) {
            std::string const id = "digroup-dimonoid-" + std::to_string(k + 1);
            if (!holds[k] && !rep.has(id)) {
              rep.add(id, {detail::e(x), detail::e(y), detail::e(z)},
                      "dimonoid identity " + std::to_string(k + 1) + " fails at " + nm[x] + ","
                          + nm[y] + "," + nm[z]);
            }
          }
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if ((R(0, x) != x || L(x, 0) != x) && !rep.has("digroup-bar-unit")) {
        rep.add("digroup-bar-unit", {detail::e(x)}, "0 is not a bar-unit at " + nm[x]);
      }
      bool left_inv = false, right_inv = false;
      for (std::size_t z = 0; z < n; ++z) {
        left_inv  = left_inv || L(z, x) == 0;
        right_inv = right_inv || R(x, z) == 0;
      }
      if (!left_inv && !rep.has("digroup-left-inverse")) {
        rep.add("digroup-left-inverse", {detail::e(x)}, "no left inverse for " + nm[x]);
      }
      if (!right_inv && !rep.has("digroup-right-inverse")) {
        rep.add("digroup-right-inverse", {detail::e(x)}, "no right inverse for " + nm[x]);
      }
    }
    SubsetMask halo(n);
    for (std::size_t a = 0; a < n; ++a) {
      bool unit = true;
      for (std::size_t x = 0; x < n && unit; ++x) {
        unit = R(a, x) == x && L(x, a) == x;
      }
      if (unit) {
        halo.insert(detail::e(a));
      }
    }
    if (halo != d.halos().additive) {
      rep.add("digroup-halo", {},
              "digroup halo " + d.format(halo) + " != additive halo " + d.format(d.halos().additive));
    }
    return rep;
  }

  // The five basic facts about the additive halo of a left diring:
  //  (i)   x∗y ≡ x⋄y mod ℏ+ for all products ∗, ⋄
  //  (ii)  ℏ+ ↼· R = 0 = R ⇀· ℏ+
  //  (iii) ℏ+ ∗ R ⊆ ℏ+ and R ∗ ℏ+ ⊆ ℏ+
  //  (iv)  e + ℏ+ ⊆ left halo, for every left bar-unit e
  //  (v)   e + ℏ+ = two-sided halo, for every two-sided bar-unit e
  inline ValidationReport halo_identities_check(DiringTable const& d) {
    if (!d.is_left()) {
      throw Error("halo_identities_check: not a left diring");
    }
    std::size_t const n    = d.order();
    auto const&       nm   = d.group().names();
    auto const&       h    = d.halos();
    SubsetMask const& plus = h.additive;
    ValidationReport  rep;
    for (std::size_t xi = 0; xi < n; ++xi) {
      for (std::size_t yi = 0; yi < n; ++yi) {
        Elem const x = detail::e(xi), y = detail::e(yi);
        if (!plus.contains(d.sub(d.lmul(x, y), d.rmul(x, y))) && !rep.has("products-congruent")) {
          rep.add("products-congruent", {x, y},
                  nm[x] + "⇀·" + nm[y] + " and " + nm[x] + "↼·" + nm[y]
                      + " differ outside the additive halo");
        }
        if (plus.contains(x)) {
          if (d.rmul(x, y) != 0 && !rep.has("halo-annihilates")) {
            rep.add("halo-annihilates", {x, y}, nm[x] + "↼·" + nm[y] + " != 0");
          }
          if (d.lmul(y, x) != 0 && !rep.has("halo-annihilates")) {
            rep.add("halo-annihilates", {y, x}, nm[y] + "⇀·" + nm[x] + " != 0");
          }
          for (Product p : {Product::left, Product::right}) {
            if ((!plus.contains(d.mul(p, x, y)) || !plus.contains(d.mul(p, y, x)))
                && !rep.has("halo-absorbs")) {
              rep.add("halo-absorbs", {x, y}, "product with " + nm[x] + " leaves the additive halo");
            }
          }
        }
      }
    }
    for (Elem e : h.left.elements()) {
      SubsetMask const coset = translate(d.group(), e, plus);
      if (!coset.subset_of(h.left)) {
        rep.add("unit-coset-in-left-halo", {e},
                nm[e] + "+" + d.format(plus) + " is not inside the left halo " + d.format(h.left));
        break;
      }
    }
    for (Elem e : h.two_sided.elements()) {
      SubsetMask const coset = translate(d.group(), e, plus);
      if (coset != h.two_sided) {
        rep.add("unit-coset-is-halo", {e},
                nm[e] + "+" + d.format(plus) + " != " + d.format(h.two_sided));
        break;
      }
    }
    return rep;
  }

  // x∗0 = 0 = 0∗x and (−x)∗y = x∗(−y) = −(x∗y) for both products.
  inline ValidationReport distributivity_consequences_check(DiringTable const& d) {
    ValidationReport rep;
    for (Product p : {Product::left, Product::right}) {
      for (std::size_t xi = 0; xi < d.order(); ++xi) {
        Elem const x = detail::e(xi);
        if ((d.mul(p, x, 0) != 0 || d.mul(p, 0, x) != 0) && !rep.has("zero-absorbs")) {
          rep.add("zero-absorbs", {x}, "product with 0 is nonzero at " + d.name(x));
        }
        for (std::size_t yi = 0; yi < d.order(); ++yi) {
          Elem const y = detail::e(yi);
          Elem const m = d.neg(d.mul(p, x, y));
          if ((d.mul(p, d.neg(x), y) != m || d.mul(p, x, d.neg(y)) != m) && !rep.has("signs")) {
            rep.add("signs", {x, y}, "sign rule fails at " + d.name(x) + "," + d.name(y));
          }
        }
      }
    }
    return rep;
  }

}  // namespace diring

#endif  // DIRING_DIRING_HPP_
