#include <catch_amalgamated.hpp>

#include "diring/enumeration.hpp"
#include "diring/radical.hpp"
#include "fixtures.hpp"

using namespace diring;
using namespace fixtures;

namespace {

  // Everything below works on raw tables and subset scans only.
  struct Brute {
    DiringTable const&      d;
    std::vector<SubsetMask> left;
    std::vector<SubsetMask> two;

    explicit Brute(DiringTable const& dd) : d(dd) {
      std::size_t const n = d.order();
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); bits += 2) {
        SubsetMask s(n, bits);
        bool       is_left = true, is_two = true;
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            bool const closed = !(s.contains(x) && s.contains(y)) || s.contains(d.sub(x, y));
            bool const labs   = !s.contains(y) || (s.contains(d.lmul(x, y)) && s.contains(d.rmul(x, y)));
            bool const rabs   = !s.contains(x) || (s.contains(d.lmul(x, y)) && s.contains(d.rmul(x, y)));
            is_left           = is_left && closed && labs;
            is_two            = is_two && closed && labs && rabs;
          }
        }
        if (is_left) {
          left.push_back(s);
        }
        if (is_two) {
          two.push_back(s);
        }
      }
    }

    // R/I is 3-irreducible iff the left ideals containing I are exactly I, R
    // and J = {x | e⇀·x ∈ I}, with J different from both.
    bool three_maximal(SubsetMask const& i) const {
      Elem const e = d.left_unit();
      SubsetMask j(d.order());
      for (Elem x = 0; x < d.order(); ++x) {
        if (i.contains(d.lmul(e, x))) {
          j.insert(x);
        }
      }
      if (j == i || j.is_full()) {
        return false;
      }
      std::size_t above = 0;
      for (auto const& k : left) {
        if (i.subset_of(k)) {
          ++above;
          if (k != i && k != j && !k.is_full()) {
            return false;
          }
        }
      }
      return above == 3;
    }

    std::vector<SubsetMask> maximal() const {
      std::vector<SubsetMask> out;
      for (auto const& i : left) {
        if (three_maximal(i)) {
          out.push_back(i);
        }
      }
      return out;
    }

    // ann(R/I) = {a | a∗x ∈ I for all x and both products}.
    SubsetMask ann_quotient(SubsetMask const& i) const {
      SubsetMask out(d.order());
      for (Elem a = 0; a < d.order(); ++a) {
        bool kills = true;
        for (Elem x = 0; x < d.order() && kills; ++x) {
          kills = i.contains(d.lmul(a, x)) && i.contains(d.rmul(a, x));
        }
        if (kills) {
          out.insert(a);
        }
      }
      return out;
    }

    // (I:R) = {a | a∗R ⊆ I}. It is a two-sided ideal holding every two-sided
    // ideal inside I, and lies inside I itself when R has a two-sided
    // bar-unit.
    SubsetMask colon(SubsetMask const& i) const {
      SubsetMask const c = ann_quotient(i);
      REQUIRE(std::find(two.begin(), two.end(), c) != two.end());
      for (auto const& k : two) {
        if (k.subset_of(i)) {
          REQUIRE(k.subset_of(c));
        }
      }
      if (d.is_diring()) {
        REQUIRE(c.subset_of(i));
      }
      return c;
    }

    SubsetMask rad3() const {
      SubsetMask r = d.group().full();
      for (auto const& i : maximal()) {
        r = r & ann_quotient(i);
      }
      return r;
    }

    bool primitive() const {
      for (auto const& i : maximal()) {
        if (ann_quotient(i) == d.group().zero_mask()) {
          return true;
        }
      }
      return false;
    }
  };

  SubsetMask annihilator_brute(LeftModuleTable const& m) {
    SubsetMask out(m.ring().order());
    for (Elem a = 0; a < m.ring().order(); ++a) {
      bool kills = true;
      for (Elem x = 0; x < m.order() && kills; ++x) {
        kills = m.lact(a, x) == 0 && m.ract(a, x) == 0;
      }
      if (kills) {
        out.insert(a);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("radical facts of H") {
  DiringRef const h   = h_ref();
  auto const      rad = rad3(h);
  CHECK(rad.three_maximal_left_ideals.empty());
  CHECK(rad.family_empty);
  CHECK(rad.agrees);
  CHECK(rad.rad3_via_annihilators.is_full());
  CHECK(rad.rad3_via_primitive_ideals.is_full());
  CHECK(rad.primitive_ideals.empty());
  CHECK_FALSE(is_3_primitive(h).primitive);
  CHECK_FALSE(is_3_semi_primitive(h));
  CHECK(radical_quotient_check(h).vacuous);
  Brute const b(*h);
  CHECK(b.maximal().empty());
}

TEST_CASE("annihilators of the regular module and its quotients") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  CHECK(annihilator(reg) == mask({k0, kC}));
  CHECK(annihilator(reg) == annihilator_brute(reg));
  CHECK_FALSE(is_faithful(reg));
  for (auto const& i : ideal_masks(*h, IdealKind::left)) {
    auto const q = quotient_module(reg, i).module;
    CHECK(annihilator(q) == annihilator_brute(q));
    CHECK(colon_ideal(h, i) == annihilator(q));
  }
}

TEST_CASE("colon ideals of H") {
  DiringRef const h = h_ref();
  // c kills everything, so (I:R) need not lie inside I.
  CHECK(colon_ideal(h, mask({k0})) == mask({k0, kC}));
  CHECK(colon_ideal(h, mask({k0, kB})) == mask({k0, kC}));
  CHECK(colon_ideal(h, mask({k0, kC})) == mask({k0, kC}));
  CHECK(colon_ideal(h, h->group().full()).is_full());
}

TEST_CASE("rings with identity have no 3-irreducible modules") {
  // The additive halo of a ring is zero, so no module has 0 ≠ ℏ+(M).
  for (std::size_t n : {2, 3, 4}) {
    DiringRef const z = share(zmod_diring(n));
    auto const      r = rad3(z);
    CHECK(r.family_empty);
    CHECK(r.rad3_via_annihilators.is_full());
  }
}

TEST_CASE("direct products and subdirect embeddings") {
  DiringTable const h = make_h();
  auto const        p = direct_product({h, h});
  CHECK(p.product.order() == 16);
  CHECK(p.product.halos().left.count() == 4);
  REQUIRE(p.projections.size() == 2);
  DiringHom diag{std::vector<Elem>(4)};
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 16; ++y) {
      if (p.projections[0](y) == x && p.projections[1](y) == x) {
        diag.map[x] = y;
      }
    }
  }
  CHECK(subdirect_product_verify(h, {h, h}, p, diag).ok());
  DiringHom first_only{std::vector<Elem>(4)};
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 16; ++y) {
      if (p.projections[0](y) == x && p.projections[1](y) == kA) {
        first_only.map[x] = y;
      }
    }
  }
  CHECK_FALSE(subdirect_product_verify(h, {h, h}, p, first_only).ok());
}

TEST_CASE("inflation and deflation") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  SubsetMask const      hp  = mask({k0, kC});
  auto const            q   = quotient_diring(*h, hp);
  LeftModuleTable const m   = quotient_module(reg, hp).module;
  // R/ℏ+ acting on the quotient module, then pulled back along the projection.
  LeftModuleTable const down = deflate_module(m, hp);
  CHECK(down.ring() == q.diring);
  LeftModuleTable const up = inflate_module(h, hp, down);
  CHECK(up == m);
  CHECK(inflation_check(m, hp).ok());
  CHECK_THROWS_AS(deflate_module(reg, h->group().full()), Error);
}

// Every dual-route quantity against the brute oracle, over the census.
TEST_CASE("radical theory agrees with the brute oracle across the census") {
  std::size_t semi_primitive = 0, primitive = 0;
  for (auto const& rec : census_up_to(4)) {
    DiringRef const d = share(rec.structure);
    INFO(rec.group << " " << to_hex(rec.canonical_form));
    Brute const b(*d);
    auto        maximal = three_maximal_left_ideals(d);
    std::sort(maximal.begin(), maximal.end());
    CHECK(maximal == b.maximal());
    for (auto const& i : ideal_masks(*d, IdealKind::left)) {
      CHECK(colon_ideal(d, i) == b.colon(i));
      CHECK(colon_ideal_scan(*d, i) == colon_ideal_via_annihilator(d, i));
    }
    auto const rad = rad3(d);
    CHECK(rad.agrees);
    CHECK(rad.rad3_via_annihilators == b.rad3());
    CHECK(three_primitive_ideals(d) == three_primitive_ideals_by_definition(d));
    CHECK(primitive_ideals_check(d).ok());
    auto const prim = is_3_primitive(d);
    CHECK(prim.primitive == b.primitive());
    primitive += prim.primitive ? 1 : 0;
    auto const rq = radical_quotient_check(d);
    CHECK(rq.report.ok());
    if (d->order() > 1) {
      bool const sp = is_3_semi_primitive(d);
      CHECK(sp == (b.rad3() == d->group().zero_mask()));
      semi_primitive += sp ? 1 : 0;
      auto const chars = semi_primitivity_characterizations(d);
      CHECK(chars.agree());
      CHECK(chars.report.ok());
      REQUIRE(chars.module.has_value());
      if (sp) {
        CHECK(is_faithful(*chars.module));
        CHECK(is_completely_3_reducible(*chars.module).completely_reducible);
      }
    }
  }
  CHECK(semi_primitive == 1);
  CHECK(primitive == 1);
}
