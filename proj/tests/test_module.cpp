#include <catch_amalgamated.hpp>

#include "diring/enumeration.hpp"
#include "diring/module.hpp"
#include "fixtures.hpp"

using namespace diring;
using namespace fixtures;

namespace {

  std::vector<SubsetMask> submodules_brute(LeftModuleTable const& m) {
    std::size_t const       n  = m.order();
    std::size_t const       nr = m.ring().order();
    std::vector<SubsetMask> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); bits += 2) {
      SubsetMask s(n, bits);
      bool       ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        if (!s.contains(x)) {
          continue;
        }
        for (Elem y = 0; y < n && ok; ++y) {
          ok = !s.contains(y) || s.contains(m.sub(x, y));
        }
        for (Elem a = 0; a < nr && ok; ++a) {
          ok = s.contains(m.lact(a, x)) && s.contains(m.ract(a, x));
        }
      }
      if (ok) {
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Every map M -> N that is additive and commutes with both actions.
  std::size_t hom_count_brute(LeftModuleTable const& m, LeftModuleTable const& n) {
    std::size_t const k = m.order(), t = n.order(), nr = m.ring().order();
    std::vector<Elem> f(k, 0);
    std::size_t       count = 0;
    while (true) {
      bool ok = true;
      for (Elem x = 0; x < k && ok; ++x) {
        for (Elem y = 0; y < k && ok; ++y) {
          ok = f[m.add(x, y)] == n.add(f[x], f[y]);
        }
        for (Elem a = 0; a < nr && ok; ++a) {
          ok = f[m.lact(a, x)] == n.lact(a, f[x]) && f[m.ract(a, x)] == n.ract(a, f[x]);
        }
      }
      count += ok ? 1 : 0;
      std::size_t i = 0;
      while (i < k && ++f[i] == t) {
        f[i++] = 0;
      }
      if (i == k) {
        break;
      }
    }
    return count;
  }

  bool irreducible_brute(LeftModuleTable const& m) {
    SubsetMask const halo = m.halo();
    if (halo == m.carrier().zero_mask() || halo.is_full()) {
      return false;
    }
    auto const subs = submodules_brute(m);
    return subs.size() == 3 && std::find(subs.begin(), subs.end(), halo) != subs.end();
  }

  std::vector<LeftModuleTable> modules_over(DiringRef const& d, std::size_t max_order) {
    std::vector<LeftModuleTable> out;
    for (std::size_t k = 1; k <= max_order; ++k) {
      for (auto& rec : enumerate_modules(d, k)) {
        out.push_back(std::move(rec.structure));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("the regular module of H") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  CHECK(reg.order() == 4);
  CHECK(reg.halo() == mask({k0, kC}));
  CHECK(module_halo(reg) == h->halos().additive);
  auto const subs = enumerate_submodules(reg);
  CHECK(subs == submodules_brute(reg));
  CHECK(subs == std::vector<SubsetMask>{mask({k0}), mask({k0, kB}), mask({k0, kC}), mask({k0, kA, kB, kC})});
  CHECK_FALSE(is_3_irreducible(reg));
  auto const dec = decompose(reg);
  CHECK(dec.odd == mask({k0, kC}));
  CHECK(dec.even == mask({k0, kB}));
  CHECK(components(reg, kA) == std::pair<Elem, Elem>{kB, kC});
  CHECK(left_translation_check(reg).ok());
  CHECK(module_halo_check(reg).ok());
}

TEST_CASE("module axioms catch a perturbed action") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  Table                 l   = reg.lact_table();
  l(kA, kA)                 = kA;
  auto const bad            = verify_module(h, reg.carrier(), l, reg.ract_table());
  REQUIRE_FALSE(bad.ok());
  Table r  = reg.ract_table();
  r(kA, kC) = 0;
  CHECK_FALSE(verify_module(h, reg.carrier(), reg.lact_table(), r).ok());
  Table zero(4, 4, 0);
  auto const no_unit = verify_module(h, reg.carrier(), zero, zero);
  REQUIRE_FALSE(no_unit.ok());
  CHECK(no_unit.report().has("bar-unit-action"));
}

TEST_CASE("quotient of the regular module by the halo") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  auto const            q   = quotient_module(reg, mask({k0, kC}));
  CHECK(q.module.order() == 2);
  CHECK(q.module.halo() == q.module.carrier().zero_mask());
  CHECK(quotient_halo_check(reg, mask({k0, kC})).ok());
  CHECK_FALSE(is_3_maximal(reg, mask({k0, kC})));
  CHECK_FALSE(is_3_maximal(reg, mask({k0, kB})));
  CHECK(three_maximal_left_ideals(h).empty());
}

TEST_CASE("zero module and direct sums") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  LeftModuleTable const z   = zero_module(h);
  CHECK(z.order() == 1);
  CHECK(is_completely_3_reducible(z).empty_decomposition);
  LeftModuleTable const s = direct_sum(h, {reg, z});
  CHECK(s.order() == 4);
  CHECK(find_module_isomorphism(s, reg).has_value());
  LeftModuleTable const two = direct_sum(h, {reg, reg});
  CHECK(two.order() == 16);
  CHECK(two.halo().count() == 4);
}

TEST_CASE("homomorphisms of the regular module of H") {
  DiringRef const       h   = h_ref();
  LeftModuleTable const reg = regular_module(h);
  auto const            hs  = hom_group(reg, reg);
  CHECK(hs.size() == hom_count_brute(reg, reg));
  for (auto const& f : hs) {
    CHECK(is_module_hom(reg, reg, f));
    CHECK(hom_halo_check(reg, reg, f).ok());
    CHECK(is_submodule(reg, hom_kernel(reg, f)));
    CHECK(is_submodule(reg, hom_image(reg, reg, f)));
  }
  auto const e = end_ring(reg);
  CHECK(e.elements.size() == hs.size());
}

TEST_CASE("left translations rebuild the module") {
  DiringRef const h = h_ref();
  for (auto const& m : modules_over(h, 4)) {
    std::vector<Endo> lt, rt;
    for (Elem a = 0; a < h->order(); ++a) {
      Endo l(m.order()), r(m.order());
      for (Elem x = 0; x < m.order(); ++x) {
        l[x] = m.lact(a, x);
        r[x] = m.ract(a, x);
      }
      lt.push_back(l);
      rt.push_back(r);
    }
    auto rebuilt = module_from_translations(h, m.carrier(), lt, rt);
    REQUIRE(rebuilt.ok());
    CHECK(rebuilt.value() == m);
  }
}

// Property checks on every module of order at most 4 over every census diring.
TEST_CASE("module properties across the census") {
  std::size_t modules = 0;
  for (auto const& rec : census_up_to(4)) {
    DiringRef const d    = share(rec.structure);
    auto const      mods = modules_over(d, 4);
    modules += mods.size();
    for (std::size_t i = 0; i < mods.size(); ++i) {
      LeftModuleTable const& m = mods[i];
      INFO(rec.group << " " << to_hex(rec.canonical_form) << " module " << i);
      auto subs = enumerate_submodules(m);
      std::sort(subs.begin(), subs.end());
      CHECK(subs == submodules_brute(m));
      CHECK(is_3_irreducible(m) == irreducible_brute(m));
      CHECK(module_halo_check(m).ok());
      CHECK(left_translation_check(m).ok());
      for (auto const& n : subs) {
        CHECK(quotient_halo_check(m, n).ok());
        CHECK(is_3_maximal(m, n) == is_3_maximal_by_lattice(m, n));
      }
      for (auto const& n : mods) {
        auto const hs = hom_group(m, n);
        CHECK(hs.size() == hom_count_brute(m, n));
        for (auto const& f : hs) {
          CHECK(hom_halo_check(m, n, f).ok());
        }
        CHECK(schur_check(m, n).ok());
      }
    }
  }
  // Module counts summed over the census, from the census itself.
  CHECK(modules == 63);
}
