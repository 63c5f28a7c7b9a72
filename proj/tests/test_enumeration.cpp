#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "diring/enumeration.hpp"
#include "diring/io.hpp"
#include "fixtures.hpp"

using namespace diring;
using namespace fixtures;

namespace {

  // Independent census oracle. A product or action A × G → G that is
  // additive in both arguments is the same thing as an additive map
  // A → End(G); End(G) and the automorphisms are found by scanning all maps.
  using Vec = std::vector<Elem>;

  struct RawGroup {
    std::size_t n;
    Table       add;

    explicit RawGroup(FiniteAbelianGroup const& g) : n(g.order()), add(g.add_table()) {}
    Elem plus(Elem x, Elem y) const { return add(x, y); }
  };

  bool additive(RawGroup const& g, Vec const& f) {
    for (Elem x = 0; x < g.n; ++x) {
      for (Elem y = 0; y < g.n; ++y) {
        if (f[g.plus(x, y)] != g.plus(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  // Calls fn on every vector in {0..base-1}^len.
  template <typename Fn>
  void for_each_word(std::size_t len, std::size_t base, Fn&& fn) {
    Vec w(len, 0);
    while (true) {
      fn(w);
      std::size_t k = 0;
      while (k < len && ++w[k] == base) {
        w[k++] = 0;
      }
      if (k == len) {
        return;
      }
    }
  }

  std::vector<Vec> endomorphisms(RawGroup const& g) {
    std::vector<Vec> out;
    for_each_word(g.n, g.n, [&](Vec const& f) {
      if (additive(g, f)) {
        out.push_back(f);
      }
    });
    return out;
  }

  std::vector<Vec> automorphisms(RawGroup const& g) {
    std::vector<Vec> out;
    Vec              p(g.n);
    std::iota(p.begin(), p.end(), Elem{0});
    do {
      if (additive(g, p)) {
        out.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // Row-major tables |A| × |G| of every additive A → End(G).
  std::vector<Vec> biadditive(RawGroup const& a, RawGroup const& g) {
    auto const       ends = endomorphisms(g);
    std::vector<Vec> out;
    for_each_word(a.n, ends.size(), [&](Vec const& pick) {
      for (Elem x = 0; x < a.n; ++x) {
        for (Elem y = 0; y < a.n; ++y) {
          Vec const& sum = ends[pick[a.plus(x, y)]];
          for (Elem v = 0; v < g.n; ++v) {
            if (sum[v] != g.plus(ends[pick[x]][v], ends[pick[y]][v])) {
              return;
            }
          }
        }
      }
      Vec t(a.n * g.n);
      for (Elem x = 0; x < a.n; ++x) {
        for (Elem v = 0; v < g.n; ++v) {
          t[x * g.n + v] = ends[pick[x]][v];
        }
      }
      out.push_back(std::move(t));
    });
    return out;
  }

  bool left_diring_pair(std::size_t n, Vec const& l, Vec const& r) {
    auto L = [&](Elem x, Elem y) { return l[x * n + y]; };
    auto R = [&](Elem x, Elem y) { return r[x * n + y]; };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (L(L(x, y), z) != L(x, L(y, z)) || L(x, R(y, z)) != L(x, L(y, z))
              || L(R(x, y), z) != R(x, L(y, z)) || R(L(x, y), z) != R(R(x, y), z)
              || R(x, R(y, z)) != R(R(x, y), z)) {
            return false;
          }
        }
      }
    }
    for (Elem e = 0; e < n; ++e) {
      bool unit = true;
      for (Elem x = 0; x < n && unit; ++x) {
        unit = R(e, x) == x;
      }
      if (unit) {
        return true;
      }
    }
    return false;
  }

  std::size_t diring_classes_brute(FiniteAbelianGroup const& grp) {
    RawGroup const g(grp);
    std::size_t const n     = g.n;
    auto const        cands = biadditive(g, g);
    auto const        autos = automorphisms(g);
    std::set<Vec>     classes;
    for (auto const& l : cands) {
      for (auto const& r : cands) {
        if (!left_diring_pair(n, l, r)) {
          continue;
        }
        Vec best;
        for (auto const& p : autos) {
          Vec img(2 * n * n);
          for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
              img[p[x] * n + p[y]]         = p[l[x * n + y]];
              img[n * n + p[x] * n + p[y]] = p[r[x * n + y]];
            }
          }
          if (best.empty() || img < best) {
            best = img;
          }
        }
        classes.insert(best);
      }
    }
    return classes.size();
  }

  std::size_t module_classes_brute(DiringTable const& d, FiniteAbelianGroup const& carrier) {
    RawGroup const r(d.group()), g(carrier);
    std::size_t const nr = r.n, m = g.n;
    auto const        cands = biadditive(r, g);
    auto const        autos = automorphisms(g);
    std::vector<Elem> units;
    for (Elem e = 0; e < nr; ++e) {
      bool unit = true;
      for (Elem x = 0; x < nr && unit; ++x) {
        unit = d.rmul(e, x) == x;
      }
      if (unit) {
        units.push_back(e);
      }
    }
    REQUIRE_FALSE(units.empty());
    std::set<Vec> classes;
    for (auto const& la : cands) {
      for (auto const& ra : cands) {
        auto Lx = [&](Elem a, Elem x) { return la[a * m + x]; };
        auto Rx = [&](Elem a, Elem x) { return ra[a * m + x]; };
        bool ok = true;
        for (Elem x = 0; x < m && ok; ++x) {
          ok = Rx(units[0], x) == x;
          for (Elem a = 0; a < nr && ok; ++a) {
            for (Elem b = 0; b < nr && ok; ++b) {
              ok = Lx(d.lmul(a, b), x) == Lx(a, Lx(b, x)) && Lx(d.lmul(a, b), x) == Lx(a, Rx(b, x))
                   && Lx(d.rmul(a, b), x) == Rx(a, Lx(b, x)) && Rx(d.lmul(a, b), x) == Rx(a, Rx(b, x))
                   && Rx(d.rmul(a, b), x) == Rx(a, Rx(b, x));
            }
          }
        }
        if (!ok) {
          continue;
        }
        Vec best;
        for (auto const& p : autos) {
          Vec img(2 * nr * m);
          for (Elem a = 0; a < nr; ++a) {
            for (Elem x = 0; x < m; ++x) {
              img[a * m + p[x]]          = p[Lx(a, x)];
              img[nr * m + a * m + p[x]] = p[Rx(a, x)];
            }
          }
          if (best.empty() || img < best) {
            best = img;
          }
        }
        classes.insert(best);
      }
    }
    return classes.size();
  }

  // All raw tables n × n → n that are additive in each argument.
  std::size_t raw_biadditive_count(RawGroup const& g) {
    std::size_t count = 0;
    for_each_word(g.n * g.n, g.n, [&](Vec const& t) {
      for (Elem x = 0; x < g.n; ++x) {
        for (Elem y = 0; y < g.n; ++y) {
          for (Elem z = 0; z < g.n; ++z) {
            if (t[x * g.n + g.plus(y, z)] != g.plus(t[x * g.n + y], t[x * g.n + z])
                || t[g.plus(y, z) * g.n + x] != g.plus(t[y * g.n + x], t[z * g.n + x])) {
              return;
            }
          }
        }
      }
      ++count;
    });
    return count;
  }

  DiringTable relabel(DiringTable const& d, Vec const& p) {
    std::size_t const n = d.order();
    Table             l(n, n), r(n, n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        l(p[x], p[y]) = p[d.lmul(x, y)];
        r(p[x], p[y]) = p[d.rmul(x, y)];
      }
    }
    return verify_left_diring(d.group(), l, r).value();
  }

}  // namespace

TEST_CASE("the oracle's bi-additive maps match a raw table scan") {
  for (char const* spec : {"Z1", "Z2", "Z3"}) {
    RawGroup const g(group_from_spec(spec));
    CHECK(biadditive(g, g).size() == raw_biadditive_count(g));
  }
}

TEST_CASE("left diring counts per group agree with the oracle") {
  std::map<std::string, std::size_t> const expected{{"Z1", 1}, {"Z2", 1}, {"Z3", 1}, {"Z4", 1}, {"Z2xZ2", 6}};
  for (auto const& [spec, count] : expected) {
    INFO(spec);
    auto const g = group_from_spec(spec);
    CHECK(diring_classes_brute(g) == count);
    CHECK(enumerate_left_dirings(spec).size() == count);
  }
  CHECK(census_up_to(4).size() == 10);
}

TEST_CASE("census representatives are valid and pairwise non-isomorphic") {
  auto const census = census_up_to(4);
  for (std::size_t i = 0; i < census.size(); ++i) {
    DiringTable const& d = census[i].structure;
    CHECK(d.is_left());
    CHECK(canonical_form(d) == census[i].canonical_form);
    for (std::size_t j = i + 1; j < census.size(); ++j) {
      CHECK_FALSE(are_isomorphic(d, census[j].structure).has_value());
      CHECK(census[i].canonical_form != census[j].canonical_form);
    }
  }
}

TEST_CASE("H is in the census exactly once") {
  DiringTable const h      = make_h();
  auto const        census = enumerate_left_dirings("Z2xZ2");
  std::size_t       hits   = 0;
  for (auto const& rec : census) {
    if (are_isomorphic(h, rec.structure)) {
      ++hits;
      CHECK(canonical_form(h) == rec.canonical_form);
      CHECK(rec.summary.left_halo == 2);
      CHECK(rec.summary.right_halo == 0);
      CHECK(rec.summary.simplicity == Simplicity::three_simple);
    }
  }
  CHECK(hits == 1);
}

TEST_CASE("canonical forms are invariant under relabelling") {
  DiringTable const h = make_h();
  for (auto const& p : additive_automorphisms(h.group())) {
    DiringTable const g = relabel(h, p);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(are_isomorphic(g, h).has_value());
  }
  CHECK_FALSE(are_isomorphic(h, opposite(h)).has_value());
  CHECK_FALSE(are_isomorphic(h, zmod_diring(4)).has_value());
}

TEST_CASE("the census is identical for one and four threads") {
  auto const one  = census_up_to(4, CensusOptions{1, false});
  auto const four = census_up_to(4, CensusOptions{4, false});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].group == four[i].group);
    CHECK(one[i].canonical_form == four[i].canonical_form);
    CHECK(one[i].structure == four[i].structure);
    CHECK(one[i].summary.str() == four[i].summary.str());
    CHECK(serialize(one[i].structure, "X") == serialize(four[i].structure, "X"));
  }
}

TEST_CASE("census size caps") {
  CHECK_THROWS_AS(enumerate_left_dirings("Z5"), CapExceeded);
  CHECK_THROWS_AS(census_up_to(5), CapExceeded);
}

TEST_CASE("module counts agree with the oracle") {
  std::size_t total = 0;
  for (auto const& rec : census_up_to(4)) {
    DiringRef const d = share(rec.structure);
    for (std::size_t m = 1; m <= 4; ++m) {
      auto const  mods  = enumerate_modules(d, m);
      std::size_t brute = 0;
      for (auto const& spec : abelian_group_specs(m)) {
        brute += module_classes_brute(*d, group_from_spec(spec));
      }
      INFO(rec.group << " " << to_hex(rec.canonical_form) << " order " << m);
      CHECK(mods.size() == brute);
      total += mods.size();
      if (m == 1) {
        REQUIRE(mods.size() == 1);
        CHECK(mods[0].structure == zero_module(d));
      }
      for (std::size_t i = 0; i < mods.size(); ++i) {
        for (std::size_t j = i + 1; j < mods.size(); ++j) {
          CHECK_FALSE(are_isomorphic(mods[i].structure, mods[j].structure).has_value());
        }
      }
    }
    // The regular module is among the modules of order |R|.
    LeftModuleTable const reg   = regular_module(d);
    bool                  found = false;
    for (auto const& rec_m : enumerate_modules(d, d->order())) {
      found = found || are_isomorphic(reg, rec_m.structure).has_value();
    }
    CHECK(found);
  }
  CHECK(total == 63);
}

TEST_CASE("module census is identical for one and four threads") {
  DiringRef const h    = h_ref();
  auto const      one  = enumerate_modules(h, 4, CensusOptions{1, false});
  auto const      four = enumerate_modules(h, 4, CensusOptions{4, false});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].canonical_form == four[i].canonical_form);
    CHECK(one[i].structure == four[i].structure);
  }
}
