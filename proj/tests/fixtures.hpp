// Shared test fixtures. H is built here from raw arrays so the tests do not
// depend on the file parser.

#ifndef DIRING_TESTS_FIXTURES_HPP_
#define DIRING_TESTS_FIXTURES_HPP_

#include <array>
#include <string>
#include <vector>

#include "diring/diring.hpp"

namespace fixtures {

  using diring::Elem;

  // Labels 0 a b c on the Klein group; addition is XOR of the indices.
  inline constexpr std::array<char const*, 4> kHLabels{"0", "a", "b", "c"};
  inline constexpr Elem                       k0 = 0, kA = 1, kB = 2, kC = 3;

  inline constexpr std::array<std::array<Elem, 4>, 4> kHLprod{{
      {0, 0, 0, 0},
      {0, kB, kB, 0},
      {0, kB, kB, 0},
      {0, 0, 0, 0},
  }};
  inline constexpr std::array<std::array<Elem, 4>, 4> kHRprod{{
      {0, 0, 0, 0},
      {0, kA, kB, kC},
      {0, kA, kB, kC},
      {0, 0, 0, 0},
  }};

  inline std::vector<std::vector<Elem>> rows(std::array<std::array<Elem, 4>, 4> const& t) {
    std::vector<std::vector<Elem>> out;
    for (auto const& r : t) {
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  inline std::vector<std::vector<Elem>> klein_add() {
    std::vector<std::vector<Elem>> out(4, std::vector<Elem>(4));
    for (Elem x = 0; x < 4; ++x) {
      for (Elem y = 0; y < 4; ++y) {
        out[x][y] = static_cast<Elem>(x ^ y);
      }
    }
    return out;
  }

  inline std::vector<std::string> h_labels() {
    return {kHLabels.begin(), kHLabels.end()};
  }

  inline diring::DiringTable make_h() {
    return diring::make_left_diring(h_labels(), klein_add(), rows(kHLprod), rows(kHRprod)).value();
  }

  inline diring::DiringRef h_ref() {
    return diring::share(make_h());
  }

  inline diring::SubsetMask mask(std::initializer_list<Elem> xs) {
    return diring::SubsetMask::of(4, xs);
  }

}  // namespace fixtures

#endif  // DIRING_TESTS_FIXTURES_HPP_
