// Finite abelian groups as validated Cayley tables: subgroups, cosets,
// quotients, subset sums and homomorphism enumeration.

#ifndef DIRING_FINITE_GROUP_HPP_
#define DIRING_FINITE_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace diring {

  class FiniteAbelianGroup;
  Checked<FiniteAbelianGroup> validate_abelian_group(std::vector<std::string> names,
                                                     Table const&             add);

  // An abelian group on 0..n-1 whose zero is index 0.
  class FiniteAbelianGroup {
   public:
    // The trivial group {0}.
    FiniteAbelianGroup() : names_{"0"}, add_(1, 1, 0), neg_{0} {}

    std::size_t order() const noexcept { return names_.size(); }
    Elem        zero() const noexcept { return 0; }
    Elem        add(Elem x, Elem y) const noexcept { return add_(x, y); }
    Elem        neg(Elem x) const noexcept { return neg_[x]; }
    Elem        sub(Elem x, Elem y) const noexcept { return add_(x, neg_[y]); }

    std::string const&              name(Elem x) const { return names_.at(x); }
    std::vector<std::string> const& names() const noexcept { return names_; }
    Table const&                    add_table() const noexcept { return add_; }

    std::optional<Elem> index_of(std::string_view label) const {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == label) {
          return static_cast<Elem>(i);
        }
      }
      return std::nullopt;
    }

    SubsetMask full() const { return SubsetMask::full(order()); }
    SubsetMask zero_mask() const { return SubsetMask::singleton(order(), 0); }

    std::string format(SubsetMask const& m) const {
      std::string out = "{";
      bool        sep = false;
      for (Elem x : m.elements()) {
        out += (sep ? "," : "") + names_[x];
        sep = true;
      }
      return out + "}";
    }

    friend bool operator==(FiniteAbelianGroup const&, FiniteAbelianGroup const&)
        = default;

   private:
    friend Checked<FiniteAbelianGroup> validate_abelian_group(std::vector<std::string>,
                                                              Table const&);

    FiniteAbelianGroup(std::vector<std::string> names, Table add, std::vector<Elem> neg)
        : names_(std::move(names)), add_(std::move(add)), neg_(std::move(neg)) {}

    std::vector<std::string> names_;
    Table                    add_;
    std::vector<Elem>        neg_;
  };

  // Checks closure, identity, inverses, commutativity and associativity, in
  // that order, and reports the first failure with a witness. On success the
  // elements are reindexed so that the zero is index 0, other elements keeping
  // their relative order.
  inline Checked<FiniteAbelianGroup> validate_abelian_group(std::vector<std::string> names,
                                                            Table const&             add) {
    ValidationReport report;
    std::size_t const n = names.size();
    if (n == 0) {
      report.add("nonempty", {}, "a group needs at least one element");
      return report;
    }
    if (n > kMaxOrder) {
      report.add("order", {}, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
      return report;
    }
    {
      std::set<std::string> seen(names.begin(), names.end());
      if (seen.size() != n) {
        report.add("distinct-labels", {}, "element labels are not distinct");
        return report;
      }
    }
    if (add.rows() != n || add.cols() != n) {
      report.add("shape", {}, "addition table must be " + std::to_string(n) + "x" + std::to_string(n));
      return report;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (add(x, y) >= n) {
          report.add("closure",
                     {static_cast<Elem>(x), static_cast<Elem>(y)},
                     names[x] + "+" + names[y] + " is not a declared element");
          return report;
        }
      }
    }
    std::optional<Elem> zero;
    for (std::size_t z = 0; z < n && !zero; ++z) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = add(z, x) == x && add(x, z) == x;
      }
      if (ok) {
        zero = static_cast<Elem>(z);
      }
    }
    if (!zero) {
      report.add("identity", {}, "no identity element");
      return report;
    }
    std::vector<Elem> neg(n);
    for (std::size_t x = 0; x < n; ++x) {
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) {
        if (add(x, y) == *zero && add(y, x) == *zero) {
          neg[x] = static_cast<Elem>(y);
          found  = true;
        }
      }
      if (!found) {
        report.add("inverse", {static_cast<Elem>(x)}, "no inverse for " + names[x]);
        return report;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (add(x, y) != add(y, x)) {
          report.add("commutativity",
                     {static_cast<Elem>(x), static_cast<Elem>(y)},
                     names[x] + "+" + names[y] + " != " + names[y] + "+" + names[x]);
          return report;
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) {
            report.add("associativity",
                       {static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)},
                       "(" + names[x] + "+" + names[y] + ")+" + names[z] + " != " + names[x]
                           + "+(" + names[y] + "+" + names[z] + ")");
            return report;
          }
        }
      }
    }
    // Reindex: zero first.
    std::vector<Elem> order;  // new index -> old index
    order.push_back(*zero);
    for (std::size_t x = 0; x < n; ++x) {
      if (x != *zero) {
        order.push_back(static_cast<Elem>(x));
      }
    }
    std::vector<Elem> pos(n);  // old -> new
    for (std::size_t i = 0; i < n; ++i) {
      pos[order[i]] = static_cast<Elem>(i);
    }
    std::vector<std::string> new_names(n);
    Table                    new_add(n, n);
    std::vector<Elem>        new_neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      new_names[i] = names[order[i]];
      new_neg[i]   = pos[neg[order[i]]];
      for (std::size_t j = 0; j < n; ++j) {
        new_add(i, j) = pos[add(order[i], order[j])];
      }
    }
    return FiniteAbelianGroup(std::move(new_names), std::move(new_add), std::move(new_neg));
  }

  // Label-level entry point: every table entry must be a declared label.
  inline Checked<FiniteAbelianGroup>
  validate_abelian_group(std::vector<std::string>                     names,
                         std::vector<std::vector<std::string>> const& add) {
    std::size_t const n = names.size();
    ValidationReport  report;
    if (add.size() != n) {
      report.add("shape", {}, "addition table must have " + std::to_string(n) + " rows");
      return report;
    }
    std::map<std::string, Elem> index;
    for (std::size_t i = 0; i < n; ++i) {
      index.emplace(names[i], static_cast<Elem>(i));
    }
    Table t(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      if (add[x].size() != n) {
        report.add("shape", {static_cast<Elem>(x)},
                   "row " + names[x] + " must have " + std::to_string(n) + " entries");
        return report;
      }
      for (std::size_t y = 0; y < n; ++y) {
        auto it = index.find(add[x][y]);
        if (it == index.end()) {
          report.add("closure", {static_cast<Elem>(x), static_cast<Elem>(y)},
                     names[x] + "+" + names[y] + " = '" + add[x][y]
                         + "' is not a declared element");
          return report;
        }
        t(x, y) = it->second;
      }
    }
    return validate_abelian_group(std::move(names), t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard groups
  ////////////////////////////////////////////////////////////////////////

  inline FiniteAbelianGroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error("cyclic_group: order must be positive");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    Table add(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        add(i, j) = static_cast<Elem>((i + j) % n);
      }
    }
    return validate_abelian_group(std::move(names), add).value();
  }

  namespace detail {
    inline std::string strip_parens(std::string const& s) {
      if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        return s.substr(1, s.size() - 2);
      }
      return s;
    }

    // Mixed-radix coordinates with the first factor most significant.
    inline std::vector<std::vector<Elem>> coordinates(std::vector<std::size_t> const& orders) {
      std::size_t total = 1;
      for (auto o : orders) {
        total *= o;
      }
      std::vector<std::vector<Elem>> out(total, std::vector<Elem>(orders.size()));
      for (std::size_t i = 0; i < total; ++i) {
        std::size_t rest = i;
        for (std::size_t k = orders.size(); k-- > 0;) {
          out[i][k] = static_cast<Elem>(rest % orders[k]);
          rest /= orders[k];
        }
      }
      return out;
    }

    inline std::size_t encode(std::vector<std::size_t> const& orders,
                              std::vector<Elem> const&        coords) {
      std::size_t i = 0;
      for (std::size_t k = 0; k < orders.size(); ++k) {
        i = i * orders[k] + coords[k];
      }
      return i;
    }

    inline std::string tuple_name(std::vector<std::string> const& parts) {
      std::string out = "(";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        out += (k ? "," : "") + parts[k];
      }
      return out + ")";
    }
  }  // namespace detail

  // External direct product of a finite list of groups; elements are tuples
  // named "(x,y,...)", ordered with the first factor most significant.
  inline FiniteAbelianGroup product_group(std::vector<FiniteAbelianGroup> const& factors) {
    if (factors.empty()) {
      return FiniteAbelianGroup();
    }
    std::vector<std::size_t> orders;
    std::size_t              total = 1;
    for (auto const& g : factors) {
      orders.push_back(g.order());
      total *= g.order();
    }
    require_cap(total, kMaxOrder, "product_group");
    auto const               coords = detail::coordinates(orders);
    std::vector<std::string> names;
    for (auto const& c : coords) {
      std::vector<std::string> parts;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        parts.push_back(factors[k].name(c[k]));
      }
      names.push_back(detail::tuple_name(parts));
    }
    Table add(total, total);
    for (std::size_t i = 0; i < total; ++i) {
      for (std::size_t j = 0; j < total; ++j) {
        std::vector<Elem> s(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) {
          s[k] = factors[k].add(coords[i][k], coords[j][k]);
        }
        add(i, j) = static_cast<Elem>(detail::encode(orders, s));
      }
    }
    return validate_abelian_group(std::move(names), add).value();
  }

  // Parses "Z4", "Z2xZ2", "C3", "Z1" (trivial) into a group. A single cyclic
  // factor uses labels 0..n-1; products use tuple labels.
  inline FiniteAbelianGroup group_from_spec(std::string_view spec) {
    std::vector<std::size_t> orders;
    std::size_t              pos = 0;
    while (pos < spec.size()) {
      char const c = spec[pos];
      if (c != 'Z' && c != 'C') {
        throw Error("group spec '" + std::string(spec) + "': expected Z<n> factors");
      }
      ++pos;
      std::size_t start = pos;
      while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') {
        ++pos;
      }
      if (start == pos) {
        throw Error("group spec '" + std::string(spec) + "': missing order");
      }
      orders.push_back(std::stoul(std::string(spec.substr(start, pos - start))));
      if (orders.back() == 0) {
        throw Error("group spec '" + std::string(spec) + "': zero order");
      }
      if (pos < spec.size()) {
        if (spec[pos] != 'x' && spec[pos] != '*') {
          throw Error("group spec '" + std::string(spec) + "': expected 'x' between factors");
        }
        ++pos;
        if (pos == spec.size()) {
          throw Error("group spec '" + std::string(spec) + "': dangling 'x'");
        }
      }
    }
    if (orders.empty()) {
      throw Error("empty group spec");
    }
    orders.erase(std::remove(orders.begin(), orders.end(), std::size_t{1}), orders.end());
    if (orders.empty()) {
      return FiniteAbelianGroup();
    }
    if (orders.size() == 1) {
      return cyclic_group(orders[0]);
    }
    std::vector<FiniteAbelianGroup> factors;
    for (auto o : orders) {
      factors.push_back(cyclic_group(o));
    }
    return product_group(factors);
  }

  // Specs of all abelian groups of order n up to isomorphism, as invariant
  // factor lists d1 | d2 | ... | dk (written Zd1xZd2...), in a fixed order.
  inline std::vector<std::string> abelian_group_specs(std::size_t n) {
    if (n == 0) {
      throw Error("abelian_group_specs: order must be positive");
    }
    if (n == 1) {
      return {"Z1"};
    }
    std::vector<std::vector<std::size_t>> lists;
    // Largest factor last; each factor divides the next.
    std::function<void(std::size_t, std::vector<std::size_t>&)> rec
        = [&](std::size_t rest, std::vector<std::size_t>& cur) {
            if (rest == 1) {
              lists.emplace_back(cur.rbegin(), cur.rend());
              return;
            }
            for (std::size_t d = 2; d <= rest; ++d) {
              if (rest % d != 0) {
                continue;
              }
              if (!cur.empty() && cur.back() % d != 0) {
                continue;
              }
              cur.push_back(d);
              rec(rest / d, cur);
              cur.pop_back();
            }
          };
    // Build from the largest factor downward: the first chosen factor is the
    // largest and every later one divides its predecessor.
    for (std::size_t top = n; top >= 2; --top) {
      if (n % top != 0) {
        continue;
      }
      std::vector<std::size_t> cur{top};
      rec(n / top, cur);
    }
    std::vector<std::string> out;
    for (auto const& l : lists) {
      std::string s;
      for (std::size_t k = 0; k < l.size(); ++k) {
        s += (k ? "xZ" : "Z") + std::to_string(l[k]);
      }
      out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](std::string const& a, std::string const& b) {
      auto fa = std::count(a.begin(), a.end(), 'x');
      auto fb = std::count(b.begin(), b.end(), 'x');
      return fa != fb ? fa < fb : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets and subgroups
  ////////////////////////////////////////////////////////////////////////

  inline bool is_subgroup(FiniteAbelianGroup const& g, SubsetMask const& s) {
    if (s.size() != g.order() || !s.contains(0)) {
      return false;
    }
    auto const xs = s.elements();
    for (Elem x : xs) {
      if (!s.contains(g.neg(x))) {
        return false;
      }
      for (Elem y : xs) {
        if (!s.contains(g.add(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  inline SubsetMask subgroup_closure(FiniteAbelianGroup const& g, SubsetMask gens) {
    gens.insert(0);
    bool grew = true;
    while (grew) {
      grew          = false;
      auto const xs = gens.elements();
      for (Elem x : xs) {
        for (Elem y : xs) {
          Elem const s = g.add(x, y);
          if (!gens.contains(s)) {
            gens.insert(s);
            grew = true;
          }
        }
      }
    }
    return gens;
  }

  // All subgroups, generated by closing every known subgroup under one more
  // element, sorted by (size, lexicographic element list).
  inline std::vector<SubsetMask> enumerate_subgroups(FiniteAbelianGroup const& g) {
    require_cap(g.order(), kLatticeCap, "enumerate_subgroups");
    std::set<std::uint64_t>  seen;
    std::vector<SubsetMask>  out;
    std::deque<SubsetMask>   queue;
    SubsetMask const         trivial = g.zero_mask();
    seen.insert(trivial.bits());
    queue.push_back(trivial);
    while (!queue.empty()) {
      SubsetMask s = queue.front();
      queue.pop_front();
      out.push_back(s);
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (s.contains(static_cast<Elem>(x))) {
          continue;
        }
        SubsetMask t = s;
        t.insert(static_cast<Elem>(x));
        t = subgroup_closure(g, t);
        if (seen.insert(t.bits()).second) {
          queue.push_back(t);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline SubsetMask set_sum(FiniteAbelianGroup const& g, SubsetMask const& a, SubsetMask const& b) {
    SubsetMask out(g.order());
    for (Elem x : a.elements()) {
      for (Elem y : b.elements()) {
        out.insert(g.add(x, y));
      }
    }
    return out;
  }

  // x + A as a mask.
  inline SubsetMask translate(FiniteAbelianGroup const& g, Elem x, SubsetMask const& a) {
    return set_sum(g, SubsetMask::singleton(g.order(), x), a);
  }

  enum class SetOp { sum, left_product, right_product };

  // Subset arithmetic on a bare group; only the sum is defined here.
  inline SubsetMask set_op(FiniteAbelianGroup const& g,
                           SubsetMask const&         a,
                           SubsetMask const&         b,
                           SetOp                     op) {
    if (op != SetOp::sum) {
      throw Error("set_op: products need a diring, not a bare group");
    }
    return set_sum(g, a, b);
  }

  // x ≡ y (mod A), i.e. x - y ∈ A.
  inline bool congruent_mod(FiniteAbelianGroup const& g, Elem x, Elem y, SubsetMask const& a) {
    if (!is_subgroup(g, a)) {
      throw Error("congruent_mod: modulus " + g.format(a) + " is not a subgroup");
    }
    return a.contains(g.sub(x, y));
  }

  struct GroupQuotient {
    FiniteAbelianGroup group;
    // projection[x] = index of the coset x + N.
    std::vector<Elem> projection;
    // representatives[c] = least element index of coset c.
    std::vector<Elem> representatives;
  };

  // G/N. Cosets are indexed in increasing order of their least element and
  // named "[rep]".
  inline GroupQuotient quotient_group(FiniteAbelianGroup const& g, SubsetMask const& n) {
    if (!is_subgroup(g, n)) {
      throw Error("quotient_group: " + g.format(n) + " is not a subgroup");
    }
    std::size_t const  size = g.order();
    std::vector<Elem>  proj(size, static_cast<Elem>(size));
    std::vector<Elem>  reps;
    for (std::size_t x = 0; x < size; ++x) {
      if (proj[x] != size) {
        continue;
      }
      Elem const c = static_cast<Elem>(reps.size());
      reps.push_back(static_cast<Elem>(x));
      for (Elem y : n.elements()) {
        proj[g.add(static_cast<Elem>(x), y)] = c;
      }
    }
    std::size_t const        k = reps.size();
    std::vector<std::string> names;
    for (Elem r : reps) {
      names.push_back("[" + g.name(r) + "]");
    }
    Table add(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        add(i, j) = proj[g.add(reps[i], reps[j])];
      }
    }
    return GroupQuotient{
        validate_abelian_group(std::move(names), add).value(), std::move(proj), std::move(reps)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  // A small generating set: each element is outside the span of the earlier
  // ones.
  inline std::vector<Elem> generating_set(FiniteAbelianGroup const& g) {
    std::vector<Elem> gens;
    SubsetMask        span = g.zero_mask();
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (!span.contains(static_cast<Elem>(x))) {
        gens.push_back(static_cast<Elem>(x));
        span.insert(static_cast<Elem>(x));
        span = subgroup_closure(g, span);
      }
    }
    return gens;
  }

  // Enumerates all homomorphisms from `src` into an abelian group of
  // `target_order` elements with addition `target_add` and zero `target_zero`.
  // Images of a generating set are chosen freely and propagated along
  // x -> x + g; an assignment survives iff the propagation is consistent on
  // every edge. Each hom is passed to `emit` as a vector of target indices.
  template <typename AddFn, typename Emit>
  void for_each_hom(FiniteAbelianGroup const& src,
                    std::size_t               target_order,
                    std::size_t               target_zero,
                    AddFn&&                   target_add,
                    Emit&&                    emit) {
    auto const        gens = generating_set(src);
    std::size_t const n    = src.order();
    std::size_t const k    = gens.size();
    std::vector<std::size_t> choice(k, 0);
    constexpr std::size_t    unknown = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(n);
    std::vector<Elem>        queue;
    queue.reserve(n);
    while (true) {
      std::fill(map.begin(), map.end(), unknown);
      map[0] = target_zero;
      queue.assign(1, 0);
      bool consistent = true;
      for (std::size_t qi = 0; qi < queue.size() && consistent; ++qi) {
        Elem const x = queue[qi];
        for (std::size_t i = 0; i < k; ++i) {
          Elem const        y   = src.add(x, gens[i]);
          std::size_t const img = target_add(map[x], choice[i]);
          if (map[y] == unknown) {
            map[y] = img;
            queue.push_back(y);
          } else if (map[y] != img) {
            consistent = false;
            break;
          }
        }
      }
      if (consistent) {
        std::vector<std::size_t> const& m = map;
        emit(m);
      }
      // Next assignment, last generator fastest.
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++choice[i] < target_order) {
          break;
        }
        choice[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (k == 0) {
        return;
      }
    }
  }

  // All additive homomorphisms src -> tgt as index maps.
  inline std::vector<std::vector<Elem>> enumerate_group_homs(FiniteAbelianGroup const& src,
                                                             FiniteAbelianGroup const& tgt) {
    std::vector<std::vector<Elem>> out;
    for_each_hom(
        src,
        tgt.order(),
        0,
        [&](std::size_t a, std::size_t b) { return tgt.add(static_cast<Elem>(a), static_cast<Elem>(b)); },
        [&](std::vector<std::size_t> const& m) {
          out.emplace_back(m.begin(), m.end());
        });
    return out;
  }

  inline bool is_group_hom(FiniteAbelianGroup const& src,
                           FiniteAbelianGroup const& tgt,
                           std::vector<Elem> const&  map) {
    if (map.size() != src.order()) {
      return false;
    }
    for (std::size_t x = 0; x < src.order(); ++x) {
      if (map[x] >= tgt.order()) {
        return false;
      }
      for (std::size_t y = 0; y < src.order(); ++y) {
        if (map[src.add(x, y)] != tgt.add(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  // Bijective endomorphisms of g.
  inline std::vector<std::vector<Elem>> additive_automorphisms(FiniteAbelianGroup const& g) {
    std::vector<std::vector<Elem>> out;
    for (auto& m : enumerate_group_homs(g, g)) {
      SubsetMask image = SubsetMask::of_range(g.order(), m);
      if (image.is_full()) {
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  // All maps A x B -> C additive in each argument, i.e. homomorphisms
  // A -> Hom(B, C), returned as |A| x |B| tables.
  inline std::vector<Table> enumerate_biadditive_maps(FiniteAbelianGroup const& a,
                                                      FiniteAbelianGroup const& b,
                                                      FiniteAbelianGroup const& c) {
    auto const homs = enumerate_group_homs(b, c);
    std::size_t const s = homs.size();
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < s; ++i) {
      index.emplace(homs[i], i);
    }
    std::size_t zero = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (std::all_of(homs[i].begin(), homs[i].end(), [](Elem v) { return v == 0; })) {
        zero = i;
      }
    }
    Table             sum(s, s);
    std::vector<Elem> tmp(b.order());
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t x = 0; x < b.order(); ++x) {
          tmp[x] = c.add(homs[i][x], homs[j][x]);
        }
        sum(i, j) = static_cast<Elem>(index.at(tmp));
      }
    }
    std::vector<Table> out;
    for_each_hom(
        a,
        s,
        zero,
        [&](std::size_t i, std::size_t j) { return static_cast<std::size_t>(sum(i, j)); },
        [&](std::vector<std::size_t> const& m) {
          Table t(a.order(), b.order());
          for (std::size_t x = 0; x < a.order(); ++x) {
            for (std::size_t y = 0; y < b.order(); ++y) {
              t(x, y) = homs[m[x]][y];
            }
          }
          out.push_back(std::move(t));
        });
    return out;
  }

}  // namespace diring

#endif  // DIRING_FINITE_GROUP_HPP_
