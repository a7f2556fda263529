#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsc/closure.hpp"
#include "dsc/error.hpp"
#include "dsc/group.hpp"
#include "dsc/numbers.hpp"
#include "dsc/relation.hpp"

namespace dsc {

// Default cap for the brute-force enumeration of congruences and diagonal
// subsemigroups.  Beyond it the structural (Rees / Clifford) paths apply.
inline constexpr int kBruteForceCap = 10;

// Cap on Cayley tables built from structural descriptions.
inline constexpr int kMaterializeCap = 200;

class FiniteSemigroup {
 public:
  int order() const { return order_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int x = 0; x < order_; ++x)
      for (int y = 0; y < order_; ++y) out[x][y] = mul(x, y);
    return out;
  }

  friend FiniteSemigroup semigroup_from_table(std::vector<std::vector<int>> const& table);

 private:
  FiniteSemigroup() = default;

  int order_ = 0;
  std::vector<int> table_;
};

inline FiniteSemigroup semigroup_from_table(std::vector<std::vector<int>> const& table) {
  int const n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("semigroup: empty table");
  FiniteSemigroup s;
  s.order_ = n;
  s.table_.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw ValidationError("semigroup: table is not square");
    for (int y = 0; y < n; ++y) {
      int const v = table[x][y];
      if (v < 0 || v >= n)
        throw ValidationError("semigroup: entry out of range at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
      s.table_[static_cast<std::size_t>(x) * n + y] = v;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)))
          throw ValidationError("semigroup: not associative at witness (" + std::to_string(x) +
                                "," + std::to_string(y) + "," + std::to_string(z) + ")");
  return s;
}

inline FiniteSemigroup semigroup_from_group(FiniteGroup const& g) {
  return semigroup_from_table(g.rows());
}

// (x,y),(z,t) in rel  =>  (xz,yt) in rel.
inline bool is_compatible(FiniteSemigroup const& s, BinaryRelation const& rel) {
  if (rel.size() != s.order()) throw DomainError("relation size does not match semigroup order");
  auto const pairs = rel.pairs();
  for (auto const& [x, y] : pairs)
    for (auto const& [z, t] : pairs)
      if (!rel.contains(s.mul(x, z), s.mul(y, t))) return false;
  return true;
}

inline bool is_diagonal_subsemigroup(FiniteSemigroup const& s, BinaryRelation const& rel) {
  if (rel.size() != s.order()) throw DomainError("relation size does not match semigroup order");
  return is_reflexive(rel) && is_compatible(s, rel);
}

inline bool is_congruence(FiniteSemigroup const& s, BinaryRelation const& rel) {
  if (rel.size() != s.order()) throw DomainError("relation size does not match semigroup order");
  return is_equivalence(rel) && is_compatible(s, rel);
}

// Least diagonal subsemigroup containing seed: contains the diagonal and
// seed, closed under pairwise products.
inline BinaryRelation diagonal_closure(FiniteSemigroup const& s, BinaryRelation const& seed) {
  if (seed.size() != s.order()) throw DomainError("relation size does not match semigroup order");
  int const n = s.order();
  BinaryRelation rel = BinaryRelation::diagonal(n);
  rel |= seed;
  std::vector<std::pair<int, int>> list = rel.pairs();
  for (std::size_t head = 0; head < list.size(); ++head) {
    auto const [x, y] = list[head];
    for (std::size_t j = 0; j < list.size(); ++j) {
      auto const [z, t] = list[j];
      int const a = s.mul(x, z), b = s.mul(y, t);
      if (!rel.contains(a, b)) {
        rel.add(a, b);
        list.emplace_back(a, b);
      }
      int const c = s.mul(z, x), d = s.mul(t, y);
      if (!rel.contains(c, d)) {
        rel.add(c, d);
        list.emplace_back(c, d);
      }
    }
  }
  return rel;
}

// Least congruence containing seed: alternate symmetric/transitive closure
// with compatibility saturation until a fixpoint.
inline BinaryRelation congruence_closure(FiniteSemigroup const& s, BinaryRelation const& seed) {
  if (seed.size() != s.order()) throw DomainError("relation size does not match semigroup order");
  BinaryRelation rel = equivalence_closure(seed);
  while (true) {
    BinaryRelation grown = diagonal_closure(s, rel);
    grown = equivalence_closure(grown);
    if (grown == rel) return rel;
    rel = std::move(grown);
  }
}

namespace detail {

inline void check_brute_force_cap(FiniteSemigroup const& s, int cap) {
  if (s.order() > cap)
    throw SizeError("semigroup order " + std::to_string(s.order()) + " exceeds brute-force cap " +
                    std::to_string(cap) +
                    "; use the Rees or Clifford structural paths (or raise --cap)");
}

}  // namespace detail

// Visits every diagonal subsemigroup of s exactly once, in the closed-set
// engine's order.
template <typename Visit>
void enumerate_diagonal_subsemigroups(FiniteSemigroup const& s, int cap, Visit&& visit) {
  detail::check_brute_force_cap(s, cap);
  int const n = s.order();
  auto close = [&](IndexSet x) {
    return off_diagonal_set(diagonal_closure(s, relation_with_diagonal(n, x)));
  };
  for_each_closed_set(off_diagonal_universe(n), close,
                      [&](IndexSet const& x) { visit(relation_with_diagonal(n, x)); });
}

template <typename Visit>
void enumerate_congruences(FiniteSemigroup const& s, int cap, Visit&& visit) {
  detail::check_brute_force_cap(s, cap);
  int const n = s.order();
  auto close = [&](IndexSet x) {
    return off_diagonal_set(congruence_closure(s, relation_with_diagonal(n, x)));
  };
  for_each_closed_set(off_diagonal_universe(n), close,
                      [&](IndexSet const& x) { visit(relation_with_diagonal(n, x)); });
}

inline std::vector<BinaryRelation> enumerate_diagonal_subsemigroups(FiniteSemigroup const& s,
                                                                    int cap = kBruteForceCap) {
  std::vector<BinaryRelation> out;
  enumerate_diagonal_subsemigroups(s, cap, [&](BinaryRelation rel) { out.push_back(std::move(rel)); });
  return out;
}

inline std::vector<BinaryRelation> enumerate_congruences(FiniteSemigroup const& s,
                                                         int cap = kBruteForceCap) {
  std::vector<BinaryRelation> out;
  enumerate_congruences(s, cap, [&](BinaryRelation rel) { out.push_back(std::move(rel)); });
  return out;
}

struct DscReport {
  Integer congruence_count;
  Integer diagonal_count;
  Rational chi;

  DscReport(Integer congruences, Integer diagonals)
      : congruence_count(std::move(congruences)),
        diagonal_count(std::move(diagonals)),
        chi(congruence_count, diagonal_count) {
    if (congruence_count < 1 || congruence_count > diagonal_count)
      throw InternalError("DscReport: counts violate 1 <= |Cong| <= |Diag|");
  }
};

// chi(S) = |Cong(S)| / |Diag(S)| by exhaustive enumeration.
inline DscReport dsc_coefficient(FiniteSemigroup const& s, int cap = kBruteForceCap) {
  detail::check_brute_force_cap(s, cap);
  Integer congruences = 0;
  enumerate_congruences(s, cap, [&](BinaryRelation const&) { ++congruences; });
  Integer diagonals = 0;
  enumerate_diagonal_subsemigroups(s, cap, [&](BinaryRelation const&) { ++diagonals; });
  return DscReport(std::move(congruences), std::move(diagonals));
}

}  // namespace dsc
