#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dsc/error.hpp"
#include "dsc/numbers.hpp"

namespace dsc {

inline constexpr int kGroupCap = 64;

// A finite group given by its Cayley table.  Construction validates the
// axioms exhaustively; see group_from_table.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  int inv(int x) const { return inverse_[x]; }
  int identity() const { return identity_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int x = 0; x < order_; ++x)
      for (int y = 0; y < order_; ++y) out[x][y] = mul(x, y);
    return out;
  }

  friend FiniteGroup group_from_table(std::vector<std::vector<int>> const& table);

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

inline FiniteGroup group_from_table(std::vector<std::vector<int>> const& table) {
  int const n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group: empty table");
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n) throw ValidationError("group: table is not square");
    for (int y = 0; y < n; ++y) {
      int const v = table[x][y];
      if (v < 0 || v >= n)
        throw ValidationError("group: entry out of range at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
      g.table_[static_cast<std::size_t>(x) * n + y] = v;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          throw ValidationError("group: not associative at (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")");
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("group: no identity");
  g.identity_ = identity;
  g.inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inverse_[x] = y;
        break;
      }
    if (g.inverse_[x] < 0)
      throw ValidationError("group: no inverse for element " + std::to_string(x));
  }
  return g;
}

// A normal subgroup, stored as a bitmask over element indices (group order is
// capped at 64) plus the sorted element list.
struct NormalSubgroup {
  std::uint64_t mask = 0;
  std::vector<int> elements;

  bool contains(int g) const { return mask >> g & 1u; }
  int order() const { return static_cast<int>(elements.size()); }
  bool operator==(NormalSubgroup const& o) const { return mask == o.mask; }

  static NormalSubgroup from_mask(std::uint64_t mask) {
    NormalSubgroup s;
    s.mask = mask;
    for (int i = 0; i < 64; ++i)
      if (mask >> i & 1u) s.elements.push_back(i);
    return s;
  }
};

namespace detail {

inline std::uint64_t subgroup_closure_mask(FiniteGroup const& g, std::uint64_t seed) {
  // A subsemigroup of a finite group containing the identity is a subgroup.
  std::uint64_t mask = seed | (std::uint64_t{1} << g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < g.order(); ++x) {
      if (!(mask >> x & 1u)) continue;
      for (int y = 0; y < g.order(); ++y) {
        if (!(mask >> y & 1u)) continue;
        int const z = g.mul(x, y);
        if (!(mask >> z & 1u)) {
          mask |= std::uint64_t{1} << z;
          grew = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace detail

inline bool is_subgroup(FiniteGroup const& g, std::uint64_t mask) {
  if (!(mask >> g.identity() & 1u)) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!(mask >> x & 1u)) continue;
    if (!(mask >> g.inv(x) & 1u)) return false;
    for (int y = 0; y < g.order(); ++y)
      if ((mask >> y & 1u) && !(mask >> g.mul(x, y) & 1u)) return false;
  }
  return true;
}

inline bool is_normal(FiniteGroup const& g, std::uint64_t mask) {
  if (!is_subgroup(g, mask)) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!(mask >> x & 1u)) continue;
    for (int a = 0; a < g.order(); ++a) {
      int const conj = g.mul(g.mul(a, x), g.inv(a));
      if (!(mask >> conj & 1u)) return false;
    }
  }
  return true;
}

// All normal subgroups, each exactly once, ordered by decreasing size (ties
// broken lexicographically on element lists): G first, {1} last.
//
// Enumeration grows subgroups by joining conjugacy classes: starting from
// {1}, repeatedly close (subgroup) the union of a known normal subgroup with
// one whole conjugacy class.  Every normal subgroup is a union of classes, so
// all of them are reached.
inline std::vector<NormalSubgroup> normal_subgroups(FiniteGroup const& g) {
  int const n = g.order();
  if (n > kGroupCap) throw SizeError("normal_subgroups: group order exceeds cap 64");

  std::vector<std::uint64_t> classes;
  {
    std::uint64_t assigned = 0;
    for (int x = 0; x < n; ++x) {
      if (assigned >> x & 1u) continue;
      std::uint64_t cls = 0;
      for (int a = 0; a < n; ++a) cls |= std::uint64_t{1} << g.mul(g.mul(a, x), g.inv(a));
      classes.push_back(cls);
      assigned |= cls;
    }
  }

  std::vector<std::uint64_t> found{detail::subgroup_closure_mask(g, 0)};
  for (std::size_t head = 0; head < found.size(); ++head) {
    std::uint64_t const base = found[head];
    for (std::uint64_t cls : classes) {
      if ((cls & ~base) == 0) continue;
      std::uint64_t const joined = detail::subgroup_closure_mask(g, base | cls);
      if (std::find(found.begin(), found.end(), joined) == found.end()) found.push_back(joined);
    }
  }

  std::vector<NormalSubgroup> out;
  out.reserve(found.size());
  for (std::uint64_t mask : found) out.push_back(NormalSubgroup::from_mask(mask));
  std::sort(out.begin(), out.end(), [](NormalSubgroup const& a, NormalSubgroup const& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.elements < b.elements;
  });
  return out;
}

// The cyclic group Z_{p^k}, kept symbolic: elements are residues as big
// integers, never materialized.  k may be astronomically large.
struct SymbolicCyclicGroup {
  Integer p;
  Integer k;

  SymbolicCyclicGroup(Integer prime, Integer exponent) : p(std::move(prime)), k(std::move(exponent)) {
    if (k < 0) throw DomainError("SymbolicCyclicGroup: negative exponent");
    if (!is_prime(p)) throw ValidationError("SymbolicCyclicGroup: p = " + p.get_str() + " is not prime");
  }
};

// Descriptors m = 0..k of the normal subgroup chain p^m Z_{p^k}, largest
// subgroup first.  Materializing the list requires k to be small; the census
// paths never call this for constructed certificates.
inline std::vector<Integer> cyclic_normal_chain(SymbolicCyclicGroup const& g) {
  if (g.k > 1000000) throw SizeError("cyclic_normal_chain: k too large to list");
  std::vector<Integer> out;
  for (Integer m = 0; m <= g.k; ++m) out.push_back(m);
  return out;
}

}  // namespace dsc
