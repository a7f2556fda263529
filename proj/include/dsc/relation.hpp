#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "dsc/closure.hpp"
#include "dsc/error.hpp"
#include "dsc/numbers.hpp"

namespace dsc {

// Enumeration caps.  Bell numbers and set partitions are exact big-integer
// computations; the cap bounds table sizes, not numeric range.
inline constexpr int kBellCap = 64;

// A binary relation on {0..n-1}, stored as an n x n bit matrix.
class BinaryRelation {
 public:
  explicit BinaryRelation(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n <= 0) throw DomainError("BinaryRelation: size must be positive");
  }

  static BinaryRelation diagonal(int n) {
    BinaryRelation r(n);
    for (int i = 0; i < n; ++i) r.add(i, i);
    return r;
  }

  static BinaryRelation full(int n) {
    BinaryRelation r(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) r.add(x, y);
    return r;
  }

  static BinaryRelation from_pairs(int n, std::vector<std::pair<int, int>> const& pairs) {
    BinaryRelation r(n);
    for (auto const& [x, y] : pairs) {
      r.check_index(x);
      r.check_index(y);
      r.add(x, y);
    }
    return r;
  }

  int size() const { return n_; }

  bool contains(int x, int y) const {
    return (bits_[word_index(x, y)] >> (y & 63)) & 1u;
  }

  void add(int x, int y) { bits_[word_index(x, y)] |= std::uint64_t{1} << (y & 63); }
  void remove(int x, int y) { bits_[word_index(x, y)] &= ~(std::uint64_t{1} << (y & 63)); }

  bool operator==(BinaryRelation const& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(BinaryRelation const& o) const { return !(*this == o); }

  bool is_subset_of(BinaryRelation const& o) const {
    if (n_ != o.n_) throw DomainError("relation size mismatch");
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }

  BinaryRelation& operator|=(BinaryRelation const& o) {
    if (n_ != o.n_) throw DomainError("relation size mismatch");
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
    return *this;
  }

  int pair_count() const {
    int c = 0;
    for (auto w : bits_) c += __builtin_popcountll(w);
    return c;
  }

  // Pairs in lexicographic (x, y) order.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count());
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (contains(x, y)) out.emplace_back(x, y);
    return out;
  }

  std::vector<std::pair<int, int>> off_diagonal_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (x != y && contains(x, y)) out.emplace_back(x, y);
    return out;
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_) throw DomainError("relation index out of range");
  }

 private:
  std::size_t word_index(int x, int y) const {
    return static_cast<std::size_t>(x) * words_ + (y >> 6);
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

inline bool is_reflexive(BinaryRelation const& rel) {
  for (int i = 0; i < rel.size(); ++i)
    if (!rel.contains(i, i)) return false;
  return true;
}

inline bool is_symmetric(BinaryRelation const& rel) {
  for (int x = 0; x < rel.size(); ++x)
    for (int y = x + 1; y < rel.size(); ++y)
      if (rel.contains(x, y) != rel.contains(y, x)) return false;
  return true;
}

inline bool is_transitive(BinaryRelation const& rel) {
  int const n = rel.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!rel.contains(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (rel.contains(y, z) && !rel.contains(x, z)) return false;
    }
  return true;
}

inline bool is_equivalence(BinaryRelation const& rel) {
  return is_reflexive(rel) && is_symmetric(rel) && is_transitive(rel);
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[y] = x;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Smallest equivalence relation containing rel: reflexive closure of the
// connected components of the symmetrized graph.
inline BinaryRelation equivalence_closure(BinaryRelation const& rel) {
  int const n = rel.size();
  detail::UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel.contains(x, y)) uf.merge(x, y);
  BinaryRelation out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (uf.find(x) == uf.find(y)) out.add(x, y);
  return out;
}

// A set partition of {0..n-1}.  Canonical form: blocks ordered by least
// element, elements ascending inside each block.
struct Partition {
  int ground_size = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(Partition const& o) const = default;

  std::vector<int> block_sizes() const {
    std::vector<int> out;
    out.reserve(blocks.size());
    for (auto const& b : blocks) out.push_back(static_cast<int>(b.size()));
    return out;
  }

  static Partition from_equivalence(BinaryRelation const& rel) {
    if (!is_equivalence(rel)) throw DomainError("Partition: relation is not an equivalence");
    int const n = rel.size();
    Partition p;
    p.ground_size = n;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<int> block;
      for (int y = x; y < n; ++y)
        if (rel.contains(x, y)) {
          block.push_back(y);
          seen[y] = true;
        }
      p.blocks.push_back(std::move(block));
    }
    return p;
  }

  BinaryRelation to_equivalence() const {
    BinaryRelation rel(ground_size);
    for (auto const& block : blocks)
      for (int x : block)
        for (int y : block) rel.add(x, y);
    return rel;
  }
};

// Bell numbers by the Bell-triangle recurrence.  B(0) = 1.
inline Integer bell(int n) {
  if (n < 0) throw DomainError("bell: n must be nonnegative");
  if (n > kBellCap) throw SizeError("bell: n exceeds cap 64");
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (auto const& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// Number of reflexive relations on an n-set: 2^(n^2 - n).
inline Integer reflexive_count(int n) {
  if (n < 0) throw DomainError("reflexive_count: n must be nonnegative");
  return pow2(static_cast<unsigned long>(n) * n - n);
}

// Visits each set partition of {0..n-1} exactly once, by restricted growth
// strings in lexicographic order.  The visit count equals bell(n).
template <typename Visit>
void enumerate_partitions(int n, Visit&& visit) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be nonnegative");
  if (n > kBellCap) throw SizeError("enumerate_partitions: n exceeds cap 64");
  if (n == 0) {
    visit(Partition{0, {}});
    return;
  }
  // Restricted growth strings: rgs[0] = 0 and rgs[i] <= max(rgs[0..i-1]) + 1.
  std::vector<int> rgs(n, 0);
  auto emit = [&]() {
    Partition p;
    p.ground_size = n;
    int nblocks = 0;
    for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, rgs[i] + 1);
    p.blocks.resize(nblocks);
    for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
    visit(std::move(p));
  };
  while (true) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
}

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  enumerate_partitions(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

// Bridge between relations and the closed-set engine: a reflexive relation on
// n points is identified with its set of off-diagonal pairs, indexed in
// lexicographic (x, y) order with the diagonal skipped.
inline int off_diagonal_universe(int n) { return n * n - n; }

inline int off_diagonal_index(int n, int x, int y) {
  return x * (n - 1) + (y < x ? y : y - 1);
}

inline std::pair<int, int> off_diagonal_pair(int n, int idx) {
  int const x = idx / (n - 1);
  int const r = idx % (n - 1);
  return {x, r < x ? r : r + 1};
}

inline BinaryRelation relation_with_diagonal(int n, IndexSet const& off_pairs) {
  BinaryRelation rel = BinaryRelation::diagonal(n);
  for (int idx = 0; idx < off_pairs.universe(); ++idx)
    if (off_pairs.test(idx)) {
      auto const [x, y] = off_diagonal_pair(n, idx);
      rel.add(x, y);
    }
  return rel;
}

inline IndexSet off_diagonal_set(BinaryRelation const& rel) {
  int const n = rel.size();
  IndexSet s(off_diagonal_universe(n));
  for (auto const& [x, y] : rel.off_diagonal_pairs()) s.set(off_diagonal_index(n, x, y));
  return s;
}

}  // namespace dsc
