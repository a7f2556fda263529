#pragma once

#include <cstdint>
#include <vector>

#include "dsc/error.hpp"
#include "dsc/numbers.hpp"

namespace dsc {

// A subset of {0..universe-1}, the working type of the closed-set engine.
class IndexSet {
 public:
  explicit IndexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw DomainError("IndexSet: negative universe");
  }

  int universe() const { return universe_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  // Clears bits i, i+1, ..., universe-1.
  void clear_from(int i) {
    if (i >= universe_) return;
    int const w = i >> 6;
    words_[w] &= (std::uint64_t{1} << (i & 63)) - 1;
    for (std::size_t j = w + 1; j < words_.size(); ++j) words_[j] = 0;
  }

  // True when both sets agree on {0..i-1}.
  bool agrees_below(IndexSet const& o, int i) const {
    int const w = i >> 6;
    for (int j = 0; j < w; ++j)
      if (words_[j] != o.words_[j]) return false;
    if ((i & 63) == 0) return true;
    std::uint64_t const mask = (std::uint64_t{1} << (i & 63)) - 1;
    return (words_[w] & mask) == (o.words_[w] & mask);
  }

  bool operator==(IndexSet const& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < universe_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int universe_;
  std::vector<std::uint64_t> words_;
};

// Next-Closure enumeration of the closed sets of a closure operator on
// {0..universe-1}.  `close` must be extensive, monotone and idempotent.
// Closed sets are visited exactly once each, in lexicographic order of
// characteristic vectors (bit 0 most significant).
template <typename Close, typename Visit>
void for_each_closed_set(int universe, Close&& close, Visit&& visit) {
  IndexSet current = close(IndexSet(universe));
  visit(current);
  while (true) {
    bool advanced = false;
    for (int i = universe - 1; i >= 0; --i) {
      if (current.test(i)) continue;
      IndexSet candidate = current;
      candidate.clear_from(i);
      candidate.set(i);
      candidate = close(candidate);
      // Lectic successor test: no new element below i.
      if (candidate.agrees_below(current, i)) {
        current = candidate;
        visit(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

template <typename Close>
Integer count_closed_sets(int universe, Close&& close) {
  Integer n = 0;
  for_each_closed_set(universe, close, [&](IndexSet const&) { ++n; });
  return n;
}

}  // namespace dsc
