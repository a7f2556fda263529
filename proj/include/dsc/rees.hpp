#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dsc/error.hpp"
#include "dsc/group.hpp"
#include "dsc/numbers.hpp"
#include "dsc/relation.hpp"
#include "dsc/semigroup.hpp"

namespace dsc {

// Rees matrix semigroup M[G; I, Lambda; P] over a concrete group.  P is the
// sandwich matrix, stored row-major by Lambda (b rows of a group elements),
// with p(lambda, i) the entry used by the product
// (i,g,lambda)(j,h,mu) = (i, g p_{lambda j} h, mu).
struct ReesSpec {
  FiniteGroup group;
  int a = 1;
  int b = 1;
  std::vector<std::vector<int>> P;

  ReesSpec(FiniteGroup g, int i_count, int lambda_count, std::vector<std::vector<int>> sandwich)
      : group(std::move(g)), a(i_count), b(lambda_count), P(std::move(sandwich)) {
    if (a < 1 || b < 1) throw ValidationError("rees: index sets must be nonempty");
    if (static_cast<int>(P.size()) != b) throw ValidationError("rees: P must have b rows");
    for (auto const& row : P) {
      if (static_cast<int>(row.size()) != a) throw ValidationError("rees: P rows must have a entries");
      for (int e : row)
        if (e < 0 || e >= group.order()) throw ValidationError("rees: P entry is not a group element");
    }
  }

  int p(int lambda, int i) const { return P[lambda][i]; }
  int order() const { return a * group.order() * b; }

  // Triples are enumerated in lexicographic (i, g, lambda) order.
  int index(int i, int g, int lambda) const { return (i * group.order() + g) * b + lambda; }
  int i_of(int idx) const { return idx / (group.order() * b); }
  int g_of(int idx) const { return idx / b % group.order(); }
  int lambda_of(int idx) const { return idx % b; }

  void check_indices(int lambda, int mu, int i, int j) const {
    if (lambda < 0 || lambda >= b || mu < 0 || mu >= b || i < 0 || i >= a || j < 0 || j >= a)
      throw DomainError("rees: index out of range");
  }
};

// Extract q_{lambda mu i j} = p_{lambda i} p_{mu i}^-1 p_{mu j} p_{lambda j}^-1.
inline int extract(ReesSpec const& s, int lambda, int mu, int i, int j) {
  s.check_indices(lambda, mu, i, j);
  auto const& g = s.group;
  return g.mul(g.mul(g.mul(s.p(lambda, i), g.inv(s.p(mu, i))), s.p(mu, j)), g.inv(s.p(lambda, j)));
}

enum class TripleKind { reflexive, equivalence };

// (N, S, T): a normal subgroup with relations on I and Lambda.  kind records
// whether both relations are equivalences.
struct LinkedTriple {
  NormalSubgroup N;
  BinaryRelation S_rel;
  BinaryRelation T_rel;
  TripleKind kind = TripleKind::reflexive;

  bool operator==(LinkedTriple const& o) const {
    return N == o.N && S_rel == o.S_rel && T_rel == o.T_rel && kind == o.kind;
  }
};

// Linked: related I-indices and related Lambda-indices force the
// corresponding extracts into N.
inline bool is_linked(ReesSpec const& s, NormalSubgroup const& N, BinaryRelation const& S_rel,
                      BinaryRelation const& T_rel) {
  if (S_rel.size() != s.a || T_rel.size() != s.b)
    throw DomainError("is_linked: relation shapes do not match the Rees spec");
  for (int i = 0; i < s.a; ++i)
    for (int j = 0; j < s.a; ++j) {
      if (!S_rel.contains(i, j)) continue;
      for (int lambda = 0; lambda < s.b; ++lambda)
        for (int mu = 0; mu < s.b; ++mu)
          if (!N.contains(extract(s, lambda, mu, i, j))) return false;
    }
  for (int lambda = 0; lambda < s.b; ++lambda)
    for (int mu = 0; mu < s.b; ++mu) {
      if (!T_rel.contains(lambda, mu)) continue;
      for (int i = 0; i < s.a; ++i)
        for (int j = 0; j < s.a; ++j)
          if (!N.contains(extract(s, lambda, mu, i, j))) return false;
    }
  return true;
}

inline FiniteSemigroup materialize(ReesSpec const& s) {
  if (s.order() > kMaterializeCap)
    throw SizeError("rees: materialized order " + std::to_string(s.order()) + " exceeds cap " +
                    std::to_string(kMaterializeCap));
  int const n = s.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    int const i = s.i_of(x), g = s.g_of(x), lambda = s.lambda_of(x);
    for (int y = 0; y < n; ++y) {
      int const j = s.i_of(y), h = s.g_of(y), mu = s.lambda_of(y);
      table[x][y] = s.index(i, s.group.mul(s.group.mul(g, s.p(lambda, j)), h), mu);
    }
  }
  return semigroup_from_table(table);
}

// The relation rho_{N,S,T} on the materialized semigroup:
// (i,g,lambda) rho (j,h,mu)  iff  (i,j) in S, (lambda,mu) in T, and
// p_{nu i} g p_{lambda k} p_{mu k}^-1 h^-1 p_{nu j}^-1 in N for all k, nu.
inline BinaryRelation triple_to_relation(ReesSpec const& s, LinkedTriple const& t) {
  if (!is_reflexive(t.S_rel) || !is_reflexive(t.T_rel))
    throw DomainError("triple_to_relation: triple relations must be reflexive");
  if (t.kind == TripleKind::equivalence && !(is_equivalence(t.S_rel) && is_equivalence(t.T_rel)))
    throw DomainError("triple_to_relation: equivalence kind requires equivalence relations");
  if (!is_linked(s, t.N, t.S_rel, t.T_rel)) throw DomainError("triple_to_relation: triple is not linked");
  if (s.order() > kMaterializeCap)
    throw SizeError("triple_to_relation: materialized order exceeds cap");

  auto const& g = s.group;
  int const n = s.order();
  BinaryRelation rel(n);
  for (int x = 0; x < n; ++x) {
    int const i = s.i_of(x), gx = s.g_of(x), lambda = s.lambda_of(x);
    for (int y = 0; y < n; ++y) {
      int const j = s.i_of(y), hy = s.g_of(y), mu = s.lambda_of(y);
      if (!t.S_rel.contains(i, j) || !t.T_rel.contains(lambda, mu)) continue;
      bool in = true;
      for (int nu = 0; nu < s.b && in; ++nu) {
        int const left = g.mul(s.p(nu, i), gx);
        int const right = g.mul(s.p(nu, j), hy);
        for (int k = 0; k < s.a && in; ++k) {
          int const val = g.mul(g.mul(g.mul(left, s.p(lambda, k)), g.inv(s.p(mu, k))),
                                g.inv(right));
          in = t.N.contains(val);
        }
      }
      if (in) rel.add(x, y);
    }
  }
  return rel;
}

// The triple (N_rho, rho_I, rho_Lambda) of a diagonal subsemigroup rho:
//   N_rho      = { g : (i,g,l) rho (i,1,l) for all i, l }
//   rho_I      = { (i,j) : (i, p_{l i}^-1, l) rho (j, p_{l j}^-1, l) for all l }
//   rho_Lambda = { (l,m) : (i, p_{l i}^-1, l) rho (i, p_{m i}^-1, m) for all i }
inline LinkedTriple relation_to_triple(ReesSpec const& s, BinaryRelation const& rel) {
  FiniteSemigroup const mat = materialize(s);
  if (rel.size() != mat.order())
    throw DomainError("relation_to_triple: relation size does not match materialization");
  if (!is_diagonal_subsemigroup(mat, rel))
    throw DomainError("relation_to_triple: relation is not a diagonal subsemigroup");

  auto const& g = s.group;
  LinkedTriple t{NormalSubgroup{}, BinaryRelation(s.a), BinaryRelation(s.b), TripleKind::reflexive};

  std::uint64_t mask = 0;
  for (int x = 0; x < g.order(); ++x) {
    bool in = true;
    for (int i = 0; i < s.a && in; ++i)
      for (int lambda = 0; lambda < s.b && in; ++lambda)
        in = rel.contains(s.index(i, x, lambda), s.index(i, g.identity(), lambda));
    if (in) mask |= std::uint64_t{1} << x;
  }
  t.N = NormalSubgroup::from_mask(mask);
  if (!is_normal(g, mask))
    throw InternalError("relation_to_triple: extracted kernel is not a normal subgroup");

  for (int i = 0; i < s.a; ++i)
    for (int j = 0; j < s.a; ++j) {
      bool in = true;
      for (int lambda = 0; lambda < s.b && in; ++lambda)
        in = rel.contains(s.index(i, g.inv(s.p(lambda, i)), lambda),
                          s.index(j, g.inv(s.p(lambda, j)), lambda));
      if (in) t.S_rel.add(i, j);
    }
  for (int lambda = 0; lambda < s.b; ++lambda)
    for (int mu = 0; mu < s.b; ++mu) {
      bool in = true;
      for (int i = 0; i < s.a && in; ++i)
        in = rel.contains(s.index(i, g.inv(s.p(lambda, i)), lambda),
                          s.index(i, g.inv(s.p(mu, i)), mu));
      if (in) t.T_rel.add(lambda, mu);
    }

  if (!is_linked(s, t.N, t.S_rel, t.T_rel))
    throw InternalError("relation_to_triple: extracted triple is not linked");
  if (is_equivalence(t.S_rel) && is_equivalence(t.T_rel)) t.kind = TripleKind::equivalence;
  return t;
}

// The maximal linked relations for N: sigma = {(i,j) : all extracts in N},
// tau dually.  Both are equivalences; a violation is a bug.
inline std::pair<Partition, Partition> sigma_tau(ReesSpec const& s, NormalSubgroup const& N) {
  BinaryRelation sigma(s.a);
  for (int i = 0; i < s.a; ++i)
    for (int j = 0; j < s.a; ++j) {
      bool in = true;
      for (int lambda = 0; lambda < s.b && in; ++lambda)
        for (int mu = 0; mu < s.b && in; ++mu) in = N.contains(extract(s, lambda, mu, i, j));
      if (in) sigma.add(i, j);
    }
  BinaryRelation tau(s.b);
  for (int lambda = 0; lambda < s.b; ++lambda)
    for (int mu = 0; mu < s.b; ++mu) {
      bool in = true;
      for (int i = 0; i < s.a && in; ++i)
        for (int j = 0; j < s.a && in; ++j) in = N.contains(extract(s, lambda, mu, i, j));
      if (in) tau.add(lambda, mu);
    }
  if (!is_equivalence(sigma) || !is_equivalence(tau))
    throw InternalError("sigma_tau: maximal linked relation is not an equivalence");
  return {Partition::from_equivalence(sigma), Partition::from_equivalence(tau)};
}

// Per-subgroup census row.  The four counts come from the block sizes of
// sigma/tau: e = prod B(size), r = prod 2^(size^2 - size).  multiplicity is
// the number of chain members sharing the row (always 1 for concrete specs).
struct CensusRow {
  std::string label;
  Partition sigma;
  Partition tau;
  Integer e_I, e_Lambda, r_I, r_Lambda;
  Integer multiplicity = 1;
};

struct TripleCensus {
  std::vector<CensusRow> rows;
  Integer congruence_total = 0;
  Integer diagonal_total = 0;
};

namespace detail {

inline Integer equivalence_subcount(Partition const& p) {
  Integer e = 1;
  for (int sz : p.block_sizes()) e *= bell(sz);
  return e;
}

inline Integer reflexive_subcount(Partition const& p) {
  Integer r = 1;
  for (int sz : p.block_sizes()) r *= reflexive_count(sz);
  return r;
}

inline void fill_counts(CensusRow& row) {
  row.e_I = equivalence_subcount(row.sigma);
  row.e_Lambda = equivalence_subcount(row.tau);
  row.r_I = reflexive_subcount(row.sigma);
  row.r_Lambda = reflexive_subcount(row.tau);
  if (row.e_I > row.r_I || row.e_Lambda > row.r_Lambda)
    throw InternalError("census: equivalence count exceeds reflexive count");
}

}  // namespace detail

inline TripleCensus triple_census(ReesSpec const& s) {
  TripleCensus census;
  auto const subgroups = normal_subgroups(s.group);
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    CensusRow row;
    row.label = "N" + std::to_string(k + 1) + ":order=" + std::to_string(subgroups[k].order());
    auto [sigma, tau] = sigma_tau(s, subgroups[k]);
    row.sigma = std::move(sigma);
    row.tau = std::move(tau);
    detail::fill_counts(row);
    census.rows.push_back(std::move(row));
  }
  for (auto const& row : census.rows) {
    census.congruence_total += row.e_I * row.e_Lambda;
    census.diagonal_total += row.r_I * row.r_Lambda;
  }
  return census;
}

inline DscReport chi_rees(ReesSpec const& s) {
  auto const census = triple_census(s);
  return DscReport(census.congruence_total, census.diagonal_total);
}

// ---------------------------------------------------------------------------
// Symbolic Rees specs over Z_{p^k}.

// Entries are big-integer residues mod p^k.  p^k itself may be far too large
// to materialize; reduction checks degrade to bit-length bounds in that case.
struct SymbolicCyclicReesSpec {
  SymbolicCyclicGroup group;
  int a = 1;
  int b = 1;
  std::vector<std::vector<Integer>> P;

  SymbolicCyclicReesSpec(SymbolicCyclicGroup g, int i_count, int lambda_count,
                         std::vector<std::vector<Integer>> sandwich)
      : group(std::move(g)), a(i_count), b(lambda_count), P(std::move(sandwich)) {
    if (a < 1 || b < 1) throw ValidationError("rees: index sets must be nonempty");
    if (static_cast<int>(P.size()) != b) throw ValidationError("rees: P must have b rows");
    for (auto const& row : P) {
      if (static_cast<int>(row.size()) != a) throw ValidationError("rees: P rows must have a entries");
      for (auto const& e : row) check_entry_reduced(e);
    }
  }

  Integer const& p(int lambda, int i) const { return P[lambda][i]; }

  void check_indices(int lambda, int mu, int i, int j) const {
    if (lambda < 0 || lambda >= b || mu < 0 || mu >= b || i < 0 || i >= a || j < 0 || j >= a)
      throw DomainError("rees: index out of range");
  }

  // True when p^k is small enough to hold in memory (bit size bound).
  bool modulus_materializable() const {
    if (group.k == 0) return true;
    if (!group.k.fits_ulong_p()) return false;
    unsigned long const k = group.k.get_ui();
    unsigned long const pbits = mpz_sizeinbase(group.p.get_mpz_t(), 2);
    return k <= (std::uint64_t{1} << 26) / pbits;
  }

  Integer modulus() const {
    if (!modulus_materializable()) throw SizeError("rees: p^k too large to materialize");
    return ipow(group.p, group.k.get_ui());
  }

 private:
  void check_entry_reduced(Integer const& e) const {
    if (e < 0) throw ValidationError("rees: negative entry");
    if (e == 0) return;
    if (modulus_materializable()) {
      if (e >= modulus()) throw ValidationError("rees: entry not reduced mod p^k");
      return;
    }
    // p^k is astronomic; e < p^k certainly holds when bits(e) <= k, and more
    // sharply when bits(e) <= k (bits(p) - 1).
    Integer const bits = static_cast<unsigned long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    Integer const pbits = static_cast<unsigned long>(mpz_sizeinbase(group.p.get_mpz_t(), 2));
    if (bits <= group.k * (pbits - 1)) return;
    throw SizeError("rees: cannot decide entry < p^k without materializing p^k");
  }
};

// Integer representative of the extract: p_{li} - p_{mi} + p_{mj} - p_{lj}.
// The additive group makes the four-factor extract a signed sum; the value
// lies strictly between -2 p^k and 2 p^k.
inline Integer extract_representative(SymbolicCyclicReesSpec const& s, int lambda, int mu, int i,
                                      int j) {
  s.check_indices(lambda, mu, i, j);
  return s.p(lambda, i) - s.p(mu, i) + s.p(mu, j) - s.p(lambda, j);
}

// Canonical residue of the extract; requires a materializable modulus.
inline Integer extract(SymbolicCyclicReesSpec const& s, int lambda, int mu, int i, int j) {
  Integer rep = extract_representative(s, lambda, mu, i, j) % s.modulus();
  if (rep < 0) rep += s.modulus();
  return rep;
}

// min(v_p(q), k) with v_p(0) treated as k: the exponent m such that the
// residue of q generates p^m Z_{p^k}.
inline Integer capped_valuation(SymbolicCyclicReesSpec const& s, Integer const& q) {
  if (q == 0) return s.group.k;
  Integer const v = static_cast<unsigned long>(p_valuation(abs(q), s.group.p));
  return std::min(v, s.group.k);
}

namespace detail {

// Pairwise linkage thresholds: w(i,j) = min over lambda != mu of the capped
// valuation of the extract, so (i,j) is linked for N_m = p^m Z_{p^k} exactly
// when m <= w(i,j).  Dually for Lambda.
inline std::vector<std::vector<Integer>> linkage_thresholds_I(SymbolicCyclicReesSpec const& s) {
  std::vector<std::vector<Integer>> w(s.a, std::vector<Integer>(s.a, s.group.k));
  for (int i = 0; i < s.a; ++i)
    for (int j = 0; j < s.a; ++j)
      if (i != j)
        for (int lambda = 0; lambda < s.b; ++lambda)
          for (int mu = lambda + 1; mu < s.b; ++mu)
            w[i][j] = std::min(w[i][j],
                               capped_valuation(s, extract_representative(s, lambda, mu, i, j)));
  return w;
}

inline std::vector<std::vector<Integer>> linkage_thresholds_Lambda(SymbolicCyclicReesSpec const& s) {
  std::vector<std::vector<Integer>> w(s.b, std::vector<Integer>(s.b, s.group.k));
  for (int lambda = 0; lambda < s.b; ++lambda)
    for (int mu = 0; mu < s.b; ++mu)
      if (lambda != mu)
        for (int i = 0; i < s.a; ++i)
          for (int j = i + 1; j < s.a; ++j)
            w[lambda][mu] = std::min(
                w[lambda][mu], capped_valuation(s, extract_representative(s, lambda, mu, i, j)));
  return w;
}

inline Partition threshold_partition(std::vector<std::vector<Integer>> const& w, Integer const& m) {
  int const n = static_cast<int>(w.size());
  BinaryRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || w[i][j] >= m) rel.add(i, j);
  if (!is_equivalence(rel))
    throw InternalError("symbolic census: threshold relation is not an equivalence");
  return Partition::from_equivalence(rel);
}

}  // namespace detail

// Maximal linked relations for the chain member N = p^m Z_{p^k}.
inline std::pair<Partition, Partition> sigma_tau(SymbolicCyclicReesSpec const& s, Integer const& m) {
  if (m < 0 || m > s.group.k) throw DomainError("sigma_tau: chain exponent out of range");
  return {detail::threshold_partition(detail::linkage_thresholds_I(s), m),
          detail::threshold_partition(detail::linkage_thresholds_Lambda(s), m)};
}

inline bool is_linked(SymbolicCyclicReesSpec const& s, Integer const& m,
                      BinaryRelation const& S_rel, BinaryRelation const& T_rel) {
  if (S_rel.size() != s.a || T_rel.size() != s.b)
    throw DomainError("is_linked: relation shapes do not match the Rees spec");
  if (m < 0 || m > s.group.k) throw DomainError("is_linked: chain exponent out of range");
  auto [sigma, tau] = sigma_tau(s, m);
  return S_rel.is_subset_of(sigma.to_equivalence()) && T_rel.is_subset_of(tau.to_equivalence());
}

// Census over the chain N_m = p^m Z_{p^k}, m = 0..k, grouping consecutive m
// with identical sigma/tau into one row with a multiplicity.  The number of
// rows is bounded by the number of distinct extract valuations, so the census
// cost is independent of k.
inline TripleCensus triple_census(SymbolicCyclicReesSpec const& s) {
  auto const w_I = detail::linkage_thresholds_I(s);
  auto const w_Lambda = detail::linkage_thresholds_Lambda(s);

  std::vector<Integer> cuts;  // regime starts above 0: each w + 1 with w < k
  auto collect = [&](std::vector<std::vector<Integer>> const& w) {
    for (auto const& row : w)
      for (auto const& v : row)
        if (v < s.group.k) cuts.push_back(v + 1);
  };
  collect(w_I);
  collect(w_Lambda);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  TripleCensus census;
  Integer lo = 0;
  Integer members_seen = 0;
  auto emit = [&](Integer const& hi) {
    CensusRow row;
    row.sigma = detail::threshold_partition(w_I, lo);
    row.tau = detail::threshold_partition(w_Lambda, lo);
    row.multiplicity = hi - lo + 1;
    row.label = "p^m:m=" + lo.get_str() + ".." + hi.get_str();
    detail::fill_counts(row);
    members_seen += row.multiplicity;
    census.rows.push_back(std::move(row));
    lo = hi + 1;
  };
  for (auto const& cut : cuts)
    if (cut > lo && cut <= s.group.k) emit(cut - 1);
  emit(s.group.k);
  if (members_seen != s.group.k + 1)
    throw InternalError("symbolic census: chain members do not sum to k+1");

  for (auto const& row : census.rows) {
    census.congruence_total += row.multiplicity * row.e_I * row.e_Lambda;
    census.diagonal_total += row.multiplicity * row.r_I * row.r_Lambda;
  }
  return census;
}

inline DscReport chi_rees(SymbolicCyclicReesSpec const& s) {
  auto const census = triple_census(s);
  return DscReport(census.congruence_total, census.diagonal_total);
}

// Concrete view of a symbolic spec, for cross-checks on tiny moduli.
inline ReesSpec concretize(SymbolicCyclicReesSpec const& s) {
  Integer const m = s.modulus();
  if (m > kGroupCap) throw SizeError("concretize: p^k exceeds the group cap");
  int const order = static_cast<int>(m.get_ui());
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) table[x][y] = (x + y) % order;
  std::vector<std::vector<int>> P(s.b, std::vector<int>(s.a));
  for (int lambda = 0; lambda < s.b; ++lambda)
    for (int i = 0; i < s.a; ++i) P[lambda][i] = static_cast<int>(mpz_class(s.p(lambda, i) % m).get_ui());
  return ReesSpec(group_from_table(table), s.a, s.b, std::move(P));
}

}  // namespace dsc
