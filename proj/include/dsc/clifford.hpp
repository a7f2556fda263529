#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsc/error.hpp"
#include "dsc/group.hpp"
#include "dsc/numbers.hpp"
#include "dsc/relation.hpp"
#include "dsc/semigroup.hpp"

namespace dsc {

// A strong semilattice of groups S[Y; G_alpha; phi_{alpha,beta}].  Y is given
// by its meet table; alpha >= beta iff alpha beta = beta.  Structure maps are
// stored for every comparable ordered pair, with phi_{alpha,alpha} the
// identity.
class CliffordSystem {
 public:
  int node_count() const { return nodes_; }
  int meet(int x, int y) const { return meet_[static_cast<std::size_t>(x) * nodes_ + y]; }
  bool geq(int alpha, int beta) const { return meet(alpha, beta) == beta; }

  FiniteGroup const& group(int alpha) const { return groups_[alpha]; }

  // x phi_{alpha,beta}; requires alpha >= beta.
  int apply_hom(int alpha, int beta, int x) const {
    if (!geq(alpha, beta)) throw DomainError("clifford: phi requested for incomparable pair");
    if (alpha == beta) return x;
    return homs_[static_cast<std::size_t>(alpha) * nodes_ + beta][x];
  }

  int order() const { return offsets_.back(); }
  int element_offset(int alpha) const { return offsets_[alpha]; }
  int element(int alpha, int g) const { return offsets_[alpha] + g; }
  int node_of(int element) const {
    int alpha = 0;
    while (offsets_[alpha + 1] <= element) ++alpha;
    return alpha;
  }
  int group_index_of(int element) const { return element - offsets_[node_of(element)]; }

  // The meet table read as the semilattice semigroup Y (equivalently the
  // idempotent subsemigroup E).
  FiniteSemigroup semilattice() const {
    std::vector<std::vector<int>> table(nodes_, std::vector<int>(nodes_));
    for (int x = 0; x < nodes_; ++x)
      for (int y = 0; y < nodes_; ++y) table[x][y] = meet(x, y);
    return semigroup_from_table(table);
  }

  friend CliffordSystem validate_system(
      std::vector<std::vector<int>> const& meet_table,
      std::vector<std::vector<std::vector<int>>> const& group_tables,
      std::vector<std::pair<std::pair<int, int>, std::vector<int>>> const& homs);

 private:
  CliffordSystem() = default;

  int nodes_ = 0;
  std::vector<int> meet_;
  std::vector<FiniteGroup> groups_;
  std::vector<std::vector<int>> homs_;  // indexed alpha*nodes+beta; empty unless alpha > beta
  std::vector<int> offsets_;
};

// Validates the semilattice laws, the homomorphism property of every phi and
// the functor law phi_{alpha,beta} phi_{beta,gamma} = phi_{alpha,gamma}.
inline CliffordSystem validate_system(
    std::vector<std::vector<int>> const& meet_table,
    std::vector<std::vector<std::vector<int>>> const& group_tables,
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> const& homs) {
  int const m = static_cast<int>(meet_table.size());
  if (m == 0) throw ValidationError("clifford: empty semilattice");
  if (static_cast<int>(group_tables.size()) != m)
    throw ValidationError("clifford: need one group per semilattice node");

  FiniteSemigroup const y = semigroup_from_table(meet_table);  // associativity
  for (int x = 0; x < m; ++x) {
    if (y.mul(x, x) != x)
      throw ValidationError("clifford: meet table not idempotent at " + std::to_string(x));
    for (int z = 0; z < m; ++z)
      if (y.mul(x, z) != y.mul(z, x))
        throw ValidationError("clifford: meet table not commutative at (" + std::to_string(x) +
                              "," + std::to_string(z) + ")");
  }

  CliffordSystem sys;
  sys.nodes_ = m;
  sys.meet_.resize(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < m; ++z) sys.meet_[static_cast<std::size_t>(x) * m + z] = y.mul(x, z);
  for (auto const& table : group_tables) sys.groups_.push_back(group_from_table(table));

  sys.homs_.assign(static_cast<std::size_t>(m) * m, {});
  for (auto const& [pair, map] : homs) {
    auto const [alpha, beta] = pair;
    if (alpha < 0 || alpha >= m || beta < 0 || beta >= m)
      throw ValidationError("clifford: hom node out of range");
    if (alpha == beta)
      throw ValidationError("clifford: phi for alpha = beta is implicit and must be omitted");
    if (!sys.geq(alpha, beta))
      throw ValidationError("clifford: hom " + std::to_string(alpha) + "->" +
                            std::to_string(beta) + " joins an incomparable pair");
    if (static_cast<int>(map.size()) != sys.groups_[alpha].order())
      throw ValidationError("clifford: hom map size mismatch");
    for (int v : map)
      if (v < 0 || v >= sys.groups_[beta].order())
        throw ValidationError("clifford: hom image out of range");
    auto& slot = sys.homs_[static_cast<std::size_t>(alpha) * m + beta];
    if (!slot.empty()) throw ValidationError("clifford: duplicate hom");
    slot = map;
  }

  for (int alpha = 0; alpha < m; ++alpha)
    for (int beta = 0; beta < m; ++beta) {
      if (alpha == beta || !sys.geq(alpha, beta)) continue;
      auto const& map = sys.homs_[static_cast<std::size_t>(alpha) * m + beta];
      if (map.empty())
        throw ValidationError("clifford: missing hom " + std::to_string(alpha) + "->" +
                              std::to_string(beta));
      auto const& ga = sys.groups_[alpha];
      auto const& gb = sys.groups_[beta];
      for (int x = 0; x < ga.order(); ++x)
        for (int z = 0; z < ga.order(); ++z)
          if (map[ga.mul(x, z)] != gb.mul(map[x], map[z]))
            throw ValidationError("clifford: phi_" + std::to_string(alpha) + "," +
                                  std::to_string(beta) + " is not a homomorphism at (" +
                                  std::to_string(x) + "," + std::to_string(z) + ")");
    }

  for (int alpha = 0; alpha < m; ++alpha)
    for (int beta = 0; beta < m; ++beta)
      for (int gamma = 0; gamma < m; ++gamma) {
        if (!sys.geq(alpha, beta) || !sys.geq(beta, gamma)) continue;
        for (int x = 0; x < sys.groups_[alpha].order(); ++x)
          if (sys.apply_hom(beta, gamma, sys.apply_hom(alpha, beta, x)) !=
              sys.apply_hom(alpha, gamma, x))
            throw ValidationError("clifford: functor law fails along " + std::to_string(alpha) +
                                  ">=" + std::to_string(beta) + ">=" + std::to_string(gamma));
      }

  sys.offsets_.assign(1, 0);
  for (auto const& g : sys.groups_) sys.offsets_.push_back(sys.offsets_.back() + g.order());
  return sys;
}

// x . y = (x phi_{alpha, alpha beta}) (y phi_{beta, alpha beta}), elements
// ordered by node then group index.
inline FiniteSemigroup materialize_clifford(CliffordSystem const& sys) {
  if (sys.order() > kMaterializeCap)
    throw SizeError("clifford: materialized order exceeds cap " + std::to_string(kMaterializeCap));
  int const n = sys.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    int const alpha = sys.node_of(x), gx = sys.group_index_of(x);
    for (int y = 0; y < n; ++y) {
      int const beta = sys.node_of(y), gy = sys.group_index_of(y);
      int const down = sys.meet(alpha, beta);
      table[x][y] = sys.element(
          down, sys.group(down).mul(sys.apply_hom(alpha, down, gx), sys.apply_hom(beta, down, gy)));
    }
  }
  return semigroup_from_table(table);
}

// One normal subgroup per node with N_alpha phi_{alpha,beta} <= N_beta.
struct KernelFamily {
  std::vector<NormalSubgroup> per_node;

  bool operator==(KernelFamily const& o) const {
    if (per_node.size() != o.per_node.size()) return false;
    for (std::size_t i = 0; i < per_node.size(); ++i)
      if (!(per_node[i] == o.per_node[i])) return false;
    return true;
  }
};

inline bool kernel_image_condition(CliffordSystem const& sys, KernelFamily const& kernel) {
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    for (int beta = 0; beta < sys.node_count(); ++beta) {
      if (alpha == beta || !sys.geq(alpha, beta)) continue;
      for (int x : kernel.per_node[alpha].elements)
        if (!kernel.per_node[beta].contains(sys.apply_hom(alpha, beta, x))) return false;
    }
  return true;
}

// All kernel families, by odometer over per-node normal subgroup choices.
inline std::vector<KernelFamily> enumerate_kernels(CliffordSystem const& sys) {
  std::vector<std::vector<NormalSubgroup>> choices;
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    choices.push_back(normal_subgroups(sys.group(alpha)));

  std::vector<KernelFamily> out;
  std::vector<std::size_t> pick(sys.node_count(), 0);
  while (true) {
    KernelFamily kernel;
    for (int alpha = 0; alpha < sys.node_count(); ++alpha)
      kernel.per_node.push_back(choices[alpha][pick[alpha]]);
    if (kernel_image_condition(sys, kernel)) out.push_back(std::move(kernel));
    int pos = sys.node_count() - 1;
    while (pos >= 0 && ++pick[pos] == choices[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

enum class PairKind { congruence, diagonal };

// (N, tau): a kernel with a trace relation on E (identified with Y).
struct CliffordPair {
  KernelFamily kernel;
  BinaryRelation trace;
  PairKind kind = PairKind::diagonal;
};

// Congruence pair: the trace is a congruence on E and condition
// x phi_{alpha,beta} in N, (1_alpha,1_beta) in tau  =>  x in N holds.
inline bool is_congruence_pair(CliffordSystem const& sys, CliffordPair const& pair) {
  if (pair.trace.size() != sys.node_count())
    throw DomainError("clifford: trace size does not match the semilattice");
  if (static_cast<int>(pair.kernel.per_node.size()) != sys.node_count())
    throw DomainError("clifford: kernel size does not match the semilattice");
  if (!is_congruence(sys.semilattice(), pair.trace)) return false;
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    for (int beta = 0; beta < sys.node_count(); ++beta) {
      if (alpha == beta || !sys.geq(alpha, beta) || !pair.trace.contains(alpha, beta)) continue;
      for (int x = 0; x < sys.group(alpha).order(); ++x)
        if (pair.kernel.per_node[beta].contains(sys.apply_hom(alpha, beta, x)) &&
            !pair.kernel.per_node[alpha].contains(x))
          return false;
    }
  return true;
}

// rho_{N,tau} = {(x,y) : (x x^-1, y y^-1) in tau, x y^-1 in N} on the
// materialized semigroup.
inline BinaryRelation rho_from_pair(CliffordSystem const& sys, CliffordPair const& pair) {
  if (pair.trace.size() != sys.node_count())
    throw DomainError("clifford: trace size does not match the semilattice");
  if (static_cast<int>(pair.kernel.per_node.size()) != sys.node_count())
    throw DomainError("clifford: kernel size does not match the semilattice");
  if (!kernel_image_condition(sys, pair.kernel))
    throw DomainError("clifford: kernel violates the image condition");
  if (!is_diagonal_subsemigroup(sys.semilattice(), pair.trace))
    throw DomainError("clifford: trace is not a diagonal subsemigroup of E");

  int const n = sys.order();
  BinaryRelation rel(n);
  for (int x = 0; x < n; ++x) {
    int const alpha = sys.node_of(x), gx = sys.group_index_of(x);
    for (int y = 0; y < n; ++y) {
      int const beta = sys.node_of(y), gy = sys.group_index_of(y);
      if (!pair.trace.contains(alpha, beta)) continue;
      int const down = sys.meet(alpha, beta);
      auto const& gd = sys.group(down);
      int const prod =
          gd.mul(sys.apply_hom(alpha, down, gx), gd.inv(sys.apply_hom(beta, down, gy)));
      if (pair.kernel.per_node[down].contains(prod)) rel.add(x, y);
    }
  }
  return rel;
}

inline std::vector<CliffordPair> all_diagonal_pairs(CliffordSystem const& sys, int cap = kBruteForceCap) {
  auto kernels = enumerate_kernels(sys);
  std::vector<CliffordPair> out;
  enumerate_diagonal_subsemigroups(sys.semilattice(), cap, [&](BinaryRelation const& trace) {
    for (auto const& kernel : kernels) out.push_back(CliffordPair{kernel, trace, PairKind::diagonal});
  });
  return out;
}

inline std::vector<CliffordPair> all_congruence_pairs(CliffordSystem const& sys,
                                                      int cap = kBruteForceCap) {
  std::vector<CliffordPair> out;
  for (auto& pair : all_diagonal_pairs(sys, cap)) {
    pair.kind = PairKind::congruence;
    if (is_congruence_pair(sys, pair)) out.push_back(std::move(pair));
  }
  return out;
}

struct CliffordBoundReport {
  DscReport chi_s;
  DscReport chi_y;
  Integer kernel_count;
  bool bound_holds = false;             // chi(S) <= chi(Y)
  bool strict = false;                  // chi(S) < chi(Y)
  bool pair_lower_bound_holds = false;  // K |Diag(Y)| <= |Diag(S)|
};

inline CliffordBoundReport chi_bound_report(CliffordSystem const& sys, int cap = kBruteForceCap) {
  auto const s = materialize_clifford(sys);
  DscReport chi_s = dsc_coefficient(s, cap);
  DscReport chi_y = dsc_coefficient(sys.semilattice(), cap);
  Integer kernels = static_cast<long>(enumerate_kernels(sys).size());
  CliffordBoundReport report{std::move(chi_s), std::move(chi_y), std::move(kernels)};
  report.bound_holds = report.chi_s.chi <= report.chi_y.chi;
  report.strict = report.chi_s.chi < report.chi_y.chi;
  report.pair_lower_bound_holds =
      report.kernel_count * report.chi_y.diagonal_count <= report.chi_s.diagonal_count;
  return report;
}

struct CounterexampleReport {
  CliffordSystem system;        // 2-chain: node 0 carries G, node 1 the new identity
  FiniteSemigroup semigroup;    // G with an identity adjoined; index |G| is the identity
  BinaryRelation relation;      // {(1,1)} u G x G u {1} x H
  bool is_diagonal = false;
  bool realized_by_pair = true;
};

// The diagonal subsemigroup {(1,1)} u G x G u {1} x H of G^1, which no
// (kernel, trace) pair produces when H is a proper subgroup.
inline CounterexampleReport adjoined_identity_counterexample(FiniteGroup const& g,
                                                             std::vector<int> const& h_elements) {
  std::uint64_t h_mask = 0;
  for (int x : h_elements) {
    if (x < 0 || x >= g.order()) throw DomainError("counterexample: H element out of range");
    h_mask |= std::uint64_t{1} << x;
  }
  if (!is_subgroup(g, h_mask)) throw DomainError("counterexample: H is not a subgroup");
  if (h_mask == (std::uint64_t{1} << g.order()) - 1)
    throw DomainError("counterexample: H must be a proper subgroup");

  // G^1 as a strong semilattice over the 2-chain: bottom node 0 carries G,
  // top node 1 the trivial group, phi_{1,0} sends the new identity to 1_G.
  std::vector<std::vector<int>> meet{{0, 0}, {0, 1}};
  std::vector<std::vector<std::vector<int>>> groups{g.rows(), {{0}}};
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> homs{
      {{1, 0}, std::vector<int>{g.identity()}}};
  CliffordSystem sys = validate_system(meet, groups, homs);
  FiniteSemigroup s = materialize_clifford(sys);

  int const n = g.order();
  BinaryRelation rel(n + 1);
  rel.add(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rel.add(x, y);
  for (int x : h_elements) rel.add(n, x);

  CounterexampleReport report{sys, s, rel};
  report.is_diagonal = is_diagonal_subsemigroup(s, rel);
  report.realized_by_pair = false;
  for (auto const& pair : all_diagonal_pairs(sys))
    if (rho_from_pair(sys, pair) == rel) {
      report.realized_by_pair = true;
      break;
    }
  return report;
}

}  // namespace dsc
