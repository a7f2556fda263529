#include <set>

#include <catch2/catch.hpp>

#include "corpus.hpp"
#include "dsc/clifford.hpp"

using namespace dsc;

namespace {

KernelFamily trivial_kernel(CliffordSystem const& sys) {
  KernelFamily k;
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    k.per_node.push_back(
        NormalSubgroup::from_mask(std::uint64_t{1} << sys.group(alpha).identity()));
  return k;
}

KernelFamily full_kernel(CliffordSystem const& sys) {
  KernelFamily k;
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    k.per_node.push_back(
        NormalSubgroup::from_mask((std::uint64_t{1} << sys.group(alpha).order()) - 1));
  return k;
}

CliffordSystem find(std::string const& name) {
  for (auto& named : corpus::clifford_corpus())
    if (named.name == name) return named.system;
  throw std::runtime_error("unknown clifford system: " + name);
}

}  // namespace

TEST_CASE("validate_system", "[clifford]") {
  CHECK(find("one-node-z2").order() == 2);
  CHECK(find("2chain-trivial").order() == 2);

  // phi sending the identity to the nonidentity element is not a homomorphism.
  CHECK_THROWS_WITH(validate_system(corpus::chain_semilattice(2), {corpus::zn(2), corpus::zn(2)},
                                    {{{1, 0}, {1, 0}}}),
                    Catch::Contains("homomorphism"));
  CHECK_THROWS_WITH(validate_system(corpus::chain_semilattice(2), {corpus::zn(2), corpus::zn(2)},
                                    {{{1, 0}, {1, 1}}}),
                    Catch::Contains("homomorphism"));
  CHECK_THROWS_WITH(
      validate_system(corpus::chain_semilattice(2), {corpus::zn(1), corpus::zn(1)}, {}),
      Catch::Contains("missing hom"));
  CHECK_THROWS_WITH(validate_system({{0, 0}, {0, 0}}, {corpus::zn(1), corpus::zn(1)},
                                    {{{1, 0}, {0}}}),
                    Catch::Contains("idempotent"));
  CHECK_THROWS_WITH(validate_system({{0, 0}, {1, 1}}, {corpus::zn(1), corpus::zn(1)},
                                    {{{1, 0}, {0}}}),
                    Catch::Contains("commutative"));
  // A hom between incomparable nodes of the diamond.
  CHECK_THROWS_WITH(validate_system(corpus::diamond_semilattice(),
                                    {corpus::zn(1), corpus::zn(1), corpus::zn(1), corpus::zn(1)},
                                    {{{1, 2}, {0}}}),
                    Catch::Contains("incomparable"));
  // Functor law: phi_{2,0} must equal the composite through node 1.
  CHECK_THROWS_WITH(validate_system(corpus::chain_semilattice(3),
                                    {corpus::zn(2), corpus::zn(2), corpus::zn(2)},
                                    {{{1, 0}, {0, 1}}, {{2, 1}, {0, 1}}, {{2, 0}, {0, 0}}}),
                    Catch::Contains("functor"));
}

TEST_CASE("materialize_clifford", "[clifford]") {
  CHECK(materialize_clifford(find("2chain-trivial")).rows() == corpus::chain_semilattice(2));
  CHECK(materialize_clifford(find("one-node-z2")).rows() == corpus::zn(2));

  // Z2 collapsing onto a trivial bottom: Z2 with a zero adjoined, order 3.
  auto s = materialize_clifford(find("2chain-z2-collapse"));
  REQUIRE(s.order() == 3);
  CHECK(s.mul(1, 2) == s.mul(2, 1));
  auto report = dsc_coefficient(s);
  CHECK(report.chi.num() > 0);
}

TEST_CASE("idempotents form a copy of Y", "[clifford][property]") {
  for (auto const& named : corpus::clifford_corpus()) {
    INFO(named.name);
    auto const& sys = named.system;
    auto s = materialize_clifford(sys);
    for (int alpha = 0; alpha < sys.node_count(); ++alpha)
      for (int beta = 0; beta < sys.node_count(); ++beta) {
        int const ea = sys.element(alpha, sys.group(alpha).identity());
        int const eb = sys.element(beta, sys.group(beta).identity());
        int const down = sys.meet(alpha, beta);
        REQUIRE(s.mul(ea, eb) == sys.element(down, sys.group(down).identity()));
      }
  }
}

TEST_CASE("enumerate_kernels", "[clifford]") {
  CHECK(enumerate_kernels(find("one-node-z2")).size() == 2);
  CHECK(enumerate_kernels(find("2chain-trivial")).size() == 1);
  // (N_bottom, N_top): ({1},{1}), (Z2,{1}), (Z2,Z2); ({1},Z2) fails the
  // image condition.
  auto kernels = enumerate_kernels(find("2chain-z2-z2-id"));
  CHECK(kernels.size() == 3);
  for (auto const& k : kernels) CHECK(kernel_image_condition(find("2chain-z2-z2-id"), k));
  CHECK(enumerate_kernels(find("g1-z4")).size() == 3);
  CHECK(enumerate_kernels(find("2chain-z4-mod2")).size() == 5);
}

TEST_CASE("is_congruence_pair", "[clifford]") {
  auto sys = find("2chain-z2-collapse");
  auto full_trace = BinaryRelation::full(2);
  CHECK(is_congruence_pair(sys, CliffordPair{full_kernel(sys), full_trace, PairKind::congruence}));
  CHECK(is_congruence_pair(
      sys, CliffordPair{trivial_kernel(sys), BinaryRelation::diagonal(2), PairKind::congruence}));
  // Condition (5) fails: the nonidentity top element maps into N_bottom but
  // is not in N_top.
  CHECK_FALSE(
      is_congruence_pair(sys, CliffordPair{trivial_kernel(sys), full_trace, PairKind::congruence}));
}

TEST_CASE("rho_from_pair examples", "[clifford]") {
  auto sys = find("2chain-z2-collapse");
  auto s = materialize_clifford(sys);
  int const n = s.order();

  CHECK(rho_from_pair(sys, CliffordPair{trivial_kernel(sys), BinaryRelation::diagonal(2)}) ==
        BinaryRelation::diagonal(n));
  CHECK(rho_from_pair(sys, CliffordPair{full_kernel(sys), BinaryRelation::full(2)}) ==
        BinaryRelation::full(n));

  // Trivial kernel, trace = diagonal plus top >= bottom: every top element
  // collapses onto the bottom identity, so both top elements relate to it.
  auto trace = BinaryRelation::diagonal(2);
  trace.add(1, 0);
  auto rho = rho_from_pair(sys, CliffordPair{trivial_kernel(sys), trace});
  auto expected = BinaryRelation::diagonal(3);
  expected.add(1, 0);  // (1_top, 1_bottom)
  expected.add(2, 0);  // (g, 1_bottom)
  CHECK(rho == expected);
  CHECK(is_diagonal_subsemigroup(s, rho));
  CHECK_FALSE(is_congruence(s, rho));

  auto bad_trace = BinaryRelation(2);  // not reflexive
  CHECK_THROWS_AS(rho_from_pair(sys, CliffordPair{trivial_kernel(sys), bad_trace}), DomainError);
}

TEST_CASE("pairs map to diagonal subsemigroups, injectively", "[clifford][property]") {
  for (auto const& named : corpus::clifford_corpus()) {
    INFO(named.name);
    auto const& sys = named.system;
    auto s = materialize_clifford(sys);
    auto pairs = all_diagonal_pairs(sys);
    std::set<std::vector<std::pair<int, int>>> images;
    for (auto const& pair : pairs) {
      auto rho = rho_from_pair(sys, pair);
      REQUIRE(is_diagonal_subsemigroup(s, rho));
      REQUIRE(images.insert(rho.pairs()).second);  // pair map is injective
    }
    // K |Diag(Y)| pairs in total.
    auto diag_y = enumerate_diagonal_subsemigroups(sys.semilattice()).size();
    REQUIRE(pairs.size() == enumerate_kernels(sys).size() * diag_y);
  }
}

TEST_CASE("congruence pairs give exactly the congruences", "[clifford][property]") {
  for (auto const& named : corpus::clifford_corpus()) {
    INFO(named.name);
    auto const& sys = named.system;
    auto s = materialize_clifford(sys);
    auto pairs = all_congruence_pairs(sys);
    std::set<std::vector<std::pair<int, int>>> images;
    for (auto const& pair : pairs) {
      auto rho = rho_from_pair(sys, pair);
      REQUIRE(is_congruence(s, rho));
      REQUIRE(images.insert(rho.pairs()).second);
    }
    // The kernel-trace description is a bijection onto Cong(S).
    auto congruences = enumerate_congruences(s);
    REQUIRE(pairs.size() == congruences.size());
    Integer const k = static_cast<long>(enumerate_kernels(sys).size());
    Integer const cong_y = static_cast<long>(enumerate_congruences(sys.semilattice()).size());
    REQUIRE(Integer(static_cast<long>(pairs.size())) <= k * cong_y);
  }
}

TEST_CASE("chi_bound_report", "[clifford]") {
  auto one = chi_bound_report(find("one-node-z2"));
  CHECK(one.chi_s.chi == Rational(1, 1));
  CHECK(one.chi_y.chi == Rational(1, 1));
  CHECK(one.bound_holds);
  CHECK_FALSE(one.strict);

  auto chain = chi_bound_report(find("2chain-trivial"));
  CHECK(chain.chi_s.chi == Rational(1, 2));
  CHECK(chain.chi_y.chi == Rational(1, 2));
  CHECK(chain.kernel_count == 1);
  CHECK(chain.bound_holds);

  auto g1 = chi_bound_report(find("g1-z2"));
  CHECK(g1.chi_s.chi == Rational(4, 13));
  CHECK(g1.chi_y.chi == Rational(1, 2));
  CHECK(g1.strict);
  CHECK(g1.pair_lower_bound_holds);
}

TEST_CASE("semilattice upper bound across the corpus", "[clifford][property]") {
  for (auto const& named : corpus::clifford_corpus()) {
    INFO(named.name);
    auto report = chi_bound_report(named.system);
    REQUIRE(report.chi_s.chi.num() > 0);
    REQUIRE(report.bound_holds);
    REQUIRE(report.pair_lower_bound_holds);
  }
}

TEST_CASE("adjoined_identity_counterexample", "[clifford]") {
  auto z2 = corpus::group("Z2");
  auto report = adjoined_identity_counterexample(z2, {0});
  CHECK(report.relation.pair_count() == 6);
  CHECK(report.is_diagonal);
  CHECK_FALSE(report.realized_by_pair);

  auto z4 = corpus::group("Z4");
  auto r4 = adjoined_identity_counterexample(z4, {0, 2});
  CHECK(r4.relation.pair_count() == 1 + 16 + 2);
  CHECK(r4.is_diagonal);
  CHECK_FALSE(r4.realized_by_pair);

  CHECK_THROWS_AS(adjoined_identity_counterexample(z2, {0, 1}), DomainError);  // not proper
  CHECK_THROWS_AS(adjoined_identity_counterexample(z4, {0, 1}), DomainError);  // not a subgroup
}
