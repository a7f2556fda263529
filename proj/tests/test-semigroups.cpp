#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch.hpp>

#include "corpus.hpp"
#include "dsc/semigroup.hpp"

using namespace dsc;

namespace {

// Independent congruence counter: filter all set partitions for
// compatibility.  Never touches the closed-set engine.
long congruences_by_partition_filter(FiniteSemigroup const& s) {
  long count = 0;
  enumerate_partitions(s.order(), [&](Partition const& p) {
    if (is_compatible(s, p.to_equivalence())) ++count;
  });
  return count;
}

// Independent diagonal-subsemigroup counter for tiny orders: filter every
// reflexive relation.
long diagonals_by_subset_filter(FiniteSemigroup const& s) {
  int const n = s.order();
  int const universe = off_diagonal_universe(n);
  REQUIRE(universe <= 20);
  long count = 0;
  for (unsigned mask = 0; mask < (1u << universe); ++mask) {
    IndexSet set(universe);
    for (int i = 0; i < universe; ++i)
      if (mask >> i & 1u) set.set(i);
    if (is_compatible(s, relation_with_diagonal(n, set))) ++count;
  }
  return count;
}

FiniteSemigroup two_chain() {
  return semigroup_from_table(corpus::chain_semilattice(2));
}

}  // namespace

TEST_CASE("semigroup_from_table", "[semigroups]") {
  CHECK(semigroup_from_table({{0}}).order() == 1);
  CHECK(semigroup_from_table({{0, 0}, {1, 1}}).order() == 2);
  // (x y) z = x (y z) fails for this table at some triple.
  CHECK_THROWS_WITH(semigroup_from_table({{0, 1}, {0, 0}}), Catch::Contains("witness"));
  for (auto const& t : corpus::nongroup_tables()) {
    INFO(t.name);
    CHECK_NOTHROW(semigroup_from_table(t.table));
  }
}

TEST_CASE("is_diagonal_subsemigroup basics", "[semigroups]") {
  auto s = two_chain();
  CHECK(is_diagonal_subsemigroup(s, BinaryRelation::diagonal(2)));
  CHECK(is_diagonal_subsemigroup(s, BinaryRelation::full(2)));
  auto rel = BinaryRelation::diagonal(2);
  rel.add(1, 0);
  CHECK(is_diagonal_subsemigroup(s, rel));
  CHECK_FALSE(is_congruence(s, rel));  // not symmetric
  CHECK(is_congruence(s, BinaryRelation::diagonal(2)));
  CHECK(is_congruence(s, BinaryRelation::full(2)));
  CHECK_THROWS_AS(is_diagonal_subsemigroup(s, BinaryRelation::diagonal(3)), DomainError);
}

TEST_CASE("diagonal_closure examples", "[semigroups]") {
  auto s = two_chain();
  CHECK(diagonal_closure(s, BinaryRelation(2)) == BinaryRelation::diagonal(2));
  CHECK(diagonal_closure(s, BinaryRelation::full(2)) == BinaryRelation::full(2));

  auto seed = BinaryRelation::from_pairs(2, {{1, 0}});
  auto expected = BinaryRelation::diagonal(2);
  expected.add(1, 0);
  auto closed = diagonal_closure(s, seed);
  CHECK(closed == expected);
  CHECK(is_diagonal_subsemigroup(s, closed));
}

TEST_CASE("congruence_closure examples", "[semigroups]") {
  auto s = two_chain();
  CHECK(congruence_closure(s, BinaryRelation(2)) == BinaryRelation::diagonal(2));
  CHECK(congruence_closure(s, BinaryRelation::diagonal(2)) == BinaryRelation::diagonal(2));
  auto closed = congruence_closure(s, BinaryRelation::from_pairs(2, {{1, 0}}));
  CHECK(closed == BinaryRelation::full(2));
  CHECK(is_congruence(s, closed));
}

TEST_CASE("closure operators satisfy closure laws", "[semigroups][property]") {
  std::vector<corpus::Table> tables = {corpus::chain_semilattice(2), corpus::left_zero(2),
                                       corpus::zn(3), corpus::rectangular_band(2, 2),
                                       corpus::null_semigroup(3)};
  for (auto const& table : tables) {
    auto s = semigroup_from_table(table);
    int const n = s.order();
    int const universe = off_diagonal_universe(n);
    REQUIRE(universe <= 12);
    for (unsigned mask = 0; mask < (1u << universe); ++mask) {
      IndexSet set(universe);
      for (int i = 0; i < universe; ++i)
        if (mask >> i & 1u) set.set(i);
      auto seed = relation_with_diagonal(n, set);

      auto diag = diagonal_closure(s, seed);
      REQUIRE(seed.is_subset_of(diag));
      REQUIRE(diagonal_closure(s, diag) == diag);
      REQUIRE(is_diagonal_subsemigroup(s, diag));

      auto cong = congruence_closure(s, seed);
      REQUIRE(seed.is_subset_of(cong));
      REQUIRE(congruence_closure(s, cong) == cong);
      REQUIRE(is_congruence(s, cong));
      REQUIRE(diag.is_subset_of(cong));
    }
  }
}

TEST_CASE("enumeration counts on tiny semigroups", "[semigroups]") {
  auto trivial = semigroup_from_table({{0}});
  CHECK(enumerate_diagonal_subsemigroups(trivial).size() == 1);
  CHECK(enumerate_congruences(trivial).size() == 1);

  auto lz2 = semigroup_from_table(corpus::left_zero(2));
  CHECK(enumerate_diagonal_subsemigroups(lz2).size() == 4);
  CHECK(enumerate_congruences(lz2).size() == 2);

  auto z2 = semigroup_from_group(corpus::group("Z2"));
  CHECK(enumerate_diagonal_subsemigroups(z2).size() == 2);
  CHECK(enumerate_congruences(z2).size() == 2);
}

TEST_CASE("enumerated relations pass their predicates and nest", "[semigroups][property]") {
  std::vector<corpus::Table> tables = {corpus::chain_semilattice(3), corpus::left_zero(2),
                                       corpus::rectangular_band(2, 2), corpus::s3(),
                                       corpus::adjoin_identity(corpus::zn(2))};
  for (auto const& table : tables) {
    auto s = semigroup_from_table(table);
    auto diagonals = enumerate_diagonal_subsemigroups(s);
    auto congruences = enumerate_congruences(s);

    std::set<std::vector<std::pair<int, int>>> diag_set;
    for (auto const& rel : diagonals) {
      REQUIRE(is_diagonal_subsemigroup(s, rel));
      REQUIRE(diag_set.insert(rel.pairs()).second);
    }
    for (auto const& rel : congruences) {
      REQUIRE(is_congruence(s, rel));
      REQUIRE(diag_set.count(rel.pairs()) == 1);  // congruences are diagonal subsemigroups
    }
    REQUIRE(congruences.size() <= diagonals.size());
  }
}

TEST_CASE("engine enumeration order matches the naive subset walk", "[semigroups][property]") {
  // Both semigroup closure operators, driven through the closed-set engine on
  // an order-4 universe (12 off-diagonal pairs), against filtering all 4096
  // subsets in characteristic-vector order.
  for (auto const& table : {corpus::rectangular_band(2, 2), corpus::monogenic_3_2()}) {
    auto s = semigroup_from_table(table);
    int const n = s.order();
    int const universe = off_diagonal_universe(n);
    REQUIRE(universe == 12);
    auto diag_close = [&](IndexSet x) {
      return off_diagonal_set(diagonal_closure(s, relation_with_diagonal(n, x)));
    };
    auto cong_close = [&](IndexSet x) {
      return off_diagonal_set(congruence_closure(s, relation_with_diagonal(n, x)));
    };
    auto naive = [&](auto&& close) {
      std::vector<std::vector<int>> out;
      for (unsigned long v = 0; v < (1ul << universe); ++v) {
        IndexSet set(universe);
        for (int i = 0; i < universe; ++i)
          if (v >> (universe - 1 - i) & 1ul) set.set(i);
        if (close(set) == set) out.push_back(set.elements());
      }
      return out;
    };
    std::vector<std::vector<int>> engine_diag, engine_cong;
    for_each_closed_set(universe, diag_close,
                        [&](IndexSet const& x) { engine_diag.push_back(x.elements()); });
    for_each_closed_set(universe, cong_close,
                        [&](IndexSet const& x) { engine_cong.push_back(x.elements()); });
    REQUIRE(engine_diag == naive(diag_close));
    REQUIRE(engine_cong == naive(cong_close));
  }
}

TEST_CASE("engine counts match naive filters", "[semigroups][property]") {
  std::vector<corpus::Table> tables = {corpus::chain_semilattice(2), corpus::chain_semilattice(3),
                                       corpus::left_zero(3), corpus::zn(3),
                                       corpus::null_semigroup(2), corpus::right_zero(2)};
  for (auto const& table : tables) {
    auto s = semigroup_from_table(table);
    REQUIRE(static_cast<long>(enumerate_diagonal_subsemigroups(s).size()) ==
            diagonals_by_subset_filter(s));
    REQUIRE(static_cast<long>(enumerate_congruences(s).size()) ==
            congruences_by_partition_filter(s));
  }
}

TEST_CASE("congruence count equals partition-filter oracle on the corpus",
          "[semigroups][property]") {
  for (auto const& t : corpus::nongroup_tables()) {
    INFO(t.name);
    auto s = semigroup_from_table(t.table);
    REQUIRE(static_cast<long>(enumerate_congruences(s).size()) ==
            congruences_by_partition_filter(s));
  }
}

TEST_CASE("dsc_coefficient on named examples", "[semigroups]") {
  auto band = semigroup_from_table(corpus::rectangular_band(2, 2));
  auto report = dsc_coefficient(band);
  CHECK(report.congruence_count == 4);
  CHECK(report.diagonal_count == 16);
  CHECK(report.chi == Rational(1, 4));

  auto lz2 = semigroup_from_table(corpus::left_zero(2));
  CHECK(dsc_coefficient(lz2).chi == Rational(1, 2));

  for (auto const& t : corpus::group_tables()) {
    if (t.table.size() > 6) continue;  // the order-7/8 groups run in the acceptance suite
    INFO(t.name);
    auto s = semigroup_from_table(t.table);
    CHECK(dsc_coefficient(s).chi == Rational(1, 1));
  }
}

TEST_CASE("group congruence count equals normal subgroup count", "[semigroups][property]") {
  for (auto const& t : corpus::group_tables()) {
    INFO(t.name);
    auto g = group_from_table(t.table);
    auto s = semigroup_from_table(t.table);
    REQUIRE(enumerate_congruences(s).size() == normal_subgroups(g).size());
    // Groups are DSC: the diagonal subsemigroups are exactly the congruences.
    REQUIRE(enumerate_diagonal_subsemigroups(s).size() == normal_subgroups(g).size());
  }
}

TEST_CASE("cap errors point at the structural paths", "[semigroups]") {
  auto big = semigroup_from_table(corpus::zn(11));
  CHECK_THROWS_AS(dsc_coefficient(big), SizeError);
  CHECK_THROWS_WITH(dsc_coefficient(big), Catch::Contains("Rees or Clifford"));
  CHECK(dsc_coefficient(big, 11).chi == Rational(1, 1));
}

TEST_CASE("chi = 1 exactly on the groups: order <= 3 exhaustive",
          "[semigroups][property]") {
  // All 113 labeled semigroups on 3 elements, plus the 9 on 2 and 1 on 1;
  // chi(S) = 1 exactly on the group tables.
  long total = 0, chi_one = 0, groups = 0;
  for (int n = 1; n <= 3; ++n) {
    long cells = 1;
    for (int i = 0; i < n * n; ++i) cells *= n;
    for (long code = 0; code < cells; ++code) {
      long c = code;
      corpus::Table table(n, std::vector<int>(n));
      for (int i = 0; i < n * n; ++i) {
        table[i / n][i % n] = static_cast<int>(c % n);
        c /= n;
      }
      FiniteSemigroup s(semigroup_from_table({{0}}));
      try {
        s = semigroup_from_table(table);
      } catch (ValidationError const&) {
        continue;
      }
      ++total;
      bool is_group = true;
      try {
        group_from_table(table);
      } catch (ValidationError const&) {
        is_group = false;
      }
      groups += is_group;
      bool one = dsc_coefficient(s).chi == Rational(1, 1);
      chi_one += one;
      REQUIRE(one == is_group);
    }
  }
  REQUIRE(total == 1 + 8 + 113);
  REQUIRE(chi_one == groups);
}
