#include <catch2/catch.hpp>

#include "dsc/construct.hpp"
#include "dsc/io.hpp"

using namespace dsc;

namespace {

std::string const kZ2Group = "group 2\n0 1\n1 0\n";

std::string const kReesInline =
    "rees 2 2\n"
    "group inline\n"
    "group 2\n0 1\n1 0\n"
    "0 0\n"
    "0 1\n";

std::string const kReesCyclic =
    "rees 2 2\n"
    "group cyclic 37 8\n"
    "1 2\n"
    "4 8\n";

std::string const kClifford =
    "clifford 2\n"
    "0 0\n0 1\n"
    "node 0\ngroup 1\n0\n"
    "node 1\ngroup 2\n0 1\n1 0\n"
    "hom 1 0\n0 0\n";

}  // namespace

TEST_CASE("parse_group", "[io]") {
  auto g = io::parse_group(kZ2Group);
  CHECK(g.order() == 2);
  CHECK(g.identity() == 0);

  CHECK_THROWS_AS(io::parse_group("group 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_group("group 2\n0 1 0\n1 0\n"), ParseError);
  CHECK_THROWS_WITH(io::parse_group("group 2\n0 0\n1 1\n"), Catch::Contains("no identity"));
  CHECK_THROWS_WITH(io::parse_group("group x\n"), Catch::Contains("line 1"));
  CHECK_THROWS_AS(io::parse_group(kZ2Group + "1 1\n"), ParseError);  // trailing content
}

TEST_CASE("parse_semigroup", "[io]") {
  auto s = io::parse_semigroup("semigroup 2\n0 0\n0 1\n");
  CHECK(s.order() == 2);
  CHECK_THROWS_AS(io::parse_semigroup(kZ2Group), ParseError);  // wrong header
  CHECK_THROWS_WITH(io::parse_semigroup("semigroup 2\n0 1\n0 0\n"),
                    Catch::Contains("associative"));
}

TEST_CASE("parse_rees", "[io]") {
  auto inline_spec = io::parse_rees(kReesInline);
  auto const& concrete = std::get<ReesSpec>(inline_spec);
  CHECK(concrete.a == 2);
  CHECK(concrete.b == 2);
  CHECK(concrete.p(1, 1) == 1);

  auto cyclic_spec = io::parse_rees(kReesCyclic);
  auto const& symbolic = std::get<SymbolicCyclicReesSpec>(cyclic_spec);
  CHECK(symbolic.group.p == 37);
  CHECK(symbolic.group.k == 8);
  CHECK(symbolic.p(1, 1) == 8);

  CHECK_THROWS_AS(io::parse_rees("rees 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_rees("rees 2 2\ngroup magic\n"), ParseError);
  // Entry 2 is not a Z2 element.
  CHECK_THROWS_AS(io::parse_rees("rees 2 2\ngroup inline\ngroup 2\n0 1\n1 0\n0 0\n0 2\n"),
                  ParseError);
  // 36 is not prime.
  CHECK_THROWS_AS(io::parse_rees("rees 2 2\ngroup cyclic 36 8\n1 2\n4 8\n"), ParseError);
}

TEST_CASE("parse_clifford", "[io]") {
  auto sys = io::parse_clifford(kClifford);
  CHECK(sys.node_count() == 2);
  CHECK(sys.order() == 3);
  CHECK(sys.group(1).order() == 2);

  CHECK_THROWS_AS(io::parse_clifford("clifford 1\n0\nnode 0\ngroup 1\n0\nhom 0 0\n0\n"),
                  ParseError);
  CHECK_THROWS_WITH(io::parse_clifford("clifford 2\n0 0\n0 1\nnode 0\ngroup 1\n0\n"
                                       "node 1\ngroup 1\n0\n"),
                    Catch::Contains("missing hom"));
}

TEST_CASE("certificate round trip is bit exact", "[io]") {
  auto cert = construct(Rational(1, 2), 2, 2);
  std::string const text = io::format_certificate(cert);
  auto parsed = io::parse_certificate(text);
  CHECK(io::format_certificate(parsed) == text);
  CHECK(parsed.alpha == cert.alpha);
  CHECK(parsed.a == cert.a);
  CHECK(parsed.b == cert.b);
  CHECK(parsed.c == cert.c);
  CHECK(parsed.d == cert.d);
  CHECK(parsed.k == cert.k);
  CHECK(parsed.r == cert.r);
  CHECK(parsed.p == cert.p);
  CHECK(parsed.chi == cert.chi);
  CHECK(parsed.entries == cert.entries);
  CHECK(verify_certificate(parsed).ok());

  // A larger certificate with nontrivial r.
  auto cert2 = construct(Rational(5, 17), 2, 2);
  std::string const text2 = io::format_certificate(cert2);
  CHECK(io::format_certificate(io::parse_certificate(text2)) == text2);

  CHECK_THROWS_AS(io::parse_certificate("dsc-certificate v2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_certificate(text + "extra\n"), ParseError);
  std::string missing = text.substr(0, text.find("p = "));
  CHECK_THROWS_AS(io::parse_certificate(missing), ParseError);
}

TEST_CASE("file_kind and format_relation", "[io]") {
  CHECK(io::file_kind(kZ2Group) == "group");
  CHECK(io::file_kind(kReesCyclic) == "rees");
  CHECK(io::file_kind("\n\nsemigroup 1\n0\n") == "semigroup");
  CHECK_THROWS_AS(io::file_kind(""), ParseError);

  auto rel = BinaryRelation::diagonal(3);
  CHECK(io::format_relation(rel) == "{}");
  rel.add(0, 2);
  rel.add(1, 0);
  CHECK(io::format_relation(rel) == "{(0,2),(1,0)}");
}
