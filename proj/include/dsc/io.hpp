#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dsc/clifford.hpp"
#include "dsc/construct.hpp"
#include "dsc/error.hpp"
#include "dsc/group.hpp"
#include "dsc/rees.hpp"
#include "dsc/semigroup.hpp"

namespace dsc {
namespace io {

namespace detail {

// Line-oriented cursor with 1-based line numbers for error messages.
class Lines {
 public:
  explicit Lines(std::string const& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(line);
    }
  }

  bool done() const {
    for (std::size_t i = pos_; i < lines_.size(); ++i)
      if (!blank(lines_[i])) return false;
    return true;
  }

  std::string next() {
    while (pos_ < lines_.size() && blank(lines_[pos_])) ++pos_;
    if (pos_ >= lines_.size()) throw ParseError("unexpected end of file");
    return lines_[pos_++];
  }

  int line_number() const { return static_cast<int>(pos_); }

  [[noreturn]] void fail(std::string const& msg) const {
    throw ParseError("line " + std::to_string(line_number()) + ": " + msg);
  }

 private:
  static bool blank(std::string const& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
  }

  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> tokens(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(Lines const& lines, std::string const& tok) {
  try {
    std::size_t used = 0;
    int const v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (std::exception const&) {
    lines.fail("expected an integer, got '" + tok + "'");
  }
}

inline std::vector<std::vector<int>> parse_table(Lines& lines, int n) {
  std::vector<std::vector<int>> table;
  for (int row = 0; row < n; ++row) {
    auto toks = tokens(lines.next());
    if (static_cast<int>(toks.size()) != n)
      lines.fail("expected " + std::to_string(n) + " entries in table row");
    std::vector<int> r;
    for (auto const& t : toks) r.push_back(parse_int(lines, t));
    table.push_back(std::move(r));
  }
  return table;
}

// Reads a `group <n>` block and validates it.  Wraps algebra violations in
// ParseError: a table that fails the group axioms is an invalid file.
inline FiniteGroup parse_group_block(Lines& lines) {
  auto toks = tokens(lines.next());
  if (toks.size() != 2 || toks[0] != "group") lines.fail("expected 'group <n>'");
  int const n = parse_int(lines, toks[1]);
  if (n < 1) lines.fail("group order must be positive");
  auto table = parse_table(lines, n);
  try {
    return group_from_table(table);
  } catch (ValidationError const& e) {
    lines.fail(e.what());
  }
}

}  // namespace detail

inline FiniteGroup parse_group(std::string const& text) {
  detail::Lines lines(text);
  auto g = detail::parse_group_block(lines);
  if (!lines.done()) lines.fail("trailing content after group table");
  return g;
}

inline FiniteSemigroup parse_semigroup(std::string const& text) {
  detail::Lines lines(text);
  auto toks = detail::tokens(lines.next());
  if (toks.size() != 2 || toks[0] != "semigroup") lines.fail("expected 'semigroup <n>'");
  int const n = detail::parse_int(lines, toks[1]);
  if (n < 1) lines.fail("semigroup order must be positive");
  auto table = detail::parse_table(lines, n);
  if (!lines.done()) lines.fail("trailing content after semigroup table");
  try {
    return semigroup_from_table(table);
  } catch (ValidationError const& e) {
    lines.fail(e.what());
  }
}

using AnyReesSpec = std::variant<ReesSpec, SymbolicCyclicReesSpec>;

// rees <a> <b>
// group inline            |  group cyclic <p> <k>
// <group block>           |
// then b rows of a entries (element indices, or residues in the cyclic case).
inline AnyReesSpec parse_rees(std::string const& text) {
  detail::Lines lines(text);
  auto toks = detail::tokens(lines.next());
  if (toks.size() != 3 || toks[0] != "rees") lines.fail("expected 'rees <a> <b>'");
  int const a = detail::parse_int(lines, toks[1]);
  int const b = detail::parse_int(lines, toks[2]);
  if (a < 1 || b < 1) lines.fail("rees index sets must be nonempty");

  auto mode = detail::tokens(lines.next());
  if (mode.size() >= 2 && mode[0] == "group" && mode[1] == "inline" && mode.size() == 2) {
    FiniteGroup g = detail::parse_group_block(lines);
    std::vector<std::vector<int>> P;
    for (int row = 0; row < b; ++row) {
      auto entry_toks = detail::tokens(lines.next());
      if (static_cast<int>(entry_toks.size()) != a) lines.fail("expected a entries in P row");
      std::vector<int> r;
      for (auto const& t : entry_toks) r.push_back(detail::parse_int(lines, t));
      P.push_back(std::move(r));
    }
    if (!lines.done()) lines.fail("trailing content after sandwich matrix");
    try {
      return ReesSpec(std::move(g), a, b, std::move(P));
    } catch (ValidationError const& e) {
      lines.fail(e.what());
    }
  }
  if (mode.size() == 4 && mode[0] == "group" && mode[1] == "cyclic") {
    Integer p, k;
    try {
      p = parse_integer(mode[2]);
      k = parse_integer(mode[3]);
    } catch (ParseError const& e) {
      lines.fail(e.what());
    }
    std::vector<std::vector<Integer>> P;
    for (int row = 0; row < b; ++row) {
      auto entry_toks = detail::tokens(lines.next());
      if (static_cast<int>(entry_toks.size()) != a) lines.fail("expected a entries in P row");
      std::vector<Integer> r;
      for (auto const& t : entry_toks) {
        try {
          r.push_back(parse_integer(t));
        } catch (ParseError const& e) {
          lines.fail(e.what());
        }
      }
      P.push_back(std::move(r));
    }
    if (!lines.done()) lines.fail("trailing content after sandwich matrix");
    try {
      return SymbolicCyclicReesSpec(SymbolicCyclicGroup(std::move(p), std::move(k)), a, b,
                                    std::move(P));
    } catch (ValidationError const& e) {
      lines.fail(e.what());
    }
  }
  lines.fail("expected 'group inline' or 'group cyclic <p> <k>'");
}

// clifford <|Y|>
// <|Y| meet table rows>
// node <alpha> + group block, once per node
// hom <alpha> <beta> + image row, once per comparable pair alpha > beta
inline CliffordSystem parse_clifford(std::string const& text) {
  detail::Lines lines(text);
  auto toks = detail::tokens(lines.next());
  if (toks.size() != 2 || toks[0] != "clifford") lines.fail("expected 'clifford <n>'");
  int const m = detail::parse_int(lines, toks[1]);
  if (m < 1) lines.fail("semilattice must be nonempty");
  auto meet = detail::parse_table(lines, m);

  std::vector<std::vector<std::vector<int>>> groups(m);
  std::vector<bool> seen(m, false);
  for (int count = 0; count < m; ++count) {
    auto node_toks = detail::tokens(lines.next());
    if (node_toks.size() != 2 || node_toks[0] != "node") lines.fail("expected 'node <alpha>'");
    int const alpha = detail::parse_int(lines, node_toks[1]);
    if (alpha < 0 || alpha >= m) lines.fail("node index out of range");
    if (seen[alpha]) lines.fail("duplicate node block");
    seen[alpha] = true;
    auto group_toks = detail::tokens(lines.next());
    if (group_toks.size() != 2 || group_toks[0] != "group") lines.fail("expected 'group <n>'");
    int const order = detail::parse_int(lines, group_toks[1]);
    if (order < 1) lines.fail("group order must be positive");
    groups[alpha] = detail::parse_table(lines, order);
  }

  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> homs;
  while (!lines.done()) {
    auto hom_toks = detail::tokens(lines.next());
    if (hom_toks.size() != 3 || hom_toks[0] != "hom") lines.fail("expected 'hom <alpha> <beta>'");
    int const alpha = detail::parse_int(lines, hom_toks[1]);
    int const beta = detail::parse_int(lines, hom_toks[2]);
    if (alpha < 0 || alpha >= m || beta < 0 || beta >= m) lines.fail("hom node out of range");
    auto map_toks = detail::tokens(lines.next());
    std::vector<int> map;
    for (auto const& t : map_toks) map.push_back(detail::parse_int(lines, t));
    homs.push_back({{alpha, beta}, std::move(map)});
  }
  try {
    return validate_system(meet, groups, homs);
  } catch (ValidationError const& e) {
    throw ParseError(std::string("clifford system invalid: ") + e.what());
  }
}

// Canonical certificate text.  parse(format(cert)) is the identity and
// format(parse(text)) reproduces text byte for byte.
inline std::string format_certificate(ConstructionCertificate const& cert) {
  std::string out = "dsc-certificate v1\n";
  out += "alpha = " + cert.alpha.str() + "\n";
  out += "a = " + std::to_string(cert.a) + "\n";
  out += "b = " + std::to_string(cert.b) + "\n";
  out += "c = " + cert.c.get_str() + "\n";
  out += "d = " + cert.d.get_str() + "\n";
  out += "k = " + cert.k.get_str() + "\n";
  out += "r = " + cert.r.get_str() + "\n";
  out += "p = " + cert.p.get_str() + "\n";
  out += "chi = " + cert.chi.str() + "\n";
  out += "entries = ";
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    if (i) out += ",";
    out += cert.entries[i].get_str();
  }
  out += "\n";
  return out;
}

inline ConstructionCertificate parse_certificate(std::string const& text) {
  detail::Lines lines(text);
  if (lines.next() != "dsc-certificate v1") lines.fail("expected 'dsc-certificate v1' header");

  auto field = [&](std::string const& key) -> std::string {
    auto toks = detail::tokens(lines.next());
    if (toks.size() < 3 || toks[0] != key || toks[1] != "=")
      lines.fail("expected '" + key + " = <value>'");
    if (toks.size() != 3) lines.fail("unexpected extra tokens after " + key);
    return toks[2];
  };

  ConstructionCertificate cert;
  try {
    cert.alpha = Rational::parse(field("alpha"));
    cert.a = detail::parse_int(lines, field("a"));
    cert.b = detail::parse_int(lines, field("b"));
    cert.c = parse_integer(field("c"));
    cert.d = parse_integer(field("d"));
    cert.k = parse_integer(field("k"));
    cert.r = parse_integer(field("r"));
    cert.p = parse_integer(field("p"));
    cert.chi = Rational::parse(field("chi"));
    auto entries_line = detail::tokens(lines.next());
    if (entries_line.size() != 3 || entries_line[0] != "entries" || entries_line[1] != "=")
      lines.fail("expected 'entries = v1,v2,...'");
    std::string const& csv = entries_line[2];
    std::size_t start = 0;
    while (start <= csv.size()) {
      std::size_t const comma = csv.find(',', start);
      std::string const piece =
          comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
      cert.entries.push_back(parse_integer(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (ParseError const& e) {
    lines.fail(e.what());
  } catch (DomainError const& e) {
    lines.fail(e.what());
  }
  if (!lines.done()) lines.fail("trailing content after certificate");
  return cert;
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ParseError("write failed: " + path);
}

// First word of the first nonblank line: "group", "semigroup", "rees",
// "clifford" or "dsc-certificate".
inline std::string file_kind(std::string const& text) {
  detail::Lines lines(text);
  auto toks = detail::tokens(lines.next());
  if (toks.empty()) throw ParseError("empty file");
  return toks[0];
}

// Off-diagonal pairs as {(x,y),...}; the diagonal is implied.
inline std::string format_relation(BinaryRelation const& rel) {
  std::string out = "{";
  bool first = true;
  for (auto const& [x, y] : rel.off_diagonal_pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  out += "}";
  return out;
}

}  // namespace io
}  // namespace dsc
