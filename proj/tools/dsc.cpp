// Command-line front end: exact congruence / diagonal-subsemigroup counting
// for semigroups given by Cayley tables, Rees matrix specs, Clifford systems
// and chi-realization certificates.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dsc/clifford.hpp"
#include "dsc/construct.hpp"
#include "dsc/io.hpp"
#include "dsc/rees.hpp"
#include "dsc/semigroup.hpp"

namespace {

using namespace dsc;

void emit(std::string const& text, std::optional<std::string> const& report_path) {
  std::cout << text;
  if (report_path) io::write_file(*report_path, text);
}

std::string dsc_report_line(DscReport const& report) {
  return "congruences=" + report.congruence_count.get_str() +
         " diagonal=" + report.diagonal_count.get_str() + " chi=" + report.chi.str() + "\n";
}

int cmd_analyze(std::string const& path, bool list, int cap,
                std::optional<std::string> const& report_path) {
  std::string const text = io::read_file(path);
  std::string const kind = io::file_kind(text);
  FiniteSemigroup s = [&] {
    if (kind == "group") return semigroup_from_group(io::parse_group(text));
    if (kind == "semigroup") return io::parse_semigroup(text);
    throw ParseError(path + ": expected a group or semigroup file, found '" + kind + "'");
  }();

  auto report = dsc_coefficient(s, cap);
  std::string out = dsc_report_line(report);
  if (list) {
    enumerate_congruences(s, cap, [&](BinaryRelation const& rel) {
      out += "congruence: " + io::format_relation(rel) + "\n";
    });
    enumerate_diagonal_subsemigroups(s, cap, [&](BinaryRelation const& rel) {
      out += "diagonal: " + io::format_relation(rel) + "\n";
    });
  }
  emit(out, report_path);
  return 0;
}

std::string census_text(TripleCensus const& census) {
  std::string out;
  auto sizes = [](Partition const& p) {
    std::string s;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      if (i) s += "+";
      s += std::to_string(p.blocks[i].size());
    }
    return s;
  };
  for (auto const& row : census.rows)
    out += "N=" + row.label + " sigma=" + sizes(row.sigma) + " tau=" + sizes(row.tau) +
           " e_I=" + row.e_I.get_str() + " e_L=" + row.e_Lambda.get_str() +
           " r_I=" + row.r_I.get_str() + " r_L=" + row.r_Lambda.get_str() +
           " mult=" + row.multiplicity.get_str() + "\n";
  return out;
}

int cmd_rees(std::string const& path, bool brute_force, int cap,
             std::optional<std::string> const& report_path) {
  auto spec = io::parse_rees(io::read_file(path));

  TripleCensus census;
  std::optional<ReesSpec> concrete;
  if (auto const* c = std::get_if<ReesSpec>(&spec)) {
    census = triple_census(*c);
    concrete = *c;
  } else {
    auto const& symbolic = std::get<SymbolicCyclicReesSpec>(spec);
    census = triple_census(symbolic);
    if (brute_force) concrete = concretize(symbolic);
  }

  DscReport report(census.congruence_total, census.diagonal_total);
  std::string out = census_text(census) + dsc_report_line(report);

  int exit_code = 0;
  if (brute_force) {
    auto brute = dsc_coefficient(materialize(*concrete), cap);
    bool const agree = brute.congruence_count == report.congruence_count &&
                       brute.diagonal_count == report.diagonal_count;
    out += "brute-force: " + dsc_report_line(brute);
    out += std::string("agreement=") + (agree ? "yes" : "no") + "\n";
    if (!agree) exit_code = 1;
  }
  emit(out, report_path);
  return exit_code;
}

std::string verification_text(VerificationReport const& report) {
  std::string out;
  for (auto const& check : report.checks) {
    out += "check " + check.name + ": " + (check.pass ? "pass" : "FAIL");
    if (!check.pass && !check.witness.empty()) out += " (" + check.witness + ")";
    out += "\n";
  }
  out += std::string("verified=") + (report.ok() ? "yes" : "no") + "\n";
  return out;
}

int cmd_construct(std::string const& alpha_text, std::optional<int> a, std::optional<int> b,
                  std::optional<std::string> const& out_path,
                  std::optional<std::string> const& verify_only,
                  std::optional<std::string> const& report_path) {
  if (verify_only) {
    auto cert = io::parse_certificate(io::read_file(*verify_only));
    auto report = verify_certificate(cert);
    emit("alpha=" + cert.alpha.str() + " chi=" + cert.chi.str() + "\n" + verification_text(report),
         report_path);
    return report.ok() ? 0 : 1;
  }

  Rational const alpha = Rational::parse(alpha_text);
  if (alpha == Rational(1, 1)) {
    emit("alpha=1/1: every finite group has chi=1/1; no certificate needed\n", report_path);
    return 0;
  }
  if (alpha <= Rational(0) || alpha > Rational(1, 1))
    throw DomainError("construct: alpha must lie in (0,1]");

  auto const dims = (a && b) ? std::pair<int, int>{*a, *b} : choose_dimensions(alpha);
  auto cert = construct(alpha, dims.first, dims.second);
  auto report = verify_certificate(cert);

  std::string out = "alpha=" + cert.alpha.str() + " a=" + std::to_string(cert.a) +
                    " b=" + std::to_string(cert.b) + " c=" + cert.c.get_str() +
                    " d=" + cert.d.get_str() + " k=" + cert.k.get_str() +
                    " r=" + cert.r.get_str() + " p=" + cert.p.get_str() +
                    " chi=" + cert.chi.str() + "\n";
  out += verification_text(report);
  if (out_path) io::write_file(*out_path, io::format_certificate(cert));
  emit(out, report_path);
  return report.ok() ? 0 : 1;
}

int cmd_clifford(std::optional<std::string> const& path, std::optional<int> chains, int cap,
                 std::optional<std::string> const& report_path) {
  std::string out;
  if (path) {
    auto sys = io::parse_clifford(io::read_file(*path));
    auto report = chi_bound_report(sys, cap);
    out += "chi_S=" + report.chi_s.chi.str() + " chi_Y=" + report.chi_y.chi.str() +
           " bound=" + (report.strict ? "strict" : "tight") +
           " K=" + report.kernel_count.get_str() +
           " cong_Y=" + report.chi_y.congruence_count.get_str() +
           " diag_Y=" + report.chi_y.diagonal_count.get_str() +
           " pair_bound=" + (report.pair_lower_bound_holds ? "holds" : "fails") + "\n";
  }
  if (chains) {
    // Exploratory table of chi over chain semilattices; no limit is claimed.
    for (int m = 1; m <= *chains; ++m) {
      std::vector<std::vector<int>> table(m, std::vector<int>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = std::min(i, j);
      auto report = dsc_coefficient(semigroup_from_table(table), cap);
      out += "chain m=" + std::to_string(m) + " " + dsc_report_line(report);
    }
  }
  emit(out, report_path);
  return 0;
}

int cmd_bell(int n, std::optional<std::string> const& report_path) {
  emit("bell(" + std::to_string(n) + ")=" + bell(n).get_str() + "\n", report_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact DSC-coefficient toolkit for finite semigroups"};
  app.require_subcommand(1);

  std::string path;
  std::string alpha;
  std::optional<int> opt_a, opt_b, chains;
  std::optional<std::string> report_path, out_path, verify_only, clifford_path;
  int cap = dsc::kBruteForceCap;
  bool list = false, brute_force = false;

  auto* analyze = app.add_subcommand("analyze", "chi of a semigroup or group Cayley-table file");
  analyze->add_option("file", path, "group/semigroup file")->required();
  analyze->add_flag("--list", list, "also stream the relations");
  analyze->add_option("--cap", cap, "brute-force order cap");
  analyze->add_option("--report", report_path, "write the report to a file");

  auto* rees = app.add_subcommand("rees", "linked-triple census and chi of a Rees matrix spec");
  rees->add_option("file", path, "rees spec file")->required();
  rees->add_flag("--brute-force", brute_force, "cross-check against materialized enumeration");
  rees->add_option("--cap", cap, "brute-force order cap");
  rees->add_option("--report", report_path, "write the report to a file");

  auto* construct_cmd =
      app.add_subcommand("construct", "realize a rational chi by a certified Rees matrix spec");
  auto* alpha_opt = construct_cmd->add_option("--alpha", alpha, "target rational, e.g. 5/17");
  auto* a_opt = construct_cmd->add_option("--a", opt_a, "|I| (with --b)");
  auto* b_opt = construct_cmd->add_option("--b", opt_b, "|Lambda| (with --a)");
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);
  construct_cmd->add_option("--out", out_path, "write the certificate to a file");
  auto* verify_opt =
      construct_cmd->add_option("--verify-only", verify_only, "re-check an existing certificate");
  verify_opt->excludes(alpha_opt);
  construct_cmd->add_option("--report", report_path, "write the report to a file");

  auto* clifford = app.add_subcommand("clifford", "chi bound report for a Clifford system");
  clifford->add_option("file", clifford_path, "clifford system file");
  clifford->add_option("--chains", chains, "tabulate chi of chain semilattices up to this size");
  clifford->add_option("--cap", cap, "brute-force order cap");
  clifford->add_option("--report", report_path, "write the report to a file");

  int bell_n = 0;
  auto* bell_cmd = app.add_subcommand("bell", "the n-th Bell number");
  bell_cmd->add_option("n", bell_n, "set size")->required();
  bell_cmd->add_option("--report", report_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(path, list, cap, report_path);
    if (*rees) return cmd_rees(path, brute_force, cap, report_path);
    if (*construct_cmd) {
      if (!verify_only && alpha_opt->count() == 0)
        throw dsc::ParseError("construct: --alpha or --verify-only is required");
      return cmd_construct(alpha, opt_a, opt_b, out_path, verify_only, report_path);
    }
    if (*clifford) {
      if (!clifford_path && !chains)
        throw dsc::ParseError("clifford: provide a file or --chains");
      return cmd_clifford(clifford_path, chains, cap, report_path);
    }
    if (*bell_cmd) return cmd_bell(bell_n, report_path);
  } catch (dsc::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (dsc::SizeError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (dsc::DomainError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (dsc::ValidationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (dsc::InternalError const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
