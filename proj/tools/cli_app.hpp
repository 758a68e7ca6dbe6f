#pragma once

// Argument parsing for the partasym command-line tool.

#include "partasym/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace partasym::cli {

// Accepts "7", "1..20" and comma-separated mixtures of both.
inline std::vector<std::uint64_t> parse_n_list(const std::vector<std::string>& tokens) {
  std::vector<std::uint64_t> out;
  auto parse_one = [](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("n", "not a non-negative integer: '" + s + "'");
    }
    return std::stoull(s);
  };
  for (const auto& token : tokens) {
    std::size_t start = 0;
    while (start <= token.size()) {
      const std::size_t comma = token.find(',', start);
      const std::string item = token.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (const auto dots = item.find(".."); dots != std::string::npos) {
        const auto lo = parse_one(item.substr(0, dots));
        const auto hi = parse_one(item.substr(dots + 2));
        for (auto n = lo; n <= hi; ++n) out.push_back(n);
      } else if (!item.empty()) {
        out.push_back(parse_one(item));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

/// Runs the CLI with `args` (excluding the program name). Output goes to
/// `out` unless `--out` names a file; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic values of the partition function p(n)", "partasym"};
  app.require_subcommand(1);

  std::string out_path;
  std::optional<unsigned> digits;
  const std::map<std::string, ExpansionKind> kinds = {
      {"simple", ExpansionKind::simplified}, {"full", ExpansionKind::full}, {"hr", ExpansionKind::hardy_ramanujan}};
  const std::map<std::string, OutputFormat> formats = {{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

  auto* exact = app.add_subcommand("exact", "Print p(n) exactly");
  std::uint64_t exact_n = 0;
  exact->add_option("n", exact_n, "n >= 0")->required();
  exact->add_option("--out", out_path, "Write output to this file");

  auto* approx = app.add_subcommand("approx", "Evaluate an asymptotic expansion of p(n)");
  ApproxOptions approx_opt;
  approx->add_option("n", approx_opt.n, "n >= 1")->required()->check(CLI::PositiveNumber);
  approx->add_option("--order", approx_opt.order, "Expansion order N")->check(CLI::Range(0u, kCoefficientCap));
  approx->add_option("--kind", approx_opt.kind, "simple | full | hr")->transform(CLI::CheckedTransformer(kinds));
  approx->add_option("--digits", digits, "Working precision in decimal digits (>= 20)")->check(CLI::Range(20u, 100000u));
  approx->add_option("--out", out_path, "Write output to this file");

  auto* table = app.add_subcommand("table", "Compare p(n) with the rounded simplified expansion");
  TableOptions table_opt;
  std::vector<std::string> table_ns;
  table->add_option("n", table_ns, "Values of n (default: the 14 reference rows); ranges like 1..20 allowed");
  table->add_option("--order", table_opt.order, "Expansion order N")->check(CLI::Range(0u, kCoefficientCap));
  table->add_option("--format", table_opt.format, "csv | json")->transform(CLI::CheckedTransformer(formats));
  table->add_option("--digits", digits, "Working precision in decimal digits (>= 20)")->check(CLI::Range(20u, 100000u));
  table->add_option("--out", out_path, "Write output to this file");

  auto* verify = app.add_subcommand("verify", "Check saddle-point residuals against their envelopes");
  VerifyOptions verify_opt;
  std::vector<std::string> verify_ns;
  verify->add_option("n", verify_ns, "Values of n; ranges like 1..20 allowed");
  verify->add_option("--format", verify_opt.format, "csv | json")->transform(CLI::CheckedTransformer(formats));
  verify->add_option("--digits", digits, "Working precision in decimal digits (>= 20)")->check(CLI::Range(20u, 100000u));
  verify->add_option("--out", out_path, "Write output to this file");

  CommandOutput result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*exact) {
      result = cmd_exact(exact_n);
    } else if (*approx) {
      approx_opt.digits = digits;
      result = cmd_approx(approx_opt);
    } else if (*table) {
      if (!table_ns.empty()) table_opt.ns = parse_n_list(table_ns);
      table_opt.digits = digits;
      result = cmd_table(table_opt);
    } else if (*verify) {
      verify_opt.ns = parse_n_list(verify_ns);
      verify_opt.digits = digits;
      result = cmd_verify(verify_opt);
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_code::kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kNumeric;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << "\n";
      return exit_code::kUsage;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  return result.exit_code;
}

}  // namespace partasym::cli
