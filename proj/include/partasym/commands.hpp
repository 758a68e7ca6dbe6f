#pragma once

// Command implementations behind the `partasym` CLI. Each returns the text to
// print together with the process exit code, so they can be driven directly.

#include "partasym/cumulants.hpp"
#include "partasym/exact.hpp"
#include "partasym/expansion.hpp"
#include "partasym/report.hpp"
#include "partasym/saddle.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace partasym {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNumeric = 2;
inline constexpr int kVerification = 3;
}  // namespace exit_code

enum class OutputFormat { csv, json };

struct CommandOutput {
  std::string text;
  int exit_code = exit_code::kSuccess;
};

inline const std::vector<std::uint64_t>& default_table_ns() {
  static const std::vector<std::uint64_t> ns = {10, 11, 50, 51, 100, 101, 200, 201, 500, 600, 700, 800, 900, 1000};
  return ns;
}

inline constexpr unsigned kDefaultOrder = 17;

inline std::string error_json(const std::string& kind, const std::string& message) {
  return nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() + "\n";
}

inline CommandOutput cmd_exact(std::uint64_t n) {
  return {partition_exact(n).to_string() + "\n", exit_code::kSuccess};
}

struct ApproxOptions {
  std::uint64_t n = 1;
  unsigned order = kDefaultOrder;
  ExpansionKind kind = ExpansionKind::simplified;
  std::optional<unsigned> digits;
};

inline CommandOutput cmd_approx(const ApproxOptions& opt) {
  try {
    if (opt.n < 1) throw DomainError("approx: n must be >= 1");
    const PrecisionContext ctx = opt.digits ? PrecisionContext(*opt.digits) : context_for_n(opt.n, opt.order);
    ExpansionResult r;
    switch (opt.kind) {
      case ExpansionKind::simplified: r = p_approx_simple(opt.n, opt.order, ctx); break;
      case ExpansionKind::full: r = p_approx_full(opt.n, opt.order, ctx); break;
      case ExpansionKind::hardy_ramanujan: r = hardy_ramanujan(opt.n, ctx); break;
    }
    const BigCount exact = partition_exact(opt.n);
    attach_exact(r, exact, ctx);
    nlohmann::json j = to_json(r);
    j["ratio"] = format_ratio(r.rounded, exact);
    j.erase("terms");
    return {j.dump() + "\n", exit_code::kSuccess};
  } catch (const ResourceLimitError& e) {
    return {error_json("resource_limit", e.what()), exit_code::kNumeric};
  } catch (const SolverError& e) {
    return {error_json("solver", e.what()), exit_code::kNumeric};
  } catch (const Error& e) {
    return {error_json("numeric", e.what()), exit_code::kNumeric};
  }
}

struct TableRow {
  std::uint64_t n = 0;
  BigCount p_exact;
  BigCount p_bar;
  std::string ratio;  // p_bar / p_exact, 19 fractional digits, half-even
};

struct TableOptions {
  std::vector<std::uint64_t> ns = default_table_ns();
  unsigned order = kDefaultOrder;
  OutputFormat format = OutputFormat::csv;
  std::optional<unsigned> digits;
  unsigned extra_digits = 0;
};

inline std::vector<TableRow> table_rows(const TableOptions& opt) {
  std::vector<TableRow> rows;
  if (opt.ns.empty()) return rows;
  for (auto n : opt.ns) {
    if (n < 1) throw DomainError("table: n must be >= 1");
  }
  const PartitionTable exact = partition_table(*std::max_element(opt.ns.begin(), opt.ns.end()));
  for (auto n : opt.ns) {
    const PrecisionContext ctx =
        (opt.digits ? PrecisionContext(*opt.digits) : context_for_n(n, opt.order)).escalated(opt.extra_digits);
    TableRow row;
    row.n = n;
    row.p_exact = exact[n];
    row.p_bar = p_approx_simple(n, opt.order, ctx).rounded;
    row.ratio = format_ratio(row.p_bar, row.p_exact);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_table(const std::vector<TableRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n}, {"p", r.p_exact.to_string()}, {"p_bar", r.p_bar.to_string()}, {"ratio", r.ratio}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n,p,p_bar,ratio\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.p_exact.to_string() << ',' << r.p_bar.to_string() << ',' << r.ratio << '\n';
  }
  return os.str();
}

inline CommandOutput cmd_table(const TableOptions& opt) {
  try {
    return {render_table(table_rows(opt), opt.format), exit_code::kSuccess};
  } catch (const Error& e) {
    return {error_json("numeric", e.what()), exit_code::kNumeric};
  }
}

/// Self-consistency checks run alongside the envelope comparison.
struct SaddleChecks {
  HPReal solver_residual;    // |kappa_1(t_n) - n| / n
  HPReal closed_form_gap;    // relative gap between pi^2/(3L) and its closed form in h_n
  HPReal kappa2_method_gap;  // relative gap between kappa_2 by functional equation and by direct series
  bool h_n_below_2_pow_minus_30 = false;
  bool passed = false;
};

inline SaddleChecks saddle_checks(const SaddleState& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  const HPReal n(s.n);
  const HPReal tol = ctx.comparison_tolerance();
  SaddleChecks c;
  c.solver_residual = mp::abs(kappa(1, s.t_n, ctx).value - n) / n;

  // pi^2/(3L) = (1/2 + sqrt((2pi^2/3)(n-1/24)(1-24h) + 1/4)) / (1-24h)
  const HPReal x = pi * pi / (3 * s.L_n);
  const HPReal shrink = 1 - 24 * s.h_n;
  const HPReal closed = (HPReal(1) / 2 + mp::sqrt(2 * pi * pi / 3 * (n - HPReal(1) / 24) * shrink + HPReal(1) / 4)) / shrink;
  c.closed_form_gap = mp::abs(x - closed) / x;

  const HPReal direct = kappa_direct(2, s.t_n, ctx).value;
  c.kappa2_method_gap = mp::abs(s.kappa2 - direct) / direct;

  c.h_n_below_2_pow_minus_30 = s.h_n < mp::pow(HPReal(2), -30);
  c.passed = c.solver_residual <= tol && c.closed_form_gap <= tol && c.kappa2_method_gap <= tol &&
             c.h_n_below_2_pow_minus_30;
  return c;
}

struct VerifyOptions {
  std::vector<std::uint64_t> ns;
  OutputFormat format = OutputFormat::json;
  std::optional<unsigned> digits;
  unsigned extra_digits = 0;
};

struct VerifyRow {
  BoundReport report;
  SaddleChecks checks;
};

inline std::vector<VerifyRow> verify_rows(const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  for (auto n : opt.ns) {
    if (n < 1) throw DomainError("verify: n must be >= 1");
    const PrecisionContext ctx = (opt.digits ? PrecisionContext(*opt.digits) : verify_context(n)).escalated(opt.extra_digits);
    const SaddleState s = solve_tn(n, ctx);
    rows.push_back({verify_saddle_bounds(s, ctx), saddle_checks(s, ctx)});
  }
  return rows;
}

inline std::string render_verify(const std::vector<VerifyRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json j = to_json(row.report);
      j["checks"] = {{"solver_residual", sci_string(row.checks.solver_residual)},
                     {"closed_form_gap", sci_string(row.checks.closed_form_gap)},
                     {"kappa2_method_gap", sci_string(row.checks.kappa2_method_gap)},
                     {"h_n_below_2_pow_minus_30", row.checks.h_n_below_2_pow_minus_30},
                     {"passed", row.checks.passed}};
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n,quantity,residual,envelope,ratio,within\n";
  for (const auto& row : rows) {
    const auto& rep = row.report;
    for (std::size_t i = 0; i < BoundReport::kCount; ++i) {
      os << rep.n << ',' << BoundReport::kNames[i] << ',' << sci_string(rep.residuals[i]) << ','
         << sci_string(rep.envelopes[i]) << ',' << sci_string(rep.ratios[i]) << ','
         << (rep.within(i) ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

inline CommandOutput cmd_verify(const VerifyOptions& opt) {
  try {
    const auto rows = verify_rows(opt);
    bool ok = true;
    for (const auto& row : rows) ok = ok && row.report.all_within() && row.checks.passed;
    return {render_verify(rows, opt.format), ok ? exit_code::kSuccess : exit_code::kVerification};
  } catch (const Error& e) {
    return {error_json("numeric", e.what()), exit_code::kNumeric};
  }
}

}  // namespace partasym
