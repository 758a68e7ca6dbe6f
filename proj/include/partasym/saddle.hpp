#pragma once

// The saddle parameter t_n, defined by kappa_1(t_n) = n, and the per-n
// quantities derived from it.

#include "partasym/cumulants.hpp"
#include "partasym/numerics.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace partasym {

struct SaddleState {
  std::uint64_t n = 1;
  HPReal t_n;
  HPReal L_n;  // |log t_n|
  HPReal r_n;
  HPReal kappa2;
  HPReal c_n_sq;    // kappa2 * L_n^2
  HPReal lambda_n;  // 1 + 1/(2 c_n^2)
  HPReal h_n;       // kappa_1(e^{-4 pi^2 / L_n})
  unsigned iterations = 0;
};

/// r_n = sqrt((2 pi^2/3)(n - 1/24) + 1/4)
inline HPReal r_of_n(std::uint64_t n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("r_of_n: n must be >= 1");
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  return mp::sqrt(2 * pi * pi / 3 * (HPReal(n) - HPReal(1) / 24) + HPReal(1) / 4);
}

/// 2 pi^2 / (3 (1 + 2 r_n)), the closed-form surrogate for |log t_n|.
inline HPReal log_tn_approx(std::uint64_t n, const PrecisionContext& ctx) {
  const HPReal r = r_of_n(n, ctx);
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  return 2 * pi * pi / (3 * (1 + 2 * r));
}

/// Upper end of the bracket for L_n: t_n > e^{-pi / sqrt(6 (n - 1/24))}.
inline HPReal log_tn_upper_bound(std::uint64_t n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("log_tn_upper_bound: n must be >= 1");
  PrecisionScope scope(ctx);
  return pi_value() / mp::sqrt(6 * (HPReal(n) - HPReal(1) / 24));
}

inline constexpr unsigned kSaddleMaxIterations = 200;

/// Solves kappa_1(e^{-L}) = n for L by safeguarded Newton in L.
///
/// d/dL kappa_1(e^{-L}) = -kappa_2(e^{-L}), so the Newton update is
/// L <- L + (kappa_1 - n) / kappa_2. The root stays bracketed; a step that
/// leaves the bracket is replaced by bisection. Converges when
/// |kappa_1 - n| <= 10^-(decimal_digits-10) n.
inline SaddleState solve_tn(std::uint64_t n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("solve_tn: n must be >= 1");
  PrecisionScope scope(ctx);
  const HPReal target(n);
  const HPReal tol = ctx.comparison_tolerance() * target;

  HPReal hi = log_tn_upper_bound(n, ctx);
  HPReal L = log_tn_approx(n, ctx);
  HPReal lo = L / 2;
  // kappa_1 decreases in L; make sure the lower end really overshoots n.
  for (unsigned k = 0; kappa(1, mp::exp(-lo), ctx).value <= target; ++k) {
    if (k > 64) throw SolverError("solve_tn: could not bracket the root");
    lo /= 2;
  }
  if (!(L > lo && L < hi)) L = (lo + hi) / 2;

  for (unsigned it = 1; it <= kSaddleMaxIterations; ++it) {
    const HPReal t = mp::exp(-L);
    const HPReal k1 = kappa(1, t, ctx).value;
    const HPReal diff = k1 - target;
    if (mp::abs(diff) <= tol) {
      SaddleState s;
      s.n = n;
      s.t_n = t;
      s.L_n = L;
      s.r_n = r_of_n(n, ctx);
      s.kappa2 = kappa(2, t, ctx).value;
      s.c_n_sq = s.kappa2 * L * L;
      s.lambda_n = 1 + 1 / (2 * s.c_n_sq);
      s.h_n = kappa_direct(1, detail::dual_argument(L), ctx).value;
      s.iterations = it;
      return s;
    }
    if (diff > 0) {
      lo = L;
    } else {
      hi = L;
    }
    const HPReal k2 = kappa(2, t, ctx).value;
    HPReal next = L + diff / k2;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    L = next;
  }
  throw SolverError("solve_tn: no convergence after " + std::to_string(kSaddleMaxIterations) +
                    " iterations for n=" + std::to_string(n));
}

/// Residuals of the closed-form approximations for t_n next to the envelopes
/// they are expected to obey, all with unit constant. Envelope base is
/// e^{-2 pi sqrt(24n - 1)}.
struct BoundReport {
  static constexpr std::size_t kCount = 4;
  static constexpr std::array<const char*, kCount> kNames = {
      "c_n_sq_minus_r_n",            // |c_n^2 - r_n|            <= n e
      "pi2_over_3L_minus_half_r_n",  // |pi^2/(3L) - (1/2+r_n)|  <= sqrt(n) e
      "L_minus_approx",              // |L - 2pi^2/(3(1+2r_n))|  <= e
      "h_n",                         // h_n                      <= 64 e
  };

  std::uint64_t n = 1;
  std::array<HPReal, kCount> residuals;
  std::array<HPReal, kCount> envelopes;
  std::array<HPReal, kCount> ratios;

  bool within(std::size_t i) const { return residuals[i] <= envelopes[i]; }
  bool all_within() const {
    for (std::size_t i = 0; i < kCount; ++i) {
      if (!within(i)) return false;
    }
    return true;
  }
};

/// Digits needed so residuals of size e^{-2 pi sqrt(24n-1)} are resolved with
/// `tail_safety` digits to spare.
inline PrecisionContext verify_context(std::uint64_t n,
                                       unsigned tail_safety = PrecisionContext::kDefaultTailSafety) {
  const PrecisionContext base = context_for_n(n, 0, tail_safety);
  const long double decay =
      2.0L * 3.141592653589793238462643383279502884L * std::sqrt(24.0L * static_cast<long double>(n) - 1.0L);
  const auto extra = static_cast<unsigned>(std::ceil(decay * 0.434294481903251827651128918916605082L));
  return base.escalated(extra);
}

inline BoundReport verify_saddle_bounds(const SaddleState& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  const HPReal pi2 = pi * pi;
  const HPReal n(s.n);
  const HPReal base = mp::exp(-2 * pi * mp::sqrt(24 * n - 1));

  BoundReport rep;
  rep.n = s.n;
  rep.residuals = {
      mp::abs(s.c_n_sq - s.r_n),
      mp::abs(pi2 / (3 * s.L_n) - (HPReal(1) / 2 + s.r_n)),
      mp::abs(s.L_n - 2 * pi2 / (3 * (1 + 2 * s.r_n))),
      s.h_n,
  };
  rep.envelopes = {n * base, mp::sqrt(n) * base, base, 64 * base};
  for (std::size_t i = 0; i < BoundReport::kCount; ++i) {
    rep.ratios[i] = rep.residuals[i] / rep.envelopes[i];
  }
  return rep;
}

inline BoundReport verify_saddle_bounds(std::uint64_t n, const PrecisionContext& ctx) {
  return verify_saddle_bounds(solve_tn(n, ctx), ctx);
}

}  // namespace partasym
