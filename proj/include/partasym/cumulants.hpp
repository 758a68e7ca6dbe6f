#pragma once

// log f(t) and the cumulants kappa_j(t) of the Boltzmann partition ensemble,
// f(t) = prod_{j>=1} (1 - t^j)^{-1}.
//
// Every quantity has a direct series, which converges geometrically with ratio
// t, and a functional equation under L = |log t| -> 4 pi^2 / L whose
// correction terms are series at the dual argument e^{-4 pi^2/L}. The two are
// switched at the self-dual point t* = e^{-2 pi}, so the series that actually
// gets summed always has argument <= e^{-2 pi} when t >= t*.

#include "partasym/eulerian.hpp"
#include "partasym/numerics.hpp"

#include <string>

namespace partasym {

enum class CumulantMethod { direct_series, functional_equation };

inline const char* to_string(CumulantMethod m) {
  return m == CumulantMethod::direct_series ? "direct_series" : "functional_equation";
}

struct CumulantValue {
  unsigned order = 1;
  HPReal t;
  HPReal value;
  CumulantMethod method = CumulantMethod::direct_series;
};

struct LogFValue {
  HPReal t;
  HPReal value;
  // E_0(t) = log f(e^{-4 pi^2 / |log t|})
  HPReal e0;
};

namespace detail {

inline void require_unit_interval(const HPReal& t, const char* what) {
  if (!(t >= 0) || !(t < 1)) {
    throw DomainError(std::string(what) + ": t must lie in [0,1)");
  }
}

inline HPReal factorial_real(unsigned k) {
  HPReal f(1);
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

inline HPReal binomial_real(unsigned n, unsigned k) {
  HPReal b(1);
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

inline HPReal dual_argument(const HPReal& L) {
  const HPReal pi = pi_value();
  return mp::exp(-4 * pi * pi / L);
}

inline bool use_functional_equation(const HPReal& L) { return L <= 2 * pi_value(); }

// sum_{l>=1} x^l / (l (1 - x^l))
inline HPReal log_f_series(const HPReal& x, const PrecisionContext& ctx) {
  return sum_dominated_series(
      [](std::size_t l, const HPReal& y) { return y / (HPReal(l) * (1 - y)); }, x, 0, ctx,
      "log_f_direct");
}

// sum_{l>=1} l^{j-1} A_j(x^l) / (1 - x^l)^{j+1}
inline HPReal kappa_series(unsigned j, const HPReal& x, const PrecisionContext& ctx) {
  const auto coeffs = eulerian_poly(j).real_coefficients();
  return sum_dominated_series(
      [&](std::size_t l, const HPReal& y) {
        return mp::pow(HPReal(l), j - 1) * horner(coeffs, y) / mp::pow(1 - y, j + 1);
      },
      x, j - 1, ctx, "kappa_direct");
}

// sum_{l>=1} l^j A_{j-1}(x^l) / (1 - x^l)^j
inline HPReal kappa_alt_series(unsigned j, const HPReal& x, const PrecisionContext& ctx) {
  const auto coeffs = eulerian_poly(j - 1).real_coefficients();
  return sum_dominated_series(
      [&](std::size_t l, const HPReal& y) {
        return mp::pow(HPReal(l), j) * horner(coeffs, y) / mp::pow(1 - y, j);
      },
      x, j, ctx, "kappa_direct_alt");
}

// pi^2/(6L) - log sqrt(2 pi) - L/24 + (1/2) log L
inline HPReal log_f_leading(const HPReal& L) {
  const HPReal pi = pi_value();
  return pi * pi / (6 * L) - mp::log(2 * pi) / 2 - L / 24 + mp::log(L) / 2;
}

// (j-1)!/L^j sum_{r=1}^{j} C(j,r) (-4 pi^2/L)^r kappa_r(d) / (r-1)!
inline HPReal e_term_at(unsigned j, const HPReal& L, const PrecisionContext& ctx) {
  const HPReal pi = pi_value();
  const HPReal d = dual_argument(L);
  const HPReal step = -4 * pi * pi / L;
  HPReal sum(0);
  HPReal power(1);
  for (unsigned r = 1; r <= j; ++r) {
    power *= step;
    sum += binomial_real(j, r) * power * kappa_series(r, d, ctx) / factorial_real(r - 1);
  }
  return factorial_real(j - 1) / mp::pow(L, j) * sum;
}

}  // namespace detail

/// e^{-2 pi}, the fixed point of |log t| -> 4 pi^2/|log t|.
inline HPReal self_dual_point(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return mp::exp(-2 * pi_value());
}

inline HPReal log_f_direct(const HPReal& t, const PrecisionContext& ctx) {
  detail::require_unit_interval(t, "log_f_direct");
  PrecisionScope scope(ctx);
  if (t == 0) return HPReal(0);
  return detail::log_f_series(at_current_precision(t), ctx);
}

inline LogFValue log_f(const HPReal& t, const PrecisionContext& ctx) {
  detail::require_unit_interval(t, "log_f");
  PrecisionScope scope(ctx);
  const HPReal x = at_current_precision(t);
  if (x == 0) return {x, HPReal(0), HPReal(0)};
  const HPReal L = -mp::log(x);
  if (detail::use_functional_equation(L)) {
    const HPReal e0 = detail::log_f_series(detail::dual_argument(L), ctx);
    return {x, detail::log_f_leading(L) + e0, e0};
  }
  // Below t*, the direct series is the fast one; E_0 is recovered from the
  // identity instead of summing the (slower) series at the dual argument.
  const HPReal value = detail::log_f_series(x, ctx);
  return {x, value, value - detail::log_f_leading(L)};
}

/// |log f(t) - [leading terms + log f(e^{-4 pi^2/L})]| with both log f values
/// summed directly.
inline HPReal functional_equation_residual(const HPReal& t, const PrecisionContext& ctx) {
  detail::require_unit_interval(t, "functional_equation_residual");
  if (t == 0) throw DomainError("functional_equation_residual: t must be positive");
  PrecisionScope scope(ctx);
  const HPReal x = at_current_precision(t);
  const HPReal L = -mp::log(x);
  const HPReal lhs = detail::log_f_series(x, ctx);
  const HPReal rhs = detail::log_f_leading(L) + detail::log_f_series(detail::dual_argument(L), ctx);
  return mp::abs(lhs - rhs);
}

inline CumulantValue kappa_direct(unsigned j, const HPReal& t, const PrecisionContext& ctx) {
  if (j < 1) throw DomainError("kappa_direct: order must be >= 1");
  detail::require_unit_interval(t, "kappa_direct");
  PrecisionScope scope(ctx);
  const HPReal x = at_current_precision(t);
  const HPReal value = x == 0 ? HPReal(0) : detail::kappa_series(j, x, ctx);
  return {j, x, value, CumulantMethod::direct_series};
}

inline CumulantValue kappa_direct_alt(unsigned j, const HPReal& t, const PrecisionContext& ctx) {
  if (j < 2) throw DomainError("kappa_direct_alt: order must be >= 2");
  detail::require_unit_interval(t, "kappa_direct_alt");
  PrecisionScope scope(ctx);
  const HPReal x = at_current_precision(t);
  const HPReal value = x == 0 ? HPReal(0) : detail::kappa_alt_series(j, x, ctx);
  return {j, x, value, CumulantMethod::direct_series};
}

/// E_j(t) = kappa_j(t) - pi^2 j!/(6 L^{j+1}) + (j-1)!/(2 L^j), j >= 2.
inline HPReal e_term(unsigned j, const HPReal& t, const PrecisionContext& ctx) {
  if (j < 2) throw DomainError("e_term: order must be >= 2");
  detail::require_unit_interval(t, "e_term");
  PrecisionScope scope(ctx);
  const HPReal x = at_current_precision(t);
  if (x == 0) return HPReal(0);
  return detail::e_term_at(j, -mp::log(x), ctx);
}

inline CumulantValue kappa(unsigned j, const HPReal& t, const PrecisionContext& ctx) {
  if (j < 1) throw DomainError("kappa: order must be >= 1");
  detail::require_unit_interval(t, "kappa");
  PrecisionScope scope(ctx);
  const HPReal x = at_current_precision(t);
  if (x == 0) return {j, x, HPReal(0), CumulantMethod::direct_series};
  const HPReal L = -mp::log(x);
  if (!detail::use_functional_equation(L)) {
    return {j, x, detail::kappa_series(j, x, ctx), CumulantMethod::direct_series};
  }
  const HPReal pi = pi_value();
  const HPReal pi2 = pi * pi;
  HPReal value;
  if (j == 1) {
    const HPReal h = detail::kappa_series(1, detail::dual_argument(L), ctx);
    value = pi2 / (6 * L * L) - 1 / (2 * L) + HPReal(1) / 24 - 4 * pi2 / (L * L) * h;
  } else {
    value = pi2 * detail::factorial_real(j) / (6 * mp::pow(L, j + 1)) -
            detail::factorial_real(j - 1) / (2 * mp::pow(L, j)) + detail::e_term_at(j, L, ctx);
  }
  require_finite(value, "kappa");
  return {j, x, value, CumulantMethod::functional_equation};
}

inline HPReal sigma(const HPReal& t, const PrecisionContext& ctx) {
  const CumulantValue k2 = kappa(2, t, ctx);
  PrecisionScope scope(ctx);
  return mp::sqrt(k2.value);
}

}  // namespace partasym
