#pragma once

// Asymptotic expansions of p(n): the Hardy-Ramanujan leading term, the
// simplified expansion in powers of 1/(1+2 r_n) and the full expansion in
// powers of 1/(1+2 c_n^2), with exact rational coefficients D_l.

#include "partasym/exact.hpp"
#include "partasym/numerics.hpp"
#include "partasym/saddle.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace partasym {

inline constexpr unsigned kCoefficientCap = 64;

/// Reduced fraction with positive denominator.
class RationalCoeff {
 public:
  explicit RationalCoeff(Rational q) : q_(std::move(q)) {}

  const Rational& value() const noexcept { return q_; }
  BigInt numerator() const { return BigInt(mp::numerator(q_)); }
  BigInt denominator() const { return BigInt(mp::denominator(q_)); }
  std::string to_string() const { return q_.str(); }

  friend bool operator==(const RationalCoeff& a, const RationalCoeff& b) { return a.q_ == b.q_; }

 private:
  Rational q_;
};

namespace detail {

inline BigInt factorial_int(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

inline BigInt binomial_int(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

// S_l = sum_{k=0}^{l+1} (-1)^k 2^k C(2l,k) / (l+1-k)!
inline Rational alternating_sum(unsigned l) {
  Rational s = 0;
  BigInt two_k = 1;
  for (unsigned k = 0; k <= l + 1; ++k) {
    Rational term(two_k * binomial_int(2 * l, k), factorial_int(l + 1 - k));
    if (k % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
    two_k *= 2;
  }
  return s;
}

inline BigInt power_of_four(unsigned l) {
  BigInt p = 1;
  for (unsigned i = 0; i < l; ++i) p *= 4;
  return p;
}

struct CoefficientTable {
  std::vector<RationalCoeff> j;
  std::vector<RationalCoeff> d;
};

inline const CoefficientTable& coefficient_table() {
  static const CoefficientTable table = [] {
    CoefficientTable t;
    for (unsigned l = 1; l <= kCoefficientCap; ++l) {
      const Rational s = alternating_sum(l);
      const BigInt four = power_of_four(l);
      t.j.emplace_back(Rational(factorial_int(l + 1), four) * s);
      const Rational d = Rational(BigInt(l + 1), four) * s;
      t.d.emplace_back(l % 2 == 1 ? d : Rational(-d));
    }
    return t;
  }();
  return table;
}

inline void check_coefficient_index(unsigned l, const char* what) {
  if (l < 1) throw DomainError(std::string(what) + ": index must be >= 1");
  if (l > kCoefficientCap) {
    throw ResourceLimitError(std::string(what) + ": index " + std::to_string(l) + " exceeds cap " +
                             std::to_string(kCoefficientCap));
  }
}

}  // namespace detail

/// J_l = d^{2l}/dx^{2l} [e^{x/2} (1-x)^{l+1}] at x = 0
///     = ((l+1)!/4^l) sum_{k=0}^{l+1} (-1)^k 2^k C(2l,k)/(l+1-k)!
inline RationalCoeff j_coeff(unsigned l) {
  detail::check_coefficient_index(l, "j_coeff");
  return detail::coefficient_table().j[l - 1];
}

/// D_l = (-1)^{l+1} ((l+1)/4^l) sum_{k=0}^{l+1} (-1)^k 2^k C(2l,k)/(l+1-k)!
inline RationalCoeff d_coeff(unsigned l) {
  detail::check_coefficient_index(l, "d_coeff");
  return detail::coefficient_table().d[l - 1];
}

enum class ExpansionKind { simplified, full, hardy_ramanujan };

inline const char* to_string(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::simplified: return "simple";
    case ExpansionKind::full: return "full";
    case ExpansionKind::hardy_ramanujan: return "hr";
  }
  return "?";
}

struct ExpansionResult {
  std::uint64_t n = 1;
  unsigned order = 0;
  ExpansionKind kind = ExpansionKind::simplified;
  HPReal value;
  std::vector<HPReal> terms;  // D_l / (1+2x)^l, l = 1..order
  BigCount rounded;
  std::optional<HPReal> ratio_to_exact;  // rounded / p(n)
};

/// Nearest integer, ties away from zero.
inline BigCount round_to_count(const HPReal& v) {
  if (!(v >= 0)) throw DomainError("round_to_count: negative or non-finite value");
  return BigCount(mp::round(v).convert_to<BigInt>());
}

inline void attach_exact(ExpansionResult& r, const BigCount& exact, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  r.ratio_to_exact = to_real(r.rounded.value()) / to_real(exact.value());
}

namespace detail {

inline void check_order(unsigned order) {
  if (order > kCoefficientCap) {
    throw ResourceLimitError("expansion order " + std::to_string(order) + " exceeds cap " +
                             std::to_string(kCoefficientCap));
  }
}

// Terms D_l / base^l for l = 1..order.
inline std::vector<HPReal> expansion_terms(const HPReal& base, unsigned order) {
  std::vector<HPReal> terms;
  terms.reserve(order);
  HPReal power(1);
  for (unsigned l = 1; l <= order; ++l) {
    power *= base;
    terms.push_back(to_real(d_coeff(l).value()) / power);
  }
  return terms;
}

inline HPReal one_minus_sum(const std::vector<HPReal>& terms) {
  HPReal s(1);
  for (const auto& t : terms) s -= t;
  return s;
}

inline ExpansionResult finish(std::uint64_t n, unsigned order, ExpansionKind kind, HPReal value,
                              std::vector<HPReal> terms) {
  require_finite(value, "expansion");
  ExpansionResult r;
  r.n = n;
  r.order = order;
  r.kind = kind;
  r.rounded = round_to_count(value);
  r.value = std::move(value);
  r.terms = std::move(terms);
  return r;
}

}  // namespace detail

/// e^{pi sqrt(2n/3)} / (4 n sqrt 3)
inline ExpansionResult hardy_ramanujan(std::uint64_t n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("hardy_ramanujan: n must be >= 1");
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  const HPReal nn(n);
  HPReal value = mp::exp(pi * mp::sqrt(2 * nn / 3)) / (4 * nn * mp::sqrt(HPReal(3)));
  return detail::finish(n, 0, ExpansionKind::hardy_ramanujan, std::move(value), {});
}

/// (2 pi^2 / (3 sqrt 3)) e^{r_n} / (1+2r_n)^2 (1 - sum_{l<=N} D_l / (1+2r_n)^l)
inline ExpansionResult p_approx_simple(std::uint64_t n, unsigned order, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("p_approx_simple: n must be >= 1");
  detail::check_order(order);
  const HPReal r = r_of_n(n, ctx);
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  const HPReal base = 1 + 2 * r;
  auto terms = detail::expansion_terms(base, order);
  HPReal value = 2 * pi * pi / (3 * mp::sqrt(HPReal(3))) * mp::exp(r) / (base * base) *
                 detail::one_minus_sum(terms);
  return detail::finish(n, order, ExpansionKind::simplified, std::move(value), std::move(terms));
}

/// e^{r_n} L_n^{3/2} / (sqrt 2 pi sqrt(1+2c_n^2)) (1 - sum_{l<=N} D_l / (1+2c_n^2)^l)
inline ExpansionResult p_approx_full(const SaddleState& s, unsigned order, const PrecisionContext& ctx) {
  detail::check_order(order);
  PrecisionScope scope(ctx);
  const HPReal pi = pi_value();
  const HPReal base = 1 + 2 * s.c_n_sq;
  auto terms = detail::expansion_terms(base, order);
  HPReal value = mp::exp(s.r_n) * mp::pow(s.L_n, HPReal(3) / 2) /
                 (mp::sqrt(HPReal(2)) * pi * mp::sqrt(base)) * detail::one_minus_sum(terms);
  return detail::finish(s.n, order, ExpansionKind::full, std::move(value), std::move(terms));
}

inline ExpansionResult p_approx_full(std::uint64_t n, unsigned order, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("p_approx_full: n must be >= 1");
  detail::check_order(order);
  return p_approx_full(solve_tn(n, ctx), order, ctx);
}

inline std::vector<HPReal> expansion_term_table(std::uint64_t n, unsigned order, ExpansionKind kind,
                                                const PrecisionContext& ctx) {
  switch (kind) {
    case ExpansionKind::simplified: return p_approx_simple(n, order, ctx).terms;
    case ExpansionKind::full: return p_approx_full(n, order, ctx).terms;
    case ExpansionKind::hardy_ramanujan: return hardy_ramanujan(n, ctx).terms;
  }
  return {};
}

}  // namespace partasym
