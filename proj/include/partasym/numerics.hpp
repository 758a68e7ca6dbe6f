#pragma once

// Precision contract shared by every analytic routine: working precision,
// series truncation and comparison tolerances.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>

namespace partasym {

namespace mp = boost::multiprecision;

using BigInt = mp::mpz_int;
using Rational = mp::mpq_rational;
using HPReal = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class InputTooLargeError : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// Immutable description of how precisely analytic quantities are evaluated.
///
/// `decimal_digits` is the number of significant digits promised for every
/// result; the arithmetic itself runs with `kGuardDigits` extra digits.
/// Series are summed until a certified tail bound drops below
/// 10^-(decimal_digits+5) of the partial sum, and results are compared with
/// relative tolerance 10^-(decimal_digits-10).
class PrecisionContext {
 public:
  static constexpr unsigned kMinDigits = 20;
  static constexpr unsigned kGuardDigits = 20;
  static constexpr unsigned kDefaultTailSafety = 30;
  static constexpr std::size_t kDefaultMaxSeriesTerms = 5'000'000;

  explicit PrecisionContext(unsigned decimal_digits = 50,
                            unsigned tail_safety = kDefaultTailSafety,
                            std::size_t max_series_terms = kDefaultMaxSeriesTerms)
      : decimal_digits_(decimal_digits),
        tail_safety_(tail_safety),
        max_series_terms_(max_series_terms) {
    if (decimal_digits_ < kMinDigits) {
      throw DomainError("PrecisionContext: decimal_digits must be >= " +
                        std::to_string(kMinDigits));
    }
    if (tail_safety_ == 0 || max_series_terms_ == 0) {
      throw DomainError("PrecisionContext: tail_safety and max_series_terms must be positive");
    }
  }

  unsigned decimal_digits() const noexcept { return decimal_digits_; }
  unsigned tail_safety() const noexcept { return tail_safety_; }
  std::size_t max_series_terms() const noexcept { return max_series_terms_; }
  unsigned working_digits() const noexcept { return decimal_digits_ + kGuardDigits; }

  PrecisionContext with_digits(unsigned digits) const {
    return PrecisionContext(digits, tail_safety_, max_series_terms_);
  }
  PrecisionContext escalated(unsigned extra_digits) const {
    return with_digits(decimal_digits_ + extra_digits);
  }

  // 10^-(decimal_digits - 10)
  HPReal comparison_tolerance() const { return power_of_ten(-static_cast<long>(decimal_digits_) + 10); }
  // 10^-(decimal_digits + 5)
  HPReal truncation_tolerance() const { return power_of_ten(-static_cast<long>(decimal_digits_) - 5); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  static HPReal power_of_ten(long e) { return mp::pow(HPReal(10), e); }

  unsigned decimal_digits_;
  unsigned tail_safety_;
  std::size_t max_series_terms_;
};

namespace detail {
inline std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace detail

/// Sets the working precision of newly created HPReal values for the current
/// scope. Boost's default precision for variable-precision mpfr numbers is
/// process-wide, so the scope also holds a process-wide lock; concurrent
/// evaluations are serialized rather than allowed to clobber each other.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.working_digits()) {}
  explicit PrecisionScope(unsigned digits10)
      : lock_(detail::precision_mutex()), saved_(HPReal::default_precision()) {
    HPReal::default_precision(digits10);
  }
  ~PrecisionScope() { HPReal::default_precision(saved_); }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// Re-rounds `x` to the precision currently in effect.
inline HPReal at_current_precision(const HPReal& x) {
  return HPReal(x, HPReal::default_precision());
}

inline HPReal pi_value() {
  HPReal r(0);
  r.precision(HPReal::default_precision());
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline HPReal to_real(const BigInt& v) { return HPReal(v); }

inline HPReal to_real(const Rational& q) {
  return HPReal(BigInt(mp::numerator(q))) / HPReal(BigInt(mp::denominator(q)));
}

inline void require_finite(const HPReal& x, const char* what) {
  if (!mp::isfinite(x)) {
    throw DomainError(std::string(what) + ": non-finite result");
  }
}

/// Precision needed to carry p(n)-sized quantities of order e^{r_n} with
/// `order + tail_safety` digits to spare beyond the integer part.
inline PrecisionContext context_for_n(std::uint64_t n, unsigned order,
                                      unsigned tail_safety = PrecisionContext::kDefaultTailSafety) {
  if (n < 1) throw DomainError("context_for_n: n must be >= 1");
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double r = std::sqrt(2.0L * pi * pi / 3.0L * (static_cast<long double>(n) - 1.0L / 24.0L) + 0.25L);
  const auto magnitude = static_cast<unsigned>(std::ceil(r * 0.434294481903251827651128918916605082L));
  const unsigned digits = std::max(magnitude + order + tail_safety, PrecisionContext::kMinDigits);
  return PrecisionContext(digits, tail_safety);
}

/// Upper bound first/(1-ratio) on the tail of a series dominated termwise by
/// first, first*ratio, first*ratio^2, ...
inline HPReal geometric_tail_bound(const HPReal& first_omitted_term, const HPReal& ratio) {
  if (!(ratio > 0) || !(ratio < 1)) {
    throw DomainError("geometric_tail_bound: ratio must lie in (0,1)");
  }
  return mp::abs(first_omitted_term) / (1 - ratio);
}

/// Sums positive terms a_1 + a_2 + ... where a_{l+1}/a_l <= (1+1/l)^growth * x
/// for all l, with x in (0,1). `term(l, y)` receives y = x^l.
///
/// Stops once the geometric bound on the omitted tail falls below the
/// context's truncation tolerance relative to the partial sum. The ratio bound
/// is only trusted once it is below (1+x)/2.
template <class TermFn>
HPReal sum_dominated_series(TermFn&& term, const HPReal& x, unsigned growth,
                            const PrecisionContext& ctx, const char* what) {
  const HPReal tol = ctx.truncation_tolerance();
  const HPReal ratio_cap = (1 + x) / 2;
  HPReal sum(0);
  HPReal y(1);
  for (std::size_t l = 1; l <= ctx.max_series_terms(); ++l) {
    y *= x;
    const HPReal a = term(l, y);
    sum += a;
    const HPReal rho = mp::pow(1 + HPReal(1) / HPReal(l), growth) * x;
    if (rho < ratio_cap) {
      if (a == 0 || geometric_tail_bound(a * rho, rho) <= tol * sum) {
        return sum;
      }
    }
  }
  throw ConvergenceError(std::string(what) + ": series did not converge within " +
                         std::to_string(ctx.max_series_terms()) + " terms");
}

/// |a-b| <= tol * max(|a|,|b|)
inline bool relatively_close(const HPReal& a, const HPReal& b, const HPReal& tol) {
  const HPReal aa = mp::abs(a), ab = mp::abs(b);
  return mp::abs(a - b) <= tol * (aa > ab ? aa : ab);
}

}  // namespace partasym
