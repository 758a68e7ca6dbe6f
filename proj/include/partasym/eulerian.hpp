#pragma once

// Eulerian polynomials A_j(t), defined by sum_{k>=0} k^j t^k = A_j(t)/(1-t)^{j+1}.

#include "partasym/numerics.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <vector>

namespace partasym {

inline constexpr unsigned kEulerianCap = 64;

class EulerianPoly {
 public:
  EulerianPoly(unsigned index, std::vector<BigInt> coefficients)
      : index_(index), coefficients_(std::move(coefficients)) {}

  unsigned index() const noexcept { return index_; }
  // Constant term first.
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

  /// Coefficients rounded once to the precision currently in effect.
  std::vector<HPReal> real_coefficients() const {
    std::vector<HPReal> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) out.push_back(to_real(c));
    return out;
  }

 private:
  unsigned index_;
  std::vector<BigInt> coefficients_;
};

/// Horner evaluation, constant term first.
inline HPReal horner(std::span<const HPReal> coefficients, const HPReal& x) {
  HPReal acc(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

namespace detail {

// A_{j+1}(t) = t(1-t) A_j'(t) + (j+1) t A_j(t), coefficientwise:
//   b_m = m a_m + (j + 2 - m) a_{m-1}.
inline std::vector<BigInt> next_eulerian(const std::vector<BigInt>& a, unsigned j) {
  std::vector<BigInt> b(a.size() + 1);
  for (std::size_t m = 0; m < b.size(); ++m) {
    BigInt v = 0;
    if (m < a.size()) v += BigInt(m) * a[m];
    if (m >= 1) v += BigInt(static_cast<long>(j) + 2 - static_cast<long>(m)) * a[m - 1];
    b[m] = std::move(v);
  }
  return b;
}

class EulerianCache {
 public:
  std::shared_ptr<const EulerianPoly> get(unsigned j) {
    {
      std::shared_lock lock(mutex_);
      if (j < polys_.size()) return polys_[j];
    }
    std::unique_lock lock(mutex_);
    if (polys_.empty()) {
      polys_.push_back(std::make_shared<const EulerianPoly>(0, std::vector<BigInt>{1}));
    }
    while (polys_.size() <= j) {
      const unsigned prev = static_cast<unsigned>(polys_.size() - 1);
      polys_.push_back(std::make_shared<const EulerianPoly>(
          prev + 1, next_eulerian(polys_.back()->coefficients(), prev)));
    }
    return polys_[j];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::shared_ptr<const EulerianPoly>> polys_;
};

inline EulerianCache& eulerian_cache() {
  static EulerianCache cache;
  return cache;
}

}  // namespace detail

inline EulerianPoly eulerian_poly(unsigned j, unsigned cap = kEulerianCap) {
  if (j > cap) {
    throw ResourceLimitError("eulerian_poly: index " + std::to_string(j) + " exceeds cap " +
                             std::to_string(cap));
  }
  return *detail::eulerian_cache().get(j);
}

inline HPReal eulerian_eval(unsigned j, const HPReal& t, const PrecisionContext& ctx) {
  const EulerianPoly poly = eulerian_poly(j);
  PrecisionScope scope(ctx);
  const auto coeffs = poly.real_coefficients();
  return horner(coeffs, at_current_precision(t));
}

}  // namespace partasym
