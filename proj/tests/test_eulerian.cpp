#include "partasym/eulerian.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace partasym {
namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(EulerianPoly, FirstPolynomials) {
  EXPECT_EQ(eulerian_poly(0).coefficients(), ints({1}));
  EXPECT_EQ(eulerian_poly(1).coefficients(), ints({0, 1}));
  EXPECT_EQ(eulerian_poly(2).coefficients(), ints({0, 1, 1}));
  EXPECT_EQ(eulerian_poly(3).coefficients(), ints({0, 1, 4, 1}));
  EXPECT_EQ(eulerian_poly(4).coefficients(), ints({0, 1, 11, 11, 1}));
}

TEST(EulerianPoly, StructuralInvariants) {
  BigInt fact = 1;
  for (unsigned j = 1; j <= 20; ++j) {
    fact *= j;
    const EulerianPoly a = eulerian_poly(j);
    const auto& c = a.coefficients();
    ASSERT_EQ(c.size(), j + 1);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[1], 1);
    BigInt sum = 0;
    for (const auto& v : c) sum += v;
    EXPECT_EQ(sum, fact) << "A_" << j << "(1) != " << j << "!";
    for (std::size_t k = 1; k <= j; ++k) EXPECT_EQ(c[k], c[j + 1 - k]) << "palindrome j=" << j;
  }
}

TEST(EulerianPoly, CapIsEnforced) {
  EXPECT_NO_THROW(eulerian_poly(kEulerianCap));
  EXPECT_THROW(eulerian_poly(kEulerianCap + 1), ResourceLimitError);
}

TEST(EulerianEval, SmallCases) {
  const PrecisionContext ctx(30);
  PrecisionScope scope(ctx);
  EXPECT_EQ(eulerian_eval(1, HPReal("0.5"), ctx), HPReal("0.5"));
  EXPECT_EQ(eulerian_eval(2, HPReal("0.5"), ctx), HPReal("0.75"));
}

// A_j(t)/(1-t)^{j+1} = sum_k k^j t^k, with the omitted tail bounded
// geometrically once the term ratio (1+1/K)^j t is below one.
TEST(EulerianEval, MatchesPowerMomentSeries) {
  const PrecisionContext ctx(40);
  PrecisionScope scope(ctx);
  for (const char* ts : {"0.1", "0.5", "0.9"}) {
    const HPReal t(ts);
    for (unsigned j = 1; j <= 10; ++j) {
      const std::size_t K = 3000;
      const HPReal partial = oracle::power_moment_series(j, t, K);
      const HPReal last = mp::pow(HPReal(K), j) * mp::pow(t, K);
      const HPReal rho = mp::pow(1 + HPReal(1) / K, j) * t;
      const HPReal tail = geometric_tail_bound(last * rho, rho);
      const HPReal closed = eulerian_eval(j, t, ctx) / mp::pow(1 - t, j + 1);
      EXPECT_LE(mp::abs(closed - partial), tail + HPReal("1e-45") * closed) << "t=" << ts << " j=" << j;
    }
  }
}

}  // namespace
}  // namespace partasym
