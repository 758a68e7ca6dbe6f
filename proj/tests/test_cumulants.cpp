#include "partasym/cumulants.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace partasym {
namespace {

const PrecisionContext kCtx(50);

// Reference values from an independent 60-digit evaluation of the Lambert
// series sum_j j^k t^j / (1 - t^j) forms.
const char* const kLogF05 = "1.24206209481241494579784548189462966897340397825042588462714";
const char* const kLogF09 = "13.5639214962945337641130835717540048255660071476776946828211";
const char* const kKappa1At05 = "2.74403388875948836048021489149227216431142898131963931784853";
const char* const kSigmaAt05 = "2.97288884259926536541761173728224962965957111339223329468217";
const char* const kKappa3At03 = "4.12414108218863472359818304039181507233535769289276164960713";

HPReal tol() { return kCtx.comparison_tolerance(); }

TEST(LogFDirect, AgainstReferenceAndPartialSum) {
  PrecisionScope scope(kCtx);
  const HPReal v = log_f_direct(HPReal("0.5"), kCtx);
  EXPECT_TRUE(relatively_close(v, HPReal(kLogF05), HPReal("1e-55")));
  const HPReal brute = oracle::log_f_lambert(HPReal("0.5"), 200);
  EXPECT_TRUE(relatively_close(v, brute, tol()));
}

TEST(LogFDirect, LeadingBehaviourNearZero) {
  PrecisionScope scope(kCtx);
  const HPReal t("1e-8");
  EXPECT_LT(mp::abs(log_f_direct(t, kCtx) - t) / t, HPReal("1e-7"));
  EXPECT_EQ(log_f_direct(HPReal(0), kCtx), 0);
}

TEST(LogFDirect, DomainAndConvergenceErrors) {
  PrecisionScope scope(kCtx);
  EXPECT_THROW(log_f_direct(HPReal(-1) / 10, kCtx), DomainError);
  EXPECT_THROW(log_f_direct(HPReal(1), kCtx), DomainError);
  const PrecisionContext tight(50, 30, 1000);
  EXPECT_THROW(log_f_direct(HPReal("0.9999"), tight), ConvergenceError);
}

TEST(LogF, FunctionalEquationAgreesWithDirectSeries) {
  PrecisionScope scope(kCtx);
  const HPReal t_star = self_dual_point(kCtx);
  EXPECT_TRUE(relatively_close(log_f(t_star, kCtx).value, log_f_direct(t_star, kCtx), tol()));
  for (const char* ts : {"0.5", "0.9", "0.99"}) {
    const HPReal t(ts);
    const LogFValue lf = log_f(t, kCtx);
    EXPECT_TRUE(relatively_close(lf.value, log_f_direct(t, kCtx), tol())) << ts;
    EXPECT_GT(lf.value, 0);
  }
  EXPECT_TRUE(relatively_close(log_f(HPReal("0.9"), kCtx).value, HPReal(kLogF09), tol()));
}

TEST(LogF, E0Bound) {
  PrecisionScope scope(kCtx);
  const HPReal pi = pi_value();
  for (const char* ts : {"0.3", "0.9", "0.99"}) {
    const HPReal t(ts);
    const LogFValue lf = log_f(t, kCtx);
    const HPReal L = -mp::log(t);
    EXPECT_GT(lf.e0, 0) << ts;
    EXPECT_LT(lf.e0, 8 * mp::exp(-4 * pi * pi / L)) << ts;
  }
}

TEST(LogF, E0BelowSelfDualPointIsTheDualSeries) {
  PrecisionScope scope(kCtx);
  const HPReal pi = pi_value();
  const HPReal t("0.001");
  const LogFValue lf = log_f(t, kCtx);
  const HPReal dual = mp::exp(-4 * pi * pi / -mp::log(t));
  EXPECT_TRUE(relatively_close(lf.e0, log_f_direct(dual, kCtx), tol()));
}

TEST(LogF, SelfDualResidualVanishes) {
  PrecisionScope scope(kCtx);
  EXPECT_LT(functional_equation_residual(self_dual_point(kCtx), kCtx), tol());
  EXPECT_LT(functional_equation_residual(HPReal("0.7"), kCtx), tol());
}

TEST(KappaDirect, RamanujanValueAtSelfDualPoint) {
  PrecisionScope scope(kCtx);
  const HPReal pi = pi_value();
  const HPReal expected = HPReal(1) / 24 - 1 / (8 * pi);
  const CumulantValue k = kappa_direct(1, self_dual_point(kCtx), kCtx);
  EXPECT_TRUE(relatively_close(k.value, expected, tol()));
  EXPECT_EQ(k.method, CumulantMethod::direct_series);
}

TEST(KappaDirect, FirstCumulantAtOneHalf) {
  PrecisionScope scope(kCtx);
  const HPReal v = kappa_direct(1, HPReal("0.5"), kCtx).value;
  EXPECT_TRUE(relatively_close(v, HPReal(kKappa1At05), HPReal("1e-55")));
  EXPECT_TRUE(relatively_close(v, oracle::kappa1_lambert(HPReal("0.5"), 250), tol()));
}

TEST(KappaDirect, ThirdCumulantReference) {
  PrecisionScope scope(kCtx);
  EXPECT_TRUE(relatively_close(kappa_direct(3, HPReal("0.3"), kCtx).value, HPReal(kKappa3At03), HPReal("1e-35")));
}

TEST(KappaDirect, SmallArgument) {
  PrecisionScope scope(kCtx);
  const HPReal t("1e-9");
  EXPECT_LT(mp::abs(kappa_direct(2, t, kCtx).value - t) / t, HPReal("1e-8"));
  EXPECT_LT(mp::abs(sigma(t, kCtx) - mp::sqrt(t)) / mp::sqrt(t), HPReal("1e-8"));
}

TEST(KappaDirectAlt, AgreesWithPrimarySeries) {
  PrecisionScope scope(kCtx);
  for (const char* ts : {"0.2", "0.5", "0.8"}) {
    for (unsigned j = 2; j <= 8; ++j) {
      const HPReal t(ts);
      EXPECT_TRUE(relatively_close(kappa_direct(j, t, kCtx).value, kappa_direct_alt(j, t, kCtx).value, tol()))
          << "t=" << ts << " j=" << j;
    }
  }
  EXPECT_TRUE(relatively_close(kappa_direct(3, HPReal("0.3"), kCtx).value,
                               kappa_direct_alt(3, HPReal("0.3"), kCtx).value, tol()));
  EXPECT_THROW(kappa_direct_alt(1, HPReal("0.5"), kCtx), DomainError);
}

TEST(KappaDirectAlt, ExplicitSecondCumulantForm) {
  PrecisionScope scope(kCtx);
  const HPReal t("0.5");
  const HPReal explicit_form = oracle::partial_sum(300, [&](std::size_t l) {
    const HPReal y = mp::pow(t, l);
    return HPReal(l) * (y + y * y) / mp::pow(1 - y, 3);
  });
  EXPECT_TRUE(relatively_close(kappa_direct_alt(2, t, kCtx).value, explicit_form, tol()));
  EXPECT_TRUE(relatively_close(kappa_direct(2, t, kCtx).value, oracle::kappa2_lambert(t, 300), tol()));
}

TEST(Kappa, MethodsAgree) {
  PrecisionScope scope(kCtx);
  for (const char* ts : {"0.6", "0.9", "0.99"}) {
    for (unsigned j = 1; j <= 6; ++j) {
      const HPReal t(ts);
      const CumulantValue fe = kappa(j, t, kCtx);
      EXPECT_EQ(fe.method, CumulantMethod::functional_equation);
      EXPECT_TRUE(relatively_close(fe.value, kappa_direct(j, t, kCtx).value, tol())) << "t=" << ts << " j=" << j;
      EXPECT_GT(fe.value, 0);
    }
  }
}

TEST(Kappa, DelegatesBelowSelfDualPoint) {
  PrecisionScope scope(kCtx);
  const CumulantValue k = kappa(2, HPReal("0.001"), kCtx);
  EXPECT_EQ(k.method, CumulantMethod::direct_series);
  EXPECT_EQ(k.value, kappa_direct(2, HPReal("0.001"), kCtx).value);
}

TEST(Kappa, DegenerateAndInvalidArguments) {
  PrecisionScope scope(kCtx);
  EXPECT_EQ(kappa(3, HPReal(0), kCtx).value, 0);
  EXPECT_EQ(log_f(HPReal(0), kCtx).value, 0);
  EXPECT_THROW(kappa(0, HPReal("0.5"), kCtx), DomainError);
  EXPECT_THROW(kappa(1, HPReal("1.5"), kCtx), DomainError);
  EXPECT_THROW(kappa(1, HPReal(-1), kCtx), DomainError);
}

TEST(Kappa, FirstCumulantIncreasing) {
  PrecisionScope scope(kCtx);
  HPReal prev(0);
  for (int i = 1; i <= 19; ++i) {
    const HPReal v = kappa(1, HPReal(i) / 20, kCtx).value;
    EXPECT_GT(v, prev) << i;
    prev = v;
  }
}

// t d/dt kappa_j = kappa_{j+1}; the central difference error is O(delta^2).
TEST(Kappa, RecurrenceByCentralDifferences) {
  PrecisionScope scope(kCtx);
  const HPReal t("0.5");
  for (unsigned j = 1; j <= 3; ++j) {
    const HPReal target = kappa(j + 1, t, kCtx).value;
    auto err = [&](const HPReal& delta) {
      const HPReal fd = t / delta * (kappa(j, t + delta / 2, kCtx).value - kappa(j, t - delta / 2, kCtx).value);
      return mp::abs(fd - target);
    };
    const HPReal e1 = err(HPReal("1e-3"));
    const HPReal e2 = err(HPReal("5e-4"));
    const HPReal order = mp::log(e1 / e2) / mp::log(HPReal(2));
    EXPECT_NEAR(order.convert_to<double>(), 2.0, 0.05) << "j=" << j;
  }
}

TEST(ETerm, MatchesSubtractionOfLeadingTerms) {
  PrecisionScope scope(kCtx);
  const HPReal pi = pi_value();
  const HPReal t("0.9");
  const HPReal L = -mp::log(t);
  const HPReal expected = kappa_direct(2, t, kCtx).value - (pi * pi / (3 * L * L * L) - 1 / (2 * L * L));
  const HPReal e2 = e_term(2, t, kCtx);
  // E_2(0.9) ~ 1e-150, far below the cancellation floor of the subtraction.
  EXPECT_LT(mp::abs(e2 - expected), tol() * kappa_direct(2, t, kCtx).value);
  EXPECT_THROW(e_term(1, t, kCtx), DomainError);
}

TEST(ETerm, SubtractionAtModerateArgument) {
  PrecisionScope scope(kCtx);
  const HPReal pi = pi_value();
  const HPReal t("0.1");
  const HPReal L = -mp::log(t);
  const HPReal expected = kappa_direct(2, t, kCtx).value - (pi * pi / (3 * L * L * L) - 1 / (2 * L * L));
  EXPECT_TRUE(relatively_close(e_term(2, t, kCtx), expected, tol()));
}

TEST(ETerm, FiniteAtSelfDualPoint) {
  PrecisionScope scope(kCtx);
  const HPReal e = e_term(2, self_dual_point(kCtx), kCtx);
  EXPECT_TRUE(mp::isfinite(e));
  EXPECT_NE(e, 0);
}

// |E_j(t)| L^{2j} e^{4 pi^2/L} stays bounded as t -> 1. Empirically it tends
// to (4 pi^2)^j from below; C_2 = 2e3 and C_3 = 1e5 are the fitted constants.
TEST(ETerm, ScaledDecayIsBounded) {
  PrecisionScope scope(kCtx);
  const HPReal pi = pi_value();
  const std::pair<unsigned, const char*> fitted[] = {{2u, "2e3"}, {3u, "1e5"}};
  for (const auto& [j, c] : fitted) {
    for (const char* ts : {"0.9", "0.95", "0.99", "0.999"}) {
      const HPReal t(ts);
      const HPReal L = -mp::log(t);
      const HPReal scaled = mp::abs(e_term(j, t, kCtx)) * mp::pow(L, 2 * j) * mp::exp(4 * pi * pi / L);
      EXPECT_LT(scaled, HPReal(c)) << "j=" << j << " t=" << ts;
      EXPECT_GT(scaled, HPReal(c) / 100) << "j=" << j << " t=" << ts;
    }
  }
}

TEST(Sigma, Values) {
  PrecisionScope scope(kCtx);
  EXPECT_TRUE(relatively_close(sigma(HPReal("0.5"), kCtx), HPReal(kSigmaAt05), HPReal("1e-55")));
  EXPECT_TRUE(relatively_close(sigma(HPReal("0.99"), kCtx),
                               mp::sqrt(kappa_direct(2, HPReal("0.99"), kCtx).value), tol()));
}

TEST(Cumulants, PrecisionEscalationIsStable) {
  const PrecisionContext hi = kCtx.escalated(10);
  PrecisionScope scope(hi);
  const HPReal bound = mp::pow(HPReal(10), -static_cast<int>(kCtx.decimal_digits()) + 2);
  for (const char* ts : {"0.3", "0.9", "0.99"}) {
    const HPReal t(ts);
    const HPReal a = kappa(3, t, kCtx).value;
    const HPReal b = kappa(3, t, hi).value;
    EXPECT_LT(mp::abs(a - b) / b, bound) << ts;
    const HPReal la = log_f(t, kCtx).value;
    const HPReal lb = log_f(t, hi).value;
    EXPECT_LT(mp::abs(la - lb) / lb, bound) << ts;
  }
}

}  // namespace
}  // namespace partasym
