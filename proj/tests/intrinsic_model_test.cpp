#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minkhelix/errors.hpp"
#include "minkhelix/intrinsic_model.hpp"
#include "minkhelix/quadrature.hpp"
#include "test_support.hpp"

namespace minkhelix {
namespace {

TEST(AdaptiveSimpson, MatchesAnalyticIntegrals) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::cos(x); }, 0.0, 1.0, 1e-12), std::sin(1.0), 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double x) { return 1.0 / x; }, 1.0, std::exp(1.0), 1e-12), 1.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 10.0, 1e-12), std::atan(10.0),
              1e-12);
  // Reversed bounds negate.
  EXPECT_NEAR(adaptive_simpson([](double x) { return x * x; }, 2.0, 0.0, 1e-12), -8.0 / 3.0, 1e-12);
  EXPECT_EQ(adaptive_simpson([](double x) { return x; }, 1.0, 1.0, 1e-12), 0.0);
}

TEST(AdaptiveSimpson, SymmetricIntegrandIsNotAcceptedAtTopLevel) {
  // sin over a full period makes S(a,b) = S(a,m) + S(m,b) = 0 at the first
  // level; the result must still be right for an asymmetric integrand sharing those nodes.
  const double v = adaptive_simpson([](double x) { return std::sin(x) + x * x * x * x; }, 0.0, 2 * std::numbers::pi,
                                    1e-10);
  EXPECT_NEAR(v, std::pow(2 * std::numbers::pi, 5) / 5.0, 1e-8);
}

TEST(AdaptiveSimpson, ReportsFailureOnSingularIntegrand) {
  SimpsonOptions opt;
  opt.abs_tol = 1e-12;
  opt.max_depth = 10;
  EXPECT_THROW(adaptive_simpson([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt), QuadratureFailure);
}

TEST(IntrinsicModel, RejectsInvalidModels) {
  EXPECT_THROW(IntrinsicModel::from_text("0", "0", 0, 1), InvalidModel);
  EXPECT_THROW(IntrinsicModel::from_text("-1", "1", 0, 1), InvalidModel);
  EXPECT_THROW(IntrinsicModel::from_text("1", "s", 0, 1), InvalidModel);  // tau(0) = 0
  EXPECT_THROW(IntrinsicModel::from_text("1", "1", 1, 1), InvalidModel);
  EXPECT_THROW(IntrinsicModel::from_text("1", "1", 0, 1, 2.0), InvalidModel);
  EXPECT_THROW(IntrinsicModel::from_text("ln(s)", "1", -1, 1), EvalError);
  EXPECT_THROW(IntrinsicModel::from_text("2 + * 3", "1", 0, 1), ParseError);
  EXPECT_NO_THROW(IntrinsicModel::from_text("1", "s", 1, 2));
}

TEST(CheckSlope, ConstantRatioExamples) {
  const SlopeReport w = check_slope(IntrinsicModel::from_text("0.75", "1.25", 0, 1));
  EXPECT_TRUE(w.is_general_helix);
  EXPECT_NEAR(w.ratio, 5.0 / 3.0, 1e-15);

  const SlopeReport ex2 = check_slope(IntrinsicModel::from_text("0.75/s", "1.25/s", 1, 7));
  EXPECT_TRUE(ex2.is_general_helix);
  EXPECT_NEAR(ex2.ratio, 5.0 / 3.0, 1e-14);

  const SlopeReport varying = check_slope(IntrinsicModel::from_text("1", "s", 1, 2));
  EXPECT_FALSE(varying.is_general_helix);
  EXPECT_GT(varying.max_ratio_deviation, 0.1);
}

TEST(CheckSlope, ScaleConsistent) {
  const char* scales[] = {"1", "3.5", "(s^2+1)", "exp(s)"};
  for (const char* c : scales) {
    const std::string k = std::string("0.75*") + c;
    const std::string t = std::string("1.25*") + c;
    const SlopeReport r = check_slope(IntrinsicModel::from_text(k, t, 0, 2));
    EXPECT_TRUE(r.is_general_helix) << c;
    EXPECT_NEAR(r.ratio, 5.0 / 3.0, 1e-14) << c;
  }
}

TEST(CheckSlope, PropagatesEvalErrorWithOffendingPoint) {
  // Valid on the 257-point validation grid of [0, 1], singular on a finer grid.
  const IntrinsicModel m = IntrinsicModel::from_text("1", "1/(s - 0.5 - 1/512)", 0, 1);
  try {
    check_slope(m, 513);
    FAIL() << "expected EvalError";
  } catch (const EvalError& e) {
    EXPECT_NE(std::string(e.what()).find("s = 0.50195"), std::string::npos) << e.what();
  }
}

TEST(TurningAngle, Examples) {
  EXPECT_NEAR(turning_angle(IntrinsicModel::from_text("1", "2", 0, 3), 2.5), 2.5, 1e-12);
  EXPECT_NEAR(turning_angle(IntrinsicModel::from_text("0.75/s", "1.25/s", 1, 3), std::exp(1.0)), 0.75, 1e-10);
  // 0.75 * atan(1) = 0.75 * pi / 4.
  EXPECT_NEAR(turning_angle(IntrinsicModel::from_text("0.75/(s^2+1)", "1.25/(s^2+1)", 0, 2), 1.0),
              0.58904862254808621, 1e-10);
}

TEST(TurningAngle, AnchoredAtReferencePoint) {
  const IntrinsicModel m = IntrinsicModel::from_text("0.75/s", "1.25/s", 1, 4, 2.0);
  EXPECT_EQ(turning_angle(m, 2.0), 0.0);
  EXPECT_NEAR(turning_angle(m, 1.0), -0.75 * std::log(2.0), 1e-10);
  EXPECT_THROW(turning_angle(m, 5.0), DomainError);
}

TEST(TurningAngle, AdditiveAndMonotone) {
  const IntrinsicModel m = IntrinsicModel::from_text("0.75/(s^2+1) + 0.1*sin(s)^2", "1", 0, 10);
  auto g = testing::rng(5);
  const double tol = 1e-10;
  for (int i = 0; i < 200; ++i) {
    double a = testing::uniform(g, 0, 10), b = testing::uniform(g, 0, 10);
    if (a > b) std::swap(a, b);
    const double direct = adaptive_simpson([&](double u) { return m.kappa(u); }, a, b, tol);
    EXPECT_NEAR(turning_angle(m, b, tol) - turning_angle(m, a, tol), direct, 2 * tol);
  }
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double theta = turning_angle(m, 0.1 * i);
    EXPECT_GT(theta, prev);
    prev = theta;
  }
}

TEST(HelixPhase, Examples) {
  const IntrinsicModel w = IntrinsicModel::from_text("0.75", "1.25", 0, 2);
  EXPECT_NEAR(helix_phase(w, testing::kLn2, 1.0), 1.0, 1e-12);
  const IntrinsicModel ex2 = IntrinsicModel::from_text("0.75/s", "1.25/s", 1, 8);
  EXPECT_NEAR(helix_phase(ex2, testing::kLn2, std::exp(2.0)), 2.0, 1e-10);
  EXPECT_EQ(helix_phase(ex2, testing::kLn2, 1.0), 0.0);
  EXPECT_THROW(helix_phase(ex2, 0.0, 2.0), DomainError);
}

TEST(HelixPhase, ExampleTwoTracksLogarithm) {
  const IntrinsicModel ex2 = IntrinsicModel::from_text("sinh(ln(2))/s", "cosh(ln(2))/s", 1, std::exp(2.0));
  const double tol = 1e-10;
  for (int i = 0; i <= 50; ++i) {
    const double s = 1.0 + (std::exp(2.0) - 1.0) * i / 50.0;
    EXPECT_LE(std::abs(helix_phase(ex2, testing::kLn2, s, tol) - std::log(s)), tol);
  }
}

}  // namespace
}  // namespace minkhelix
