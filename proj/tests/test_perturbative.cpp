#include <gtest/gtest.h>

#include <random>

#include "nekrasov/perturbative.hpp"

using namespace nekrasov;

namespace {

Real R(const char* s) { return Real(s); }

void expect_close(const Real& a, const Real& b, const Real& tol) {
  EXPECT_LE(abs(a - b), tol) << std::setprecision(40) << a << " vs " << b;
}

Real kernel(const Real& x, const Real& e1, const Real& e2, const Real& t) {
  return exp(-x * t) / ((exp(e1 * t) - 1) * (exp(e2 * t) - 1));
}

}  // namespace

TEST(GammaKernel, LaurentMatchesHandExpansion) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int i = 0; i < 30; ++i) {
    Rational x = frac(num(rng), den(rng)), e1 = frac(num(rng), den(rng)), e2 = frac(num(rng), den(rng));
    if (e1 == 0 || e2 == 0) continue;
    auto c = gamma_kernel_laurent(x, e1, e2);
    Rational p = e1 * e2;
    EXPECT_EQ(c[0], 1 / p);
    EXPECT_EQ(c[1], -(x + (e1 + e2) / 2) / p);
    EXPECT_EQ(c[2], (x * x / 2 + x * (e1 + e2) / 2 + p / 4 + (e1 * e1 + e2 * e2) / 12) / p);
  }
}

TEST(GammaKernel, LaurentMatchesKernelNearZero) {
  Real x = R("0.8"), e1 = R("0.3"), e2 = R("-0.45"), t = R("1e-12");
  auto c = gamma_kernel_laurent(x, e1, e2);
  Real rest = kernel(x, e1, e2, t) - c[0] / (t * t) - c[1] / t;
  expect_close(rest, c[2], R("1e-9"));
}

TEST(GammaKernel, RejectsZeroParameter) {
  EXPECT_THROW(gamma_kernel_laurent(Rational(1), Rational(0), Rational(1)), PerturbativeError);
}

// Reference values from the Hurwitz-zeta form of the equal-parameter double zeta function.
TEST(Gamma4d, MatchesEqualParameterReference) {
  struct Case {
    const char *x, *lambda, *value;
  };
  for (const auto& c : {Case{"0.7", "1", "1.446304710697954543918514889004707416847"},
                        Case{"2.3", "1.3", "3.173170159353463265741619048982896907943"},
                        Case{"5", "0.5", "-17.52112915242275986304836876692724894635"}}) {
    auto g = gamma4d(R(c.x), Real(1), Real(1), R(c.lambda));
    expect_close(g.value, R(c.value), R("1e-25"));
    EXPECT_LT(g.error, R("1e-20"));
  }
}

TEST(Gamma4d, SymmetricInParameters) {
  for (auto [e1, e2] : {std::pair<const char*, const char*>{"0.3", "0.45"}, {"-0.2", "0.7"}, {"-0.3", "-0.11"}}) {
    auto a = gamma4d(R("1.1"), R(e1), R(e2), R("1.7"));
    auto b = gamma4d(R("1.1"), R(e2), R(e1), R("1.7"));
    expect_close(a.value, b.value, R("1e-25") * (1 + abs(a.value)));
  }
}

TEST(Gamma4d, HomogeneousUnderCommonRescaling) {
  Real c = R("2.5");
  auto a = gamma4d(c * R("0.9"), c * R("0.4"), c * R("-0.7"), R("1.2"));
  auto b = gamma4d(R("0.9"), R("0.4"), R("-0.7"), R("1.2") / c);
  expect_close(a.value, b.value, R("1e-25") * (1 + abs(a.value)));
}

TEST(Gamma4d, LambdaEntersThroughConstantTerm) {
  Real x = R("1.3"), e1 = R("0.2"), e2 = R("-0.35");
  auto c = gamma_kernel_laurent(x, e1, e2);
  Real diff = gamma4d(x, e1, e2, R("3")).value - gamma4d(x, e1, e2, R("1")).value;
  expect_close(diff, c[2] * log(R("3")), R("1e-25"));
}

TEST(Gamma4d, ScaledValueNearLimit) {
  Real e1 = R("1e-3"), e2 = R("-2.1e-3");
  Real v = e1 * e2 * gamma4d(Real(1), e1, e2, Real(1)).value;
  // First order correction x (e1 + e2) / 2.
  expect_close(v, R("0.75") + (e1 + e2) / 2, R("1e-6"));
  expect_close(v, R("0.75"), R("1e-3"));
}

TEST(Gamma4d, DomainErrors) {
  EXPECT_THROW(gamma4d(Real(0), Real(1), Real(1), Real(1)), PerturbativeError);
  EXPECT_THROW(gamma4d(Real(-1), Real(1), Real(1), Real(1)), PerturbativeError);
  EXPECT_THROW(gamma4d(Real(1), Real(0), Real(1), Real(1)), PerturbativeError);
  EXPECT_THROW(gamma4d(Real(1), Real(1), Real(1), Real(0)), PerturbativeError);
}

TEST(Gamma5d, FirstSeriesTerm) {
  // At beta x > 70 the series is below 1e-30; compare the first term directly at a moderate point.
  Real x = 5, beta = 1, e = 1, lambda = 1;
  auto g = gamma5d(x, beta, e, e, lambda);
  Real poly = (-beta / 6 * pow(x + e, 3) + x * x * log(beta * lambda)) / 2;
  Real first = exp(-x) / ((exp(e) - 1) * (exp(e) - 1));
  Real second = exp(-2 * x) / ((exp(2 * e) - 1) * (exp(2 * e) - 1)) / 2;
  expect_close(g.value - poly - first - second, Real(0), R("1e-6"));
  EXPECT_GT(g.value - poly - first, Real(0));
}

TEST(Gamma5d, LargeArgumentIsPolynomialPart) {
  Real x = 80, beta = 1, e1 = R("0.3"), e2 = R("0.2"), lambda = 2;
  auto g = gamma5d(x, beta, e1, e2, lambda);
  Real poly = (-beta / 6 * pow(x + (e1 + e2) / 2, 3) + x * x * log(beta * lambda)) / (2 * e1 * e2);
  expect_close(g.value, poly, R("1e-30"));
}

TEST(Gamma5d, SeriesInvariantUnderHalvingBeta) {
  Real x = R("1.2"), e1 = R("0.3"), e2 = R("-0.2"), beta = R("0.8"), lambda = R("1.5");
  auto poly = [&](const Real& xx, const Real& b, const Real& a1, const Real& a2) {
    return (-b / 6 * pow(xx + (a1 + a2) / 2, 3) + xx * xx * log(b * lambda)) / (2 * a1 * a2);
  };
  Real s1 = gamma5d(x, beta, e1, e2, lambda).value - poly(x, beta, e1, e2);
  Real s2 = gamma5d(2 * x, beta / 2, 2 * e1, 2 * e2, lambda).value - poly(2 * x, beta / 2, 2 * e1, 2 * e2);
  expect_close(s1, s2, R("1e-30"));
}

TEST(Gamma5d, PolynomialCurvature) {
  // Second x-derivative of the polynomial part: (-beta (x + s/2) + 2 log(beta Lambda)) / (2 e1 e2).
  Real x = R("1.4"), beta = R("0.5"), e1 = R("0.2"), e2 = R("0.3"), lambda = 2, h = R("1e-6");
  auto poly = [&](const Real& xx) {
    return (-beta / 6 * pow(xx + (e1 + e2) / 2, 3) + xx * xx * log(beta * lambda)) / (2 * e1 * e2);
  };
  Real fd = (poly(x + h) - 2 * poly(x) + poly(x - h)) / (h * h);
  Real exact = (-beta * (x + (e1 + e2) / 2) + 2 * log(beta * lambda)) / (2 * e1 * e2);
  expect_close(fd, exact, R("1e-6") * abs(exact));
}

TEST(Gamma5d, SmallBetaApproachesFourDimensionalLimit) {
  // Li3(e^{-y}) = zeta(3) - zeta(2) y + (3/2 - log y) y^2 / 2 + O(y^3).
  Real x = R("1.5"), lambda = 1, beta = R("1e-4");
  Real z3 = R("1.202056903159594285399738161511449990764986292");
  Real z2 = boost::math::constants::pi<Real>() * boost::math::constants::pi<Real>() / 6;
  Real reduced = gamma5d_limit(x, beta, lambda) - z3 / (beta * beta) + z2 * x / beta;
  expect_close(reduced, gamma4d_limit(x, lambda), R("1e-3"));
}

TEST(GammaLimit, ClosedFormValues) {
  expect_close(gamma4d_limit(Real(1), Real(1)), R("0.75"), R("1e-40"));
  expect_close(gamma4d_limit(R("1.5"), R("1.5")), Real(27) / 16, R("1e-40"));
}

TEST(GammaLimit, ExtrapolatedScaledGamma) {
  for (auto [x, lambda] : {std::pair<const char*, const char*>{"1", "1"}, {"1.5", "1"}, {"2", "1"}, {"1", "2"},
                           {"1.5", "2"}, {"2", "2"}}) {
    auto c = check_gamma_limit(R(x), R(lambda), TheorySpec::parse("pure"));
    EXPECT_TRUE(c.pass) << x << " " << lambda;
    EXPECT_LT(c.rel_error, R("1e-6"));
    ASSERT_EQ(c.runs.size(), 2u);
    // The scaled values settle: successive t values differ less and less.
    const auto& v = c.runs[0].values;
    EXPECT_LT(abs(v[2] - v[1]), abs(v[1] - v[0]));
  }
}

TEST(PertLimit, KTimesGammaLimit) {
  for (long k = 1; k <= 3; ++k) {
    auto c = check_pert_limit(k, Real(1), Real(1), TheorySpec::parse("pure"));
    EXPECT_TRUE(c.pass) << k;
    expect_close(c.target, R("0.75") * k, R("1e-40"));
    expect_close(c.limit, R("0.75") * k, R("1e-5") * k);
  }
  auto c = check_pert_limit(1, R("1.5"), R("1.5"), TheorySpec::parse("pure"));
  expect_close(c.target, Real(27) / 16, R("1e-40"));
  EXPECT_TRUE(c.pass);
}

TEST(PertLimit, FiveDimensionalKernel) {
  auto c = check_pert_limit(2, R("1.5"), Real(1), TheorySpec::parse("5d:1/2"));
  EXPECT_TRUE(c.pass);
  expect_close(c.target, 2 * gamma5d_limit(R("1.5"), R("0.5"), Real(1)), R("1e-40"));
}

TEST(PertLimit, UndefinedForChiY) {
  EXPECT_THROW(check_pert_limit(1, Real(1), Real(1), TheorySpec::parse("chiy:1/2")), PerturbativeError);
}

TEST(FPert, C2PureIsSumOverOrderedPairs) {
  auto th = TheorySpec::parse("pure");
  std::vector<Real> p = {R("0.3"), R("0.45"), R("-0.4"), R("0.9")};
  auto ev = f_pert(builtin_surface("C2"), th, 2, p, R("1.2"));
  ASSERT_EQ(ev.terms.size(), 2u);
  EXPECT_FALSE(ev.complete);
  expect_close(ev.prefactor, p[0] * p[1], R("1e-45"));
  int ok = 0;
  for (const auto& t : ev.terms) {
    if (!t.ok) {
      EXPECT_LE(t.x, 0);
      EXPECT_FALSE(t.error.empty());
      continue;
    }
    ++ok;
    EXPECT_EQ(t.label, "a2-a1");
    expect_close(t.value, p[0] * p[1] * gamma4d(R("1.3"), p[0], p[1], R("1.2")).value, R("1e-30"));
  }
  EXPECT_EQ(ok, 1);
}

TEST(FPert, FundamentalTermsAreSubtracted) {
  auto th = TheorySpec::parse("fund:1");
  auto chain = builtin_surface("F1");
  std::vector<Real> p = {R("0.01"), R("-0.02"), R("0.5"), R("1.5"), R("0.25")};
  auto ev = f_pert(chain, th, 2, p, Real(1));
  const auto& li = chain.linf();
  auto at = [&](const EpsWeight& w) { return Real(w.x1) * p[0] + Real(w.x2) * p[1]; };
  Real w = at(li.w), u = at(li.u), v = at(li.v());
  expect_close(ev.prefactor, u * v, R("1e-45"));
  int fund = 0;
  for (const auto& t : ev.terms) {
    if (t.label.find('m') == std::string::npos) continue;
    ++fund;
    ASSERT_TRUE(t.ok) << t.label;
    EXPECT_EQ(t.sign, -1);
    Real expected = -u * v * (gamma4d(t.x, -w, u, Real(1)).value + gamma4d(t.x, w, v, Real(1)).value);
    expect_close(t.value, expected, R("1e-25"));
  }
  EXPECT_EQ(fund, 2);
}

TEST(FPert, AdjointIncludesDiagonalMassTerms) {
  auto th = TheorySpec::parse("adjoint");
  std::vector<Real> p = {R("0.01"), R("-0.037"), R("0.5"), R("0.7"), R("1.1")};
  auto ev = f_pert(builtin_surface("F2"), th, 2, p, Real(1));
  int diagonal = 0;
  for (const auto& t : ev.terms)
    if (t.label == "m+a1-a1" || t.label == "m+a2-a2") {
      ++diagonal;
      EXPECT_TRUE(t.ok) << t.error;
      expect_close(t.x, R("1.1"), R("1e-45"));
    }
  EXPECT_EQ(diagonal, 2);
  EXPECT_EQ(ev.terms.size(), 6u);
}

TEST(FPert, PointSizeChecked) {
  EXPECT_THROW(f_pert(builtin_surface("F1"), TheorySpec::parse("pure"), 2, {Real(1)}, Real(1)), PerturbativeError);
}
