#include <gtest/gtest.h>

#include <random>

#include "nekrasov/classes.hpp"

using namespace nekrasov;

namespace {

SymbolTable tab1() { return SymbolTable(1, 1); }  // eps1 eps2 a1 m1

LinearForm gen(const SymbolTable& t, int i) { return LinearForm::generator(t.size(), i); }

Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(abs(b), Real(1e-300)); }

std::vector<Real> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-40, 40);
  std::vector<Real> p;
  for (int i = 0; i < n; ++i) {
    int v = d(rng);
    p.push_back(Real(v == 0 ? 7 : v) / 17);
  }
  return p;
}

std::vector<LinearForm> random_weights(std::mt19937_64& rng, int n, int count) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<LinearForm> ws;
  for (int k = 0; k < count; ++k) {
    LinearForm f(n);
    for (int i = 0; i < n; ++i) f[i] = d(rng);
    if (f.is_zero()) f[0] = 1;
    ws.push_back(f);
  }
  return ws;
}

}  // namespace

TEST(Classes, OneIsOne) {
  auto t = tab1();
  EXPECT_TRUE(eval_class(MultClassSpec::one(), {gen(t, 0), gen(t, 2)}) == RatFunc(1));
  EXPECT_TRUE(eval_class(MultClassSpec::one(), {}) == RatFunc(1));
}

TEST(Classes, EulerIsProductOfWeights) {
  auto t = tab1();
  RatFunc e = eval_class(MultClassSpec::euler(), {gen(t, 0), gen(t, 1)});
  EXPECT_TRUE(e == RatFunc(SparsePoly::var(0) * SparsePoly::var(1)));
}

TEST(Classes, LinearShiftBySymbol) {
  auto t = tab1();
  RatFunc e = eval_class(MultClassSpec::linear_shift(t.m(0)), {gen(t, t.a(0))});
  EXPECT_TRUE(e == RatFunc(SparsePoly::var(t.m(0)) + SparsePoly::var(t.a(0))));
  RatFunc c = eval_class(MultClassSpec::linear_shift(frac(3, 2)), {gen(t, 0)});
  EXPECT_TRUE(c == RatFunc(SparsePoly::var(0) + SparsePoly(frac(3, 2))));
}

TEST(Classes, TranscendentalRejectsExactMode) {
  auto t = tab1();
  EXPECT_THROW(eval_class(MultClassSpec::ahat(1), {gen(t, 0)}), ClassError);
  EXPECT_THROW(eval_class(MultClassSpec::chi_y(2), {gen(t, 0)}), ClassError);
}

TEST(Classes, MissingSymbolValue) {
  auto t = tab1();
  EXPECT_THROW(eval_class_numeric(MultClassSpec::euler(), {gen(t, t.m(0))}, {Real(1), Real(2)}), ClassError);
}

TEST(Classes, EllipticPoleRaises) {
  // 1 - q e^x vanishes at x = -log q.
  auto c = MultClassSpec::elliptic(2, frac(1, 2), 4);
  EXPECT_THROW(class_f(c, Real(log(Real(2)))), ClassError);
}

TEST(Classes, AhatSmallBeta) {
  Real v = ahat_limit_check(frac(1, 1000), {LinearForm::eps(2, 1, 0)}, {Real(1), Real(0)});
  Real beta("1e-3");
  Real expected = 1 - beta * beta / 24 + 7 * pow(beta, 4) / 5760;
  EXPECT_LT(abs(v - expected), Real("1e-20"));
  EXPECT_NEAR(static_cast<double>(v), 0.99999996, 1e-8);
  EXPECT_EQ(ahat_limit_check(frac(1, 1000), {}, {}), Real(1));
}

TEST(Classes, AhatConvergesAtRateBetaSquared) {
  std::vector<LinearForm> ws = {LinearForm::eps(2, 1, 0), LinearForm::eps(2, 2, -1), LinearForm::eps(2, 0, 3)};
  std::vector<Real> p = {Real(7) / 5, Real(-3) / 4};
  Real prev_dev = 0;
  for (int i = 1; i <= 4; ++i) {
    Rational beta = frac(1, std::pow(10, i));
    Real dev = abs(ahat_limit_check(beta, ws, p) - 1);
    if (i > 1) EXPECT_NEAR(static_cast<double>(prev_dev / dev), 100.0, 0.5);
    prev_dev = dev;
  }
}

TEST(Classes, ChiYOneIsEuler) {
  auto c = MultClassSpec::chi_y(1);
  for (int i : {-7, -1, 1, 3, 11}) {
    Real x = Real(i) / 3;
    EXPECT_LT(abs(class_f(c, x) - x), Real("1e-40"));
  }
}

TEST(Classes, ChiYZeroIsTodd) {
  auto c = MultClassSpec::chi_y(0);
  for (int i : {-9, -2, 1, 5, 13}) {
    Real x = Real(i) / 4;
    Real todd = x / (1 - exp(-x));
    EXPECT_LT(rel(class_f(c, x), todd), Real("1e-20"));
  }
  EXPECT_EQ(class_f(c, Real(0)), Real(1));
}

TEST(Classes, EllipticSmallQApproachesChiY) {
  auto ell = MultClassSpec::elliptic(frac(1, 4), frac(1, 1000000), 8);
  auto chi = MultClassSpec::chi_y(frac(1, 4));
  Real x = Real(3) / 7;
  Real lhs = class_f(ell, x) * sqrt(Real(1) / 4);
  EXPECT_LT(rel(lhs, class_f(chi, x)), Real("1e-5"));
}

TEST(Classes, EllipticTruncationBoundHolds) {
  Real x = Real(2) / 3;
  auto c8 = MultClassSpec::elliptic(frac(1, 3), frac(1, 5), 8);
  auto c40 = MultClassSpec::elliptic(frac(1, 3), frac(1, 5), 40);
  Real diff = rel(class_f(c8, x), class_f(c40, x));
  Real bound = elliptic_truncation_bound(c8, x);
  EXPECT_GT(diff, Real(0));
  EXPECT_LE(diff, bound);
  EXPECT_LT(bound, Real("1e-3"));
}

TEST(Classes, MultiplicativityExact) {
  auto t = tab1();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto A = random_weights(rng, t.size(), trial % 4);
    auto B = random_weights(rng, t.size(), (trial / 4) % 4);
    auto AB = A;
    AB.insert(AB.end(), B.begin(), B.end());
    for (auto c : {MultClassSpec::one(), MultClassSpec::euler(), MultClassSpec::linear_shift(t.m(0)),
                   MultClassSpec::linear_shift(frac(-2, 3))})
      EXPECT_TRUE(eval_class(c, AB).identical(eval_class(c, A) * eval_class(c, B)));
  }
}

TEST(Classes, MultiplicativityNumeric) {
  auto t = tab1();
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto A = random_weights(rng, t.size(), 1 + trial % 3);
    auto B = random_weights(rng, t.size(), 1 + (trial / 3) % 3);
    auto AB = A;
    AB.insert(AB.end(), B.begin(), B.end());
    auto p = random_point(rng, t.size());
    for (auto c : {MultClassSpec::ahat(frac(1, 3)), MultClassSpec::chi_y(frac(2, 5)),
                   MultClassSpec::elliptic(frac(1, 2), frac(1, 20), 8), MultClassSpec::linear_shift(t.m(0))}) {
      Real ab = eval_class_numeric(c, AB, p);
      Real prod = eval_class_numeric(c, A, p) * eval_class_numeric(c, B, p);
      EXPECT_LT(rel(ab, prod), Real("1e-25"));
    }
  }
}

TEST(Classes, ExactAndNumericAgree) {
  auto t = tab1();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto ws = random_weights(rng, t.size(), 1 + trial % 4);
    auto p = random_point(rng, t.size());
    for (auto c : {MultClassSpec::euler(), MultClassSpec::linear_shift(t.m(0))})
      EXPECT_LT(abs(eval_class(c, ws).evaluate(p) - eval_class_numeric(c, ws, p)), Real("1e-40"));
  }
}
