#include <gtest/gtest.h>

#include <map>
#include <random>

#include "nekrasov/characters.hpp"

using namespace nekrasov;

namespace {

TwoVarLaurent laurent(std::initializer_list<std::pair<std::pair<long, long>, long>> xs) {
  TwoVarLaurent t;
  for (auto& [e, c] : xs) t.add(e.first, e.second, c);
  return t;
}

std::map<std::vector<Rational>, int> counts(const WeightMultiset& ws) {
  std::map<std::vector<Rational>, int> m;
  for (const auto& w : ws) m[w.form.coeffs()] += 1;
  return m;
}

// Random configuration with Y[v][alpha] of size <= 2.
FixedPointConfig random_config(const ToricChain& s, int r, std::mt19937& gen) {
  std::uniform_int_distribution<int> dd(-2, 2), ys(0, 2);
  FixedPointConfig c;
  for (int a = 0; a < r; ++a) {
    DivisorVector D(s.n_edges());
    for (auto& x : D) x = dd(gen);
    c.D.push_back(D);
  }
  for (int v = 0; v < s.n_vertices(); ++v) {
    PartitionTuple t;
    for (int a = 0; a < r; ++a) {
      const auto& ps = partitions_of(ys(gen));
      t.push_back(ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(gen)]);
    }
    c.Y.push_back(t);
  }
  return c;
}

}  // namespace

TEST(H1Weights, F1NegativeEdgeGivesZeroWeight) {
  auto w = h1_weights(builtin_surface("F1"), {-1});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], (EpsWeight{0, 0}));
}

TEST(H1Weights, F2PositiveEdge) {
  auto w = h1_weights(builtin_surface("F2"), {1});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], (EpsWeight{1, 1}));
}

TEST(H1Weights, F1PositiveEdgeVanishes) { EXPECT_TRUE(h1_weights(builtin_surface("F1"), {1}).empty()); }

TEST(H1Weights, ZeroDivisorVanishes) {
  for (std::string n : {"C2", "F1", "F2", "F3"}) {
    auto s = builtin_surface(n);
    EXPECT_TRUE(h1_weights(s, s.zero_divisor()).empty()) << n;
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(edge_character_closed_form_Fk(1, 1), laurent({{{0, 0}, 1}}));
  EXPECT_EQ(edge_character_closed_form_Fk(3, -1), laurent({{{1, 1}, 1}, {{2, 1}, 1}}));
  for (long k = 1; k <= 4; ++k) EXPECT_TRUE(edge_character_closed_form_Fk(k, 0).coeffs.empty());
}

TEST(H1WeightsProperty, MatchesClosedFormOnFk) {
  for (long k = 1; k <= 3; ++k) {
    auto s = builtin_surface("F" + std::to_string(k));
    for (long dd = -4; dd <= 4; ++dd) {
      // D_beta - D_alpha = -(d_alpha - d_beta) l0
      EXPECT_EQ(h1_character(s, {-dd}), edge_character_closed_form_Fk(k, dd)) << "k=" << k << " d=" << dd;
    }
  }
}

TEST(H1WeightsProperty, CountLaw) {
  std::mt19937 gen(17);
  std::uniform_int_distribution<int> kk(1, 3), dd(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = builtin_surface("F" + std::to_string(kk(gen)));
    DivisorVector D{dd(gen)};
    long expect = -(s.dot(D, D) + s.c1_dot(D)) / 2;
    long total = 0;
    for (auto& [e, c] : h1_character(s, D).coeffs) {
      EXPECT_GT(c, 0);
      total += c;
    }
    EXPECT_EQ(total, expect);
  }
}

TEST(H1WeightsProperty, UserSurfaceMatchesBuiltin) {
  auto f3 = load_surface(FIXTURE_DIR "/F3.json");
  for (long d = -3; d <= 3; ++d) EXPECT_EQ(h1_character(f3, {d}), h1_character(builtin_surface("F3"), {d}));
}

TEST(Tangent, AffinePlaneSingleBox) {
  SymbolTable tab(1);
  FixedPointConfig c{{{}}, {{Partition({1})}}};
  auto w = tangent_character(builtin_surface("C2"), c, tab);
  std::map<std::vector<Rational>, int> expect;
  expect[LinearForm::eps(tab.size(), 1, 0).coeffs()] = 1;
  expect[LinearForm::eps(tab.size(), 0, 1).coeffs()] = 1;
  EXPECT_EQ(counts(w), expect);
}

TEST(Tangent, EmptyConfigurationOnFk) {
  SymbolTable tab(1);
  FixedPointConfig c{{{0}}, {{Partition()}, {Partition()}}};
  EXPECT_TRUE(tangent_character(builtin_surface("F2"), c, tab).empty());
}

TEST(Tangent, F1OppositeEdgesRankTwo) {
  SymbolTable tab(2);
  auto s = builtin_surface("F1");
  FixedPointConfig c{{{1}, {-1}}, {{Partition(), Partition()}, {Partition(), Partition()}}};
  auto w = tangent_character(s, c, tab);
  EXPECT_EQ(w.size(), 4u);
  long n = config_instanton_number(s, c);
  DivisorVector d = config_total_divisor(c);
  EXPECT_EQ(static_cast<long>(w.size()), 2 * 2 * n + (1 - 2) * s.dot(d, d));
  for (const auto& x : w) EXPECT_EQ(x.origin, WeightOrigin::Edge);
}

TEST(Natural, AffinePlaneSingleBox) {
  SymbolTable tab(1);
  FixedPointConfig c{{{}}, {{Partition({1})}}};
  auto w = natural_character(builtin_surface("C2"), c, tab);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].form, LinearForm::generator(tab.size(), tab.a(0)));
}

TEST(Natural, F2EdgeOnly) {
  SymbolTable tab(1);
  auto s = builtin_surface("F2");
  FixedPointConfig c{{{1}}, {{Partition()}, {Partition()}}};
  auto w = natural_character(s, c, tab);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].form, LinearForm::generator(tab.size(), tab.a(0)) + LinearForm::eps(tab.size(), 1, 1));
  long n = config_instanton_number(s, c);
  DivisorVector d = config_total_divisor(c);
  EXPECT_EQ(2 * n - (s.dot(d, d) + s.c1_dot(d)), 2 * static_cast<long>(w.size()));
}

TEST(Natural, TrivialConfigurationIsEmpty) {
  SymbolTable tab(2);
  FixedPointConfig c{{{0}, {0}}, {{Partition(), Partition()}, {Partition(), Partition()}}};
  EXPECT_TRUE(natural_character(builtin_surface("F1"), c, tab).empty());
}

TEST(CharacterProperty, DimensionAndRankLaws) {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = builtin_surface(trial % 3 == 0 ? "F1" : trial % 3 == 1 ? "F2" : "C2");
    int r = 1 + trial % 3;
    SymbolTable tab(r);
    auto c = random_config(s, r, gen);
    long n = config_instanton_number(s, c);
    DivisorVector d = config_total_divisor(c);
    auto T = tangent_character(s, c, tab);
    auto V = natural_character(s, c, tab);
    EXPECT_EQ(static_cast<long>(T.size()), 2 * r * n + (1 - r) * s.dot(d, d)) << trial;
    EXPECT_EQ(2 * static_cast<long>(V.size()), 2 * n - (s.dot(d, d) + s.c1_dot(d))) << trial;
    for (const auto& w : T) EXPECT_FALSE(w.form.is_zero()) << trial;
  }
}
