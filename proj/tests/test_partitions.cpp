#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "nekrasov/partitions.hpp"

using namespace nekrasov;

namespace {

const SymbolTable kTab(1);
LinearForm E1() { return LinearForm::eps(kTab.size(), 1, 0); }
LinearForm E2() { return LinearForm::eps(kTab.size(), 0, 1); }

using Char = std::map<std::pair<long, long>, long>;

Char to_char(const std::vector<LinearForm>& ws) {
  Char c;
  for (const auto& w : ws) c[{w[0].get_num().get_si(), w[1].get_num().get_si()}] += 1;
  return c;
}

// Q_P = sum over cells (i,j) of t1^i t2^j; character Q_S t1 t2 + Q_T(1/t) - Q_S(t) Q_T(1/t) (1-t1)(1-t2).
Char character_oracle(const Partition& S, const Partition& T) {
  Char c;
  auto cells = [](const Partition& P) {
    std::vector<std::pair<long, long>> v;
    for (int i = 0; i < P.length(); ++i)
      for (int j = 0; j < P.row(i); ++j) v.emplace_back(i, j);
    return v;
  };
  for (auto [x, y] : cells(S)) c[{x + 1, y + 1}] += 1;
  for (auto [x, y] : cells(T)) c[{-x, -y}] += 1;
  for (auto [x, y] : cells(S))
    for (auto [u, v] : cells(T)) {
      long px = x - u, py = y - v;
      c[{px, py}] -= 1;
      c[{px + 1, py}] += 1;
      c[{px, py + 1}] += 1;
      c[{px + 1, py + 1}] -= 1;
    }
  Char out;
  for (auto& [k, v] : c)
    if (v) out[k] = v;
  return out;
}

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> v;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : partitions_of(k)) v.push_back(p);
  return v;
}

long count_partitions(int n) { return static_cast<long>(partitions_of(n).size()); }

}  // namespace

TEST(Partition, ConstructionAndTranspose) {
  Partition p({3, 1});
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.columns(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(p.transpose(), Partition({2, 1, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(ArmLeg, SingleBoxAgainstEmpty) {
  auto [a, l] = arm_leg(Partition({1}), Partition(), 0, 0);
  EXPECT_EQ(a, 0);
  EXPECT_EQ(l, -1);
}

TEST(ArmLeg, HookOfCorner) {
  Partition S({3, 1});
  auto [a, l] = arm_leg(S, S, 0, 0);
  EXPECT_EQ(a, 2);
  EXPECT_EQ(l, 1);
}

TEST(ArmLeg, LegRelativeToSmallerDiagram) {
  auto [a, l] = arm_leg(Partition({2, 2}), Partition({1}), 1, 1);
  EXPECT_EQ(a, 0);
  EXPECT_EQ(l, -2);  // column 1 of T is empty
  EXPECT_EQ(arm_leg(Partition({2, 2}), Partition({1}), 1, 0).second, -1);
  EXPECT_THROW(arm_leg(Partition({1}), Partition(), 0, 1), std::out_of_range);
}

TEST(NstWeights, Examples) {
  EXPECT_TRUE(nst_weights(Partition(), Partition(), E1(), E2()).empty());
  auto w = nst_weights(Partition({1}), Partition({1}), E1(), E2());
  EXPECT_EQ(to_char(w), (Char{{{0, 1}, 1}, {{1, 0}, 1}}));
  auto w2 = nst_weights(Partition({1}), Partition(), E1(), E2());
  EXPECT_EQ(to_char(w2), (Char{{{1, 1}, 1}}));
}

TEST(NsWeights, Examples) {
  EXPECT_TRUE(ns_weights(Partition(), E1(), E2()).empty());
  EXPECT_EQ(to_char(ns_weights(Partition({1}), E1(), E2())), (Char{{{0, 0}, 1}}));
  EXPECT_EQ(to_char(ns_weights(Partition({2, 1}), E1(), E2())),
            (Char{{{0, 0}, 1}, {{0, -1}, 1}, {{-1, 0}, 1}}));
}

TEST(NstWeightsProperty, MatchesCharacterFormula) {
  auto ps = all_up_to(4);
  for (const auto& S : ps)
    for (const auto& T : ps) {
      Char oracle = character_oracle(S, T);
      for (auto& [k, v] : oracle) ASSERT_GT(v, 0) << S.to_string() << T.to_string();
      EXPECT_EQ(to_char(nst_weights(S, T, E1(), E2())), oracle) << S.to_string() << " " << T.to_string();
    }
}

TEST(NstWeightsProperty, TransposeDuality) {
  auto ps = all_up_to(5);
  for (const auto& S : ps)
    for (const auto& T : ps) {
      auto lhs = nst_weights(S.transpose(), T.transpose(), E2(), E1());
      EXPECT_EQ(to_char(lhs), to_char(nst_weights(S, T, E1(), E2())));
    }
}

TEST(NstWeightsProperty, SizesAndNonzeroDiagonal) {
  for (const auto& S : all_up_to(6)) {
    EXPECT_EQ(static_cast<int>(ns_weights(S, E1(), E2()).size()), S.size());
    auto w = nst_weights(S, S, E1(), E2());
    EXPECT_EQ(static_cast<int>(w.size()), 2 * S.size());
    for (const auto& x : w) EXPECT_FALSE(x.is_zero()) << S.to_string();
  }
}

TEST(Enumerate, PartitionsOfTwo) {
  auto t = enumerate_tuples(1, 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0][0], Partition({2}));
  EXPECT_EQ(t[1][0], Partition({1, 1}));
}

TEST(Enumerate, RankTwoSizeOne) {
  auto t = enumerate_tuples(2, 1);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (PartitionTuple{Partition({1}), Partition()}));
  EXPECT_EQ(t[1], (PartitionTuple{Partition(), Partition({1})}));
}

TEST(Enumerate, CountsMatchConvolutionOfPartitionNumbers) {
  EXPECT_EQ(enumerate_tuples(2, 3).size(), 10u);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n) {
      // Independent count: r-fold convolution of p(k).
      std::vector<long> conv(n + 1, 0);
      conv[0] = 1;
      for (int a = 0; a < r; ++a) {
        std::vector<long> next(n + 1, 0);
        for (int i = 0; i <= n; ++i)
          for (int k = 0; i + k <= n; ++k) next[i + k] += conv[i] * count_partitions(k);
        conv = next;
      }
      auto tuples = enumerate_tuples(r, n);
      EXPECT_EQ(static_cast<long>(tuples.size()), conv[n]);
      for (const auto& t : tuples) {
        int s = 0;
        for (const auto& p : t) s += p.size();
        EXPECT_EQ(s, n);
      }
      auto sorted = tuples;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
    }
}

TEST(Enumerate, PartitionCounts) {
  const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(count_partitions(n), p[n]);
}
