#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nekrasov/geometry.hpp"

using namespace nekrasov;

namespace {

const SymbolTable kTab(1);
RatFunc P(long x1, long x2) { return RatFunc(EpsWeight{x1, x2}.poly(kTab)); }

std::string error_of(const std::string& path) {
  try {
    load_surface(path);
  } catch (const SurfaceError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Builtin, F2WeightTable) {
  auto s = builtin_surface("F2");
  ASSERT_EQ(s.n_vertices(), 2);
  EXPECT_EQ(s.vertices()[0].w1, (EpsWeight{1, 0}));
  EXPECT_EQ(s.vertices()[0].w2, (EpsWeight{0, 1}));
  EXPECT_EQ(s.vertices()[1].w1, (EpsWeight{-1, 0}));
  EXPECT_EQ(s.vertices()[1].w2, (EpsWeight{2, 1}));
  EXPECT_EQ(s.linf().u, (EpsWeight{0, -1}));
  EXPECT_EQ(s.linf().w, (EpsWeight{1, 0}));
  EXPECT_EQ(s.linf().k, 2);
}

TEST(Builtin, F1EdgeNumbers) {
  auto s = builtin_surface("F1");
  DivisorVector l0{1};
  EXPECT_EQ(s.dot(l0, l0), -1);
  EXPECT_EQ(s.c1_dot(l0), 1);
}

TEST(Builtin, C2SingleVertex) {
  auto s = builtin_surface("C2");
  EXPECT_EQ(s.n_vertices(), 1);
  EXPECT_EQ(s.n_edges(), 0);
  EXPECT_EQ(s.vertices()[0].w1, (EpsWeight{1, 0}));
  EXPECT_EQ(s.vertices()[0].w2, (EpsWeight{0, 1}));
}

TEST(Builtin, UnknownNameAndBadK) {
  EXPECT_THROW(builtin_surface("P3"), SurfaceError);
  EXPECT_THROW(builtin_surface("F0"), SurfaceError);
}

TEST(Builtin, NormalWeightRelationHolds) {
  for (std::string n : {"C2", "F1", "F2", "F3", "F5"}) {
    auto s = builtin_surface(n);
    EXPECT_EQ(s.linf().v(), s.linf().u - s.linf().w * s.linf().k) << n;
  }
}

TEST(Load, F3FixtureRoundTrip) {
  EXPECT_EQ(load_surface(FIXTURE_DIR "/F3.json"), builtin_surface("F3"));
  EXPECT_EQ(resolve_surface(FIXTURE_DIR "/F3.json"), resolve_surface("F3"));
}

TEST(Load, NormalRelationViolation) {
  EXPECT_NE(error_of(FIXTURE_DIR "/broken_normal.json").find("normal weight relation violated"), std::string::npos);
}

TEST(Load, EmptyVertexList) {
  EXPECT_NE(error_of(FIXTURE_DIR "/empty_vertices.json").find("empty vertex list"), std::string::npos);
}

TEST(Load, NotNegativeDefinite) {
  EXPECT_NE(error_of(FIXTURE_DIR "/not_definite.json").find("negative definite"), std::string::npos);
}

TEST(Load, ParseErrors) {
  EXPECT_THROW(parse_surface("{not json"), SurfaceError);
  EXPECT_THROW(parse_surface(R"({"vertices": []})"), SurfaceError);
  EXPECT_THROW(load_surface("/nonexistent/file.json"), SurfaceError);
}

TEST(Load, InconsistentEdgeWeightsRejected) {
  // Edge weight at the second vertex does not reproduce the self-intersection.
  const char* text = R"({"vertices":[{"w1":[1,0],"w2":[0,1]},{"w1":[-1,0],"w2":[1,1]}],
    "edges":[{"self_intersection":-1,"weights_at":[[0,1],[0,1]]}],
    "intersections":[[-1]], "linf":{"w":[1,0],"u":[0,-1],"k":1}})";
  EXPECT_THROW(parse_surface(text), SurfaceError);
}

TEST(DsqNorm, Examples) {
  auto f1 = builtin_surface("F1"), f2 = builtin_surface("F2");
  EXPECT_EQ(dsq_norm(f1, {{0}, {0}}), 0);
  EXPECT_EQ(dsq_norm(f1, {{1}, {-1}}), 4);
  EXPECT_EQ(dsq_norm(f2, {{1}, {0}}), 2);
}

TEST(EnumerateDivisors, BoundZeroOnlyTrivial) {
  auto f1 = builtin_surface("F1");
  auto t = enumerate_divisor_tuples(f1, 2, {0}, 0);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], (DivisorTuple{{0}, {0}}));
}

TEST(EnumerateDivisors, BoundOneStillTrivialOnF1) {
  auto t = enumerate_divisor_tuples(builtin_surface("F1"), 2, {0}, 1);
  ASSERT_EQ(t.size(), 1u);
}

TEST(EnumerateDivisors, RankOneSingleTuple) {
  auto f2 = builtin_surface("F2");
  for (long d : {-2, 0, 3})
    for (long b : {0, 5, 40}) {
      auto t = enumerate_divisor_tuples(f2, 1, {d}, b);
      ASSERT_EQ(t.size(), 1u);
      EXPECT_EQ(t[0], (DivisorTuple{{d}}));
    }
}

TEST(EnumerateDivisorsProperty, MatchesBruteForce) {
  for (std::string name : {"F1", "F2", "F3"}) {
    auto s = builtin_surface(name);
    for (int r = 2; r <= 3; ++r)
      for (long d = -2; d <= 2; ++d)
        for (long bound : {0L, 2L, 4L, 8L, 12L}) {
          std::set<DivisorTuple> brute;
          const long M = 6;
          for (long x = -M; x <= M; ++x)
            for (long y = -M; y <= M; ++y) {
              DivisorTuple t = r == 2 ? DivisorTuple{{x}, {d - x}} : DivisorTuple{{x}, {y}, {d - x - y}};
              if (r == 2 && y != 0) continue;
              if (dsq_norm(s, t) <= bound) brute.insert(t);
            }
          auto got = enumerate_divisor_tuples(s, r, {d}, bound);
          std::set<DivisorTuple> gs(got.begin(), got.end());
          EXPECT_EQ(gs.size(), got.size());
          EXPECT_EQ(gs, brute) << name << " r=" << r << " d=" << d << " bound=" << bound;
          for (const auto& t : got) {
            long n = dsq_norm(s, t);
            EXPECT_GE(n, 0);
            bool all_equal = true;
            for (const auto& D : t) all_equal = all_equal && D == t[0];
            EXPECT_EQ(n == 0, all_equal);
          }
        }
  }
}

TEST(EquivariantIntegral, ProjectivePlaneOfOne) {
  auto c2 = builtin_surface("C2");
  auto pts = c2.fixed_points(true);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_TRUE(equivariant_integral(pts, std::vector<RatFunc>(3, RatFunc(1)), kTab).is_zero());
}

TEST(EquivariantIntegral, AffinePlaneOfOne) {
  auto pts = builtin_surface("C2").fixed_points(false);
  EXPECT_EQ(equivariant_integral(pts, {RatFunc(1)}, kTab), (P(1, 0) * P(0, 1)).inverse());
}

TEST(EquivariantIntegral, HirzebruchChartSum) {
  for (long k = 1; k <= 4; ++k) {
    auto pts = builtin_surface("F" + std::to_string(k)).fixed_points(false);
    RatFunc expect = (P(1, 0) * P(0, 1)).inverse() + (P(-1, 0) * P(k, 1)).inverse();
    EXPECT_EQ(equivariant_integral(pts, {RatFunc(1), RatFunc(1)}, kTab), expect);
  }
}

TEST(EquivariantIntegral, CompactSurfacesIntegrateOneToZero) {
  for (std::string n : {"C2", "F1", "F2", "F3", "F4"}) {
    auto pts = builtin_surface(n).fixed_points(true);
    EXPECT_TRUE(equivariant_integral(pts, std::vector<RatFunc>(pts.size(), RatFunc(1)), kTab).is_zero()) << n;
  }
}

TEST(EquivariantIntegral, ZeroWeightRejected) {
  EXPECT_THROW(equivariant_integral({{{0, 0}, {0, 1}}}, {RatFunc(1)}, kTab), DivisionByZero);
}

TEST(DimensionIdentity, RandomConfigurations) {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> rr(1, 3), dd(-3, 3), yy(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = builtin_surface(trial % 2 ? "F2" : "F1");
    int r = rr(gen);
    DivisorTuple D;
    DivisorVector d{0};
    for (int a = 0; a < r; ++a) {
      D.push_back({dd(gen)});
      d[0] += D.back()[0];
    }
    long ysum = 0;
    for (int a = 0; a < r; ++a) ysum += yy(gen);
    long cross = 0, diffsq = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        cross += s.dot(D[a], D[b]);
        DivisorVector diff{D[a][0] - D[b][0]};
        diffsq += s.dot(diff, diff);
      }
    long n = ysum + cross;
    EXPECT_EQ(2 * r * ysum - diffsq, 2 * r * n + (1 - r) * s.dot(d, d));
  }
}
