#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "figures.hpp"
#include "oracles.hpp"
#include "tfp/bias.hpp"
#include "tfp/error.hpp"

using namespace tfp;

TEST(TriangleCounts, MatchTripleEnumeration) {
  std::mt19937 rng(1);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = rep % 2 ? oracle::random_simple_graph(2 + rep % 9, 0.5, rng)
                           : oracle::random_multigraph(2 + rep % 9, 3 * (rep % 9), rng);
    const auto a = oracle::dense(g);
    const auto t = triangle_counts(g);
    EXPECT_EQ(t, oracle::triangles(a));
    std::int64_t sum = 0;
    for (auto v : t) sum += v;
    EXPECT_EQ(sum, 3 * oracle::triangle_total(a));
  }
}

TEST(TriangleCounts, ParallelEdgesMultiply) {
  MultigraphBuilder b(3);
  b.add_edge(0, 1, 2);
  b.add_edge(1, 2, 3);
  b.add_edge(2, 0);
  b.add_edge(0, 0);
  const auto t = triangle_counts(b.build());
  EXPECT_EQ(t, (std::vector<std::int64_t>{6, 6, 6}));
}

TEST(VertexStats, Wedges) {
  const auto s = vertex_stats(make_complete_graph(5));
  for (auto w : s.wedges) EXPECT_EQ(w, 6);
  for (auto t : s.triangles) EXPECT_EQ(t, 6);
}

TEST(TriangleBias, Figures) {
  EXPECT_EQ(triangle_bias(figures::negative_bias_graph()).average, Rational(-1, 66));
  EXPECT_EQ(triangle_bias(figures::k5_triangle()).average, Rational(13, 21));
  EXPECT_EQ(triangle_bias(figures::k5_two_triangles()).average, Rational(7, 18));
  EXPECT_EQ(triangle_bias(figures::k5_triangle_cap()).average, Rational(7, 24));
  EXPECT_EQ(triangle_bias(figures::four_glued_stars()).average, Rational(-1, 39));
}

TEST(TriangleBias, MatchesDenseOracle) {
  std::mt19937 rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = rep % 3 ? oracle::random_simple_graph(1 + rep % 12, 0.4, rng)
                           : oracle::random_multigraph(1 + rep % 10, rep % 25, rng);
    const auto report = triangle_bias(g);
    EXPECT_EQ(report.average, oracle::average_triangle_bias(g));
    EXPECT_EQ(report.total(), total_triangle_bias(g));
    EXPECT_NEAR(average_triangle_bias_f64(g), report.average.to_double(), 1e-12);
  }
}

TEST(TriangleBias, PerVertexDefinition) {
  // Path 0-1-2 plus triangle 2-3-4: vertex 1 sees t_2 = 1 through one of two edges.
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}};
  const auto r = triangle_bias(make_simple_graph(6, e));
  EXPECT_EQ(r.per_vertex[0], Rational(0));
  EXPECT_EQ(r.per_vertex[1], Rational(1, 2));
  EXPECT_EQ(r.per_vertex[2], Rational(-1, 3));
  EXPECT_EQ(r.per_vertex[5], Rational(0));  // isolated
  EXPECT_EQ(r.attribute_kind, AttributeKind::triangle);
}

TEST(TriangleBias, SelfLoopTermIsIncluded) {
  // A loop at 0 makes A_00 = 2, so t_0 appears in its own neighbour average.
  MultigraphBuilder b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 0);
  b.add_edge(0, 0);
  const auto r = triangle_bias(b.build());
  // d_0 = 4, neighbours: 1, 2 once, itself twice; all t = 1.
  EXPECT_EQ(r.per_vertex[0], Rational(0));
  std::vector<Rational> x{Rational(4), Rational(0), Rational(0)};
  const auto custom = attribute_bias(b.build(), x);
  EXPECT_EQ(custom.per_vertex[0], Rational(2 * 4, 4) - Rational(4));
}

TEST(DegreeBias, NonNegativeAndZeroOnRegular) {
  EXPECT_EQ(degree_bias(make_complete_graph(6)).average, Rational(0));
  std::mt19937 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = oracle::random_simple_graph(2 + rep % 15, 0.3, rng);
    EXPECT_GE(degree_bias(g).average, Rational(0));
  }
}

TEST(AttributeBias, LengthMismatch) {
  const std::vector<Rational> x(3);
  EXPECT_THROW(attribute_bias(make_complete_graph(4), x), InputError);
}

TEST(AttributeBias, DoubleAttributeIsExact) {
  const std::vector<double> x{0.5, 0.25, 0.125};
  const auto r = attribute_bias(make_complete_graph(3), x);
  EXPECT_EQ(r.per_vertex[0], Rational(3, 16) - Rational(1, 2));
}

TEST(Kappa, SumsToVertexCountWithoutIsolated) {
  std::mt19937 rng(4);
  for (int rep = 0; rep < 50; ++rep) {
    const auto g = oracle::without_isolated(oracle::random_multigraph(2 + rep % 10, rep % 15, rng), rng);
    Rational sum;
    for (const auto& k : kappa_vector(g)) sum += k;
    EXPECT_EQ(sum, Rational(static_cast<std::int64_t>(g.vertex_count())));
  }
}

TEST(Covariance, EqualsAverageBiasWithoutIsolatedVertices) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = oracle::without_isolated(oracle::random_multigraph(2 + rep % 12, rep % 20, rng), rng);
    std::vector<Rational> x(g.vertex_count());
    for (auto& v : x) {
      const int den = val(rng);
      v = Rational(val(rng), 1 + den * den);
    }
    EXPECT_EQ(covariance_bias(g, x), attribute_bias(g, x).average);
  }
}

TEST(TotalAttributeBias, MatchesReport) {
  std::mt19937 rng(6);
  for (int rep = 0; rep < 100; ++rep) {
    const auto g = oracle::random_multigraph(1 + rep % 12, rep % 25, rng);
    const auto s = vertex_stats(g);
    EXPECT_EQ(total_attribute_bias(g, s.wedges), wedge_bias(g).total());
    EXPECT_EQ(total_attribute_bias(g, s.degrees), degree_bias(g).total());
  }
}
