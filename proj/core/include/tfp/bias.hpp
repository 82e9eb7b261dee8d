#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tfp/multigraph.hpp"
#include "tfp/rational.hpp"

namespace tfp {

/// Per-vertex local counts of a multigraph.
struct VertexStats {
  std::vector<std::int64_t> degrees;
  /// t_i = 1/2 * sum over ordered distinct j, k (both != i) of A_ij A_jk A_ki.
  std::vector<std::int64_t> triangles;
  /// d_i (d_i - 1) / 2.
  std::vector<std::int64_t> wedges;
};

enum class AttributeKind { degree, wedge, triangle, custom };

std::string_view to_string(AttributeKind kind);

/// Friendship bias of an attribute, vertex by vertex and averaged.
struct BiasReport {
  std::vector<Rational> per_vertex;
  Rational average;
  AttributeKind attribute_kind = AttributeKind::custom;

  /// n * average.
  [[nodiscard]] Rational total() const;
};

VertexStats vertex_stats(const Multigraph& g);
std::vector<std::int64_t> triangle_counts(const Multigraph& g);

/// Delta^x_i = [sum_j A_ij x_j / d_i - x_i] * 1{d_i != 0}. The j == i term
/// (self-loops) is part of the sum.
BiasReport attribute_bias(const Multigraph& g, std::span<const Rational> x,
                          AttributeKind kind = AttributeKind::custom);
/// Same, for an attribute given as doubles; each double is converted exactly.
BiasReport attribute_bias(const Multigraph& g, std::span<const double> x);

BiasReport degree_bias(const Multigraph& g);
BiasReport wedge_bias(const Multigraph& g);
BiasReport triangle_bias(const Multigraph& g);

/// kappa_i = sum_j A_ij / d_j. Isolated vertices get 0.
std::vector<Rational> kappa_vector(const Multigraph& g);

/// Cov(x_U, kappa_U) for U uniform on the vertices. Equal to the average
/// attribute bias when g has no isolated vertices.
Rational covariance_bias(const Multigraph& g, std::span<const Rational> x);

/// n * (average bias) for an integer attribute, without building the
/// per-vertex report. Rows are grouped by degree so only one rational
/// division per distinct degree is performed.
Rational total_attribute_bias(const Multigraph& g, std::span<const std::int64_t> x);
Rational total_triangle_bias(const Multigraph& g);

/// Floating-point average triangle bias, for large random graphs.
double average_triangle_bias_f64(const Multigraph& g);
/// Floating-point average bias with precomputed triangle counts.
double average_bias_f64(const Multigraph& g, std::span<const std::int64_t> x);

}  // namespace tfp
