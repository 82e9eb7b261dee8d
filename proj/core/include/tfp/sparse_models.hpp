#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tfp/multigraph.hpp"
#include "tfp/random.hpp"
#include "tfp/rational.hpp"

namespace tfp {

/// Erdős–Rényi graph on n vertices with edge probability p (= lambda / n).
struct ErrgParams {
  std::int64_t n = 0;
  double p = 0.0;

  /// p = lambda / n; requires lambda > 0 and lambda <= n.
  static ErrgParams from_lambda(std::int64_t n, double lambda);
  /// Requires 0 <= p <= 1.
  static ErrgParams from_p(std::int64_t n, double p);

  [[nodiscard]] double lambda() const { return p * static_cast<double>(n); }
};

/// Positive degrees with an even sum.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> degrees);

  /// "regular:d" or "two-point:a,b,frac" (the first round(frac * n) vertices
  /// get degree a, the rest b).
  static DegreeSequence from_named(std::string_view name, std::int64_t n);
  /// One integer per line; blank lines and '#' comments are skipped.
  static DegreeSequence read(std::istream& in);
  static DegreeSequence read(const std::filesystem::path& path);

  [[nodiscard]] const std::vector<std::int64_t>& degrees() const { return degrees_; }
  [[nodiscard]] std::size_t size() const { return degrees_.size(); }
  /// m_k = sum_i d_i^k, exact.
  [[nodiscard]] Rational moment(int k) const;
  /// c_k = m_k / n.
  [[nodiscard]] double normalized_moment(int k) const;
  /// m_1, the number of half-edges.
  [[nodiscard]] std::int64_t half_edges() const { return half_edges_; }

 private:
  std::vector<std::int64_t> degrees_;
  std::int64_t half_edges_ = 0;
};

Multigraph sample_errg(const ErrgParams& params, Rng& rng);
Multigraph sample_errg(const ErrgParams& params, std::uint64_t seed);

/// Expected average triangle bias of ERRG(n, p), n >= 3:
///   1/2 (n-2)(n-3) p^3 (1-(1-p)^(n-1)) + (n-1) p^2 - p + p (1-p)^(n-1) - 1/2 (n-1)(n-2) p^3.
double errg_exact_mean_tfb(const ErrgParams& params);
/// The same formula evaluated exactly for rational p.
Rational errg_exact_mean_tfb(std::int64_t n, const Rational& p);
/// Weighted sum over all labelled graphs on n <= 5 vertices.
Rational errg_brute_force_mean(std::int64_t n, const Rational& p);

/// Limit of n E[average bias] for ERRG(n, lambda/n):
///   lambda^2 - lambda + (lambda - lambda^3 / 2) e^(-lambda).
double zeta_errg(double lambda);

/// Configuration model: half-edges shuffled and paired consecutively.
/// Self-loops and parallel edges are kept.
Multigraph sample_cm(const DegreeSequence& ds, Rng& rng);
Multigraph sample_cm(const DegreeSequence& ds, std::uint64_t seed);

/// Exact E[average bias] of the configuration model for m_1 > 7, in terms
/// of the power sums m_1..m_7.
Rational cm_exact_mean_tfb_exact(const DegreeSequence& ds);
double cm_exact_mean_tfb(const DegreeSequence& ds);
/// Exact average over all (m_1 - 1)!! matchings; m_1 <= 12.
Rational cm_brute_force_mean(const DegreeSequence& ds);

/// (c2 - c1)^2 / (2 c1^4) * [(c3 - c1 c2) - 3 (c2 - c1^2)], c1 > 0.
double zeta_cm(double c1, double c2, double c3);

/// exp(-lambda^3 / 6): limiting probability that ERRG(n, lambda/n) has no triangle.
double triangle_free_limit_errg(double lambda);
/// (c2 - c1) / c1.
double cm_triangle_rate(double c1, double c2);
/// exp(-nu^3 / 6) with nu = (c2 - c1) / c1.
double triangle_free_limit_cm(double c1, double c2);

/// p^2 (1 - p): limit of E[average bias] / n for dense ERRG(n, p).
double errg_dense_limit(double p);
/// (c2*)^2 (c3* - c1* c2*) / (2 (c1*)^4): limit of E[average bias] / n^2 for
/// the dense configuration model with m_k / n^(k+1) -> c_k*.
double cm_dense_limit(double c1, double c2, double c3);

}  // namespace tfp
