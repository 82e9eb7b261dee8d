#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tfp/multigraph.hpp"
#include "tfp/random.hpp"

namespace tfp {

struct ConstantGraphon {
  double p = 0.0;
};

/// kappa(x, y) = nu(x) nu(y).
struct RankOneGraphon {
  enum class Form { step, polynomial };
  Form form = Form::step;
  /// Step form: nu on N equal cells. Polynomial form: coefficients a_0, a_1, ...
  std::vector<double> values;

  static RankOneGraphon step(std::vector<double> profile);
  static RankOneGraphon polynomial(std::vector<double> coefficients);
  [[nodiscard]] double nu(double x) const;
  /// m_k = int_0^1 nu(x)^k dx, exact for both forms (up to rounding).
  [[nodiscard]] double moment(int k) const;
};

/// alpha on [0,p)^2, beta on [p,1]^2, gamma across.
struct TwoBlockGraphon {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double p = 0.5;
};

/// Stochastic block kernel. Sizes are relative and normalized to sum 1.
struct BlockGraphon {
  std::vector<double> sizes;
  std::vector<std::vector<double>> matrix;
};

/// Piecewise constant on an N x N uniform grid.
struct GridGraphon {
  std::vector<std::vector<double>> matrix;
};

/// Arbitrary symmetric kernel, integrated by quadrature only. `breakpoints`
/// (inside (0,1)) are discontinuities the quadrature grid should align to.
struct FunctionGraphon {
  std::function<double(double, double)> kernel;
  std::vector<double> breakpoints;
  std::string name = "function";
};

using Graphon = std::variant<ConstantGraphon, RankOneGraphon, TwoBlockGraphon, BlockGraphon, GridGraphon, FunctionGraphon>;

std::string_view kind_name(const Graphon& g);

/// Checks values in [0,1], symmetry, and shapes. Throws InputError.
void validate(const Graphon& g);

double kernel_value(const Graphon& g, double x, double y);

/// Block form of a piecewise-constant graphon; throws DomainError for
/// polynomial rank-1 and function kernels.
BlockGraphon to_block(const Graphon& g);
[[nodiscard]] bool is_piecewise_constant(const Graphon& g);

inline constexpr int default_quadrature_n = 256;

/// D(x) = int kappa(x, y) dy.
double degree_density(const Graphon& g, double x, int quadrature_n = default_quadrature_n);
/// T(x) = 1/2 int int kappa(x,y) kappa(y,z) kappa(z,x) dy dz.
double triangle_density(const Graphon& g, double x, int quadrature_n = default_quadrature_n);

/// chi = int [ (1/D(x)) int kappa(x,y) T(y) dy - T(x) ] dx.
/// Closed form for piecewise-constant and polynomial rank-1 kernels;
/// composite midpoint quadrature otherwise. Throws DomainError if D vanishes.
double chi_t(const Graphon& g, int quadrature_n = default_quadrature_n);

/// Composite midpoint rule with `cells` cells, aligned to block boundaries
/// where the graphon has them. Exact for piecewise-constant kernels.
double chi_t_quadrature(const Graphon& g, int cells);

struct ChiConvergence {
  double value = 0.0;
  int cells = 0;
  bool converged = false;
};
/// Doubles the cell count from `start` until successive values differ by less
/// than `tolerance`, or `max_cells` is reached.
ChiConvergence chi_t_converged(const Graphon& g, int start = default_quadrature_n, double tolerance = 1e-9,
                               int max_cells = 2048);

struct ChiBreakdown {
  double theta1 = 0.0;
  double theta2 = 0.0;
  /// Carries the factor 1/2 of the triangle density, so that
  /// product = theta1 * theta2 * theta3 = chi.
  double theta3 = 0.0;
  double product = 0.0;
};

/// Factorized chi of the two-block graphon:
///   theta1 = p(1-p) gamma / ((p gamma + (1-p) beta)(p alpha + (1-p) gamma))
///   theta2 = p(gamma - alpha) + (1-p)(beta - gamma)
///   theta3 = [p^2 alpha(gamma^2 - alpha^2) + 2p(1-p) gamma^2 (beta - alpha)
///             + (1-p)^2 beta (beta^2 - gamma^2)] / 2
ChiBreakdown two_block_chi(double alpha, double beta, double gamma, double p);

/// chi of kappa(x,y) = nu(x) nu(y) from the moments of nu:
///   m2^2 (m3 - m1 m2) / (2 m1).
double rank1_chi(double m1, double m2, double m3);

/// Vertex i sits at (i + 1/2) / n; each pair is joined independently with
/// probability kappa at those points.
Multigraph sample_graphon_graph(std::int64_t n, const Graphon& g, Rng& rng);
Multigraph sample_graphon_graph(std::int64_t n, const Graphon& g, std::uint64_t seed);

}  // namespace tfp
