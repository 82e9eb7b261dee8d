#include "tfp/graphon.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tfp/error.hpp"

namespace tfp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

void check_square_symmetric(const std::vector<std::vector<double>>& m, std::string_view what) {
  const auto k = m.size();
  if (k == 0) throw InputError(std::string(what) + " matrix is empty");
  for (std::size_t a = 0; a < k; ++a) {
    if (m[a].size() != k) throw InputError(std::string(what) + " matrix is not square");
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!in_unit(m[a][b])) throw InputError(std::string(what) + " matrix entries must lie in [0, 1]");
      if (m[a][b] != m[b][a]) throw InputError(std::string(what) + " matrix is not symmetric");
    }
  }
}

std::vector<double> normalized(const std::vector<double>& sizes) {
  const double total = std::accumulate(sizes.begin(), sizes.end(), 0.0);
  std::vector<double> s(sizes);
  for (auto& v : s) v /= total;
  return s;
}

// Index of the block containing x, given normalized sizes.
std::size_t block_index(const std::vector<double>& sizes, double x) {
  double edge = 0.0;
  for (std::size_t a = 0; a + 1 < sizes.size(); ++a) {
    edge += sizes[a];
    if (x < edge) return a;
  }
  return sizes.size() - 1;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

struct BlockDensities {
  std::vector<double> degree;
  std::vector<double> triangle;
};

BlockDensities block_densities(const BlockGraphon& b) {
  const auto k = b.sizes.size();
  BlockDensities out{std::vector<double>(k, 0.0), std::vector<double>(k, 0.0)};
  for (std::size_t a = 0; a < k; ++a) {
    double d = 0;
    double t = 0;
    for (std::size_t c = 0; c < k; ++c) {
      d += b.matrix[a][c] * b.sizes[c];
      for (std::size_t e = 0; e < k; ++e) {
        t += b.matrix[a][c] * b.sizes[c] * b.matrix[c][e] * b.sizes[e] * b.matrix[e][a];
      }
    }
    out.degree[a] = d;
    out.triangle[a] = 0.5 * t;
  }
  return out;
}

double block_chi(const BlockGraphon& b) {
  const auto dens = block_densities(b);
  const auto k = b.sizes.size();
  double chi = 0;
  for (std::size_t a = 0; a < k; ++a) {
    if (b.sizes[a] <= 0) continue;
    if (!(dens.degree[a] > 0)) throw DomainError("degree density vanishes on block " + std::to_string(a));
    double neighbor = 0;
    for (std::size_t c = 0; c < k; ++c) neighbor += b.matrix[a][c] * b.sizes[c] * dens.triangle[c];
    chi += b.sizes[a] * (neighbor / dens.degree[a] - dens.triangle[a]);
  }
  return chi;
}

std::vector<double> breakpoints_of(const Graphon& g) {
  if (const auto* f = std::get_if<FunctionGraphon>(&g)) return f->breakpoints;
  if (is_piecewise_constant(g)) {
    const auto b = to_block(g);
    std::vector<double> bp;
    double edge = 0.0;
    for (std::size_t a = 0; a + 1 < b.sizes.size(); ++a) {
      edge += b.sizes[a];
      bp.push_back(edge);
    }
    return bp;
  }
  return {};
}

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Midpoint rule with about `cells` cells; every segment between breakpoints
// gets its own uniform sub-grid of at least one cell.
QuadratureRule midpoint_rule(const Graphon& g, int cells) {
  if (cells < 1) throw DomainError("quadrature needs at least one cell");
  auto bp = breakpoints_of(g);
  std::vector<double> edges{0.0};
  for (double v : bp)
    if (v > edges.back() && v < 1.0) edges.push_back(v);
  edges.push_back(1.0);
  QuadratureRule rule;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double len = edges[s + 1] - edges[s];
    const int c = std::max(1, static_cast<int>(std::lround(len * cells)));
    const double h = len / c;
    for (int i = 0; i < c; ++i) {
      rule.nodes.push_back(edges[s] + (i + 0.5) * h);
      rule.weights.push_back(h);
    }
  }
  return rule;
}

}  // namespace

RankOneGraphon RankOneGraphon::step(std::vector<double> profile) {
  return RankOneGraphon{Form::step, std::move(profile)};
}

RankOneGraphon RankOneGraphon::polynomial(std::vector<double> coefficients) {
  return RankOneGraphon{Form::polynomial, std::move(coefficients)};
}

double RankOneGraphon::nu(double x) const {
  if (values.empty()) return 0.0;
  if (form == Form::step) {
    const auto n = values.size();
    const auto i = std::min(n - 1, static_cast<std::size_t>(x * static_cast<double>(n)));
    return values[i];
  }
  double r = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) r = r * x + *it;
  return r;
}

double RankOneGraphon::moment(int k) const {
  if (values.empty()) return 0.0;
  if (form == Form::step) {
    double s = 0;
    for (double v : values) s += std::pow(v, k);
    return s / static_cast<double>(values.size());
  }
  std::vector<double> power{1.0};
  for (int i = 0; i < k; ++i) power = poly_mul(power, values);
  double s = 0;
  for (std::size_t j = 0; j < power.size(); ++j) s += power[j] / static_cast<double>(j + 1);
  return s;
}

std::string_view kind_name(const Graphon& g) {
  return std::visit(overloaded{[](const ConstantGraphon&) { return std::string_view("constant"); },
                               [](const RankOneGraphon&) { return std::string_view("rank1"); },
                               [](const TwoBlockGraphon&) { return std::string_view("two_block"); },
                               [](const BlockGraphon&) { return std::string_view("block"); },
                               [](const GridGraphon&) { return std::string_view("grid"); },
                               [](const FunctionGraphon&) { return std::string_view("function"); }},
                    g);
}

void validate(const Graphon& g) {
  std::visit(overloaded{
                 [](const ConstantGraphon& c) {
                   if (!in_unit(c.p)) throw InputError("constant graphon needs p in [0, 1]");
                 },
                 [](const RankOneGraphon& r) {
                   if (r.values.empty()) throw InputError("rank-1 profile is empty");
                   if (r.form == RankOneGraphon::Form::step) {
                     for (double v : r.values)
                       if (!in_unit(v)) throw InputError("rank-1 profile values must lie in [0, 1]");
                   } else {
                     for (int i = 0; i <= 1000; ++i) {
                       const double v = r.nu(i / 1000.0);
                       if (v < -1e-12 || v > 1 + 1e-12) throw InputError("rank-1 polynomial leaves [0, 1]");
                     }
                   }
                 },
                 [](const TwoBlockGraphon& t) {
                   if (!in_unit(t.alpha) || !in_unit(t.beta) || !in_unit(t.gamma))
                     throw InputError("two-block probabilities must lie in [0, 1]");
                   if (!(t.p > 0 && t.p < 1)) throw InputError("two-block split p must lie in (0, 1)");
                 },
                 [](const BlockGraphon& b) {
                   if (b.sizes.size() != b.matrix.size())
                     throw InputError("block graphon: sizes and matrix disagree in dimension");
                   for (double s : b.sizes)
                     if (!(s > 0) || !std::isfinite(s)) throw InputError("block sizes must be positive");
                   check_square_symmetric(b.matrix, "block");
                 },
                 [](const GridGraphon& gr) { check_square_symmetric(gr.matrix, "grid"); },
                 [](const FunctionGraphon& f) {
                   if (!f.kernel) throw InputError("function graphon has no kernel");
                   if (!std::is_sorted(f.breakpoints.begin(), f.breakpoints.end()))
                     throw InputError("breakpoints must be ascending");
                   for (int i = 0; i < 16; ++i) {
                     for (int j = 0; j < 16; ++j) {
                       const double x = (i + 0.5) / 16;
                       const double y = (j + 0.5) / 16;
                       const double v = f.kernel(x, y);
                       if (!in_unit(v)) throw InputError("kernel values must lie in [0, 1]");
                       if (std::abs(v - f.kernel(y, x)) > 1e-12) throw InputError("kernel is not symmetric");
                     }
                   }
                 }},
             g);
}

bool is_piecewise_constant(const Graphon& g) {
  if (std::holds_alternative<FunctionGraphon>(g)) return false;
  if (const auto* r = std::get_if<RankOneGraphon>(&g)) return r->form == RankOneGraphon::Form::step;
  return true;
}

BlockGraphon to_block(const Graphon& g) {
  return std::visit(
      overloaded{
          [](const ConstantGraphon& c) { return BlockGraphon{{1.0}, {{c.p}}}; },
          [](const RankOneGraphon& r) {
            if (r.form != RankOneGraphon::Form::step) throw DomainError("polynomial rank-1 graphon has no block form");
            const auto n = r.values.size();
            BlockGraphon b{std::vector<double>(n, 1.0 / static_cast<double>(n)),
                           std::vector<std::vector<double>>(n, std::vector<double>(n))};
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) b.matrix[i][j] = r.values[i] * r.values[j];
            return b;
          },
          [](const TwoBlockGraphon& t) {
            return BlockGraphon{{t.p, 1 - t.p}, {{t.alpha, t.gamma}, {t.gamma, t.beta}}};
          },
          [](const BlockGraphon& b) { return BlockGraphon{normalized(b.sizes), b.matrix}; },
          [](const GridGraphon& gr) {
            const auto n = gr.matrix.size();
            return BlockGraphon{std::vector<double>(n, 1.0 / static_cast<double>(n)), gr.matrix};
          },
          [](const FunctionGraphon&) -> BlockGraphon { throw DomainError("function graphon has no block form"); }},
      g);
}

static std::function<double(double, double)> make_kernel(const Graphon& g) {
  if (const auto* f = std::get_if<FunctionGraphon>(&g)) return f->kernel;
  if (const auto* r = std::get_if<RankOneGraphon>(&g)) {
    if (r->form == RankOneGraphon::Form::polynomial) return [r = *r](double u, double v) { return r.nu(u) * r.nu(v); };
  }
  return [b = to_block(g)](double u, double v) { return b.matrix[block_index(b.sizes, u)][block_index(b.sizes, v)]; };
}

double kernel_value(const Graphon& g, double x, double y) { return make_kernel(g)(x, y); }

double degree_density(const Graphon& g, double x, int quadrature_n) {
  if (!(x >= 0 && x <= 1)) throw DomainError("x must lie in [0, 1]");
  if (is_piecewise_constant(g)) {
    const auto b = to_block(g);
    return block_densities(b).degree[block_index(b.sizes, x)];
  }
  if (const auto* r = std::get_if<RankOneGraphon>(&g)) return r->nu(x) * r->moment(1);
  const auto rule = midpoint_rule(g, quadrature_n);
  const auto kernel = make_kernel(g);
  double d = 0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) d += rule.weights[j] * kernel(x, rule.nodes[j]);
  return d;
}

double triangle_density(const Graphon& g, double x, int quadrature_n) {
  if (!(x >= 0 && x <= 1)) throw DomainError("x must lie in [0, 1]");
  if (is_piecewise_constant(g)) {
    const auto b = to_block(g);
    return block_densities(b).triangle[block_index(b.sizes, x)];
  }
  if (const auto* r = std::get_if<RankOneGraphon>(&g)) {
    const double nu = r->nu(x);
    const double m2 = r->moment(2);
    return 0.5 * nu * nu * m2 * m2;
  }
  const auto rule = midpoint_rule(g, quadrature_n);
  const auto n = rule.nodes.size();
  const auto kernel = make_kernel(g);
  std::vector<double> kx(n);
  for (std::size_t j = 0; j < n; ++j) kx[j] = kernel(x, rule.nodes[j]) * rule.weights[j];
  double t = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) t += kx[j] * kernel(rule.nodes[j], rule.nodes[k]) * kx[k];
  return 0.5 * t;
}

double chi_t(const Graphon& g, int quadrature_n) {
  if (is_piecewise_constant(g)) return block_chi(to_block(g));
  if (const auto* r = std::get_if<RankOneGraphon>(&g)) return rank1_chi(r->moment(1), r->moment(2), r->moment(3));
  return chi_t_quadrature(g, quadrature_n);
}

double chi_t_quadrature(const Graphon& g, int cells) {
  const auto rule = midpoint_rule(g, cells);
  const auto n = static_cast<Eigen::Index>(rule.nodes.size());
  const auto kernel = make_kernel(g);
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = kernel(rule.nodes[i], rule.nodes[j]);
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), n);
  // m = K diag(w); T_i = 1/2 sum_k (m m)_ik K_ki.
  const Eigen::MatrixXd m = k * w.asDiagonal();
  const Eigen::VectorXd degree = m.rowwise().sum();
  const Eigen::MatrixXd m2 = m * m;
  const Eigen::VectorXd triangle = 0.5 * m2.cwiseProduct(k.transpose()).rowwise().sum();
  const Eigen::VectorXd neighbor = m * triangle;
  double chi = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(degree(i) > 0)) throw DomainError("degree density vanishes near x = " + std::to_string(rule.nodes[i]));
    chi += rule.weights[i] * (neighbor(i) / degree(i) - triangle(i));
  }
  return chi;
}

ChiConvergence chi_t_converged(const Graphon& g, int start, double tolerance, int max_cells) {
  ChiConvergence c{chi_t_quadrature(g, start), start, false};
  while (c.cells * 2 <= max_cells) {
    const double next = chi_t_quadrature(g, c.cells * 2);
    const double diff = std::abs(next - c.value);
    c.value = next;
    c.cells *= 2;
    if (diff < tolerance) {
      c.converged = true;
      break;
    }
  }
  return c;
}

ChiBreakdown two_block_chi(double alpha, double beta, double gamma, double p) {
  if (!in_unit(alpha) || !in_unit(beta) || !in_unit(gamma)) throw DomainError("alpha, beta, gamma must lie in [0, 1]");
  if (!(p > 0 && p < 1)) throw DomainError("p must lie in (0, 1)");
  if (alpha == 0 && beta == 0 && gamma == 0) throw DomainError("two-block graphon is identically zero");
  const double q = 1 - p;
  const double d_lo = p * alpha + q * gamma;
  const double d_hi = p * gamma + q * beta;
  if (!(d_lo > 0) || !(d_hi > 0)) throw DomainError("degree density vanishes on a block");
  ChiBreakdown r;
  r.theta1 = p * q * gamma / (d_hi * d_lo);
  r.theta2 = p * (gamma - alpha) + q * (beta - gamma);
  r.theta3 = 0.5 * (p * p * alpha * (gamma * gamma - alpha * alpha) + 2 * p * q * gamma * gamma * (beta - alpha) +
                    q * q * beta * (beta * beta - gamma * gamma));
  r.product = r.theta1 * r.theta2 * r.theta3;
  return r;
}

double rank1_chi(double m1, double m2, double m3) {
  if (!(m1 > 0)) throw DomainError("rank-1 chi needs m1 > 0");
  return m2 * m2 * (m3 - m1 * m2) / (2 * m1);
}

Multigraph sample_graphon_graph(std::int64_t n, const Graphon& g, Rng& rng) {
  if (n < 1) throw DomainError("graphon sampling needs n >= 1");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> x(nn);
  for (std::size_t i = 0; i < nn; ++i) x[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  std::function<double(std::size_t, std::size_t)> prob;
  BlockGraphon block;
  std::vector<std::size_t> cell;
  if (is_piecewise_constant(g)) {
    block = to_block(g);
    cell.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) cell[i] = block_index(block.sizes, x[i]);
    prob = [&](std::size_t i, std::size_t j) { return block.matrix[cell[i]][cell[j]]; };
  } else {
    prob = [&, kernel = make_kernel(g)](std::size_t i, std::size_t j) { return kernel(x[i], x[j]); };
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  MultigraphBuilder b(nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j)
      if (unif(rng) < prob(i, j)) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return b.build();
}

Multigraph sample_graphon_graph(std::int64_t n, const Graphon& g, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return sample_graphon_graph(n, g, rng);
}

}  // namespace tfp
