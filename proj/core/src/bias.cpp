#include "tfp/bias.hpp"

#include <map>
#include <string>

#include "tfp/error.hpp"

namespace tfp {

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::degree: return "degree";
    case AttributeKind::wedge: return "wedge";
    case AttributeKind::triangle: return "triangle";
    case AttributeKind::custom: return "custom";
  }
  return "custom";
}

Rational BiasReport::total() const { return average * Rational(static_cast<std::int64_t>(per_vertex.size())); }

std::vector<std::int64_t> triangle_counts(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> t(n, 0);
  std::vector<std::int64_t> mark(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    const auto row_i = g.row(i);
    for (const auto& e : row_i) {
      if (e.neighbor != i) mark[e.neighbor] = e.multiplicity;
    }
    std::int64_t twice = 0;
    for (const auto& ij : row_i) {
      const Vertex j = ij.neighbor;
      if (j == i) continue;
      std::int64_t inner = 0;
      for (const auto& jk : g.row(j)) {
        const Vertex k = jk.neighbor;
        if (k == i || k == j) continue;
        inner += static_cast<std::int64_t>(jk.multiplicity) * mark[k];
      }
      twice += static_cast<std::int64_t>(ij.multiplicity) * inner;
    }
    t[i] = twice / 2;
    for (const auto& e : row_i) mark[e.neighbor] = 0;
  }
  return t;
}

VertexStats vertex_stats(const Multigraph& g) {
  VertexStats s;
  const std::size_t n = g.vertex_count();
  s.degrees.resize(n);
  s.wedges.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    const auto d = static_cast<std::int64_t>(g.degree(i));
    s.degrees[i] = d;
    s.wedges[i] = d * (d - 1) / 2;
  }
  s.triangles = triangle_counts(g);
  return s;
}

BiasReport attribute_bias(const Multigraph& g, std::span<const Rational> x, AttributeKind kind) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n) {
    throw InputError("attribute has " + std::to_string(x.size()) + " entries, graph has " + std::to_string(n) +
                     " vertices");
  }
  BiasReport report;
  report.attribute_kind = kind;
  report.per_vertex.resize(n);
  Rational sum;
  for (Vertex i = 0; i < n; ++i) {
    const auto d = g.degree(i);
    if (d == 0) continue;
    Rational neighbor_sum;
    for (const auto& e : g.row(i)) neighbor_sum += Rational(e.multiplicity) * x[e.neighbor];
    report.per_vertex[i] = neighbor_sum / Rational(static_cast<std::int64_t>(d)) - x[i];
    sum += report.per_vertex[i];
  }
  report.average = n == 0 ? Rational() : sum / Rational(static_cast<std::int64_t>(n));
  return report;
}

BiasReport attribute_bias(const Multigraph& g, std::span<const double> x) {
  std::vector<Rational> exact;
  exact.reserve(x.size());
  for (double v : x) exact.push_back(Rational::from_double(v));
  return attribute_bias(g, exact, AttributeKind::custom);
}

namespace {

std::vector<Rational> to_rationals(std::span<const std::int64_t> v) {
  return {v.begin(), v.end()};
}

}  // namespace

BiasReport degree_bias(const Multigraph& g) {
  return attribute_bias(g, to_rationals(vertex_stats(g).degrees), AttributeKind::degree);
}

BiasReport wedge_bias(const Multigraph& g) {
  return attribute_bias(g, to_rationals(vertex_stats(g).wedges), AttributeKind::wedge);
}

BiasReport triangle_bias(const Multigraph& g) {
  return attribute_bias(g, to_rationals(triangle_counts(g)), AttributeKind::triangle);
}

std::vector<Rational> kappa_vector(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Rational> kappa(n);
  for (Vertex i = 0; i < n; ++i) {
    for (const auto& e : g.row(i)) {
      kappa[i] += Rational(e.multiplicity, static_cast<std::int64_t>(g.degree(e.neighbor)));
    }
  }
  return kappa;
}

Rational covariance_bias(const Multigraph& g, std::span<const Rational> x) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n) throw InputError("attribute length does not match vertex count");
  if (n == 0) return {};
  const auto kappa = kappa_vector(g);
  Rational sum_xk;
  Rational sum_x;
  Rational sum_k;
  for (std::size_t i = 0; i < n; ++i) {
    sum_xk += x[i] * kappa[i];
    sum_x += x[i];
    sum_k += kappa[i];
  }
  const Rational nn(static_cast<std::int64_t>(n));
  return sum_xk / nn - (sum_x / nn) * (sum_k / nn);
}

Rational total_attribute_bias(const Multigraph& g, std::span<const std::int64_t> x) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n) throw InputError("attribute length does not match vertex count");
  // degree -> sum over rows of that degree of sum_j A_ij x_j
  std::map<std::uint64_t, std::int64_t> by_degree;
  std::int64_t own = 0;
  for (Vertex i = 0; i < n; ++i) {
    const auto d = g.degree(i);
    if (d == 0) continue;
    std::int64_t s = 0;
    for (const auto& e : g.row(i)) s += static_cast<std::int64_t>(e.multiplicity) * x[e.neighbor];
    by_degree[d] += s;
    own += x[i];
  }
  Rational total(-own);
  for (const auto& [d, s] : by_degree) total += Rational(s, static_cast<std::int64_t>(d));
  return total;
}

Rational total_triangle_bias(const Multigraph& g) { return total_attribute_bias(g, triangle_counts(g)); }

double average_bias_f64(const Multigraph& g, std::span<const std::int64_t> x) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n) throw InputError("attribute length does not match vertex count");
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    const auto d = g.degree(i);
    if (d == 0) continue;
    std::int64_t s = 0;
    for (const auto& e : g.row(i)) s += static_cast<std::int64_t>(e.multiplicity) * x[e.neighbor];
    sum += static_cast<double>(s) / static_cast<double>(d) - static_cast<double>(x[i]);
  }
  return sum / static_cast<double>(n);
}

double average_triangle_bias_f64(const Multigraph& g) { return average_bias_f64(g, triangle_counts(g)); }

}  // namespace tfp
