#include "tfp/multigraph.hpp"

#include <algorithm>
#include <string>

#include "tfp/error.hpp"

namespace tfp {

std::uint32_t Multigraph::multiplicity(Vertex i, Vertex j) const {
  const auto& r = rows_[i];
  const auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const AdjacencyEntry& e, Vertex v) { return e.neighbor < v; });
  return (it != r.end() && it->neighbor == j) ? it->multiplicity : 0;
}

std::uint64_t Multigraph::edge_count() const {
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i]) twice += e.multiplicity;
  }
  // Off-diagonal entries appear in two rows; A_ii already counts 2 per loop.
  return twice / 2;
}

bool Multigraph::is_simple() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i]) {
      if (e.neighbor == i || e.multiplicity != 1) return false;
    }
  }
  return true;
}

MultigraphBuilder::MultigraphBuilder(std::size_t vertex_count) : vertex_count_(vertex_count) {}

void MultigraphBuilder::ensure_vertices(std::size_t count) { vertex_count_ = std::max(vertex_count_, count); }

void MultigraphBuilder::add_edge(Vertex u, Vertex v, std::uint32_t count) {
  if (count == 0) return;
  ensure_vertices(static_cast<std::size_t>(std::max(u, v)) + 1);
  if (u == v) {
    entries_.push_back({u, u, 2 * count});
  } else {
    entries_.push_back({u, v, count});
    entries_.push_back({v, u, count});
  }
}

void MultigraphBuilder::add_graph(const Multigraph& g, std::span<const Vertex> map) {
  if (map.size() != g.vertex_count()) throw InputError("vertex map size does not match graph");
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (const auto& e : g.row(i)) {
      if (e.neighbor < i) continue;
      if (e.neighbor == i) {
        add_edge(map[i], map[i], e.multiplicity / 2);
      } else {
        add_edge(map[i], map[e.neighbor], e.multiplicity);
      }
    }
  }
}

Multigraph MultigraphBuilder::build() const {
  Multigraph g;
  g.rows_.resize(vertex_count_);
  g.degrees_.assign(vertex_count_, 0);
  std::vector<HalfEntry> sorted = entries_;
  std::sort(sorted.begin(), sorted.end(),
            [](const HalfEntry& a, const HalfEntry& b) { return a.from != b.from ? a.from < b.from : a.to < b.to; });
  for (const auto& h : sorted) {
    auto& r = g.rows_[h.from];
    if (!r.empty() && r.back().neighbor == h.to) {
      r.back().multiplicity += h.value;
    } else {
      r.push_back({h.to, h.value});
    }
    g.degrees_[h.from] += h.value;
  }
  return g;
}

Multigraph make_simple_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  MultigraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    b.add_edge(u, v);
  }
  return b.build();
}

Multigraph make_complete_graph(std::size_t n) {
  MultigraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return b.build();
}

}  // namespace tfp
