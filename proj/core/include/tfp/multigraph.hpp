#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tfp {

using Vertex = std::uint32_t;

/// One nonzero entry A_ij of a row of the adjacency matrix.
struct AdjacencyEntry {
  Vertex neighbor;
  std::uint32_t multiplicity;

  friend bool operator==(const AdjacencyEntry&, const AdjacencyEntry&) = default;
};

/// Undirected multigraph stored as sorted sparse adjacency rows.
///
/// Row i holds every j with A_ij > 0, including j == i when i carries
/// self-loops; in that case the stored value is A_ii = 2 * (number of loops).
/// Immutable once built; use MultigraphBuilder to construct one.
class Multigraph {
 public:
  Multigraph() = default;

  [[nodiscard]] std::size_t vertex_count() const { return rows_.size(); }
  [[nodiscard]] std::span<const AdjacencyEntry> row(Vertex i) const { return rows_[i]; }
  /// A_ij (0 when absent). Binary search in row i.
  [[nodiscard]] std::uint32_t multiplicity(Vertex i, Vertex j) const;
  [[nodiscard]] std::uint64_t degree(Vertex i) const { return degrees_[i]; }
  [[nodiscard]] std::span<const std::uint64_t> degrees() const { return degrees_; }
  /// Number of edges, counting each self-loop once and each parallel edge separately.
  [[nodiscard]] std::uint64_t edge_count() const;
  [[nodiscard]] bool is_simple() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) { return a.rows_ == b.rows_; }

 private:
  friend class MultigraphBuilder;
  std::vector<std::vector<AdjacencyEntry>> rows_;
  std::vector<std::uint64_t> degrees_;
};

/// Accumulates edges, then produces a canonical Multigraph.
class MultigraphBuilder {
 public:
  explicit MultigraphBuilder(std::size_t vertex_count = 0);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  /// Grows the vertex set to at least `count` vertices.
  void ensure_vertices(std::size_t count);
  /// Adds `count` parallel edges u–v. With u == v each one is a self-loop
  /// and adds 2 to A_uu.
  void add_edge(Vertex u, Vertex v, std::uint32_t count = 1);
  /// Adds every edge of g, with vertex i of g mapped to map[i].
  void add_graph(const Multigraph& g, std::span<const Vertex> map);

  [[nodiscard]] Multigraph build() const;

 private:
  struct HalfEntry {
    Vertex from;
    Vertex to;
    std::uint32_t value;
  };
  std::size_t vertex_count_;
  std::vector<HalfEntry> entries_;
};

/// Simple graph on n vertices from an edge list (convenience for tests and figures).
Multigraph make_simple_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
Multigraph make_complete_graph(std::size_t n);

}  // namespace tfp
