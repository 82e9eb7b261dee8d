#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfp/multigraph.hpp"
#include "tfp/rational.hpp"

namespace tfp {

/// Shape of a partially completed star-graph: a center joined to every
/// ring vertex, plus a proper nonempty subset of the ring edges, which
/// splits into tadpoles, isolated triangles and bands of adjacent triangles.
struct PcsSpec {
  int tadpoles = 0;
  int isolated = 0;
  /// Band widths (triangles per band), each >= 2, ascending.
  std::vector<int> bands;

  /// Validates and canonicalizes. Width-1 bands become isolated triangles;
  /// `width_one_bands` (when given) receives how many were converted.
  static PcsSpec make(int tadpoles, int isolated, std::vector<int> bands, int* width_one_bands = nullptr);
  /// Parses "pcs:t=<int>,iso=<int>,bands=<k1>+<k2>+..." (every field optional).
  static PcsSpec parse(std::string_view text, int* width_one_bands = nullptr);

  /// k: total number of triangles.
  [[nodiscard]] int triangle_count() const;
  /// n: number of non-center vertices.
  [[nodiscard]] int ring_size() const;
  [[nodiscard]] int vertex_count() const { return ring_size() + 1; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const PcsSpec&, const PcsSpec&) = default;
  friend auto operator<=>(const PcsSpec&, const PcsSpec&) = default;
};

enum class RingPieceKind { band, isolated_triangle, tadpole };

/// One maximal run of ring vertices joined by present ring edges.
struct RingPiece {
  RingPieceKind kind;
  int width;  ///< triangles in the run: band width, 1, or 0
};

/// Canonical ring order: bands, then isolated triangles, then tadpoles.
std::vector<RingPiece> canonical_layout(const PcsSpec& spec);
/// Center 0, ring vertices 1..n in the given piece order; consecutive pieces
/// are separated by one absent ring edge.
Multigraph build_pcs(std::span<const RingPiece> layout);
Multigraph build_pcs(const PcsSpec& spec);

struct PcsBias {
  Rational total;    ///< (n+1) * average
  Rational average;
};

/// Closed-form triangle bias: center term 2k/n - k, each band of width w
/// contributes k(w+2)/3 - 2w/3, each isolated triangle k - 1, each tadpole k.
PcsBias pcs_closed_form(const PcsSpec& spec);

/// Identifies the ring vertex of a given structural role in the canonical
/// layout of a spec. Syntax: "end[:i]", "mid[:i]", "tadpole[:i]", "iso[:i]"
/// pick the i-th (0-based, ring order) band end, band interior, tadpole tip
/// or isolated-triangle vertex; "v:<id>" or a bare integer is a raw id.
Vertex resolve_vertex(const PcsSpec& spec, std::string_view selector);

/// Merges vertex v1 of g1 with vertex v2 of g2; the edge set is the union.
/// g1 keeps its ids; the remaining vertices of g2 follow in order.
Multigraph glue(const Multigraph& g1, Vertex v1, const Multigraph& g2, Vertex v2);
/// Id of vertex u of g2 inside glue(g1, v1, g2, v2).
Vertex glued_id(std::size_t g1_vertices, Vertex v1, Vertex v2, Vertex u);
/// Glues two star-graphs at non-center vertices; rejects the center.
Multigraph glue_pcs(const PcsSpec& s1, Vertex v1, const PcsSpec& s2, Vertex v2);

/// Prebuilt star-graph with its local counts, for repeated gluing.
struct PcsInstance {
  PcsSpec spec;
  Multigraph graph;
  std::vector<std::int64_t> triangles;
  Rational total_bias;

  explicit PcsInstance(PcsSpec s);
};

/// Exact split of the total bias of a glued pair into the two old totals and
/// three correction terms:
///   center_gain        = c2/n1 + c1/n2                         (>= 0)
///   glue_vertex_loss   = -(k1 (c2+1)/((c1+1)(c1+c2+2)) + k2 (c1+1)/((c2+1)(c1+c2+2)))   (<= 0)
///   neighbor_correction = sum over ring neighbors of the glued vertices
/// where c is the number of ring neighbors of a gluing vertex and a, b are the
/// triangle counts of those neighbors (0 when absent).
struct NbDecomposition {
  Rational old_total_1;
  Rational old_total_2;
  Rational center_gain;
  Rational glue_vertex_loss;
  Rational neighbor_correction;
  Rational new_total;

  int ring_neighbors_1 = 0;                      // c1
  int ring_neighbors_2 = 0;                      // c2
  std::array<int, 2> neighbor_triangles_1{};    // a1, a2
  std::array<int, 2> neighbor_triangles_2{};    // b1, b2
  int ring_size_1 = 0;                           // n1
  int ring_size_2 = 0;                           // n2
  int triangles_1 = 0;                           // k1
  int triangles_2 = 0;                           // k2

  /// Case-wise lower bound on new_total, with k = max(k1, k2):
  /// c1=c2=0: old - k; exactly one c positive: old + max(c1/n2, c2/n1) - 5k/6 - 1/3;
  /// both positive: old + c1/n2 + c2/n1 - k/2 - 1/3.
  [[nodiscard]] Rational lower_bound() const;
  /// -k, -5k/6 or -k/2 by the same cases.
  [[nodiscard]] Rational glue_vertex_loss_bound() const;
  /// 0 when c1=c2=0, otherwise -1/3.
  [[nodiscard]] Rational neighbor_correction_bound() const;
};

NbDecomposition nb_decomposition(const PcsInstance& g1, Vertex v1, const PcsInstance& g2, Vertex v2);
NbDecomposition nb_decomposition(const PcsSpec& s1, Vertex v1, const PcsSpec& s2, Vertex v2);

/// Every valid spec with at most `max_total_vertices` vertices (center
/// included), each once, ordered by (ring size, tadpoles, isolated, bands).
std::vector<PcsSpec> enumerate_pcs(int max_total_vertices);

/// Specs among enumerate_pcs(max) whose total bias is below 3/2.
std::vector<std::pair<PcsSpec, Rational>> small_bias_catalogue(int max_total_vertices);

}  // namespace tfp
