#include "tfp/star_graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <string>

#include "tfp/bias.hpp"
#include "tfp/error.hpp"

namespace tfp {

namespace {

int parse_int(std::string_view tok, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("bad integer '" + std::string(tok) + "' for " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

PcsSpec PcsSpec::make(int tadpoles, int isolated, std::vector<int> bands, int* width_one_bands) {
  if (tadpoles < 0 || isolated < 0) throw InputError("tadpole and isolated-triangle counts must be >= 0");
  PcsSpec spec;
  spec.tadpoles = tadpoles;
  spec.isolated = isolated;
  int converted = 0;
  for (int w : bands) {
    if (w < 1) throw InputError("band width must be >= 1, got " + std::to_string(w));
    if (w == 1) {
      ++spec.isolated;
      ++converted;
    } else {
      spec.bands.push_back(w);
    }
  }
  std::sort(spec.bands.begin(), spec.bands.end());
  if (width_one_bands != nullptr) *width_one_bands = converted;
  if (spec.triangle_count() < 1) throw InputError("a partially completed star-graph needs at least one triangle");
  if (spec.ring_size() < 2) throw InputError("a partially completed star-graph needs at least two ring vertices");
  return spec;
}

PcsSpec PcsSpec::parse(std::string_view text, int* width_one_bands) {
  constexpr std::string_view prefix = "pcs:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw InputError("star-graph spec must start with 'pcs:', got '" + std::string(text) + "'");
  }
  int t = 0;
  int iso = 0;
  std::vector<int> bands;
  const auto body = text.substr(prefix.size());
  if (!body.empty()) {
    for (const auto field : split(body, ',')) {
      const auto eq = field.find('=');
      if (eq == std::string_view::npos) throw InputError("expected key=value in '" + std::string(field) + "'");
      const auto key = field.substr(0, eq);
      const auto value = field.substr(eq + 1);
      if (key == "t") {
        t = parse_int(value, "t");
      } else if (key == "iso") {
        iso = parse_int(value, "iso");
      } else if (key == "bands") {
        if (!value.empty()) {
          for (const auto w : split(value, '+')) bands.push_back(parse_int(w, "band width"));
        }
      } else {
        throw InputError("unknown star-graph field '" + std::string(key) + "'");
      }
    }
  }
  return make(t, iso, std::move(bands), width_one_bands);
}

int PcsSpec::triangle_count() const {
  int k = isolated;
  for (int w : bands) k += w;
  return k;
}

int PcsSpec::ring_size() const {
  int n = 2 * isolated + tadpoles;
  for (int w : bands) n += w + 1;
  return n;
}

std::string PcsSpec::str() const {
  std::ostringstream os;
  os << "pcs:t=" << tadpoles << ",iso=" << isolated;
  if (!bands.empty()) {
    os << ",bands=";
    for (std::size_t i = 0; i < bands.size(); ++i) os << (i ? "+" : "") << bands[i];
  }
  return os.str();
}

std::vector<RingPiece> canonical_layout(const PcsSpec& spec) {
  std::vector<RingPiece> layout;
  for (int w : spec.bands) layout.push_back({RingPieceKind::band, w});
  for (int i = 0; i < spec.isolated; ++i) layout.push_back({RingPieceKind::isolated_triangle, 1});
  for (int i = 0; i < spec.tadpoles; ++i) layout.push_back({RingPieceKind::tadpole, 0});
  return layout;
}

Multigraph build_pcs(std::span<const RingPiece> layout) {
  Vertex next = 1;
  MultigraphBuilder b(1);
  for (const auto& piece : layout) {
    const int width = piece.kind == RingPieceKind::band ? piece.width
                      : piece.kind == RingPieceKind::isolated_triangle ? 1
                                                                         : 0;
    for (int s = 0; s <= width; ++s) b.add_edge(0, next + static_cast<Vertex>(s));
    for (int s = 0; s < width; ++s) b.add_edge(next + static_cast<Vertex>(s), next + static_cast<Vertex>(s) + 1);
    next += static_cast<Vertex>(width) + 1;
  }
  return b.build();
}

Multigraph build_pcs(const PcsSpec& spec) { return build_pcs(canonical_layout(spec)); }

PcsBias pcs_closed_form(const PcsSpec& spec) {
  const Rational k(spec.triangle_count());
  const Rational n(spec.ring_size());
  Rational total = Rational(2) * k / n - k;
  for (int w : spec.bands) {
    total += k * Rational(w + 2) / Rational(3) - Rational(2 * w, 3);
  }
  total += Rational(spec.isolated) * (k - Rational(1));
  total += Rational(spec.tadpoles) * k;
  return {total, total / (n + Rational(1))};
}

Vertex resolve_vertex(const PcsSpec& spec, std::string_view selector) {
  const auto colon = selector.find(':');
  const auto kind = selector.substr(0, colon);
  const bool has_index = colon != std::string_view::npos;
  const int index = has_index ? parse_int(selector.substr(colon + 1), "vertex selector index") : 0;
  const int n = spec.ring_size();

  if (kind == "v" || (!kind.empty() && std::all_of(kind.begin(), kind.end(), [](char c) { return c >= '0' && c <= '9'; }))) {
    const int id = kind == "v" ? index : parse_int(kind, "vertex id");
    if (id < 0 || id > n) throw InputError("vertex id " + std::to_string(id) + " out of range for " + spec.str());
    return static_cast<Vertex>(id);
  }

  std::vector<Vertex> ends, interior, tadpoles, isolated;
  Vertex next = 1;
  for (const auto& piece : canonical_layout(spec)) {
    switch (piece.kind) {
      case RingPieceKind::band:
        ends.push_back(next);
        for (int s = 1; s < piece.width; ++s) interior.push_back(next + static_cast<Vertex>(s));
        ends.push_back(next + static_cast<Vertex>(piece.width));
        next += static_cast<Vertex>(piece.width) + 1;
        break;
      case RingPieceKind::isolated_triangle:
        isolated.push_back(next);
        isolated.push_back(next + 1);
        next += 2;
        break;
      case RingPieceKind::tadpole:
        tadpoles.push_back(next);
        next += 1;
        break;
    }
  }
  const std::vector<Vertex>* pool = nullptr;
  if (kind == "end") pool = &ends;
  else if (kind == "mid") pool = &interior;
  else if (kind == "tadpole") pool = &tadpoles;
  else if (kind == "iso") pool = &isolated;
  else throw InputError("unknown vertex selector '" + std::string(selector) + "'");
  if (index < 0 || static_cast<std::size_t>(index) >= pool->size()) {
    throw InputError("selector '" + std::string(selector) + "' has no match in " + spec.str());
  }
  return (*pool)[static_cast<std::size_t>(index)];
}

Vertex glued_id(std::size_t g1_vertices, Vertex v1, Vertex v2, Vertex u) {
  if (u == v2) return v1;
  return static_cast<Vertex>(g1_vertices) + (u < v2 ? u : u - 1);
}

Multigraph glue(const Multigraph& g1, Vertex v1, const Multigraph& g2, Vertex v2) {
  if (v1 >= g1.vertex_count() || v2 >= g2.vertex_count()) throw InputError("gluing vertex out of range");
  const std::size_t n1 = g1.vertex_count();
  std::vector<Vertex> map1(n1);
  for (Vertex i = 0; i < n1; ++i) map1[i] = i;
  std::vector<Vertex> map2(g2.vertex_count());
  for (Vertex u = 0; u < g2.vertex_count(); ++u) map2[u] = glued_id(n1, v1, v2, u);
  MultigraphBuilder b(n1 + g2.vertex_count() - 1);
  b.add_graph(g1, map1);
  b.add_graph(g2, map2);
  return b.build();
}

namespace {

void check_gluing_vertex(const PcsSpec& s, Vertex v) {
  if (v == 0) throw DomainError("cannot glue at the center of " + s.str());
  if (v > static_cast<Vertex>(s.ring_size())) {
    throw InputError("gluing vertex " + std::to_string(v) + " out of range for " + s.str());
  }
}

}  // namespace

Multigraph glue_pcs(const PcsSpec& s1, Vertex v1, const PcsSpec& s2, Vertex v2) {
  check_gluing_vertex(s1, v1);
  check_gluing_vertex(s2, v2);
  return glue(build_pcs(s1), v1, build_pcs(s2), v2);
}

PcsInstance::PcsInstance(PcsSpec s)
    : spec(std::move(s)), graph(build_pcs(spec)), triangles(triangle_counts(graph)),
      total_bias(pcs_closed_form(spec).total) {}

namespace {

struct GlueSide {
  int ring_neighbors = 0;
  std::array<int, 2> neighbor_triangles{};
};

GlueSide inspect(const PcsInstance& g, Vertex v) {
  GlueSide side;
  for (const auto& e : g.graph.row(v)) {
    if (e.neighbor == 0 || e.neighbor == v) continue;
    if (side.ring_neighbors >= 2) throw InvariantError("ring vertex with more than two ring neighbors");
    side.neighbor_triangles[static_cast<std::size_t>(side.ring_neighbors)] =
        static_cast<int>(g.triangles[e.neighbor]);
    ++side.ring_neighbors;
  }
  return side;
}

Rational neighbor_terms(int c_self, const std::array<int, 2>& a, int c_other) {
  Rational sum;
  const Rational scale = Rational(c_other + 1) / Rational((c_self + 1) * (c_self + c_other + 2));
  for (int s = 0; s < c_self; ++s) {
    const int ai = a[static_cast<std::size_t>(s)];
    sum += Rational(c_other, ai + 1) - Rational(ai) * scale;
  }
  return sum;
}

}  // namespace

NbDecomposition nb_decomposition(const PcsInstance& g1, Vertex v1, const PcsInstance& g2, Vertex v2) {
  check_gluing_vertex(g1.spec, v1);
  check_gluing_vertex(g2.spec, v2);
  const GlueSide x = inspect(g1, v1);
  const GlueSide y = inspect(g2, v2);

  NbDecomposition d;
  d.ring_neighbors_1 = x.ring_neighbors;
  d.ring_neighbors_2 = y.ring_neighbors;
  d.neighbor_triangles_1 = x.neighbor_triangles;
  d.neighbor_triangles_2 = y.neighbor_triangles;
  d.ring_size_1 = g1.spec.ring_size();
  d.ring_size_2 = g2.spec.ring_size();
  d.triangles_1 = g1.spec.triangle_count();
  d.triangles_2 = g2.spec.triangle_count();
  d.old_total_1 = g1.total_bias;
  d.old_total_2 = g2.total_bias;

  const int c1 = d.ring_neighbors_1;
  const int c2 = d.ring_neighbors_2;
  d.center_gain = Rational(c2, d.ring_size_1) + Rational(c1, d.ring_size_2);
  const int joint = c1 + c2 + 2;
  d.glue_vertex_loss = -(Rational(d.triangles_1) * Rational(c2 + 1, (c1 + 1) * joint) +
                         Rational(d.triangles_2) * Rational(c1 + 1, (c2 + 1) * joint));
  d.neighbor_correction = neighbor_terms(c1, x.neighbor_triangles, c2) + neighbor_terms(c2, y.neighbor_triangles, c1);
  d.new_total = d.old_total_1 + d.old_total_2 + d.center_gain + d.glue_vertex_loss + d.neighbor_correction;
  return d;
}

NbDecomposition nb_decomposition(const PcsSpec& s1, Vertex v1, const PcsSpec& s2, Vertex v2) {
  return nb_decomposition(PcsInstance(s1), v1, PcsInstance(s2), v2);
}

Rational NbDecomposition::glue_vertex_loss_bound() const {
  const Rational k(std::max(triangles_1, triangles_2));
  const int c1 = ring_neighbors_1;
  const int c2 = ring_neighbors_2;
  if (c1 == 0 && c2 == 0) return -k;
  if (c1 == 0 || c2 == 0) return -(Rational(5, 6) * k);
  return -(k / Rational(2));
}

Rational NbDecomposition::neighbor_correction_bound() const {
  return (ring_neighbors_1 == 0 && ring_neighbors_2 == 0) ? Rational(0) : Rational(-1, 3);
}

Rational NbDecomposition::lower_bound() const {
  const Rational old = old_total_1 + old_total_2;
  const int c1 = ring_neighbors_1;
  const int c2 = ring_neighbors_2;
  const Rational from_1(c1, ring_size_2);
  const Rational from_2(c2, ring_size_1);
  if (c1 == 0 && c2 == 0) return old + glue_vertex_loss_bound();
  if (c1 == 0 || c2 == 0) return old + std::max(from_1, from_2) + glue_vertex_loss_bound() + Rational(-1, 3);
  return old + from_1 + from_2 + glue_vertex_loss_bound() + Rational(-1, 3);
}

namespace {

// Multisets of band widths (each >= 2, non-decreasing, >= min_width) whose
// vertex cost sum(w + 1) is exactly `budget`.
void band_multisets(int budget, int min_width, std::vector<int>& current,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (budget == 0) {
    emit(current);
    return;
  }
  for (int w = min_width; w + 1 <= budget; ++w) {
    current.push_back(w);
    band_multisets(budget - (w + 1), w, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<PcsSpec> enumerate_pcs(int max_total_vertices) {
  std::vector<PcsSpec> out;
  std::vector<int> current;
  for (int n = 2; n + 1 <= max_total_vertices; ++n) {
    for (int t = 0; t <= n; ++t) {
      for (int iso = 0; 2 * iso + t <= n; ++iso) {
        band_multisets(n - t - 2 * iso, 2, current, [&](const std::vector<int>& bands) {
          if (iso == 0 && bands.empty()) return;
          PcsSpec s;
          s.tadpoles = t;
          s.isolated = iso;
          s.bands = bands;
          out.push_back(std::move(s));
        });
      }
    }
  }
  return out;
}

std::vector<std::pair<PcsSpec, Rational>> small_bias_catalogue(int max_total_vertices) {
  std::vector<std::pair<PcsSpec, Rational>> out;
  const Rational threshold(3, 2);
  for (auto& spec : enumerate_pcs(max_total_vertices)) {
    auto total = pcs_closed_form(spec).total;
    if (total < threshold) out.emplace_back(std::move(spec), std::move(total));
  }
  return out;
}

}  // namespace tfp
