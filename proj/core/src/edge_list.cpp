#include "tfp/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tfp/error.hpp"

namespace tfp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared_n;
  MultigraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  bool seen_edge = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) throw InputError("line " + std::to_string(line_no) + ": header must be 'n <count>'");
      if (declared_n || seen_edge) {
        throw InputError("line " + std::to_string(line_no) + ": 'n' header must come once, before any edge");
      }
      declared_n = parse_uint(tokens[1], line_no);
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v [multiplicity]'");
    }
    const auto u = parse_uint(tokens[0], line_no);
    const auto v = parse_uint(tokens[1], line_no);
    const auto mult = tokens.size() == 3 ? parse_uint(tokens[2], line_no) : 1;
    if (mult == 0) throw InputError("line " + std::to_string(line_no) + ": multiplicity must be positive");
    if (u > UINT32_MAX - 1 || v > UINT32_MAX - 1 || mult > UINT32_MAX / 2) {
      throw InputError("line " + std::to_string(line_no) + ": value out of range");
    }
    if (declared_n && (u >= *declared_n || v >= *declared_n)) {
      throw InputError("line " + std::to_string(line_no) + ": vertex id exceeds declared n = " +
                       std::to_string(*declared_n));
    }
    builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<std::uint32_t>(mult));
    seen_edge = true;
  }
  if (declared_n) builder.ensure_vertices(*declared_n);
  return builder.build();
}

Multigraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (const auto& e : g.row(i)) {
      if (e.neighbor < i) continue;
      const std::uint32_t count = e.neighbor == i ? e.multiplicity / 2 : e.multiplicity;
      out << i << ' ' << e.neighbor;
      if (count != 1) out << ' ' << count;
      out << '\n';
    }
  }
}

}  // namespace tfp
