#pragma once

#include <filesystem>
#include <iosfwd>

#include "tfp/multigraph.hpp"

namespace tfp {

/// Reads the text edge-list format:
///
///   # comment
///   n 11            (optional header; otherwise n = max id + 1)
///   0 3             one edge
///   4 5 2           two parallel edges
///   7 7             one self-loop (adds 2 to A_77)
///
/// Ids are 0-based. Errors carry the 1-based line number.
Multigraph read_edge_list(std::istream& in);
Multigraph read_edge_list(const std::filesystem::path& path);

/// Writes a graph so that read_edge_list reproduces it exactly.
void write_edge_list(std::ostream& out, const Multigraph& g);

}  // namespace tfp
