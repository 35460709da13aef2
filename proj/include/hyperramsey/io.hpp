#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hyperramsey/coloring.hpp"
#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

// .uhg: header `uhg <n> <k>`, then one edge per line as k ascending 1-based
// vertex indices separated by single spaces. Lines starting with '#' are
// comments; blank lines are ignored.
//
// .col: header `col <n> <k> <L>`, then `v1 ... vk c` per edge with c in
// [1, L]. The listed edges form the host of the coloring.

UniformHypergraph parse_hypergraph(std::istream& in);
void format_hypergraph(const UniformHypergraph& h, std::ostream& out);
std::string to_uhg_string(const UniformHypergraph& h);

UniformHypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const UniformHypergraph& h, const std::filesystem::path& path);

EdgeColoring parse_coloring(std::istream& in);
void format_coloring(const EdgeColoring& c, std::ostream& out);
std::string to_col_string(const EdgeColoring& c);

EdgeColoring read_coloring(const std::filesystem::path& path);
/// Reads a coloring and checks that it colors exactly the edges of `host`.
EdgeColoring read_coloring(const std::filesystem::path& path, const UniformHypergraph& host);
void write_coloring(const EdgeColoring& c, const std::filesystem::path& path);

}  // namespace hyperramsey
