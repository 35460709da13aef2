#include "hyperramsey/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "hyperramsey/errors.hpp"

namespace hyperramsey {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& text) {
  std::istringstream ss(text);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back({number, split(text)});
  }
  return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "not a non-negative integer: '" + tok + "'");
  return value;
}

std::uint32_t parse_u32(const std::string& tok, std::size_t line) {
  const auto v = parse_uint(tok, line);
  if (v > 0xffffffffull) throw ParseError(line, "integer too large: '" + tok + "'");
  return static_cast<std::uint32_t>(v);
}

VertexSet parse_edge(const Line& line, std::size_t first, std::uint32_t n, std::uint32_t k) {
  VertexSet e;
  e.reserve(k);
  for (std::size_t i = first; i < first + k; ++i) {
    const auto v = parse_u32(line.tokens[i], line.number);
    if (v < 1 || v > n) {
      throw ParseError(line.number,
                       "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
    if (!e.empty()) {
      if (v == e.back()) throw ParseError(line.number, "repeated vertex " + std::to_string(v));
      if (v < e.back()) throw ParseError(line.number, "edge vertices are not ascending");
    }
    e.push_back(v);
  }
  return e;
}

void write_edge(const VertexSet& e, std::ostream& out) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << ' ';
    out << e[i];
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

UniformHypergraph parse_hypergraph(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'uhg <n> <k>' header");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "uhg") {
    throw ParseError(header.number, "expected header 'uhg <n> <k>'");
  }
  const auto n = parse_u32(header.tokens[1], header.number);
  const auto k = parse_u32(header.tokens[2], header.number);
  if (k < 2) throw ParseError(header.number, "uniformity must be at least 2");

  std::vector<VertexSet> edges;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != k) {
      throw ParseError(line.number, "edge has " + std::to_string(line.tokens.size()) +
                                        " vertices, expected " + std::to_string(k));
    }
    VertexSet e = parse_edge(line, 0, n, k);
    if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge");
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(n, k, std::move(edges));
}

void format_hypergraph(const UniformHypergraph& h, std::ostream& out) {
  out << "uhg " << h.n() << ' ' << h.k() << '\n';
  for (const auto& e : h.edges()) {
    write_edge(e, out);
    out << '\n';
  }
}

std::string to_uhg_string(const UniformHypergraph& h) {
  std::ostringstream out;
  format_hypergraph(h, out);
  return out.str();
}

UniformHypergraph read_hypergraph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_hypergraph(in);
}

void write_hypergraph(const UniformHypergraph& h, const std::filesystem::path& path) {
  auto out = open_out(path);
  format_hypergraph(h, out);
}

EdgeColoring parse_coloring(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'col <n> <k> <L>' header");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "col") {
    throw ParseError(header.number, "expected header 'col <n> <k> <L>'");
  }
  const auto n = parse_u32(header.tokens[1], header.number);
  const auto k = parse_u32(header.tokens[2], header.number);
  const auto colors = parse_u32(header.tokens[3], header.number);
  if (k < 2) throw ParseError(header.number, "uniformity must be at least 2");
  if (colors < 1) throw ParseError(header.number, "a coloring needs at least one color");

  std::vector<std::pair<VertexSet, Color>> entries;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != k + 1) {
      throw ParseError(line.number, "expected " + std::to_string(k) + " vertices and a color");
    }
    VertexSet e = parse_edge(line, 0, n, k);
    const auto c = parse_u32(line.tokens[k], line.number);
    if (c < 1 || c > colors) {
      throw ParseError(line.number,
                       "color " + std::to_string(c) + " outside [1," + std::to_string(colors) + "]");
    }
    if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge");
    entries.emplace_back(std::move(e), c);
  }
  std::sort(entries.begin(), entries.end());
  std::vector<VertexSet> edges;
  std::vector<Color> assignment;
  for (auto& [e, c] : entries) {
    edges.push_back(e);
    assignment.push_back(c);
  }
  auto host = std::make_shared<const UniformHypergraph>(n, k, std::move(edges));
  return EdgeColoring(std::move(host), colors, std::move(assignment));
}

void format_coloring(const EdgeColoring& c, std::ostream& out) {
  const auto& h = c.host();
  out << "col " << h.n() << ' ' << h.k() << ' ' << c.num_colors() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    write_edge(h.edge(i), out);
    out << ' ' << c.color_of_index(i) << '\n';
  }
}

std::string to_col_string(const EdgeColoring& c) {
  std::ostringstream out;
  format_coloring(c, out);
  return out.str();
}

EdgeColoring read_coloring(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_coloring(in);
}

EdgeColoring read_coloring(const std::filesystem::path& path, const UniformHypergraph& host) {
  EdgeColoring c = read_coloring(path);
  if (!(c.host() == host)) {
    throw ParameterError("coloring in '" + path.string() +
                         "' does not cover the host's edge set exactly");
  }
  return c;
}

void write_coloring(const EdgeColoring& c, const std::filesystem::path& path) {
  auto out = open_out(path);
  format_coloring(c, out);
}

}  // namespace hyperramsey
