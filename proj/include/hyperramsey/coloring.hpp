#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// Colors are 1-based: a coloring with L colors uses {1, ..., L}.
using Color = std::uint32_t;

/// Total map from the edges of a host hypergraph to colors 1..L.
///
/// The assignment is indexed like host().edges(). The host is shared and
/// immutable, so copies of a coloring are cheap.
class EdgeColoring {
 public:
  EdgeColoring(std::shared_ptr<const UniformHypergraph> host, Color num_colors,
               std::vector<Color> assignment);

  /// Every edge gets `color`.
  static EdgeColoring constant(std::shared_ptr<const UniformHypergraph> host, Color num_colors,
                               Color color);

  const UniformHypergraph& host() const noexcept { return *host_; }
  const std::shared_ptr<const UniformHypergraph>& host_ptr() const noexcept { return host_; }
  Color num_colors() const noexcept { return num_colors_; }
  const std::vector<Color>& assignment() const noexcept { return assignment_; }

  Color color_of_index(std::size_t edge_index) const { return assignment_.at(edge_index); }
  /// Throws ParameterError if `edge` is not an edge of the host.
  Color color_of(const VertexSet& edge) const;

  /// Sub-hypergraph formed by the edges of one color.
  UniformHypergraph color_class(Color color) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.num_colors_ == b.num_colors_ && *a.host_ == *b.host_ &&
           a.assignment_ == b.assignment_;
  }

 private:
  std::shared_ptr<const UniformHypergraph> host_;
  Color num_colors_;
  std::vector<Color> assignment_;
};

}  // namespace hyperramsey
