#include "hyperramsey/coloring.hpp"

#include <string>

#include "hyperramsey/errors.hpp"

namespace hyperramsey {

EdgeColoring::EdgeColoring(std::shared_ptr<const UniformHypergraph> host, Color num_colors,
                           std::vector<Color> assignment)
    : host_(std::move(host)), num_colors_(num_colors), assignment_(std::move(assignment)) {
  if (!host_) throw ParameterError("coloring without a host");
  if (num_colors_ < 1) throw ParameterError("a coloring needs at least one color");
  if (assignment_.size() != host_->num_edges()) {
    throw ParameterError("coloring assigns " + std::to_string(assignment_.size()) +
                         " edges, host has " + std::to_string(host_->num_edges()));
  }
  for (Color c : assignment_) {
    if (c < 1 || c > num_colors_) {
      throw ParameterError("color " + std::to_string(c) + " outside [1," +
                           std::to_string(num_colors_) + "]");
    }
  }
}

EdgeColoring EdgeColoring::constant(std::shared_ptr<const UniformHypergraph> host,
                                    Color num_colors, Color color) {
  const std::size_t m = host ? host->num_edges() : 0;
  return EdgeColoring(std::move(host), num_colors, std::vector<Color>(m, color));
}

Color EdgeColoring::color_of(const VertexSet& edge) const {
  auto idx = host_->index_of(edge);
  if (!idx) throw ParameterError("not an edge of the colored host");
  return assignment_[*idx];
}

UniformHypergraph EdgeColoring::color_class(Color color) const {
  std::size_t i = 0;
  return host_->filter_edges([&](const VertexSet&) { return assignment_[i++] == color; });
}

}  // namespace hyperramsey
