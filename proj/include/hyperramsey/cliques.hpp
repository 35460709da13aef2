#pragma once

#include <cstdint>
#include <vector>

#include "hyperramsey/coloring.hpp"
#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// All t-vertex sets W such that every r-subset of W is an edge of `g`
/// (r = g.k()), in ascending lexicographic order. Requires t >= r.
std::vector<VertexSet> enumerate_cliques(const UniformHypergraph& g, std::uint32_t t);

/// Number of t-vertex sets whose r-subsets are all edges of color `color`.
/// Copies are counted as unlabeled vertex subsets.
std::uint64_t count_mono_clique_copies(const EdgeColoring& c, Color color, std::uint32_t t);

}  // namespace hyperramsey
