#pragma once

#include <cstdint>

#include "hyperramsey/hypergraph.hpp"
#include "hyperramsey/rational.hpp"

namespace hyperramsey {

struct DensityResult {
  Rational value;
  /// Vertex set U attaining the maximum (empty when F has no edges; the edge
  /// itself when F has exactly one).
  VertexSet witness;
};

/// Largest number of non-isolated vertices max_r_density will scan
/// (the search visits every subset of them).
inline constexpr std::uint32_t kDefaultDensityVertexCap = 22;

/// Maximum r-density m_r(F) with r = F.k():
///   0 if F has no edges, 1/r if it has one, and otherwise the maximum of
///   (e(F[U]) - 1) / (|U| - r) over vertex sets U with |U| > r.
/// Only induced sub-hypergraphs on non-isolated vertices are scanned; that
/// loses nothing, since for a fixed vertex set keeping every edge maximizes
/// the ratio and isolated vertices only grow the denominator.
/// Throws ParameterError when F has more than `vertex_cap` non-isolated vertices.
DensityResult max_r_density(const UniformHypergraph& f,
                            std::uint32_t vertex_cap = kDefaultDensityVertexCap);

/// m_r(K_t^(r)) = (C(t,r) - 1) / (t - r), for t > r >= 2.
Rational clique_density(std::uint32_t t, std::uint32_t r);

}  // namespace hyperramsey
