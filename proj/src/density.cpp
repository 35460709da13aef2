#include "hyperramsey/density.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "hyperramsey/errors.hpp"

namespace hyperramsey {

DensityResult max_r_density(const UniformHypergraph& f, std::uint32_t vertex_cap) {
  const std::uint32_t r = f.k();
  if (f.num_edges() == 0) return {Rational(0), {}};
  if (f.num_edges() == 1) return {Rational(1, r), f.edge(0)};

  const VertexSet support = f.non_isolated_vertices();
  const auto m = static_cast<std::uint32_t>(support.size());
  if (m > vertex_cap || m > 62) {
    throw ParameterError("density search over " + std::to_string(m) +
                         " vertices exceeds the cap of " + std::to_string(vertex_cap));
  }
  std::unordered_map<Vertex, std::uint32_t> position;
  for (std::uint32_t i = 0; i < m; ++i) position[support[i]] = i;
  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(f.num_edges());
  for (const auto& e : f.edges()) {
    std::uint64_t mask = 0;
    for (Vertex v : e) mask |= std::uint64_t{1} << position[v];
    edge_masks.push_back(mask);
  }

  // Track the best ratio as a pair of machine integers and only build the
  // Rational at the end: (edges - 1) / (size - r) with small operands.
  std::int64_t best_num = 0, best_den = 0;
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (size <= r) continue;
    std::int64_t inside = 0;
    for (std::uint64_t em : edge_masks)
      if ((em & mask) == em) ++inside;
    if (inside == 0) continue;
    const std::int64_t num = inside - 1;
    const std::int64_t den = size - r;
    if (best_den == 0 || num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      best_mask = mask;
    }
  }
  VertexSet witness;
  for (std::uint32_t i = 0; i < m; ++i)
    if (best_mask >> i & 1u) witness.push_back(support[i]);
  return {Rational(best_num, best_den), witness};
}

Rational clique_density(std::uint32_t t, std::uint32_t r) {
  if (r < 2 || t <= r) {
    throw ParameterError("clique density needs t > r >= 2, got t = " + std::to_string(t) +
                         ", r = " + std::to_string(r));
  }
  return Rational(binomial(t, r) - 1, BigInt(static_cast<long>(t - r)));
}

}  // namespace hyperramsey
