#pragma once

#include <cstdint>

#include "hyperramsey/hypergraph.hpp"
#include "hyperramsey/probability.hpp"

namespace hyperramsey {

struct SamplerOptions {
  /// Expected edge counts p * C(n, s) up to this value use the skip sampler;
  /// larger ones flip one coin per candidate edge.
  double sparse_threshold = 1e6;
  /// Refuse to flip coins for more candidates than this.
  std::uint64_t dense_candidate_cap = 50'000'000;
};

/// Random s-graph H(n, s, p) on {1..n}: every s-subset is an edge
/// independently with probability p.
///
/// Two exact samplers are used. When p * C(n, s) <= sparse_threshold, the
/// gaps between consecutive chosen candidates (in colexicographic rank
/// order) are drawn from the geometric law and the ranks are unranked into
/// subsets, costing O(e(H)) instead of O(C(n, s)). Otherwise each candidate
/// in lexicographic order gets one uniform draw compared against p. Both
/// produce the same distribution; which one runs depends only on the
/// parameters, so output is a function of (n, s, p, seed, options).
UniformHypergraph sample_hypergraph(std::uint32_t n, std::uint32_t s, double p, std::uint64_t seed,
                                    const SamplerOptions& options = {});

UniformHypergraph sample_hypergraph(std::uint32_t n, std::uint32_t s, const Probability& p,
                                    std::uint64_t seed, const SamplerOptions& options = {});

/// The s-subset of {1..n} of colexicographic rank `rank` (rank 0 is {1..s}).
VertexSet unrank_colex(std::uint64_t rank, std::uint32_t n, std::uint32_t s);

}  // namespace hyperramsey
