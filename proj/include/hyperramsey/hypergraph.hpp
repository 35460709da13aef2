#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hyperramsey {

using Vertex = std::uint32_t;

/// Strictly ascending list of 1-based vertex indices.
using VertexSet = std::vector<Vertex>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Vertex v : s) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// k-uniform hypergraph on the vertex set {1, ..., n}.
///
/// Edges are stored sorted ascending internally and the edge list is kept in
/// lexicographic order, so two hypergraphs with the same edge set compare
/// equal and iterate identically. Instances are immutable after construction.
/// Isolated vertices are allowed: n is explicit, not inferred from the edges.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;

  /// Edges may be given in any vertex order; duplicates, repeated vertices,
  /// out-of-range vertices and wrong arity raise ParameterError.
  UniformHypergraph(std::uint32_t n, std::uint32_t k, std::vector<VertexSet> edges);

  /// Same as the constructor but silently drops duplicate edges.
  static UniformHypergraph from_edges_dedup(std::uint32_t n, std::uint32_t k,
                                            std::vector<VertexSet> edges);

  /// The complete k-graph on {1, ..., n}.
  static UniformHypergraph complete(std::uint32_t n, std::uint32_t k);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_.at(i); }

  /// `e` must already be sorted ascending.
  bool has_edge(const VertexSet& e) const { return index_.contains(e); }
  std::optional<std::size_t> index_of(const VertexSet& e) const;

  /// Vertices lying in at least one edge, ascending.
  VertexSet non_isolated_vertices() const;

  /// Edge set inclusion on the same vertex count and uniformity.
  bool is_subgraph_of(const UniformHypergraph& other) const;

  /// The sub-hypergraph on the same vertex set keeping only edges for which
  /// `keep` returns true.
  UniformHypergraph filter_edges(const std::function<bool(const VertexSet&)>& keep) const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  struct Trusted {};
  UniformHypergraph(Trusted, std::uint32_t n, std::uint32_t k, std::vector<VertexSet> edges);
  void build_index();

  std::uint32_t n_ = 0;
  std::uint32_t k_ = 2;
  std::vector<VertexSet> edges_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

/// Calls `fn` with every k-subset of `set` (ascending, lexicographic order).
/// Stops early when `fn` returns false.
void for_each_subset(std::span<const Vertex> set, std::size_t k,
                     const std::function<bool(const VertexSet&)>& fn);

/// All k-subsets of `set` in lexicographic order.
std::vector<VertexSet> subsets_of_size(std::span<const Vertex> set, std::size_t k);

/// Size of the intersection of two ascending vertex sets.
std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);

/// True iff every element of ascending `a` appears in ascending `b`.
bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b);

/// {1, ..., n}
VertexSet iota_set(std::uint32_t n);

/// The primal r-graph: the r-graph on V(H) whose edges are all r-subsets of
/// edges of H. Requires 2 <= r <= H.k().
UniformHypergraph primal_r_graph(const UniformHypergraph& h, std::uint32_t r);

}  // namespace hyperramsey
