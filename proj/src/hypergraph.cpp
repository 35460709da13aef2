#include "hyperramsey/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperramsey/errors.hpp"

namespace hyperramsey {

namespace {

void canonicalize_edge(VertexSet& e, std::uint32_t n, std::uint32_t k) {
  if (e.size() != k) {
    throw ParameterError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                         std::to_string(k));
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
    throw ParameterError("edge repeats a vertex");
  }
  if (e.front() < 1 || e.back() > n) {
    throw ParameterError("edge vertex out of range [1," + std::to_string(n) + "]");
  }
}

void check_uniformity(std::uint32_t k) {
  if (k < 2) throw ParameterError("uniformity must be at least 2");
}

}  // namespace

UniformHypergraph::UniformHypergraph(std::uint32_t n, std::uint32_t k,
                                     std::vector<VertexSet> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  check_uniformity(k);
  for (auto& e : edges_) canonicalize_edge(e, n, k);
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ParameterError("duplicate edge");
  }
  build_index();
}

UniformHypergraph::UniformHypergraph(Trusted, std::uint32_t n, std::uint32_t k,
                                     std::vector<VertexSet> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  build_index();
}

UniformHypergraph UniformHypergraph::from_edges_dedup(std::uint32_t n, std::uint32_t k,
                                                      std::vector<VertexSet> edges) {
  check_uniformity(k);
  for (auto& e : edges) canonicalize_edge(e, n, k);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return UniformHypergraph(Trusted{}, n, k, std::move(edges));
}

UniformHypergraph UniformHypergraph::complete(std::uint32_t n, std::uint32_t k) {
  check_uniformity(k);
  const VertexSet all = iota_set(n);
  return UniformHypergraph(Trusted{}, n, k, subsets_of_size(all, k));
}

void UniformHypergraph::build_index() {
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) index_.emplace(edges_[i], i);
}

std::optional<std::size_t> UniformHypergraph::index_of(const VertexSet& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexSet UniformHypergraph::non_isolated_vertices() const {
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (const auto& e : edges_)
    for (Vertex v : e) seen[v] = true;
  VertexSet out;
  for (Vertex v = 1; v <= n_; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool UniformHypergraph::is_subgraph_of(const UniformHypergraph& other) const {
  if (n_ != other.n_ || k_ != other.k_) return false;
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const VertexSet& e) { return other.has_edge(e); });
}

UniformHypergraph UniformHypergraph::filter_edges(
    const std::function<bool(const VertexSet&)>& keep) const {
  std::vector<VertexSet> kept;
  for (const auto& e : edges_)
    if (keep(e)) kept.push_back(e);
  return UniformHypergraph(Trusted{}, n_, k_, std::move(kept));
}

void for_each_subset(std::span<const Vertex> set, std::size_t k,
                     const std::function<bool(const VertexSet&)>& fn) {
  const std::size_t m = set.size();
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  VertexSet current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = set[idx[i]];
    if (!fn(current)) return;
    // advance to the next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<VertexSet> subsets_of_size(std::span<const Vertex> set, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_subset(set, k, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet iota_set(std::uint32_t n) {
  VertexSet out(n);
  for (std::uint32_t i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

UniformHypergraph primal_r_graph(const UniformHypergraph& h, std::uint32_t r) {
  if (r < 2 || r > h.k()) {
    throw ParameterError("primal r-graph needs 2 <= r <= " + std::to_string(h.k()) +
                         ", got r = " + std::to_string(r));
  }
  std::vector<VertexSet> pieces;
  for (const auto& e : h.edges()) {
    for_each_subset(e, r, [&](const VertexSet& b) {
      pieces.push_back(b);
      return true;
    });
  }
  return UniformHypergraph::from_edges_dedup(h.n(), r, std::move(pieces));
}

}  // namespace hyperramsey
