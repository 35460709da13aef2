#include "hyperramsey/cliques.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hyperramsey/errors.hpp"

namespace hyperramsey {

namespace {

// Grows ascending cliques. `candidates` holds every vertex u > clique.back()
// with clique + {u} still a clique.
class CliqueExtender {
 public:
  CliqueExtender(const UniformHypergraph& g, std::uint32_t t, std::vector<VertexSet>& out)
      : g_(g), r_(g.k()), t_(t), out_(out) {}

  void extend(VertexSet& clique, const VertexSet& candidates) {
    if (clique.size() == t_) {
      out_.push_back(clique);
      return;
    }
    const std::size_t need = t_ - clique.size();
    for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
      const Vertex v = candidates[i];
      clique.push_back(v);
      VertexSet next;
      if (clique.size() < t_) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
          if (closes_with(clique, candidates[j])) next.push_back(candidates[j]);
        }
      }
      extend(clique, next);
      clique.pop_back();
    }
  }

 private:
  // Does every (r-1)-subset of `clique` that contains clique.back() form an
  // edge together with u? Subsets avoiding the last vertex were checked when
  // u entered the candidate list.
  bool closes_with(const VertexSet& clique, Vertex u) const {
    const Vertex last = clique.back();
    VertexSet rest(clique.begin(), clique.end() - 1);
    bool ok = true;
    for_each_subset(rest, r_ - 2, [&](const VertexSet& part) {
      VertexSet e = part;
      e.push_back(last);
      e.push_back(u);
      std::sort(e.begin(), e.end());
      ok = g_.has_edge(e);
      return ok;
    });
    return ok;
  }

  const UniformHypergraph& g_;
  std::uint32_t r_;
  std::uint32_t t_;
  std::vector<VertexSet>& out_;
};

}  // namespace

std::vector<VertexSet> enumerate_cliques(const UniformHypergraph& g, std::uint32_t t) {
  const std::uint32_t r = g.k();
  if (t < r) {
    throw ParameterError("clique size " + std::to_string(t) + " below uniformity " +
                         std::to_string(r));
  }
  std::vector<VertexSet> out;
  if (t == r) {
    out = g.edges();
    return out;
  }
  // Every clique starts with the r-1 smallest vertices of one of its edges;
  // the remaining vertices all complete that prefix to an edge.
  std::map<VertexSet, VertexSet> completions;
  for (const auto& e : g.edges()) {
    VertexSet prefix(e.begin(), e.end() - 1);
    completions[prefix].push_back(e.back());
  }
  CliqueExtender extender(g, t, out);
  for (auto& [prefix, tails] : completions) {
    std::sort(tails.begin(), tails.end());
    // prefix + {u} is a clique exactly when it is an edge, so the tails are
    // the initial candidates.
    VertexSet clique = prefix;
    extender.extend(clique, tails);
  }
  return out;
}

std::uint64_t count_mono_clique_copies(const EdgeColoring& c, Color color, std::uint32_t t) {
  if (color < 1 || color > c.num_colors()) throw ParameterError("color out of range");
  return enumerate_cliques(c.color_class(color), t).size();
}

}  // namespace hyperramsey
