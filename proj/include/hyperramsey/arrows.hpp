#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperramsey/coloring.hpp"
#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// Clique targets (K_{t_1}, ..., K_{t_L}) over a common uniformity r.
/// Color i (1-based) is paired with sizes[i - 1].
class TargetList {
 public:
  /// Requires r >= 2, at least one target, and every t_i > r.
  TargetList(std::uint32_t r, std::vector<std::uint32_t> sizes);

  /// Parses "3,4" (comma separated clique sizes).
  static TargetList parse(std::uint32_t r, const std::string& text);

  std::uint32_t r() const noexcept { return r_; }
  std::uint32_t num_colors() const noexcept { return static_cast<std::uint32_t>(sizes_.size()); }
  std::uint32_t size_for(Color color) const { return sizes_.at(color - 1); }
  const std::vector<std::uint32_t>& sizes() const noexcept { return sizes_; }
  std::string to_string() const;

  friend bool operator==(const TargetList&, const TargetList&) = default;
  friend auto operator<=>(const TargetList&, const TargetList&) = default;

 private:
  std::uint32_t r_;
  std::vector<std::uint32_t> sizes_;
};

struct GoodColoringCheck {
  bool good = true;
  /// First monochromatic target clique found (colors ascending, cliques
  /// lexicographic), when not good.
  std::optional<Color> color;
  VertexSet clique;
};

/// Whether `c` has no K_{t_i} in color i for every i. `c` must color exactly
/// the edges of `g` with num_colors() colors.
GoodColoringCheck verify_good_coloring(const UniformHypergraph& g, const EdgeColoring& c,
                                       const TargetList& targets);

enum class Verdict { arrows, not_arrows };

struct SearchBudget {
  /// 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// 0 means unlimited.
  double max_seconds = 0;
};

/// Order in which the search assigns edge colors.
enum class EdgeOrder {
  lexicographic,
  /// By largest vertex, then lexicographically. Every clique inside {1..m}
  /// is fully colored before any edge reaching past m, which prunes far
  /// earlier on complete hosts.
  colex,
};

struct ArrowResult {
  Verdict verdict = Verdict::arrows;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0;
  /// True iff the whole search space was covered; always true for arrows.
  bool exhausted = false;
};

/// Decides G -> (K_{t_1}, ..., K_{t_L}) by depth-first search over color
/// assignments (colors tried in order 1..L), abandoning a branch as soon as
/// an edge completes a clique of its color's target size. Returns not_arrows
/// with the first good coloring found, or arrows once the tree is exhausted.
/// Throws BudgetExceeded when the budget runs out first.
ArrowResult arrows_decision(const UniformHypergraph& g, const TargetList& targets,
                            const SearchBudget& budget = {},
                            EdgeOrder order = EdgeOrder::lexicographic);

/// DIMACS CNF that is satisfiable iff G does not arrow the targets.
/// Variable x_{e,i} = e * L + i for the e-th edge (0-based, lexicographic)
/// and color i. Requires at least two colors.
std::string export_cnf(const UniformHypergraph& g, const TargetList& targets);

/// Least n <= n_max with K_n^(r) -> targets. Any r-graph on n vertices is a
/// subgraph of K_n^(r), and a good coloring of K_n^(r) restricts to one of
/// every subgraph, so minimizing over complete hosts gives the same number as
/// minimizing over all r-graphs. Throws NotFound past n_max.
std::uint32_t ramsey_number(const TargetList& targets, std::uint32_t n_max,
                            const SearchBudget& budget = {});

/// A good coloring of K_s^(r) for the targets, memoized per (s, targets).
/// Throws NoneExists when K_s^(r) arrows the targets.
EdgeColoring base_coloring_search(std::uint32_t s, const TargetList& targets,
                                  const SearchBudget& budget = {});

const char* to_string(Verdict v) noexcept;

}  // namespace hyperramsey
