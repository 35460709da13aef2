#include "hyperramsey/arrows.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hyperramsey/cliques.hpp"
#include "hyperramsey/errors.hpp"

namespace hyperramsey {

TargetList::TargetList(std::uint32_t r, std::vector<std::uint32_t> sizes)
    : r_(r), sizes_(std::move(sizes)) {
  if (r_ < 2) throw ParameterError("target uniformity must be at least 2");
  if (sizes_.empty()) throw ParameterError("need at least one target");
  for (auto t : sizes_) {
    if (t <= r_) {
      throw ParameterError("target clique size " + std::to_string(t) + " must exceed r = " +
                           std::to_string(r_));
    }
  }
}

TargetList TargetList::parse(std::uint32_t r, const std::string& text) {
  std::vector<std::uint32_t> sizes;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw ParameterError("bad target list '" + text + "'");
    }
  }
  return TargetList(r, std::move(sizes));
}

std::string TargetList::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::arrows ? "arrows" : "not_arrows";
}

GoodColoringCheck verify_good_coloring(const UniformHypergraph& g, const EdgeColoring& c,
                                       const TargetList& targets) {
  if (!(c.host() == g)) throw ParameterError("coloring does not cover the host's edges exactly");
  if (c.num_colors() != targets.num_colors()) {
    throw ParameterError("coloring uses " + std::to_string(c.num_colors()) + " colors, targets " +
                         std::to_string(targets.num_colors()));
  }
  if (g.k() != targets.r()) throw ParameterError("host uniformity differs from target uniformity");
  for (Color color = 1; color <= targets.num_colors(); ++color) {
    auto cliques = enumerate_cliques(c.color_class(color), targets.size_for(color));
    if (!cliques.empty()) return {false, color, std::move(cliques.front())};
  }
  return {};
}

namespace {

std::vector<std::size_t> edge_order(const UniformHypergraph& g, EdgeOrder order) {
  std::vector<std::size_t> out(g.num_edges());
  std::iota(out.begin(), out.end(), std::size_t{0});
  if (order == EdgeOrder::colex) {
    std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      return g.edge(a).back() < g.edge(b).back();
    });
  }
  return out;
}

class ArrowSearch {
 public:
  ArrowSearch(const UniformHypergraph& g, const TargetList& targets, EdgeOrder order)
      : g_(g), colors_(targets.num_colors()), order_(edge_order(g, order)) {
    const std::size_t m = order_.size();
    std::vector<std::size_t> position(m);
    for (std::size_t p = 0; p < m; ++p) position[order_[p]] = p;
    checks_.resize(m * colors_);
    // Each target clique is checked once, when its last edge gets its color.
    for (Color c = 1; c <= colors_; ++c) {
      for (const auto& w : enumerate_cliques(g, targets.size_for(c))) {
        std::vector<std::size_t> where;
        for_each_subset(w, g.k(), [&](const VertexSet& e) {
          where.push_back(position[*g.index_of(e)]);
          return true;
        });
        std::sort(where.begin(), where.end());
        const std::size_t last = where.back();
        where.pop_back();
        checks_[last * colors_ + (c - 1)].push_back(std::move(where));
      }
    }
  }

  ArrowResult run(const SearchBudget& budget) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::size_t m = order_.size();
    std::vector<Color> col(m, 0);
    ArrowResult result;
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

    std::size_t depth = 0;
    while (true) {
      if (depth == m) {
        std::vector<Color> assignment(m);
        for (std::size_t p = 0; p < m; ++p) assignment[order_[p]] = col[p];
        result.verdict = Verdict::not_arrows;
        result.witness = EdgeColoring(std::make_shared<const UniformHypergraph>(g_), colors_,
                                      std::move(assignment));
        break;
      }
      Color c = col[depth] + 1;
      for (; c <= colors_; ++c) {
        ++result.nodes_explored;
        if (budget.max_nodes && result.nodes_explored > budget.max_nodes) {
          throw BudgetExceeded("node budget exhausted", result.nodes_explored);
        }
        if (budget.max_seconds > 0 && (result.nodes_explored & 0xfff) == 0 &&
            elapsed() > budget.max_seconds) {
          throw BudgetExceeded("time budget exhausted", result.nodes_explored);
        }
        if (fits(col, depth, c)) break;
      }
      if (c <= colors_) {
        col[depth] = c;
        if (++depth < m) col[depth] = 0;
      } else {
        col[depth] = 0;
        if (depth == 0) {
          result.verdict = Verdict::arrows;
          result.exhausted = true;
          break;
        }
        --depth;
      }
    }
    result.elapsed_seconds = elapsed();
    return result;
  }

 private:
  bool fits(const std::vector<Color>& col, std::size_t depth, Color c) const {
    for (const auto& others : checks_[depth * colors_ + (c - 1)]) {
      if (std::all_of(others.begin(), others.end(), [&](std::size_t p) { return col[p] == c; })) {
        return false;
      }
    }
    return true;
  }

  const UniformHypergraph& g_;
  Color colors_;
  std::vector<std::size_t> order_;
  // checks_[position * colors + (c - 1)]: for each target clique of color c
  // whose last edge sits at `position`, the positions of its other edges.
  std::vector<std::vector<std::vector<std::size_t>>> checks_;
};

}  // namespace

ArrowResult arrows_decision(const UniformHypergraph& g, const TargetList& targets,
                            const SearchBudget& budget, EdgeOrder order) {
  if (g.k() != targets.r()) throw ParameterError("host uniformity differs from target uniformity");
  ArrowSearch search(g, targets, order);
  return search.run(budget);
}

std::string export_cnf(const UniformHypergraph& g, const TargetList& targets) {
  if (g.k() != targets.r()) throw ParameterError("host uniformity differs from target uniformity");
  const std::uint32_t colors = targets.num_colors();
  if (colors < 2) throw ParameterError("CNF export needs at least two colors");
  auto var = [&](std::size_t edge, Color c) { return edge * colors + c; };

  std::vector<std::vector<long>> clauses;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::vector<long> some;
    for (Color c = 1; c <= colors; ++c) some.push_back(static_cast<long>(var(e, c)));
    clauses.push_back(std::move(some));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    for (Color a = 1; a <= colors; ++a)
      for (Color b = a + 1; b <= colors; ++b)
        clauses.push_back({-static_cast<long>(var(e, a)), -static_cast<long>(var(e, b))});
  for (Color c = 1; c <= colors; ++c) {
    for (const auto& w : enumerate_cliques(g, targets.size_for(c))) {
      std::vector<long> clause;
      for_each_subset(w, g.k(), [&](const VertexSet& e) {
        clause.push_back(-static_cast<long>(var(*g.index_of(e), c)));
        return true;
      });
      clauses.push_back(std::move(clause));
    }
  }

  std::ostringstream out;
  out << "c satisfiable iff the host does not arrow (" << targets.to_string() << "), r = "
      << targets.r() << '\n';
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (Color c = 1; c <= colors; ++c) {
      out << "c x" << var(e, c) << " = edge";
      for (Vertex v : g.edge(e)) out << ' ' << v;
      out << " color " << c << '\n';
    }
  }
  out << "p cnf " << g.num_edges() * colors << ' ' << clauses.size() << '\n';
  for (const auto& clause : clauses) {
    for (long lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::uint32_t ramsey_number(const TargetList& targets, std::uint32_t n_max,
                            const SearchBudget& budget) {
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const auto host = UniformHypergraph::complete(n, targets.r());
    if (arrows_decision(host, targets, budget).verdict == Verdict::arrows) return n;
  }
  throw NotFound("no complete host on at most " + std::to_string(n_max) + " vertices arrows (" +
                 targets.to_string() + ")");
}

EdgeColoring base_coloring_search(std::uint32_t s, const TargetList& targets,
                                  const SearchBudget& budget) {
  if (s < targets.r()) throw ParameterError("base coloring needs s >= r");
  static std::mutex cache_mutex;
  static std::map<std::pair<std::uint32_t, TargetList>, EdgeColoring> cache;
  const auto key = std::make_pair(s, targets);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto result = arrows_decision(UniformHypergraph::complete(s, targets.r()), targets, budget);
  if (result.verdict == Verdict::arrows) {
    throw NoneExists("K_" + std::to_string(s) + " arrows (" + targets.to_string() +
                     "); no good base coloring exists");
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(key, std::move(*result.witness)).first->second;
}

}  // namespace hyperramsey
