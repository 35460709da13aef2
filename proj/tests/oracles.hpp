#pragma once

// Brute-force reference implementations used only by the tests. They work
// on bitmasks over at most 64 vertices and share no code with the library
// beyond reading the edge list of a UniformHypergraph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperramsey/hypergraph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask mask_of(const std::vector<std::uint32_t>& set) {
  Mask m = 0;
  for (auto v : set) m |= Mask{1} << (v - 1);
  return m;
}

inline std::vector<std::uint32_t> set_of(Mask m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 1; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

inline std::vector<Mask> edge_masks(const hyperramsey::UniformHypergraph& h) {
  std::vector<Mask> out;
  for (const auto& e : h.edges()) out.push_back(mask_of(e));
  return out;
}

// Every subset of {1..n} with exactly k elements, as masks.
inline std::vector<Mask> all_subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (static_cast<std::uint32_t>(std::popcount(m)) == k) out.push_back(m);
  return out;
}

inline std::vector<Mask> sub_masks_of_size(Mask within, std::uint32_t k) {
  std::vector<Mask> out;
  for (Mask m = within;; m = (m - 1) & within) {
    if (static_cast<std::uint32_t>(std::popcount(m)) == k) out.push_back(m);
    if (m == 0) break;
  }
  return out;
}

// Exact fraction with small integers; den > 0.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
  bool operator==(const Frac& o) const { return num * o.den == o.num * den; }
};

// max over all U with |U| > r of (e(F[U]) - 1) / (|U| - r), with the 0 / 1/r
// conventions for fewer than two edges.
inline Frac density(const hyperramsey::UniformHypergraph& f) {
  const std::uint32_t r = f.k();
  if (f.num_edges() == 0) return {0, 1};
  if (f.num_edges() == 1) return {1, r};
  const auto edges = edge_masks(f);
  std::optional<Frac> best;
  for (Mask u = 0; u < (Mask{1} << f.n()); ++u) {
    const auto size = static_cast<std::int64_t>(std::popcount(u));
    if (size <= r) continue;
    std::int64_t inside = 0;
    for (Mask e : edges)
      if ((e & u) == e) ++inside;
    Frac q{inside - 1, size - r};
    if (!best || *best < q) best = q;
  }
  return *best;
}

inline bool spans_clique(const std::set<Mask>& edges, Mask w, std::uint32_t r) {
  for (Mask b : sub_masks_of_size(w, r))
    if (!edges.contains(b)) return false;
  return true;
}

inline std::vector<std::vector<std::uint32_t>> cliques(const hyperramsey::UniformHypergraph& g,
                                                       std::uint32_t t) {
  const auto masks = edge_masks(g);
  const std::set<Mask> edges(masks.begin(), masks.end());
  std::vector<std::vector<std::uint32_t>> out;
  for (Mask w : all_subsets(g.n(), t))
    if (spans_clique(edges, w, g.k())) out.push_back(set_of(w));
  std::sort(out.begin(), out.end());
  return out;
}

// All edge pairs meeting in at least r vertices, by all-pairs scan.
inline std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
overlapping_pairs(const hyperramsey::UniformHypergraph& h, std::uint32_t r) {
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> out;
  const auto masks = edge_masks(h);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (static_cast<std::uint32_t>(std::popcount(masks[i] & masks[j])) >= r)
        out.emplace_back(h.edge(i), h.edge(j));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool covers(Mask target, const std::vector<Mask>& members, std::uint32_t r) {
  for (Mask b : sub_masks_of_size(target, r)) {
    if (std::none_of(members.begin(), members.end(), [&](Mask a) { return (b & a) == b; }))
      return false;
  }
  return true;
}

// Minimal covers with >= 2 members by a scan over every subfamily of the
// candidates (at most ~16 of them). Each family is sorted, as is the list.
inline std::vector<std::vector<Mask>> minimal_covers(Mask target, std::vector<Mask> candidates,
                                                     std::uint32_t r) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::vector<Mask>> out;
  const std::size_t m = candidates.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    if (std::popcount(pick) < 2) continue;
    std::vector<Mask> family;
    for (std::size_t i = 0; i < m; ++i)
      if (pick >> i & 1) family.push_back(candidates[i]);
    if (!covers(target, family, r)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < family.size() && minimal; ++drop) {
      std::vector<Mask> rest;
      for (std::size_t i = 0; i < family.size(); ++i)
        if (i != drop) rest.push_back(family[i]);
      if (covers(target, rest, r)) minimal = false;
    }
    if (minimal) out.push_back(family);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// t-sets W that are cliques of the primal r-graph but lie in no edge of H,
// by scanning every t-subset of {1..n}.
inline std::vector<std::vector<std::uint32_t>> nonconformal_sets(
    const hyperramsey::UniformHypergraph& h, std::uint32_t r, std::uint32_t t) {
  const auto edges = edge_masks(h);
  std::vector<std::vector<std::uint32_t>> out;
  for (Mask w : all_subsets(h.n(), t)) {
    bool clique = true;
    for (Mask b : sub_masks_of_size(w, r)) {
      if (std::none_of(edges.begin(), edges.end(), [&](Mask e) { return (b & e) == b; })) {
        clique = false;
        break;
      }
    }
    if (!clique) continue;
    if (std::none_of(edges.begin(), edges.end(), [&](Mask e) { return (w & e) == w; }))
      out.push_back(set_of(w));
  }
  return out;
}

// Does some coloring of g with colors 0..L-1 avoid a K_{sizes[i]} in color i?
// Enumerates all L^m colorings.
inline bool has_good_coloring(const hyperramsey::UniformHypergraph& g,
                              const std::vector<std::uint32_t>& sizes) {
  const auto masks = edge_masks(g);
  const std::size_t m = masks.size();
  const std::size_t colors = sizes.size();
  std::vector<std::vector<Mask>> cliques_by_color(colors);
  std::vector<std::vector<std::vector<std::size_t>>> clique_edges(colors);
  for (std::size_t c = 0; c < colors; ++c) {
    for (const auto& w : cliques(g, sizes[c])) {
      const Mask wm = mask_of(w);
      std::vector<std::size_t> idx;
      for (std::size_t e = 0; e < m; ++e)
        if ((masks[e] & wm) == masks[e]) idx.push_back(e);
      clique_edges[c].push_back(idx);
    }
  }
  std::vector<std::size_t> col(m, 0);
  while (true) {
    bool good = true;
    for (std::size_t c = 0; c < colors && good; ++c) {
      for (const auto& idx : clique_edges[c]) {
        if (std::all_of(idx.begin(), idx.end(), [&](std::size_t e) { return col[e] == c; })) {
          good = false;
          break;
        }
      }
    }
    if (good) return true;
    std::size_t i = 0;
    while (i < m && ++col[i] == colors) col[i++] = 0;
    if (i == m) return false;
  }
}

// Tiny DPLL for DIMACS text; returns satisfiability.
class Dpll {
 public:
  explicit Dpll(const std::string& dimacs) {
    std::istringstream in(dimacs);
    std::string line;
    std::vector<int> clause;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == 'c') continue;
      std::istringstream ls(line);
      if (line[0] == 'p') {
        std::string p, cnf;
        ls >> p >> cnf >> vars_ >> declared_clauses_;
        continue;
      }
      for (int lit; ls >> lit;) {
        if (lit == 0) {
          clauses_.push_back(clause);
          clause.clear();
        } else {
          clause.push_back(lit);
        }
      }
    }
  }

  int vars() const { return vars_; }
  std::size_t clause_count() const { return clauses_.size(); }
  std::size_t declared_clauses() const { return declared_clauses_; }

  bool solve() {
    std::vector<int> value(vars_ + 1, 0);
    return search(value);
  }

 private:
  bool search(std::vector<int>& value) {
    // unit propagation
    std::vector<int> trail;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = value[std::abs(lit)];
          if (v == 0) {
            ++unassigned;
            last = lit;
          } else if ((v > 0) == (lit > 0)) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        if (unassigned == 0) {
          for (int v : trail) value[v] = 0;
          return false;
        }
        if (unassigned == 1) {
          value[std::abs(last)] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    int branch = 0;
    for (int v = 1; v <= vars_; ++v)
      if (value[v] == 0) {
        branch = v;
        break;
      }
    if (branch == 0) return true;
    for (int choice : {1, -1}) {
      value[branch] = choice;
      if (search(value)) return true;
    }
    value[branch] = 0;
    for (int v : trail) value[v] = 0;
    return false;
  }

  int vars_ = 0;
  std::size_t declared_clauses_ = 0;
  std::vector<std::vector<int>> clauses_;
};

// Random k-graph on {1..n} keeping each k-set with probability p.
inline hyperramsey::UniformHypergraph random_hypergraph(std::mt19937_64& gen, std::uint32_t n,
                                                        std::uint32_t k, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<hyperramsey::VertexSet> edges;
  for (Mask m : all_subsets(n, k))
    if (coin(gen)) edges.push_back(set_of(m));
  return hyperramsey::UniformHypergraph(n, k, std::move(edges));
}

}  // namespace oracle
