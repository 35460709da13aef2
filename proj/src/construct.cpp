#include "hyperramsey/construct.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

#include "hyperramsey/cliques.hpp"
#include "hyperramsey/rng.hpp"
#include "hyperramsey/sample.hpp"

namespace hyperramsey {

namespace {

// Edge indices of H grouped by the r-subsets they contain.
class PieceIndex {
 public:
  PieceIndex(const UniformHypergraph& h, std::uint32_t r) {
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      for_each_subset(h.edge(i), r, [&](const VertexSet& b) {
        buckets_[b].push_back(i);
        return true;
      });
    }
  }

  const std::vector<std::size_t>& edges_through(const VertexSet& piece) const {
    static const std::vector<std::size_t> none;
    auto it = buckets_.find(piece);
    return it == buckets_.end() ? none : it->second;
  }

  const auto& buckets() const { return buckets_; }

 private:
  std::unordered_map<VertexSet, std::vector<std::size_t>, VertexSetHash> buckets_;
};

void require_rt(const UniformHypergraph& h, std::uint32_t r, std::uint32_t t) {
  if (!(h.k() >= t && t > r && r >= 2)) {
    throw ParameterError("need s >= t > r >= 2, got s = " + std::to_string(h.k()) +
                         ", t = " + std::to_string(t) + ", r = " + std::to_string(r));
  }
}

// Edges of H meeting W in at least r vertices, ascending by index.
std::vector<std::size_t> edges_meeting(const PieceIndex& index, const VertexSet& w,
                                       std::uint32_t r) {
  std::vector<std::size_t> out;
  for_each_subset(w, r, [&](const VertexSet& b) {
    const auto& through = index.edges_through(b);
    out.insert(out.end(), through.begin(), through.end());
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CoverConfiguration> configurations(const UniformHypergraph& h, std::uint32_t r,
                                               std::uint32_t t, bool skip_contained) {
  require_rt(h, r, t);
  const PieceIndex index(h, r);
  std::vector<CoverConfiguration> out;
  for (const auto& w : enumerate_cliques(primal_r_graph(h, r), t)) {
    const auto meeting = edges_meeting(index, w, r);
    std::vector<VertexSet> candidates;
    bool contained = false;
    for (std::size_t i : meeting) {
      candidates.push_back(h.edge(i));
      contained = contained || is_subset(w, h.edge(i));
    }
    if (contained && skip_contained) continue;
    for (auto& cover : enumerate_minimal_nontrivial_covers(w, std::move(candidates), r)) {
      out.push_back({w, std::move(cover)});
    }
  }
  return out;
}

}  // namespace

std::vector<EdgePair> linearity_violations(const UniformHypergraph& h, std::uint32_t r) {
  if (r < 2 || r > h.k()) throw ParameterError("linearity needs 2 <= r <= k");
  const PieceIndex index(h, r);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [piece, through] : index.buckets()) {
    for (std::size_t a = 0; a < through.size(); ++a)
      for (std::size_t b = a + 1; b < through.size(); ++b)
        pairs.emplace(std::min(through[a], through[b]), std::max(through[a], through[b]));
  }
  std::vector<EdgePair> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) out.emplace_back(h.edge(a), h.edge(b));
  return out;
}

bool is_r_linear(const UniformHypergraph& h, std::uint32_t r) {
  if (r < 2 || r > h.k()) throw ParameterError("linearity needs 2 <= r <= k");
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> seen;
  bool linear = true;
  for (const auto& e : h.edges()) {
    for_each_subset(e, r, [&](const VertexSet& b) {
      linear = seen.emplace(b, 0).second;
      return linear;
    });
    if (!linear) return false;
  }
  return true;
}

std::vector<CoverConfiguration> cover_configurations(const UniformHypergraph& h, std::uint32_t r,
                                                     std::uint32_t t) {
  return configurations(h, r, t, false);
}

std::vector<CoverConfiguration> conformality_violations(const UniformHypergraph& h,
                                                        std::uint32_t r, std::uint32_t t) {
  return configurations(h, r, t, true);
}

bool is_conformal(const UniformHypergraph& h, std::uint32_t r, std::uint32_t t) {
  require_rt(h, r, t);
  const PieceIndex index(h, r);
  for (const auto& w : enumerate_cliques(primal_r_graph(h, r), t)) {
    const VertexSet first(w.begin(), w.begin() + r);
    const auto& through = index.edges_through(first);
    const bool inside = std::any_of(through.begin(), through.end(),
                                    [&](std::size_t i) { return is_subset(w, h.edge(i)); });
    if (!inside) return false;
  }
  return true;
}

CleanReport clean(const UniformHypergraph& h, std::uint32_t r, std::uint32_t t) {
  require_rt(h, r, t);
  CleanReport report;
  report.r = r;
  report.t = t;
  report.input_edges = h.num_edges();
  report.linearity_violations = linearity_violations(h, r);
  report.cover_violations = cover_configurations(h, r, t);

  std::set<VertexSet> doomed;
  for (const auto& [smaller, larger] : report.linearity_violations) doomed.insert(smaller);
  for (const auto& config : report.cover_violations) doomed.insert(config.cover.members.front());
  report.deleted.assign(doomed.begin(), doomed.end());
  report.result = h.filter_edges([&](const VertexSet& e) { return !doomed.contains(e); });

  if (!is_r_linear(report.result, r)) {
    throw InternalContradiction("cleaned hypergraph is not " + std::to_string(r) + "-linear");
  }
  if (!is_conformal(report.result, r, t)) {
    throw InternalContradiction("cleaned hypergraph is not (" + std::to_string(r) + "," +
                                std::to_string(t) + ")-conformal");
  }
  return report;
}

EdgeColoring lift_coloring(const UniformHypergraph& h0, std::uint32_t r, const EdgeColoring& base) {
  const std::uint32_t s = h0.k();
  if (r < 2 || r > s) throw ParameterError("lift needs 2 <= r <= s");
  if (!(base.host() == UniformHypergraph::complete(s, r))) {
    throw ParameterError("base coloring must color the complete " + std::to_string(r) +
                         "-graph on [1," + std::to_string(s) + "]");
  }
  if (auto bad = linearity_violations(h0, r); !bad.empty()) {
    throw LinearityError("host is not " + std::to_string(r) + "-linear", bad.front());
  }

  auto primal = std::make_shared<const UniformHypergraph>(primal_r_graph(h0, r));
  std::vector<Color> assignment(primal->num_edges(), 0);
  const VertexSet positions = iota_set(s);
  for (const auto& a : h0.edges()) {
    for_each_subset(positions, r, [&](const VertexSet& pos) {
      VertexSet image(r);
      for (std::uint32_t j = 0; j < r; ++j) image[j] = a[pos[j] - 1];
      assignment[*primal->index_of(image)] = base.color_of(pos);
      return true;
    });
  }
  return EdgeColoring(std::move(primal), base.num_colors(), std::move(assignment));
}

void aggregate(TrialStats& stats) {
  const auto count = static_cast<double>(stats.records.size());
  double e_h = 0, x = 0, y = 0, deleted = 0, e_h0 = 0, fraction = 0;
  for (const auto& rec : stats.records) {
    e_h += static_cast<double>(rec.e_h);
    x += static_cast<double>(rec.x);
    y += static_cast<double>(rec.y);
    deleted += static_cast<double>(rec.deleted);
    e_h0 += static_cast<double>(rec.e_h0);
    fraction += rec.deleted_fraction();
  }
  if (count == 0) return;
  stats.mean_e_h = e_h / count;
  stats.mean_x = x / count;
  stats.mean_y = y / count;
  stats.mean_deleted = deleted / count;
  stats.mean_e_h0 = e_h0 / count;
  stats.mean_deleted_fraction = fraction / count;
  stats.ratio = e_h == 0 ? 0.0 : (x + y) / e_h;
}

TrialStats run_trials(const TrialParameters& params, unsigned threads) {
  if (params.trials < 1) throw ParameterError("need at least one trial");
  if (!(params.s >= params.t && params.t > params.r && params.r >= 2)) {
    throw ParameterError("need s >= t > r >= 2");
  }
  if (params.n < params.s) throw ParameterError("need n >= s");
  const double p = params.p.to_double(params.n);

  TrialStats stats;
  stats.parameters = params;
  stats.records.resize(params.trials);

  auto run_one = [&](std::uint32_t i) {
    TrialRecord rec;
    rec.index = i;
    rec.seed = derive_seed(params.master_seed, i);
    const auto h = sample_hypergraph(params.n, params.s, p, rec.seed);
    const auto report = clean(h, params.r, params.t);
    rec.e_h = h.num_edges();
    rec.x = report.cover_violations.size();
    rec.y = report.linearity_violations.size();
    rec.deleted = report.deleted.size();
    rec.e_h0 = report.result.num_edges();
    stats.records[i] = rec;
  };

  threads = std::max(1u, std::min(threads, params.trials));
  if (threads == 1) {
    for (std::uint32_t i = 0; i < params.trials; ++i) run_one(i);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::uint32_t i; (i = next.fetch_add(1)) < params.trials;) {
          try {
            run_one(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  aggregate(stats);
  return stats;
}

}  // namespace hyperramsey
