#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperramsey/coloring.hpp"
#include "hyperramsey/covers.hpp"
#include "hyperramsey/errors.hpp"
#include "hyperramsey/hypergraph.hpp"
#include "hyperramsey/probability.hpp"

namespace hyperramsey {

using EdgePair = std::pair<VertexSet, VertexSet>;

/// Raised by lift_coloring on a host that is not r-linear.
class LinearityError : public ParameterError {
 public:
  LinearityError(const std::string& what, EdgePair pair)
      : ParameterError(what), pair_(std::move(pair)) {}
  const EdgePair& pair() const noexcept { return pair_; }

 private:
  EdgePair pair_;
};

/// Unordered edge pairs {A, B} (A < B lexicographically) with |A ∩ B| >= r,
/// sorted. Found through an index of edges by their r-subsets, so only pairs
/// that actually share an r-set are examined. Empty iff H is r-linear.
std::vector<EdgePair> linearity_violations(const UniformHypergraph& h, std::uint32_t r);

bool is_r_linear(const UniformHypergraph& h, std::uint32_t r);

/// A t-set together with one minimal non-trivial r-cover of it by edges of H.
struct CoverConfiguration {
  VertexSet target;
  CoverFamily cover;

  friend bool operator==(const CoverConfiguration&, const CoverConfiguration&) = default;
};

/// Every minimal non-trivial r-cover by edges of H of every t-set W. Only
/// t-cliques of the primal r-graph can be covered at all, so those are the
/// only W examined. This is the configuration count X.
std::vector<CoverConfiguration> cover_configurations(const UniformHypergraph& h, std::uint32_t r,
                                                     std::uint32_t t);

/// The subset of cover_configurations whose W is not inside any single edge
/// of H. Empty iff H is (r,t)-conformal.
std::vector<CoverConfiguration> conformality_violations(const UniformHypergraph& h,
                                                        std::uint32_t r, std::uint32_t t);

/// Direct conformality test: every t-clique of the primal r-graph lies in
/// one edge of H. Does not use the cover machinery.
bool is_conformal(const UniformHypergraph& h, std::uint32_t r, std::uint32_t t);

struct CleanReport {
  std::uint32_t r = 2;
  std::uint32_t t = 3;
  std::size_t input_edges = 0;
  std::vector<EdgePair> linearity_violations;         // Y configurations
  std::vector<CoverConfiguration> cover_violations;  // X configurations
  std::vector<VertexSet> deleted;                     // ascending
  UniformHypergraph result;
};

/// Deletion cleaning. All configurations are found once on the input; from
/// each overlapping pair the lexicographically smaller edge is deleted and
/// from each cover its lexicographically smallest member. The result is then
/// re-checked for r-linearity and (r,t)-conformality with the direct tests;
/// a failure raises InternalContradiction. Requires H.k() >= t > r >= 2.
CleanReport clean(const UniformHypergraph& h, std::uint32_t r, std::uint32_t t);

/// Colors the primal r-graph of an r-linear s-graph H0 by copying `base`, a
/// coloring of the complete r-graph on {1..s}, onto every edge of H0 through
/// the order-preserving map from the edge onto {1..s}.
/// Throws LinearityError if H0 is not r-linear.
EdgeColoring lift_coloring(const UniformHypergraph& h0, std::uint32_t r, const EdgeColoring& base);

struct TrialParameters {
  std::uint32_t n = 0, s = 0, r = 2, t = 3;
  Probability p;
  std::uint32_t trials = 1;
  std::uint64_t master_seed = 0;
};

struct TrialRecord {
  std::uint32_t index = 0;
  std::uint64_t seed = 0;
  std::uint64_t e_h = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t deleted = 0;
  std::uint64_t e_h0 = 0;

  double deleted_fraction() const {
    return e_h == 0 ? 0.0 : static_cast<double>(deleted) / static_cast<double>(e_h);
  }
};

struct TrialStats {
  TrialParameters parameters;
  std::vector<TrialRecord> records;  // ordered by trial index
  double mean_e_h = 0, mean_x = 0, mean_y = 0, mean_deleted = 0, mean_e_h0 = 0;
  /// Average over trials of deleted / e(H); trials with e(H) = 0 count as 0.
  double mean_deleted_fraction = 0;
  /// (mean X + mean Y) / mean e(H); 0 when no edges were sampled.
  double ratio = 0;
};

/// Trial i samples H(n, s, p) with seed derive_seed(master_seed, i) and
/// cleans it. Trials may run on several threads; records are keyed by index
/// and aggregated in index order, so the result does not depend on `threads`.
TrialStats run_trials(const TrialParameters& params, unsigned threads = 1);

/// Recomputes the aggregate fields of `stats` from its records.
void aggregate(TrialStats& stats);

}  // namespace hyperramsey
