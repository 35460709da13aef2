#include "hyperramsey/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperramsey/errors.hpp"
#include "hyperramsey/rational.hpp"
#include "hyperramsey/rng.hpp"

namespace hyperramsey {

namespace {

std::uint64_t candidate_count(std::uint32_t n, std::uint32_t s) {
  const BigInt total = binomial(n, s);
  if (!total.fits_ulong_p()) {
    throw ParameterError("C(" + std::to_string(n) + "," + std::to_string(s) +
                         ") does not fit in 64 bits");
  }
  return total.get_ui();
}

// C(c, i) for 0 <= c <= n, 0 <= i <= s, saturating at 2^64 - 1.
class BinomialTable {
 public:
  BinomialTable(std::uint32_t n, std::uint32_t s) : s_(s), table_((n + 1) * (s + 1), 0) {
    for (std::uint32_t c = 0; c <= n; ++c) {
      at(c, 0) = 1;
      for (std::uint32_t i = 1; i <= std::min(c, s); ++i) {
        const std::uint64_t a = at(c - 1, i - 1);
        const std::uint64_t b = i <= c - 1 ? at(c - 1, i) : 0;
        at(c, i) = a > ~std::uint64_t{0} - b ? ~std::uint64_t{0} : a + b;
      }
    }
  }
  std::uint64_t operator()(std::uint32_t c, std::uint32_t i) const {
    return table_[c * (s_ + 1) + i];
  }

 private:
  std::uint64_t& at(std::uint32_t c, std::uint32_t i) { return table_[c * (s_ + 1) + i]; }
  std::uint32_t s_;
  std::vector<std::uint64_t> table_;
};

VertexSet unrank_with(const BinomialTable& binom, std::uint64_t rank, std::uint32_t n,
                      std::uint32_t s) {
  VertexSet out(s);
  std::uint32_t hi = n;  // exclusive bound on the next element (0-based)
  for (std::uint32_t i = s; i >= 1; --i) {
    // largest c < hi with C(c, i) <= rank
    std::uint32_t lo = i - 1, top = hi - 1;
    while (lo < top) {
      const std::uint32_t mid = lo + (top - lo + 1) / 2;
      if (binom(mid, i) <= rank) {
        lo = mid;
      } else {
        top = mid - 1;
      }
    }
    out[i - 1] = lo + 1;
    rank -= binom(lo, i);
    hi = lo;
  }
  return out;
}

void check_parameters(std::uint32_t n, std::uint32_t s, double p) {
  if (s < 2 || n < s) throw ParameterError("sampling needs n >= s >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability outside [0,1]");
}

}  // namespace

VertexSet unrank_colex(std::uint64_t rank, std::uint32_t n, std::uint32_t s) {
  if (rank >= candidate_count(n, s)) throw ParameterError("rank out of range");
  return unrank_with(BinomialTable(n, s), rank, n, s);
}

UniformHypergraph sample_hypergraph(std::uint32_t n, std::uint32_t s, double p, std::uint64_t seed,
                                    const SamplerOptions& options) {
  check_parameters(n, s, p);
  const std::uint64_t total = candidate_count(n, s);
  if (p == 0.0) return UniformHypergraph(n, s, {});

  Rng rng(seed);
  std::vector<VertexSet> edges;
  const double expected = p * static_cast<double>(total);
  if (p < 1.0 && expected <= options.sparse_threshold) {
    // Geometric skips: the gap before the next chosen rank is
    // floor(log(U) / log(1 - p)) with U uniform on (0, 1].
    const BinomialTable binom(n, s);
    const double log_q = std::log1p(-p);
    std::uint64_t next = 0;
    while (true) {
      const double gap = std::floor(std::log(rng.uniform01_open_closed()) / log_q);
      if (!(gap < static_cast<double>(total - next))) break;
      next += static_cast<std::uint64_t>(gap);
      edges.push_back(unrank_with(binom, next, n, s));
      if (++next >= total) break;
    }
  } else {
    if (total > options.dense_candidate_cap) {
      throw ParameterError("p * C(n,s) above the sparse threshold and C(n,s) = " +
                           std::to_string(total) + " above the dense cap");
    }
    for_each_subset(iota_set(n), s, [&](const VertexSet& e) {
      if (rng.uniform01() < p) edges.push_back(e);
      return true;
    });
  }
  return UniformHypergraph(n, s, std::move(edges));
}

UniformHypergraph sample_hypergraph(std::uint32_t n, std::uint32_t s, const Probability& p,
                                    std::uint64_t seed, const SamplerOptions& options) {
  return sample_hypergraph(n, s, p.to_double(n), seed, options);
}

}  // namespace hyperramsey
