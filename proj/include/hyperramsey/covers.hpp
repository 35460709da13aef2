#pragma once

#include <cstdint>
#include <vector>

#include "hyperramsey/hypergraph.hpp"
#include "hyperramsey/probability.hpp"
#include "hyperramsey/rational.hpp"

namespace hyperramsey {

/// A family of vertex sets considered as an r-cover of a target set W.
/// Members are distinct and kept in lexicographic order.
struct CoverFamily {
  VertexSet target;
  std::uint32_t r = 2;
  std::vector<VertexSet> members;

  bool is_trivial() const { return members.size() == 1; }

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;
  friend auto operator<=>(const CoverFamily& a, const CoverFamily& b) {
    return a.members <=> b.members;
  }
};

/// True iff every r-subset of `target` lies inside some member (the member
/// itself, not its trace on the target). Requires |target| >= r.
bool is_r_cover(const VertexSet& target, const std::vector<VertexSet>& members, std::uint32_t r);

/// A cover none of whose proper subfamilies covers.
bool is_minimal_r_cover(const VertexSet& target, const std::vector<VertexSet>& members,
                        std::uint32_t r);

/// All inclusion-minimal subfamilies of `candidates` with at least two members
/// that r-cover `target`, sorted. Candidates meeting the target in fewer than
/// r vertices, or containing all of it, can never belong to such a family and
/// are dropped up front; duplicate candidates are merged.
std::vector<CoverFamily> enumerate_minimal_nontrivial_covers(const VertexSet& target,
                                                             std::vector<VertexSet> candidates,
                                                             std::uint32_t r);

/// phi(E) = (|E| - 1) / m_r(K_t^(r)) + sum over members A of (|A| - r).
Rational phi(const CoverFamily& family, std::uint32_t t);

/// (|E| - 1) * (r - 1 / m_r(K_t^(r))) - sum over members A of |A|.
Rational cover_inequality_lhs(const CoverFamily& family, std::uint32_t t);

/// Whether cover_inequality_lhs(family, t) <= -t. The family must be a minimal
/// non-trivial r-cover of a t-element target; anything else is a ParameterError.
bool check_cover_inequality(const CoverFamily& family, std::uint32_t t);

struct ReductionStep {
  CoverFamily family;
  Rational phi;
};

/// E_0 = family; E_i replaces the i-th original member A_i (ascending order)
/// by all of its r-subsets. Returns |E| + 1 steps, each with its phi value.
std::vector<ReductionStep> reduction_sequence(const CoverFamily& family, std::uint32_t t);

/// The minimal non-trivial r-covers of {1..t} whose members are subsets of
/// {1..t} of size between r and min(t - 1, s).
std::vector<CoverFamily> trace_covers(std::uint32_t r, std::uint32_t t, std::uint32_t s);

struct CoverBoundTerm {
  CoverFamily cover;
  /// Product over members A of C(n, s - |A|).
  BigInt coefficient;
  /// |E|, the power of p.
  std::uint32_t p_power = 0;
  Enclosure value;
};

/// Upper bound on the expected number of minimal non-trivial r-covers of a
/// fixed t-set by edges of H(n, s, p):
///   sum over trace covers E of prod_A C(n, s - |A|) * p^|E|,
/// reported next to p * n^(s - t). Values are exact rationals, or rigorous
/// rational enclosures when p = n^x is irrational.
struct CoverBoundReport {
  std::uint64_t n = 0;
  std::uint32_t s = 0, r = 0, t = 0;
  Probability p;
  std::vector<CoverBoundTerm> terms;
  Enclosure bound;
  Enclosure reference;
  Enclosure ratio;
};

CoverBoundReport expected_cover_bound(std::uint64_t n, std::uint32_t s, std::uint32_t r,
                                      std::uint32_t t, const Probability& p);

}  // namespace hyperramsey
