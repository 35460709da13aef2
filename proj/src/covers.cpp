#include "hyperramsey/covers.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "hyperramsey/density.hpp"
#include "hyperramsey/errors.hpp"

namespace hyperramsey {

namespace {

using Bits = boost::dynamic_bitset<>;

// Which r-subsets of the target (by lexicographic index) each set covers.
std::vector<Bits> coverage(const std::vector<VertexSet>& pieces,
                           const std::vector<VertexSet>& sets) {
  std::vector<Bits> out;
  out.reserve(sets.size());
  for (const auto& a : sets) {
    Bits bits(pieces.size());
    for (std::size_t j = 0; j < pieces.size(); ++j)
      if (is_subset(pieces[j], a)) bits.set(j);
    out.push_back(std::move(bits));
  }
  return out;
}

void require_target(const VertexSet& target, std::uint32_t r) {
  if (r < 1) throw ParameterError("cover arity must be positive");
  if (target.size() < r) {
    throw ParameterError("target of size " + std::to_string(target.size()) +
                         " has no subsets of size " + std::to_string(r));
  }
  if (!std::is_sorted(target.begin(), target.end()) ||
      std::adjacent_find(target.begin(), target.end()) != target.end()) {
    throw ParameterError("target must be strictly ascending");
  }
}

// Branch-and-bound over covers. Branches on the first uncovered r-subset;
// the i-th branch takes the i-th eligible candidate and forbids the earlier
// ones, so every family is generated at most once.
class MinimalCoverSearch {
 public:
  MinimalCoverSearch(std::vector<Bits> cover_bits, std::size_t pieces)
      : bits_(std::move(cover_bits)),
        count_(pieces, 0),
        forbidden_(bits_.size(), false) {}

  std::vector<std::vector<std::size_t>> run() {
    descend();
    return found_;
  }

 private:
  void descend() {
    std::size_t first = count_.size();
    for (std::size_t j = 0; j < count_.size(); ++j) {
      if (count_[j] == 0) {
        first = j;
        break;
      }
    }
    if (first == count_.size()) {
      if (chosen_.size() >= 2) found_.push_back(chosen_);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (forbidden_[i] || !bits_[i].test(first)) continue;
      add(i);
      if (all_members_needed()) descend();
      remove(i);
      forbidden_[i] = true;
      tried.push_back(i);
    }
    for (std::size_t i : tried) forbidden_[i] = false;
  }

  void add(std::size_t i) {
    chosen_.push_back(i);
    for (auto j = bits_[i].find_first(); j != Bits::npos; j = bits_[i].find_next(j)) ++count_[j];
  }

  void remove(std::size_t i) {
    chosen_.pop_back();
    for (auto j = bits_[i].find_first(); j != Bits::npos; j = bits_[i].find_next(j)) --count_[j];
  }

  // A member without a privately covered r-subset stays redundant however
  // the family grows, so such branches are dead.
  bool all_members_needed() const {
    for (std::size_t i : chosen_) {
      bool has_private = false;
      for (auto j = bits_[i].find_first(); j != Bits::npos; j = bits_[i].find_next(j)) {
        if (count_[j] == 1) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return false;
    }
    return true;
  }

  std::vector<Bits> bits_;
  std::vector<std::uint32_t> count_;
  std::vector<bool> forbidden_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> found_;
};

void require_phi_arguments(const CoverFamily& family, std::uint32_t t) {
  if (t <= family.r) {
    throw ParameterError("phi needs t > r, got t = " + std::to_string(t) +
                         ", r = " + std::to_string(family.r));
  }
  if (family.members.empty()) throw ParameterError("phi of an empty family");
  for (const auto& a : family.members) {
    if (a.size() < family.r) throw ParameterError("cover member smaller than r");
  }
}

}  // namespace

bool is_r_cover(const VertexSet& target, const std::vector<VertexSet>& members, std::uint32_t r) {
  require_target(target, r);
  bool covered = true;
  for_each_subset(target, r, [&](const VertexSet& b) {
    covered = std::any_of(members.begin(), members.end(),
                          [&](const VertexSet& a) { return is_subset(b, a); });
    return covered;
  });
  return covered;
}

bool is_minimal_r_cover(const VertexSet& target, const std::vector<VertexSet>& members,
                        std::uint32_t r) {
  if (!is_r_cover(target, members, r)) return false;
  // Covers are upward closed, so it suffices to drop one member at a time.
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<VertexSet> rest;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (j != i) rest.push_back(members[j]);
    if (is_r_cover(target, rest, r)) return false;
  }
  return true;
}

std::vector<CoverFamily> enumerate_minimal_nontrivial_covers(const VertexSet& target,
                                                             std::vector<VertexSet> candidates,
                                                             std::uint32_t r) {
  require_target(target, r);
  for (auto& a : candidates) std::sort(a.begin(), a.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [&](const VertexSet& a) {
    const std::size_t meet = intersection_size(a, target);
    return meet < r || meet == target.size();
  });

  const std::vector<VertexSet> pieces = subsets_of_size(target, r);
  MinimalCoverSearch search(coverage(pieces, candidates), pieces.size());

  std::vector<CoverFamily> out;
  for (auto& picked : search.run()) {
    CoverFamily family{target, r, {}};
    for (std::size_t i : picked) family.members.push_back(candidates[i]);
    std::sort(family.members.begin(), family.members.end());
    out.push_back(std::move(family));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational phi(const CoverFamily& family, std::uint32_t t) {
  require_phi_arguments(family, t);
  const Rational density = clique_density(t, family.r);
  Rational excess(0);
  for (const auto& a : family.members)
    excess += Rational(static_cast<std::int64_t>(a.size()) - family.r);
  return Rational(static_cast<std::int64_t>(family.members.size()) - 1) / density + excess;
}

Rational cover_inequality_lhs(const CoverFamily& family, std::uint32_t t) {
  require_phi_arguments(family, t);
  const Rational density = clique_density(t, family.r);
  Rational total_size(0);
  for (const auto& a : family.members) total_size += Rational(static_cast<std::int64_t>(a.size()));
  const Rational slope = Rational(family.r) - Rational(1) / density;
  return Rational(static_cast<std::int64_t>(family.members.size()) - 1) * slope - total_size;
}

bool check_cover_inequality(const CoverFamily& family, std::uint32_t t) {
  if (family.target.size() != t) {
    throw ParameterError("target has " + std::to_string(family.target.size()) +
                         " vertices, expected t = " + std::to_string(t));
  }
  if (family.members.size() < 2) throw ParameterError("cover inequality needs a non-trivial cover");
  if (!is_r_cover(family.target, family.members, family.r)) {
    throw ParameterError("family is not an r-cover of its target");
  }
  if (!is_minimal_r_cover(family.target, family.members, family.r)) {
    throw ParameterError("family is not a minimal r-cover");
  }
  return cover_inequality_lhs(family, t) <= Rational(-static_cast<std::int64_t>(t));
}

std::vector<ReductionStep> reduction_sequence(const CoverFamily& family, std::uint32_t t) {
  std::vector<VertexSet> order = family.members;
  std::sort(order.begin(), order.end());
  std::set<VertexSet> current(order.begin(), order.end());

  auto snapshot = [&] {
    CoverFamily f{family.target, family.r, {current.begin(), current.end()}};
    Rational value = phi(f, t);
    return ReductionStep{std::move(f), std::move(value)};
  };
  std::vector<ReductionStep> steps;
  steps.reserve(order.size() + 1);
  steps.push_back(snapshot());
  for (const auto& a : order) {
    current.erase(a);
    for_each_subset(a, family.r, [&](const VertexSet& b) {
      current.insert(b);
      return true;
    });
    steps.push_back(snapshot());
  }
  return steps;
}

std::vector<CoverFamily> trace_covers(std::uint32_t r, std::uint32_t t, std::uint32_t s) {
  const VertexSet target = iota_set(t);
  const std::uint32_t largest = std::min(t - 1, s);
  std::vector<VertexSet> candidates;
  for (std::uint32_t size = r; size <= largest; ++size) {
    auto layer = subsets_of_size(target, size);
    candidates.insert(candidates.end(), layer.begin(), layer.end());
  }
  return enumerate_minimal_nontrivial_covers(target, std::move(candidates), r);
}

CoverBoundReport expected_cover_bound(std::uint64_t n, std::uint32_t s, std::uint32_t r,
                                      std::uint32_t t, const Probability& p) {
  if (!(s >= t && t > r && r >= 2)) {
    throw ParameterError("expected_cover_bound needs s >= t > r >= 2");
  }
  if (n < s) throw ParameterError("expected_cover_bound needs n >= s");
  const Enclosure prob = p.enclose(n);
  if (prob.lower.sign() < 0 || prob.upper > Rational(1)) {
    throw ParameterError("probability outside [0,1]");
  }

  CoverBoundReport report;
  report.n = n;
  report.s = s;
  report.r = r;
  report.t = t;
  report.p = p;
  report.bound = {Rational(0), Rational(0)};
  const auto nn = static_cast<std::int64_t>(n);
  for (auto& cover : trace_covers(r, t, s)) {
    CoverBoundTerm term;
    term.coefficient = 1;
    for (const auto& a : cover.members)
      term.coefficient *= binomial(nn, static_cast<std::int64_t>(s) - static_cast<std::int64_t>(a.size()));
    term.p_power = static_cast<std::uint32_t>(cover.members.size());
    // every term is increasing in p, so the enclosure maps endpoint-wise
    term.value = {Rational(term.coefficient) * pow(prob.lower, term.p_power),
                  Rational(term.coefficient) * pow(prob.upper, term.p_power)};
    report.bound.lower += term.value.lower;
    report.bound.upper += term.value.upper;
    term.cover = std::move(cover);
    report.terms.push_back(std::move(term));
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), n, s - t);
  report.reference = {prob.lower * Rational(scale), prob.upper * Rational(scale)};
  if (report.reference.lower.sign() == 0) {
    report.ratio = {Rational(0), Rational(0)};
  } else {
    report.ratio = {report.bound.lower / report.reference.upper,
                    report.bound.upper / report.reference.lower};
  }
  return report;
}

}  // namespace hyperramsey
