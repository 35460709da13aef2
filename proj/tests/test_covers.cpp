#include <gtest/gtest.h>

#include <random>

#include "hyperramsey/covers.hpp"
#include "hyperramsey/density.hpp"
#include "hyperramsey/errors.hpp"
#include "oracles.hpp"

namespace hyperramsey {
namespace {

const std::vector<VertexSet> kTriangle{{1, 2}, {1, 3}, {2, 3}};

std::vector<std::vector<oracle::Mask>> as_masks(const std::vector<CoverFamily>& families) {
  std::vector<std::vector<oracle::Mask>> out;
  for (const auto& f : families) {
    std::vector<oracle::Mask> masks;
    for (const auto& a : f.members) masks.push_back(oracle::mask_of(a));
    std::sort(masks.begin(), masks.end());
    out.push_back(masks);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IsRCover, Examples) {
  EXPECT_TRUE(is_r_cover({1, 2, 3}, {{1, 2, 3}}, 2));
  EXPECT_FALSE(is_r_cover({1, 2, 3}, {{1, 2}, {2, 3}}, 2));
  EXPECT_TRUE(is_r_cover({1, 2, 3}, kTriangle, 2));
  EXPECT_THROW(is_r_cover({1, 2}, kTriangle, 3), ParameterError);
}

TEST(IsRCover, TestsMembersNotTraces) {
  // {1,2,9} contains the pair {1,2} even though 9 lies outside the target
  EXPECT_TRUE(is_r_cover({1, 2, 3}, {{1, 2, 9}, {1, 3, 9}, {2, 3, 9}}, 2));
  EXPECT_FALSE(is_r_cover({1, 2, 3}, {{1, 9}, {2, 9}, {3, 9}}, 2));
}

TEST(MinimalCovers, TriangleIsTheOnlyCoverOfATriple) {
  const auto found = enumerate_minimal_nontrivial_covers({1, 2, 3}, kTriangle, 2);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].members, kTriangle);
  EXPECT_EQ(found[0].target, (VertexSet{1, 2, 3}));
}

TEST(MinimalCovers, OnlyTrivialCoverGivesNothing) {
  EXPECT_TRUE(enumerate_minimal_nontrivial_covers({1, 2, 3, 4}, {{1, 2, 3, 4}}, 2).empty());
}

TEST(MinimalCovers, MembersMayStickOutOfTheTarget) {
  const std::vector<VertexSet> candidates{{1, 2, 9}, {1, 3, 9}, {2, 3, 9}};
  const auto found = enumerate_minimal_nontrivial_covers({1, 2, 3}, candidates, 2);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].members, candidates);
}

TEST(MinimalCovers, AgreeWithPowersetScan) {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t r = 2 + trial % 2;
    const std::uint32_t t = r + 1 + trial % 2;
    const VertexSet target = iota_set(t);
    std::uniform_int_distribution<std::uint32_t> size(r, t + 1);
    std::uniform_int_distribution<std::uint32_t> vertex(1, t + 3);
    std::vector<VertexSet> candidates;
    const std::size_t count = 4 + trial % 9;  // up to 12 candidates
    while (candidates.size() < count) {
      std::set<Vertex> pick;
      const auto want = size(gen);
      while (pick.size() < want) pick.insert(vertex(gen));
      candidates.emplace_back(pick.begin(), pick.end());
    }
    std::vector<oracle::Mask> masks;
    for (const auto& a : candidates) {
      const auto meet = intersection_size(a, target);
      if (meet >= r && meet < t) masks.push_back(oracle::mask_of(a));
    }
    const auto found = enumerate_minimal_nontrivial_covers(target, candidates, r);
    EXPECT_EQ(as_masks(found), oracle::minimal_covers(oracle::mask_of(target), masks, r));
    for (const auto& f : found) {
      EXPECT_TRUE(is_r_cover(target, f.members, r));
      EXPECT_TRUE(is_minimal_r_cover(target, f.members, r));
      EXPECT_GE(f.members.size(), 2u);
    }
  }
}

TEST(Phi, Examples) {
  // all r-subsets of a t-set
  EXPECT_EQ(phi({{1, 2, 3}, 2, kTriangle}, 3), Rational(1));
  // trivial cover
  EXPECT_EQ(phi({{1, 2, 3, 4}, 2, {{1, 2, 3, 4}}}, 4), Rational(2));
  // (|E|-1) / m_2(K_4) = 2 / (5/2)
  EXPECT_EQ(phi({{1, 2, 3, 4}, 2, kTriangle}, 4), Rational(4, 5));
  EXPECT_THROW(phi({{1, 2}, 2, {{1, 2}}}, 2), ParameterError);
}

TEST(CoverInequality, TriangleIsTight) {
  const CoverFamily triangle{{1, 2, 3}, 2, kTriangle};
  EXPECT_EQ(cover_inequality_lhs(triangle, 3), Rational(-3));
  EXPECT_TRUE(check_cover_inequality(triangle, 3));
}

TEST(CoverInequality, RejectsNonCovers) {
  EXPECT_THROW(check_cover_inequality({{1, 2, 3, 4}, 2, {{1, 2}, {3, 4}}}, 4), ParameterError);
  EXPECT_THROW(check_cover_inequality({{1, 2, 3}, 2, {{1, 2, 3}}}, 3), ParameterError);
  EXPECT_THROW(check_cover_inequality({{1, 2, 3}, 2, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}}, 3),
               ParameterError);
  EXPECT_THROW(check_cover_inequality({{1, 2, 3}, 2, kTriangle}, 4), ParameterError);
}

TEST(CoverInequality, EquivalentToPhiBound) {
  for (auto [r, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 4}, {3, 5}}) {
    const auto covers = trace_covers(r, t, t);
    ASSERT_FALSE(covers.empty());
    for (const auto& cover : covers) {
      const bool via_phi = phi(cover, t) >= Rational(static_cast<std::int64_t>(t - r));
      EXPECT_EQ(check_cover_inequality(cover, t), via_phi);
      EXPECT_TRUE(via_phi);
    }
  }
}

TEST(ReductionSequence, TrivialCoverOfATriple) {
  const auto steps = reduction_sequence({{1, 2, 3}, 2, {{1, 2, 3}}}, 3);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].phi, Rational(1));
  EXPECT_EQ(steps[1].phi, Rational(1));
  EXPECT_EQ(steps[1].family.members, kTriangle);
}

TEST(ReductionSequence, TriangleIsAFixedPoint) {
  const auto steps = reduction_sequence({{1, 2, 3}, 2, kTriangle}, 3);
  ASSERT_EQ(steps.size(), 4u);
  for (const auto& step : steps) {
    EXPECT_EQ(step.family.members, kTriangle);
    EXPECT_EQ(step.phi, Rational(1));
  }
}

TEST(ReductionSequence, NonIncreasingOnMixedFamily) {
  const auto steps = reduction_sequence({{1, 2, 3, 4}, 2, {{1, 2, 3}, {3, 4}}}, 4);
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].phi, Rational(7, 5));
  EXPECT_EQ(steps[1].phi, Rational(6, 5));
  EXPECT_EQ(steps[2].phi, Rational(6, 5));
}

TEST(ReductionSequence, EndsAtAllRSubsets) {
  for (auto [r, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 5}}) {
    for (const auto& cover : trace_covers(r, t, t)) {
      const auto steps = reduction_sequence(cover, t);
      EXPECT_EQ(steps.back().family.members, subsets_of_size(iota_set(t), r));
      EXPECT_EQ(steps.back().phi, Rational(static_cast<std::int64_t>(t - r)));
      for (std::size_t i = 1; i < steps.size(); ++i) EXPECT_LE(steps[i].phi, steps[i - 1].phi);
    }
  }
}

TEST(TraceCovers, MatchPowersetScan) {
  for (auto [r, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}) {
    std::vector<oracle::Mask> candidates;
    for (std::uint32_t size = r; size < t; ++size)
      for (auto m : oracle::all_subsets(t, size)) candidates.push_back(m);
    EXPECT_EQ(as_masks(trace_covers(r, t, t)),
              oracle::minimal_covers(oracle::mask_of(iota_set(t)), candidates, r));
  }
  ASSERT_EQ(trace_covers(2, 3, 5).size(), 1u);
}

TEST(TraceCovers, MemberSizeCappedByS) {
  // with s = r only r-sets are allowed: the single cover is all r-subsets
  const auto covers = trace_covers(2, 4, 4);
  const auto capped = trace_covers(2, 4, 2);
  ASSERT_EQ(capped.size(), 1u);
  EXPECT_EQ(capped[0].members, subsets_of_size(iota_set(4), 2));
  EXPECT_GT(covers.size(), capped.size());
}

TEST(ExpectedCoverBound, SingleTriangleTerm) {
  const auto report = expected_cover_bound(50, 5, 2, 3, Probability::exact(Rational(1, 100)));
  ASSERT_EQ(report.terms.size(), 1u);
  const Rational want = Rational(binomial(50, 3) * binomial(50, 3) * binomial(50, 3)) /
                        Rational(1'000'000);
  EXPECT_TRUE(report.bound.is_exact());
  EXPECT_EQ(report.bound.lower, want);
  EXPECT_EQ(report.reference.lower, Rational(50 * 50, 100));
  EXPECT_EQ(report.ratio.lower, want / Rational(25));
}

TEST(ExpectedCoverBound, ZeroProbability) {
  const auto report = expected_cover_bound(40, 4, 2, 3, Probability::exact(Rational(0)));
  EXPECT_EQ(report.bound.upper, Rational(0));
  EXPECT_EQ(report.ratio.upper, Rational(0));
}

TEST(ExpectedCoverBound, DeskScaleRatioBelowOneTenth) {
  // p = 200^(-11/4): ratio = C(200,2)^3 p^2 / 200 = 19900^3 / 200^(13/2),
  // so ratio^2 = 19900^6 / 200^13 exactly.
  const auto report = expected_cover_bound(200, 4, 2, 3, Probability::parse("n^-2.75"));
  ASSERT_EQ(report.terms.size(), 1u);
  const Rational ratio_squared = pow(Rational(19900), 6) / pow(Rational(200), 13);
  EXPECT_LE(report.ratio.lower * report.ratio.lower, ratio_squared);
  EXPECT_GE(report.ratio.upper * report.ratio.upper, ratio_squared);
  EXPECT_LT(ratio_squared, Rational(1, 100));
  EXPECT_LT(report.ratio.upper, Rational(1, 10));
}

TEST(ExpectedCoverBound, RejectsBadParameters) {
  const auto p = Probability::exact(Rational(1, 2));
  EXPECT_THROW(expected_cover_bound(10, 3, 2, 4, p), ParameterError);
  EXPECT_THROW(expected_cover_bound(10, 4, 3, 3, p), ParameterError);
  EXPECT_THROW(expected_cover_bound(3, 4, 2, 3, p), ParameterError);
}

TEST(Probability, ParsesAllForms) {
  EXPECT_EQ(Probability::parse("0.25").rational(), Rational(1, 4));
  EXPECT_EQ(Probability::parse("1e-6").rational(), Rational(1, 1'000'000));
  EXPECT_EQ(Probability::parse("3/7").rational(), Rational(3, 7));
  EXPECT_TRUE(Probability::parse("n^-4").is_power_of_n());
  EXPECT_EQ(Probability::parse("n^-2.75").rational(), Rational(-11, 4));
  EXPECT_EQ(Probability::parse("n^(-11/4)").rational(), Rational(-11, 4));
  EXPECT_THROW(Probability::parse("1.5"), ParameterError);
  EXPECT_THROW(Probability::parse("n^2"), ParameterError);
  EXPECT_THROW(Probability::parse("abc"), ParameterError);
}

TEST(Probability, PowerEnclosures) {
  const auto exact = Probability::parse("n^-4").enclose(10);
  EXPECT_TRUE(exact.is_exact());
  EXPECT_EQ(exact.lower, Rational(1, 10000));
  const auto half = Probability::parse("n^-1/2").enclose(2);
  EXPECT_FALSE(half.is_exact());
  // 1/sqrt(2) lies inside and the width is tiny
  EXPECT_LE(half.lower * half.lower, Rational(1, 2));
  EXPECT_GE(half.upper * half.upper, Rational(1, 2));
  EXPECT_LT(half.upper - half.lower, Rational(1, 1'000'000'000));
  EXPECT_DOUBLE_EQ(Probability::parse("n^-4").to_double(2000), 1.0 / 16e12);
}

}  // namespace
}  // namespace hyperramsey
