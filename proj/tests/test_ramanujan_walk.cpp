#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ramanujan/errors.hpp"
#include "ramanujan/ramanujan_walk.hpp"
#include "test_support.hpp"

namespace ramanujan {
namespace {

using testing::poly;

const Matching kId{0, 1};
const Matching kSwap{1, 0};

TEST(MaxRootLeqSqrt, WorkedExamples) {
  EXPECT_TRUE(max_root_leq_sqrt(poly({-2, 0, 1}), 2));
  EXPECT_FALSE(max_root_leq_sqrt(poly({-3, 0, 1}), 2));
  EXPECT_TRUE(max_root_leq_sqrt(poly({-6, 11, -6, 1}), 9));
  EXPECT_FALSE(max_root_leq_sqrt(poly({-6, 11, -6, 1}), 8));
  EXPECT_TRUE(max_root_leq_sqrt(poly({1}), 8));
  EXPECT_TRUE(max_root_leq_sqrt(poly({-9, 0, 1}), 9));
  EXPECT_FALSE(max_root_leq_sqrt(poly({-9, 0, 1}), 8));
}

// Product of (x - r) over rational roots and (x^2 - s) over square-root pairs;
// the largest root is compared with sqrt(q) by squaring.
TEST(MaxRootLeqSqrt, RandomRealRootedProducts) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 4), qdist(1, 20), count(1, 5);
  int trues = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t q = static_cast<std::uint64_t>(qdist(rng));
    UniPoly<Rational> p = poly({1});
    Rational max_root_sq_signed = make_rational(-1000000, 1);  // sign(r) * r^2 of the max root
    auto note_root = [&](const Rational& r) {
      const Rational key = r >= 0 ? Rational(r * r) : Rational(-r * r);
      max_root_sq_signed = std::max(max_root_sq_signed, key);
    };
    const long roots = count(rng);
    for (long i = 0; i < roots; ++i) {
      Rational r = make_rational(num(rng), den(rng));
      if (trial % 5 == 0 && i == 0) r = make_rational(static_cast<long>(q), 1);  // r^2 = q^2
      p = p * UniPoly<Rational>(std::vector<Rational>{-r, Rational(1)});
      note_root(r);
    }
    if (trial % 3 == 0) {
      // Exact boundary case x^2 - q has max root sqrt(q).
      const long s = trial % 2 ? static_cast<long>(q) : qdist(rng);
      p = p * poly({-s, 0, 1});
      max_root_sq_signed = std::max(max_root_sq_signed, Rational(s));
    }
    const bool expected = max_root_sq_signed <= Rational(static_cast<long>(q));
    trues += expected;
    EXPECT_EQ(max_root_leq_sqrt(p, q), expected) << "trial " << trial;
    EXPECT_EQ(max_root_leq_sqrt(p.scaled(Rational(3)), q), expected);
  }
  EXPECT_GT(trues, 100);
  EXPECT_LT(trues, 900);
}

TEST(Certify, WorkedExamples) {
  auto cert = certify(Multigraph{{4, 3}, {{2, 1}, {1, 2}}});
  EXPECT_TRUE(cert.passed);
  EXPECT_EQ(cert.bound_q, 8u);
  ASSERT_TRUE(cert.nontrivial_poly);
  EXPECT_EQ(*cert.nontrivial_poly, poly({-1, 0, 1}));
  EXPECT_EQ(cert.adjacency_charpoly, poly({9, 0, -10, 0, 1}));
  EXPECT_EQ(cert.shifted_signs.size(), 3u);

  cert = certify(Multigraph{{4, 3}, {{3, 0}, {0, 3}}});
  EXPECT_FALSE(cert.passed);
  ASSERT_TRUE(cert.nontrivial_poly);
  EXPECT_EQ(*cert.nontrivial_poly, poly({-9, 0, 1}));

  cert = certify(Multigraph{{2, 3}, {{3}}});
  EXPECT_TRUE(cert.passed);
  ASSERT_TRUE(cert.nontrivial_poly);
  EXPECT_EQ(*cert.nontrivial_poly, poly({1}));
}

TEST(Certify, RejectsIrregularGraphs) {
  EXPECT_THROW(certify(Multigraph{{4, 3}, {{2, 1}, {1, 1}}}), NotRegular);
  EXPECT_THROW(certify(Multigraph{{4, 3}, {{3, 0}, {1, 2}}}), NotRegular);
}

TEST(FindLeaf, WorkedExamples) {
  auto walk = find_leaf(Params{4, 3}, WalkOptions{1, false, true});
  ASSERT_TRUE(walk.finished);
  EXPECT_EQ(walk.leaf, (NodeState{{kId, kId, kSwap}, std::nullopt}));
  // The third matching's first vertex decides; its last vertex is forced.
  ASSERT_EQ(walk.stages.size(), 6u);
  EXPECT_EQ(walk.stages.back().children.size(), 1u);
  const auto& last = walk.stages[4];
  ASSERT_EQ(last.children.size(), 2u);
  EXPECT_EQ(last.children[0].poly, poly({-9, 0, 1}));
  EXPECT_FALSE(last.children[0].passed);
  EXPECT_EQ(last.children[1].poly, poly({-1, 0, 1}));
  EXPECT_EQ(last.chosen, std::optional<std::size_t>(1));

  walk = find_leaf(Params{2, 3});
  EXPECT_EQ(walk.leaf, (NodeState{{{0}, {0}, {0}}, std::nullopt}));
}

TEST(FindLeaf, LeavesCertifyAndInvariantHolds) {
  for (Params params : {Params{4, 3}, Params{6, 3}, Params{6, 4}, Params{8, 3}, Params{4, 2}}) {
    const auto walk = find_leaf(params, WalkOptions{1, false, true});
    ASSERT_TRUE(walk.finished);
    EXPECT_EQ(walk.stages.size(), params.d * params.m());
    for (const auto& stage : walk.stages) {
      EXPECT_TRUE(max_root_leq_sqrt(stage.poly, params.bound_q()));
      ASSERT_TRUE(stage.chosen);
      for (std::size_t i = 0; i < *stage.chosen; ++i) EXPECT_FALSE(stage.children[i].passed);
      EXPECT_TRUE(stage.children[*stage.chosen].passed);
    }
    EXPECT_TRUE(certify(leaf_graph(walk.leaf, params)).passed) << params.n << "," << params.d;
  }
}

TEST(FindLeaf, DeterministicAcrossJobCounts) {
  const Params params{8, 3};
  const auto a = find_leaf(params, WalkOptions{1});
  const auto b = find_leaf(params, WalkOptions{4});
  const auto c = find_leaf(params, WalkOptions{1});
  EXPECT_EQ(a.leaf, b.leaf);
  EXPECT_EQ(a.leaf, c.leaf);
}

TEST(FindLeaf, CanonicalFirstMatching) {
  const Params params{6, 3};
  const auto walk = find_leaf(params, WalkOptions{1, true, true});
  ASSERT_TRUE(walk.finished);
  EXPECT_EQ(walk.leaf.complete.front(), identity_matching(3));
  EXPECT_EQ(walk.stages.size(), params.d * params.m() - params.m());
  EXPECT_TRUE(certify(leaf_graph(walk.leaf, params)).passed);
}

TEST(FindLeaf, DegreeOneCannotPass) {
  EXPECT_THROW(find_leaf(Params{4, 1}), RootExceedsBound);
  EXPECT_TRUE(find_leaf(Params{2, 1}).finished);
}

}  // namespace
}  // namespace ramanujan
