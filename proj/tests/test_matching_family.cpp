#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "ramanujan/errors.hpp"
#include "ramanujan/matching_family.hpp"
#include "test_support.hpp"

namespace ramanujan {
namespace {

using testing::matrix;

const Matching kId2{0, 1};
const Matching kSwap2{1, 0};

NodeState with_partial(std::vector<Matching> complete, std::vector<std::size_t> partial) {
  return NodeState{std::move(complete), std::move(partial)};
}

TEST(Params, Validation) {
  EXPECT_NO_THROW((Params{4, 3}.validate()));
  EXPECT_THROW((Params{3, 3}.validate()), InvalidParams);
  EXPECT_THROW((Params{0, 3}.validate()), InvalidParams);
  EXPECT_THROW((Params{4, 0}.validate()), InvalidParams);
  EXPECT_EQ((Params{10, 4}.bound_q()), 12u);
}

TEST(NodeState, Validation) {
  const Params p{6, 2};
  EXPECT_NO_THROW(with_partial({}, {1}).validate(p));
  EXPECT_THROW(with_partial({}, {1, 1}).validate(p), InvalidNode);
  EXPECT_THROW(with_partial({}, {0, 1, 2}).validate(p), InvalidNode);  // full length
  EXPECT_THROW((NodeState{{{0, 1, 1}}, std::nullopt}.validate(p)), InvalidNode);
  EXPECT_THROW((NodeState{{{0, 1, 2}, {0, 1, 2}}, std::vector<std::size_t>{0}}.validate(p)),
               InvalidNode);
}

TEST(Children, RootOfFourVertices) {
  const auto kids = children(root_node(), Params{4, 3});
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(kids[0], with_partial({}, {0}));
  EXPECT_EQ(kids[1], with_partial({}, {1}));
}

TEST(Children, ForcedLastVertexPromotes) {
  const auto kids = children(with_partial({}, {1}), Params{4, 3});
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0], (NodeState{{kSwap2}, std::nullopt}));
}

TEST(Children, SixVertices) {
  const auto kids = children(with_partial({}, {1}), Params{6, 3});
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(kids[0], with_partial({}, {1, 0}));
  EXPECT_EQ(kids[1], with_partial({}, {1, 2}));
}

TEST(Children, LeafAndSingleVertexSide) {
  EXPECT_THROW(children(NodeState{{kId2, kId2, kSwap2}, std::nullopt}, Params{4, 3}), IsLeaf);
  const auto kids = children(root_node(), Params{2, 3});
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0], (NodeState{{{0}}, std::nullopt}));
}

TEST(HalfAdjacency, WorkedExamples) {
  const Params p{4, 3};
  auto h = half_adjacency(with_partial({kId2}, {1}), p);
  EXPECT_EQ(h.a, matrix({{1, 1}, {0, 1}}));
  EXPECT_EQ(h.block, (BlockSpec{{1}, {0}}));

  h = half_adjacency(root_node(), p);
  EXPECT_EQ(h.a, matrix({{0, 0}, {0, 0}}));
  EXPECT_EQ(h.block, (BlockSpec{{0, 1}, {0, 1}}));

  h = half_adjacency(NodeState{{kId2, kId2, kSwap2}, std::nullopt}, p);
  EXPECT_EQ(h.a, matrix({{2, 1}, {1, 2}}));
  EXPECT_TRUE(h.block.empty());
}

TEST(LeafGraph, WorkedExamples) {
  const Params p{4, 3};
  EXPECT_EQ(leaf_graph(NodeState{{kId2, kId2, kSwap2}, std::nullopt}, p).multiplicity,
            (std::vector<std::vector<unsigned>>{{2, 1}, {1, 2}}));
  EXPECT_EQ(leaf_graph(NodeState{{kId2, kSwap2, kSwap2}, std::nullopt}, p).multiplicity,
            (std::vector<std::vector<unsigned>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(leaf_graph(NodeState{{{0}, {0}, {0}}, std::nullopt}, Params{2, 3}).multiplicity,
            (std::vector<std::vector<unsigned>>{{3}}));
  EXPECT_THROW(leaf_graph(NodeState{{kId2}, std::nullopt}, p), NotALeaf);
}

// All leaves below a node, by literal completion (independent of children()).
std::vector<std::vector<Matching>> direct_leaves(const NodeState& node, const Params& params) {
  const std::size_t m = params.m();
  std::vector<Matching> perms;
  Matching perm = identity_matching(m);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<Matching>> prefixes{node.complete};
  if (node.partial) {
    std::vector<std::vector<Matching>> next;
    for (const auto& p : perms)
      if (std::equal(node.partial->begin(), node.partial->end(), p.begin())) {
        auto seq = node.complete;
        seq.push_back(p);
        next.push_back(seq);
      }
    prefixes = next;
  }
  while (prefixes.front().size() < params.d) {
    std::vector<std::vector<Matching>> next;
    for (const auto& seq : prefixes)
      for (const auto& p : perms) {
        auto grown = seq;
        grown.push_back(p);
        next.push_back(grown);
      }
    prefixes = next;
  }
  return prefixes;
}

void collect_leaves(const NodeState& node, const Params& params, std::size_t depth,
                    std::vector<std::vector<Matching>>& leaves, std::size_t& max_depth) {
  if (node.is_leaf(params)) {
    leaves.push_back(node.complete);
    max_depth = std::max(max_depth, depth);
    return;
  }
  for (const auto& kid : children(node, params)) {
    // Row-sum invariant is asserted inside half_adjacency for every node.
    half_adjacency(kid, params);
    collect_leaves(kid, params, depth + 1, leaves, max_depth);
  }
}

TEST(Children, PartitionTheCompletionSet) {
  const std::vector<std::pair<Params, NodeState>> cases = {
      {{4, 3}, root_node()},
      {{6, 2}, root_node()},
      {{6, 3}, NodeState{{{2, 0, 1}}, std::vector<std::size_t>{1}}},
      {{6, 3}, NodeState{{{0, 1, 2}, {1, 2, 0}}, std::nullopt}},
      {{2, 3}, root_node()},
  };
  for (const auto& [params, node] : cases) {
    std::vector<std::vector<Matching>> via_children;
    std::size_t depth = 0;
    collect_leaves(node, params, 0, via_children, depth);
    auto direct = direct_leaves(node, params);
    std::sort(via_children.begin(), via_children.end());
    std::sort(direct.begin(), direct.end());
    EXPECT_EQ(std::adjacent_find(via_children.begin(), via_children.end()), via_children.end());
    EXPECT_EQ(via_children, direct);
    if (node == root_node()) {
      EXPECT_EQ(depth, params.d * params.m());
    }
  }
}

}  // namespace
}  // namespace ramanujan
