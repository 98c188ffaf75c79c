#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ramanujan/block_reduce.hpp"
#include "ramanujan/matrix.hpp"

namespace ramanujan {

/// Graph size and degree. n counts both sides; each side has m = n / 2.
struct Params {
  unsigned n = 0;
  unsigned d = 0;

  std::size_t m() const { return n / 2; }
  // Throws InvalidParams unless n is even and >= 2 and d >= 1.
  void validate() const;
  // 4(d - 1); the squared nontrivial eigenvalue bound.
  std::uint64_t bound_q() const { return 4ULL * (d - 1); }

  friend bool operator==(const Params&, const Params&) = default;
};

/// partner[i] is the right vertex matched to left vertex i (0-based).
using Matching = std::vector<std::size_t>;

/// Node of the matching tree: finished matchings plus an optional prefix of
/// the next one covering left vertices 0..t-1.
struct NodeState {
  std::vector<Matching> complete;
  std::optional<std::vector<std::size_t>> partial;

  bool is_leaf(const Params& params) const {
    return !partial && complete.size() == params.d;
  }
  // Throws InvalidNode unless consistent with params.
  void validate(const Params& params) const;

  friend bool operator==(const NodeState&, const NodeState&) = default;
};

/// Multiplicity matrix of a bipartite multigraph; entry (i, j) counts the
/// edges between left vertex i and right vertex j.
struct Multigraph {
  Params params;
  std::vector<std::vector<unsigned>> multiplicity;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

NodeState root_node();
Matching identity_matching(std::size_t m);

/// Children in ascending partner order. Throws IsLeaf on a leaf.
std::vector<NodeState> children(const NodeState& node, const Params& params);

struct HalfAdjacency {
  Matrix<Rational> a;
  BlockSpec block;
};

/// Fixed edges of the node and the block still to be filled by the pending
/// random matching (empty at a leaf).
HalfAdjacency half_adjacency(const NodeState& node, const Params& params);

/// Throws NotALeaf unless node is a leaf.
Multigraph leaf_graph(const NodeState& node, const Params& params);

}  // namespace ramanujan
