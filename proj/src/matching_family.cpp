#include "ramanujan/matching_family.hpp"

#include <numeric>
#include <string>

#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

void check_partners(const std::vector<std::size_t>& partners, std::size_t m, const char* what) {
  std::vector<bool> seen(m, false);
  for (auto p : partners) {
    if (p >= m) throw InvalidNode(std::string(what) + ": partner out of range");
    if (seen[p]) throw InvalidNode(std::string(what) + ": repeated partner");
    seen[p] = true;
  }
}

}  // namespace

void Params::validate() const {
  if (n < 2 || n % 2 != 0) {
    throw InvalidParams("n must be even and at least 2, got " + std::to_string(n));
  }
  if (d < 1) throw InvalidParams("d must be at least 1");
}

void NodeState::validate(const Params& params) const {
  const std::size_t m = params.m();
  for (const auto& matching : complete) {
    if (matching.size() != m) throw InvalidNode("complete matching has wrong length");
    check_partners(matching, m, "complete matching");
  }
  const std::size_t total = complete.size() + (partial ? 1 : 0);
  if (total > params.d) throw InvalidNode("more matchings than the degree allows");
  if (partial) {
    if (partial->empty() || partial->size() >= m) {
      throw InvalidNode("partial matching must cover between 1 and m-1 left vertices");
    }
    check_partners(*partial, m, "partial matching");
  }
}

NodeState root_node() { return NodeState{}; }

Matching identity_matching(std::size_t m) {
  Matching id(m);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return id;
}

std::vector<NodeState> children(const NodeState& node, const Params& params) {
  if (node.is_leaf(params)) throw IsLeaf("children: node is a leaf");
  const std::size_t m = params.m();
  const std::vector<std::size_t> prefix = node.partial.value_or(std::vector<std::size_t>{});

  std::vector<bool> used(m, false);
  for (auto p : prefix) used[p] = true;

  std::vector<NodeState> out;
  for (std::size_t right = 0; right < m; ++right) {
    if (used[right]) continue;
    NodeState child{node.complete, prefix};
    child.partial->push_back(right);
    if (child.partial->size() == m) {
      child.complete.push_back(std::move(*child.partial));
      child.partial.reset();
    }
    out.push_back(std::move(child));
  }
  return out;
}

HalfAdjacency half_adjacency(const NodeState& node, const Params& params) {
  const std::size_t m = params.m();
  Matrix<Rational> a(m, m, Rational(0));
  for (const auto& matching : node.complete)
    for (std::size_t i = 0; i < m; ++i) a(i, matching[i]) += 1;

  BlockSpec block;
  if (node.partial) {
    const auto& prefix = *node.partial;
    std::vector<bool> used(m, false);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      a(i, prefix[i]) += 1;
      used[prefix[i]] = true;
    }
    for (std::size_t i = prefix.size(); i < m; ++i) block.rows.push_back(i);
    for (std::size_t j = 0; j < m; ++j)
      if (!used[j]) block.cols.push_back(j);
  } else if (node.complete.size() < params.d) {
    block.rows = identity_matching(m);
    block.cols = identity_matching(m);
  }

  const std::size_t t = node.partial ? node.partial->size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational row_sum(0);
    for (std::size_t j = 0; j < m; ++j) row_sum += a(i, j);
    const Rational expected(static_cast<unsigned long>(node.complete.size() + (i < t ? 1 : 0)));
    if (row_sum != expected) throw std::logic_error("half_adjacency: row sum invariant broken");
  }
  return {std::move(a), std::move(block)};
}

Multigraph leaf_graph(const NodeState& node, const Params& params) {
  if (!node.is_leaf(params)) throw NotALeaf("leaf_graph: node is not a leaf");
  const std::size_t m = params.m();
  Multigraph g{params, std::vector<std::vector<unsigned>>(m, std::vector<unsigned>(m, 0))};
  for (const auto& matching : node.complete)
    for (std::size_t i = 0; i < m; ++i) ++g.multiplicity[i][matching[i]];
  return g;
}

}  // namespace ramanujan
