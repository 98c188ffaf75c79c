#pragma once

#include <cstdint>
#include <vector>

#include "ramanujan/block_reduce.hpp"
#include "ramanujan/matching_family.hpp"
#include "ramanujan/polynomial.hpp"

namespace ramanujan::oracle {

// Ground truth by exhaustive enumeration. Deliberately avoids the Berkowitz
// charpoly and the half-adjacency assembly of the main path.

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// det(xI - M) by the Faddeev-LeVerrier recurrence.
UniPoly<Rational> faddeev_leverrier(const std::vector<std::vector<Rational>>& m);

/// Average of det(xI - adjacency) over every completion of the node: all
/// completions of the partial matching, then all choices of the remaining
/// d - r matchings. Degree n. Throws TooLarge when the number of outcomes
/// exceeds cap.
UniPoly<Rational> brute_expected_charpoly(const NodeState& node, const Params& params,
                                          std::uint64_t cap = kDefaultCap);

/// Average of det(yI - (A + P)^T (A + P)) over all l! permutation matrices P
/// placed on the block.
UniPoly<Rational> brute_fixed_plus_permutation(const std::vector<std::vector<Rational>>& a,
                                               const BlockSpec& block,
                                               std::uint64_t cap = kDefaultCap);

}  // namespace ramanujan::oracle
