#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanujan/expectation_engine.hpp"
#include "ramanujan/matching_family.hpp"
#include "ramanujan/polynomial.hpp"

namespace ramanujan {

/// True iff every coefficient of p(x + sqrt(q)) is nonnegative. For a
/// real-rooted p with positive leading coefficient this is exactly
/// "max root of p <= sqrt(q)".
bool max_root_leq_sqrt(const UniPoly<Rational>& p, std::uint64_t q);

struct Certificate {
  Multigraph graph;
  UniPoly<Rational> adjacency_charpoly;
  std::optional<UniPoly<Rational>> nontrivial_poly;  // absent if x^2 - d^2 did not divide
  std::uint64_t bound_q = 0;
  UniPoly<QuadNum> shifted;          // nontrivial_poly(x + sqrt(q))
  std::vector<Sign> shifted_signs;   // per coefficient of `shifted`
  bool passed = false;
  std::string reason;
};

/// Exact Ramanujan check of a d-regular bipartite multigraph.
/// Throws NotRegular when some row or column sum differs from d.
Certificate certify(const Multigraph& graph);

struct WalkOptions {
  unsigned jobs = 1;
  // Start from the node whose first matching is the identity. Every node
  // polynomial is invariant under relabeling the right side, so the start
  // node has the same polynomial as the root.
  bool canonical_first_matching = false;
  // Check parent = average of children at every expansion, plus the engine's
  // internal invariants.
  bool verify_invariants = false;
};

struct ChildRecord {
  NodeState node;
  UniPoly<Rational> poly;
  bool passed = false;
};

struct StageRecord {
  NodeState node;
  UniPoly<Rational> poly;
  std::vector<ChildRecord> children;
  std::optional<std::size_t> chosen;  // index into children
  double seconds = 0.0;
};

struct WalkResult {
  Params params;
  bool canonical_first_matching = false;
  bool finished = false;  // leaf is meaningful only when true
  NodeState leaf;
  std::vector<StageRecord> stages;
  double seconds = 0.0;
};

/// A walk that stopped on a broken invariant. Carries the walk so far.
class WalkFailure : public std::runtime_error {
 public:
  WalkFailure(const std::string& what, WalkResult transcript)
      : std::runtime_error(what), transcript_(std::move(transcript)) {}
  const WalkResult& transcript() const { return transcript_; }

 private:
  WalkResult transcript_;
};

/// An expanded node had no child within the bound.
class NoPassingChild : public WalkFailure {
 public:
  using WalkFailure::WalkFailure;
};

/// A parent polynomial differed from the average of its children.
class AveragingViolation : public WalkFailure {
 public:
  using WalkFailure::WalkFailure;
};

/// The start node's polynomial already exceeds the bound. Only possible for
/// degenerate degrees (d = 1 with n > 2); not an implementation fault.
class RootExceedsBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Greedy descent: always move to the first child (ascending partner order)
/// whose polynomial has max root <= 2 sqrt(d - 1).
WalkResult find_leaf(const Params& params, const WalkOptions& options = {});

}  // namespace ramanujan
