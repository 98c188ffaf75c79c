#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramanujan/block_reduce.hpp"
#include "ramanujan/matching_family.hpp"
#include "ramanujan/polynomial.hpp"

namespace ramanujan {

struct EngineOptions {
  // Re-derive every intermediate invariant (orthogonal invariance of the
  // block reduction, t = 1 slice of the trivariate polynomial). Test builds
  // turn this on; it roughly doubles the cost.
  bool verify_invariants = false;
};

/// Sums of squared k' x k' minors of the reduced matrix, split by how many
/// rows (p) and columns (q) fall inside the reduced block.
class CTensor {
 public:
  CTensor(std::size_t m, std::size_t lhat);

  std::size_t m() const { return m_; }
  std::size_t lhat() const { return lhat_; }
  const Rational& at(std::size_t k, std::size_t p, std::size_t q) const {
    return values_.at(index(k, p, q));
  }
  Rational& at(std::size_t k, std::size_t p, std::size_t q) { return values_.at(index(k, p, q)); }

 private:
  std::size_t index(std::size_t k, std::size_t p, std::size_t q) const {
    return (k * (lhat_ + 1) + p) * (lhat_ + 1) + q;
  }

  std::size_t m_;
  std::size_t lhat_;
  std::vector<Rational> values_;
};

/// Process-wide counters for CTensor extraction. Violations are counted
/// before the RationalityViolation is thrown.
struct CTensorStats {
  std::uint64_t tensors = 0;
  std::uint64_t entries = 0;
  std::uint64_t violations = 0;
};
CTensorStats ctensor_stats();
void reset_ctensor_stats();

/// C(lhat-p, k-k') C(lhat-q, k-k') / C(lhat, k-k'); zero when the
/// denominator vanishes.
Rational g_weight(std::size_t lhat, std::size_t k, std::size_t k_prime, std::size_t p,
                  std::size_t q);

/// Reads C_{k',p,q} = [lambda^(m-k') t_r^p t_c^q] P out of the trivariate
/// polynomial, asserting each entry is rational and nonnegative.
CTensor extract_ctensor(const TriPoly<QuadNum>& detpoly);

struct BlockExpectation {
  UniPoly<Rational> poly;          // E det(yI - (A + P_B)^T (A + P_B))
  std::optional<CTensor> ctensor;  // present when the block needed quadrature
};

BlockExpectation fixed_plus_random_block_detail(const Matrix<Rational>& a, const BlockSpec& block,
                                                const EngineOptions& options = {});

/// Expected det(yI - (A + P_B)^T (A + P_B)) over uniformly random
/// permutations P_B of the block.
UniPoly<Rational> fixed_plus_random_block_expected(const Matrix<Rational>& a,
                                                   const BlockSpec& block,
                                                   const EngineOptions& options = {});

/// Expected adjacency characteristic polynomial after adding one uniformly
/// random perfect matching to a c-regular bipartite multigraph (or to a
/// distribution of them) whose expected polynomial is adjacency_poly.
UniPoly<Rational> add_random_matching(const UniPoly<Rational>& adjacency_poly,
                                      const Params& params, unsigned c);

/// The node's expected adjacency characteristic polynomial divided by
/// x^2 - d^2. Monic, even, degree n - 2.
UniPoly<Rational> node_polynomial(const NodeState& node, const Params& params,
                                  const EngineOptions& options = {});

/// Same, without the trivial-factor division (degree n).
UniPoly<Rational> expected_adjacency_charpoly(const NodeState& node, const Params& params,
                                              const EngineOptions& options = {});

}  // namespace ramanujan
