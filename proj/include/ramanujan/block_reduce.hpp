#pragma once

#include <cstddef>
#include <vector>

#include "ramanujan/matrix.hpp"
#include "ramanujan/quad_num.hpp"
#include "ramanujan/tri_poly.hpp"

namespace ramanujan {

/// A square sub-block of a matrix: sorted, distinct, 0-based positions.
struct BlockSpec {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
  // Throws std::invalid_argument unless well formed for an m x m matrix.
  void validate(std::size_t m) const;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

struct BlockReduction {
  Matrix<QuadNum> reduced;   // entries in Q[sqrt(l)]
  BlockSpec reduced_block;   // block minus its first row and first column
};

/// Conjugates the block so its all-ones direction becomes the coordinate
/// direction of the block's first row (resp. column).
///
/// Rows and columns are transformed independently by the Householder
/// reflection sending 1/sqrt(l) * ones to the first basis vector of the
/// block. Requires l >= 2, otherwise throws BlockTooSmall.
BlockReduction householder_block_reduce(const Matrix<Rational>& augmented,
                                        const BlockSpec& block);

/// P(lambda, t_r, t_c) = det(A^T T_r A T_c + lambda I), where T_r / T_c scale
/// the reduced block's rows / columns by t_r / t_c.
///
/// Built by evaluating at the integer grid {0..l}^2 and interpolating exactly.
/// Coefficients are returned over Q[sqrt(l)]; callers decide how to treat
/// irrational residue.
TriPoly<QuadNum> trivariate_detpoly(const Matrix<QuadNum>& reduced,
                                    const BlockSpec& reduced_block);

}  // namespace ramanujan
