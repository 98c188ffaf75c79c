#include "ramanujan/block_reduce.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ramanujan/errors.hpp"

namespace ramanujan {

namespace {

void validate_indices(const std::vector<std::size_t>& idx, std::size_t m, const char* what) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= m) throw std::invalid_argument(std::string("block ") + what + " out of range");
    if (i > 0 && idx[i] <= idx[i - 1]) {
      throw std::invalid_argument(std::string("block ") + what + " must be strictly increasing");
    }
  }
}

// m x m reflection acting on `positions` only, mapping ones/sqrt(l) on those
// positions to the basis vector of positions.front().
Matrix<QuadNum> block_householder(std::size_t m, const std::vector<std::size_t>& positions) {
  const std::uint64_t l = positions.size();
  const QuadNum zero = QuadNum::from_rational(Rational(0), l);
  const QuadNum one = one_like(zero);
  const QuadNum s = QuadNum::root(l) / Rational(static_cast<unsigned long>(l));  // 1/sqrt(l)
  const QuadNum scale = (one - s).inverse();

  std::vector<QuadNum> w(l, s);
  w[0] -= one;

  Matrix<QuadNum> h = Matrix<QuadNum>::identity(m, zero);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      h(positions[i], positions[j]) -= w[i] * w[j] * scale;
    }
  }
  return h;
}

// Monomial coefficients of the Lagrange basis on nodes 0..k:
// basis[p][j] = coefficient of t^p in L_j(t).
std::vector<std::vector<Rational>> lagrange_monomial_basis(std::size_t k) {
  const std::size_t count = k + 1;
  std::vector<std::vector<Rational>> basis(count, std::vector<Rational>(count, Rational(0)));
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Rational> poly{Rational(1)};
    Rational denom(1);
    for (std::size_t i = 0; i < count; ++i) {
      if (i == j) continue;
      // poly *= (t - i)
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t e = 0; e < poly.size(); ++e) {
        next[e + 1] += poly[e];
        next[e] -= poly[e] * Rational(static_cast<unsigned long>(i));
      }
      poly = std::move(next);
      denom *= Rational(static_cast<long>(j) - static_cast<long>(i));
    }
    for (std::size_t p = 0; p < count; ++p) basis[p][j] = poly[p] / denom;
  }
  return basis;
}

}  // namespace

void BlockSpec::validate(std::size_t m) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("block must be square");
  validate_indices(rows, m, "rows");
  validate_indices(cols, m, "cols");
}

BlockReduction householder_block_reduce(const Matrix<Rational>& augmented,
                                        const BlockSpec& block) {
  if (!augmented.is_square()) throw std::invalid_argument("block reduction needs a square matrix");
  block.validate(augmented.rows());
  const std::size_t l = block.size();
  if (l < 2) throw BlockTooSmall("householder_block_reduce: block size " + std::to_string(l));

  const std::size_t m = augmented.rows();
  const Matrix<QuadNum> h_rows = block_householder(m, block.rows);
  const Matrix<QuadNum> h_cols = block_householder(m, block.cols);
  // Both reflections are symmetric, so H_c^T = H_c.
  Matrix<QuadNum> reduced = h_rows * lift(augmented, l) * h_cols;

  BlockSpec reduced_block{{block.rows.begin() + 1, block.rows.end()},
                          {block.cols.begin() + 1, block.cols.end()}};
  return {std::move(reduced), std::move(reduced_block)};
}

TriPoly<QuadNum> trivariate_detpoly(const Matrix<QuadNum>& reduced,
                                    const BlockSpec& reduced_block) {
  if (!reduced.is_square()) throw std::invalid_argument("trivariate_detpoly: square matrix");
  reduced_block.validate(reduced.rows());
  const std::size_t m = reduced.rows();
  const std::size_t lhat = reduced_block.size();
  const QuadNum& zero = reduced.zero();

  std::vector<bool> in_rows(m, false), in_cols(m, false);
  for (auto r : reduced_block.rows) in_rows[r] = true;
  for (auto c : reduced_block.cols) in_cols[c] = true;

  const Matrix<QuadNum> reduced_t = reduced.transpose();

  // grid[tr][tc] = coefficients of det(lambda I + A^T T_r A T_c) in lambda.
  std::vector<std::vector<UniPoly<QuadNum>>> grid(lhat + 1,
                                                  std::vector<UniPoly<QuadNum>>(lhat + 1));
  for (std::size_t tr = 0; tr <= lhat; ++tr) {
    Matrix<QuadNum> scaled_rows = reduced;
    for (std::size_t i = 0; i < m; ++i) {
      if (!in_rows[i]) continue;
      for (std::size_t j = 0; j < m; ++j) scaled_rows(i, j) *= Rational(static_cast<unsigned long>(tr));
    }
    const Matrix<QuadNum> gram = reduced_t * scaled_rows;
    for (std::size_t tc = 0; tc <= lhat; ++tc) {
      Matrix<QuadNum> target = gram;
      for (std::size_t j = 0; j < m; ++j) {
        if (!in_cols[j]) continue;
        for (std::size_t i = 0; i < m; ++i) target(i, j) *= Rational(static_cast<unsigned long>(tc));
      }
      // det(lambda I + M): the lambda^(m-k) coefficient is (-1)^k times the
      // x^(m-k) coefficient of det(xI - M).
      const UniPoly<QuadNum> cp = charpoly(target);
      std::vector<QuadNum> coeffs(m + 1, zero);
      for (std::size_t i = 0; i < cp.size(); ++i) {
        coeffs[i] = ((m - i) % 2 == 0) ? cp[i] : -cp[i];
      }
      grid[tr][tc] = UniPoly<QuadNum>(std::move(coeffs));
    }
  }

  const auto basis = lagrange_monomial_basis(lhat);
  TriPoly<QuadNum> out(m + 1, lhat + 1, lhat + 1, zero);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t p = 0; p <= lhat; ++p) {
      for (std::size_t q = 0; q <= lhat; ++q) {
        QuadNum acc = zero;
        for (std::size_t tr = 0; tr <= lhat; ++tr) {
          if (is_zero(basis[p][tr])) continue;
          for (std::size_t tc = 0; tc <= lhat; ++tc) {
            const auto& values = grid[tr][tc];
            if (i >= values.size()) continue;
            acc += values[i] * (basis[p][tr] * basis[q][tc]);
          }
        }
        out.at(i, p, q) = std::move(acc);
      }
    }
  }
  return out;
}

}  // namespace ramanujan
