#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ramanujan/polynomial.hpp"

namespace ramanujan {

/// Dense row-major matrix over an exact ring.
///
/// The matrix carries a zero element of its ring so that generic code can
/// build constants (QuadNum zeros need the radicand).
template <class S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& zero)
      : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const S& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const S& zero() const { return zero_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_, lhs.zero_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const S& a = lhs(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
      throw std::invalid_argument("matrix sum: shape mismatch");
    }
    for (std::size_t i = 0; i < lhs.data_.size(); ++i) lhs.data_[i] += rhs.data_[i];
    return lhs;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  S zero_;
  std::vector<S> data_;
};

template <class S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n [" : "[[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

Matrix<QuadNum> lift(const Matrix<Rational>& m, std::uint64_t radicand);

/// det(xI - M) by Berkowitz's division-free recurrence; monic of degree n.
template <class S>
UniPoly<S> charpoly(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix must be square");
  const std::size_t n = m.rows();
  const S one = one_like(m.zero());
  if (n == 0) return UniPoly<S>({one});

  // c[0..r] are the coefficients (leading first) of the leading r x r block.
  std::vector<S> c{one, -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S.
    std::vector<S> toeplitz{one, -m(r, r)};
    std::vector<S> v(r, m.zero());
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      S dot = m.zero();
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      toeplitz.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<S> next(r, m.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<S> grown(r + 2, m.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) grown[i] += toeplitz[i - j] * c[j];
    c = std::move(grown);
  }
  return UniPoly<S>(std::vector<S>(c.rbegin(), c.rend()));
}

}  // namespace ramanujan
