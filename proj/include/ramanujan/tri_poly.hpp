#pragma once

#include <cstddef>
#include <vector>

#include "ramanujan/polynomial.hpp"

namespace ramanujan {

/// Dense polynomial in (lambda, t_r, t_c), indexed by the three powers.
template <class S>
class TriPoly {
 public:
  TriPoly(std::size_t lambda_extent, std::size_t row_extent, std::size_t col_extent,
          const S& zero)
      : lambda_extent_(lambda_extent),
        row_extent_(row_extent),
        col_extent_(col_extent),
        coeffs_(lambda_extent * row_extent * col_extent, zero) {}

  std::size_t lambda_extent() const { return lambda_extent_; }
  std::size_t row_extent() const { return row_extent_; }
  std::size_t col_extent() const { return col_extent_; }

  S& at(std::size_t lambda_power, std::size_t tr_power, std::size_t tc_power) {
    return coeffs_.at(index(lambda_power, tr_power, tc_power));
  }
  const S& at(std::size_t lambda_power, std::size_t tr_power, std::size_t tc_power) const {
    return coeffs_.at(index(lambda_power, tr_power, tc_power));
  }

  // Fixes t_r and t_c, leaving a polynomial in lambda.
  template <class T>
  UniPoly<S> evaluate_t(const T& t_r, const T& t_c) const {
    std::vector<S> out;
    out.reserve(lambda_extent_);
    for (std::size_t i = 0; i < lambda_extent_; ++i) {
      S acc = at(i, 0, 0);
      acc = zero_like(acc);
      T tr_pow = one_like(t_r);
      for (std::size_t p = 0; p < row_extent_; ++p) {
        T tc_pow = one_like(t_c);
        for (std::size_t q = 0; q < col_extent_; ++q) {
          S term = at(i, p, q);
          term *= tr_pow;
          term *= tc_pow;
          acc += term;
          tc_pow *= t_c;
        }
        tr_pow *= t_r;
      }
      out.push_back(std::move(acc));
    }
    return UniPoly<S>(std::move(out));
  }

  friend bool operator==(const TriPoly& lhs, const TriPoly& rhs) {
    return lhs.lambda_extent_ == rhs.lambda_extent_ && lhs.row_extent_ == rhs.row_extent_ &&
           lhs.col_extent_ == rhs.col_extent_ && lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t p, std::size_t q) const {
    return (i * row_extent_ + p) * col_extent_ + q;
  }

  std::size_t lambda_extent_;
  std::size_t row_extent_;
  std::size_t col_extent_;
  std::vector<S> coeffs_;
};

}  // namespace ramanujan
