#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramanujan/errors.hpp"
#include "ramanujan/quad_num.hpp"
#include "ramanujan/rational.hpp"

namespace ramanujan {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// Trailing zeros are trimmed on construction, so the zero polynomial has an
/// empty coefficient list and degree -1.
template <class S>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const S& c, std::size_t power) {
    std::vector<S> coeffs(power + 1, zero_like(c));
    coeffs[power] = c;
    return UniPoly(std::move(coeffs));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<S>& coefficients() const { return coeffs_; }
  const S& operator[](std::size_t i) const { return coeffs_.at(i); }
  const S& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == one_like(leading()); }

  template <class T>
  T evaluate(const T& x) const {
    T acc = zero_like(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  UniPoly operator-() const {
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return UniPoly(std::move(out));
  }

  friend UniPoly operator+(const UniPoly& lhs, const UniPoly& rhs) {
    const auto& big = lhs.size() >= rhs.size() ? lhs : rhs;
    const auto& small = lhs.size() >= rhs.size() ? rhs : lhs;
    std::vector<S> out = big.coeffs_;
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small.coeffs_[i];
    return UniPoly(std::move(out));
  }

  friend UniPoly operator-(const UniPoly& lhs, const UniPoly& rhs) { return lhs + (-rhs); }

  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<S> out(lhs.size() + rhs.size() - 1, zero_like(lhs.coeffs_[0]));
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return UniPoly(std::move(out));
  }

  template <class T>
  UniPoly scaled(const T& factor) const {
    std::vector<S> out = coeffs_;
    for (auto& c : out) c *= factor;
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_coeff(const S& c) { return ramanujan::is_zero(c); }

  std::vector<S> coeffs_;
};

template <class S>
std::ostream& operator<<(std::ostream& os, const UniPoly<S>& p) {
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  return os << "]";
}

/// Quotient of p by a monic divisor; throws NonzeroRemainder unless exact.
template <class S>
UniPoly<S> poly_div_exact(const UniPoly<S>& p, const UniPoly<S>& divisor) {
  if (!divisor.is_monic()) throw std::invalid_argument("poly_div_exact: divisor must be monic");
  if (p.is_zero()) return UniPoly<S>();
  if (p.degree() < divisor.degree()) {
    throw NonzeroRemainder("poly_div_exact: dividend degree below divisor degree");
  }
  std::vector<S> rem = p.coefficients();
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  const std::size_t qd = rem.size() - 1 - dd;
  std::vector<S> quot(qd + 1, zero_like(rem[0]));
  for (std::size_t k = qd + 1; k-- > 0;) {
    const S c = rem[k + dd];
    quot[k] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * divisor[j];
  }
  for (const auto& r : rem) {
    if (!is_zero(r)) throw NonzeroRemainder("poly_div_exact: nonzero remainder");
  }
  return UniPoly<S>(std::move(quot));
}

/// p(x) = p'(x^2).
template <class S>
UniPoly<S> poly_substitute_square(const UniPoly<S>& p) {
  if (p.is_zero()) return p;
  std::vector<S> out(2 * p.size() - 1, zero_like(p[0]));
  for (std::size_t i = 0; i < p.size(); ++i) out[2 * i] = p[i];
  return UniPoly<S>(std::move(out));
}

/// Inverse of poly_substitute_square; throws std::invalid_argument when p has
/// a nonzero odd coefficient.
template <class S>
UniPoly<S> poly_even_part(const UniPoly<S>& p) {
  std::vector<S> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 == 0) {
      out.push_back(p[i]);
    } else if (!is_zero(p[i])) {
      throw std::invalid_argument("poly_even_part: polynomial has odd terms");
    }
  }
  return UniPoly<S>(std::move(out));
}

UniPoly<QuadNum> lift(const UniPoly<Rational>& p, std::uint64_t radicand);

/// p(x + sqrt(q)) over Q[sqrt(q)].
UniPoly<QuadNum> poly_shift_by_sqrt(const UniPoly<Rational>& p, std::uint64_t q);

}  // namespace ramanujan
