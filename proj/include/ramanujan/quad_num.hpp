#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ramanujan/rational.hpp"

namespace ramanujan {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact element a + b*sqrt(m) of Q[sqrt(m)].
///
/// The radicand m is part of the value; combining two numbers with different
/// radicands throws RadicandMismatch. When m is a perfect square the
/// irrational part is folded into a at construction, so b is always zero for
/// such m and the representation stays unique.
class QuadNum {
 public:
  QuadNum(Rational a, Rational b, std::uint64_t radicand);

  static QuadNum from_rational(Rational a, std::uint64_t radicand) {
    return QuadNum(std::move(a), Rational(0), radicand);
  }
  // sqrt(m) itself.
  static QuadNum root(std::uint64_t radicand) {
    return QuadNum(Rational(0), Rational(1), radicand);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::uint64_t radicand() const { return radicand_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadNum conjugate() const;
  // Throws std::domain_error on zero.
  QuadNum inverse() const;

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  QuadNum& operator/=(const QuadNum& rhs);
  QuadNum& operator+=(const Rational& rhs);
  QuadNum& operator-=(const Rational& rhs);
  QuadNum& operator*=(const Rational& rhs);
  QuadNum& operator/=(const Rational& rhs);

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }
  friend QuadNum operator+(QuadNum lhs, const Rational& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const Rational& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const Rational& rhs) { return lhs /= rhs; }
  friend QuadNum operator+(const Rational& lhs, QuadNum rhs) { return rhs += lhs; }
  friend QuadNum operator*(const Rational& lhs, QuadNum rhs) { return rhs *= lhs; }
  friend QuadNum operator-(const Rational& lhs, const QuadNum& rhs) { return (-rhs) += lhs; }

  // Values with different radicands compare unequal rather than throwing.
  friend bool operator==(const QuadNum& lhs, const QuadNum& rhs) {
    return lhs.radicand_ == rhs.radicand_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  void check_radicand(const QuadNum& other) const;

  Rational a_;
  Rational b_;
  std::uint64_t radicand_;
};

/// Exact sign of a + b*sqrt(m), by integer comparison of a^2 against b^2*m.
Sign quad_sign(const QuadNum& value);

std::string to_string(const QuadNum& value);
std::ostream& operator<<(std::ostream& os, const QuadNum& value);

inline QuadNum zero_like(const QuadNum& ref) {
  return QuadNum::from_rational(Rational(0), ref.radicand());
}
inline QuadNum one_like(const QuadNum& ref) {
  return QuadNum::from_rational(Rational(1), ref.radicand());
}
inline bool is_zero(const QuadNum& value) {
  return sgn(value.a()) == 0 && sgn(value.b()) == 0;
}

}  // namespace ramanujan
