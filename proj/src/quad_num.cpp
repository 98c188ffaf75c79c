#include "ramanujan/quad_num.hpp"

#include <sstream>
#include <stdexcept>

#include "ramanujan/errors.hpp"

namespace ramanujan {

QuadNum::QuadNum(Rational a, Rational b, std::uint64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
  if (sgn(b_) == 0) return;
  Integer m(static_cast<unsigned long>(radicand_));
  if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    a_ += b_ * Rational(root);
    b_ = 0;
  }
}

void QuadNum::check_radicand(const QuadNum& other) const {
  if (radicand_ != other.radicand_) {
    throw RadicandMismatch("QuadNum radicands differ: " + std::to_string(radicand_) +
                           " vs " + std::to_string(other.radicand_));
  }
}

QuadNum QuadNum::conjugate() const { return QuadNum(a_, -b_, radicand_); }

QuadNum QuadNum::inverse() const {
  // (a + b r)^-1 = (a - b r) / (a^2 - b^2 m); the norm is nonzero for nonzero
  // values because b = 0 whenever m is a perfect square.
  const Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<unsigned long>(radicand_));
  if (sgn(norm) == 0) throw std::domain_error("QuadNum: inverse of zero");
  return QuadNum(a_ / norm, -b_ / norm, radicand_);
}

QuadNum QuadNum::operator-() const { return QuadNum(-a_, -b_, radicand_); }

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  check_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
  check_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  check_radicand(rhs);
  const Rational m(static_cast<unsigned long>(radicand_));
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * m;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
  check_radicand(rhs);
  return *this *= rhs.inverse();
}

QuadNum& QuadNum::operator+=(const Rational& rhs) {
  a_ += rhs;
  return *this;
}

QuadNum& QuadNum::operator-=(const Rational& rhs) {
  a_ -= rhs;
  return *this;
}

QuadNum& QuadNum::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

QuadNum& QuadNum::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw std::domain_error("QuadNum: division by zero");
  a_ /= rhs;
  b_ /= rhs;
  return *this;
}

Sign quad_sign(const QuadNum& value) {
  const int sa = sgn(value.a());
  const int sb = value.radicand() == 0 ? 0 : sgn(value.b());
  if (sb == 0) return static_cast<Sign>(sa);
  if (sa == 0 || sa == sb) return static_cast<Sign>(sb);

  // Opposite signs: compare a^2 with b^2 m; the larger magnitude wins.
  const Rational lhs = value.a() * value.a();
  const Rational rhs =
      value.b() * value.b() * Rational(static_cast<unsigned long>(value.radicand()));
  const int c = cmp(lhs, rhs);
  if (c == 0) return Sign::zero;
  return static_cast<Sign>(c > 0 ? sa : sb);
}

std::string to_string(const QuadNum& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& value) {
  os << value.a().get_str();
  if (!value.is_rational()) {
    os << (sgn(value.b()) < 0 ? " - " : " + ") << Rational(abs(value.b())).get_str() << "*sqrt("
       << value.radicand() << ")";
  }
  return os;
}

}  // namespace ramanujan
