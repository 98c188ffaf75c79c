#include <gtest/gtest.h>

#include <random>

#include "ramanujan/errors.hpp"
#include "ramanujan/polynomial.hpp"
#include "ramanujan/quad_num.hpp"
#include "ramanujan/tri_poly.hpp"
#include "test_support.hpp"

namespace ramanujan {
namespace {

using testing::poly;

QuadNum qn(long a, long b, std::uint64_t m) { return QuadNum(Rational(a), Rational(b), m); }

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_EQ(make_rational(2, 4), make_rational(-3, -6));
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(parse_rational("-12/8"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    const Rational r = make_rational(num(rng), den(rng));
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 0), 1);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(2, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
}

TEST(QuadSign, WorkedExamples) {
  EXPECT_EQ(quad_sign(qn(3, -2, 2)), Sign::positive);
  EXPECT_EQ(quad_sign(qn(1, -1, 1)), Sign::zero);
  EXPECT_EQ(quad_sign(qn(-2, 1, 3)), Sign::negative);
}

TEST(QuadSign, EdgeCases) {
  EXPECT_EQ(quad_sign(qn(0, 0, 5)), Sign::zero);
  EXPECT_EQ(quad_sign(qn(0, -1, 5)), Sign::negative);
  EXPECT_EQ(quad_sign(qn(2, 3, 5)), Sign::positive);
  EXPECT_EQ(quad_sign(qn(-2, -3, 5)), Sign::negative);
  // Perfect squares: -6 + 3*sqrt(4) = 0, 5 - 2*sqrt(9) = -1.
  EXPECT_EQ(quad_sign(qn(-6, 3, 4)), Sign::zero);
  EXPECT_EQ(quad_sign(qn(5, -2, 9)), Sign::negative);
  // Non square-free radicand: 5 - sqrt(8) > 0, 2 - sqrt(8) < 0.
  EXPECT_EQ(quad_sign(qn(5, -1, 8)), Sign::positive);
  EXPECT_EQ(quad_sign(qn(2, -1, 8)), Sign::negative);
  EXPECT_EQ(quad_sign(qn(4, 7, 0)), Sign::positive);
}

TEST(QuadSign, AgreesWithHighPrecisionFloat) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
  std::uniform_int_distribution<std::uint64_t> rad(0, 40);
  for (int i = 0; i < 1000; ++i) {
    const QuadNum v(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), rad(rng));
    mpf_class a(0, 512), b(0, 512), root(0, 512);
    a = mpf_class(v.a(), 512);
    b = mpf_class(v.b(), 512);
    root = sqrt(mpf_class(static_cast<unsigned long>(v.radicand()), 512));
    const mpf_class value = a + b * root;
    Sign expected = Sign::zero;
    if (abs(value) > mpf_class(1e-60, 512)) expected = value > 0 ? Sign::positive : Sign::negative;
    EXPECT_EQ(quad_sign(v), expected) << v;
  }
}

TEST(QuadNum, RingArithmetic) {
  EXPECT_EQ(qn(1, 1, 2) * qn(1, -1, 2), qn(-1, 0, 2));
  EXPECT_EQ(qn(1, 1, 2) + qn(2, -3, 2), qn(3, -2, 2));
  EXPECT_EQ(qn(3, 1, 7) * qn(3, 1, 7).inverse(), qn(1, 0, 7));
  EXPECT_EQ(qn(0, 1, 4), qn(2, 0, 4));
  EXPECT_THROW(qn(1, 1, 2) + qn(1, 1, 3), RadicandMismatch);
  EXPECT_THROW(qn(1, 1, 2) * qn(1, 1, 3), RadicandMismatch);
  EXPECT_THROW(qn(0, 0, 3).inverse(), std::domain_error);
}

TEST(UniPoly, Evaluate) {
  EXPECT_EQ(poly({-1, 0, 1}).evaluate(Rational(3)), Rational(8));
  // x^2 - 2 at sqrt(2)
  EXPECT_EQ(poly({-2, 0, 1}).evaluate(QuadNum::root(2)), qn(0, 0, 2));
  EXPECT_TRUE(UniPoly<Rational>().is_zero());
  EXPECT_EQ(UniPoly<Rational>().degree(), -1);
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
}

TEST(ShiftBySqrt, WorkedExamples) {
  const auto p1 = poly_shift_by_sqrt(poly({-2, 0, 1}), 2);
  EXPECT_EQ(p1, UniPoly<QuadNum>({qn(0, 0, 2), qn(0, 2, 2), qn(1, 0, 2)}));

  const auto p2 = poly_shift_by_sqrt(poly({0, 1}), 4);
  ASSERT_EQ(p2.degree(), 1);
  EXPECT_EQ(p2[0], qn(0, 1, 4));
  EXPECT_EQ(quad_sign(p2[0] - Rational(2)), Sign::zero);

  // x^3 at q = 3 against the binomial expansion sum C(3,k) x^k sqrt(3)^(3-k).
  const auto p3 = poly_shift_by_sqrt(poly({0, 0, 0, 1}), 3);
  std::vector<QuadNum> expected;
  for (long k = 0; k <= 3; ++k) {
    QuadNum power = QuadNum::from_rational(Rational(1), 3);
    for (long e = 0; e < 3 - k; ++e) power *= QuadNum::root(3);
    expected.push_back(power * Rational(binomial(3, k)));
  }
  EXPECT_EQ(p3, UniPoly<QuadNum>(expected));
  EXPECT_EQ(p3, UniPoly<QuadNum>({qn(0, 3, 3), qn(9, 0, 3), qn(0, 3, 3), qn(1, 0, 3)}));
}

TEST(ShiftBySqrt, EvaluationProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-20, 20), num(-50, 50), den(1, 9), deg(0, 7);
  std::uniform_int_distribution<std::uint64_t> rad(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> coeffs;
    const long degree = deg(rng);
    for (long i = 0; i <= degree; ++i) coeffs.emplace_back(coeff(rng));
    coeffs.back() = coeffs.back() == 0 ? Rational(1) : coeffs.back();
    const UniPoly<Rational> p(coeffs);
    const std::uint64_t q = rad(rng);
    const Rational r = make_rational(num(rng), den(rng));
    const QuadNum at = QuadNum(r, Rational(-1), q);
    EXPECT_EQ(poly_shift_by_sqrt(p, q).evaluate(at), QuadNum::from_rational(p.evaluate(r), q));
  }
}

TEST(SubstituteSquare, WorkedExamples) {
  EXPECT_EQ(poly_substitute_square(poly({-4, 1})), poly({-4, 0, 1}));
  EXPECT_EQ(poly_substitute_square(poly({1, -2, 1})), poly({1, 0, -2, 0, 1}));
  EXPECT_EQ(poly_substitute_square(poly({8, -6, 1})), poly({8, 0, -6, 0, 1}));
  EXPECT_THROW(poly_even_part(poly({0, 1})), std::invalid_argument);
}

TEST(SubstituteSquare, EvenPartRecoversInput) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c;
    for (long i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coeff(rng));
    const UniPoly<Rational> p(c);
    const auto doubled = poly_substitute_square(p);
    if (!p.is_zero()) EXPECT_EQ(doubled.degree(), 2 * p.degree());
    for (std::size_t i = 1; i < doubled.size(); i += 2) EXPECT_EQ(doubled[i], 0);
    EXPECT_EQ(poly_even_part(doubled), p);
  }
}

TEST(DivExact, WorkedExamples) {
  EXPECT_EQ(poly_div_exact(poly({27, 0, -12, 0, 1}), poly({-9, 0, 1})), poly({-3, 0, 1}));
  EXPECT_EQ(poly_div_exact(poly({-4, 0, 1}), poly({-4, 0, 1})), poly({1}));
  EXPECT_THROW(poly_div_exact(poly({-1, 0, 1}), poly({-4, 0, 1})), NonzeroRemainder);
  EXPECT_THROW(poly_div_exact(poly({1, 0, 1}), poly({1, 2})), std::invalid_argument);
}

TEST(DivExact, RecoversQuotient) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-15, 15), den(1, 5), deg(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> qc, dc;
    for (long i = 0, d = deg(rng); i <= d; ++i) qc.push_back(make_rational(num(rng), den(rng)));
    for (long i = 0, d = deg(rng); i < d; ++i) dc.push_back(make_rational(num(rng), den(rng)));
    dc.emplace_back(1);
    const UniPoly<Rational> quotient(qc), divisor(dc);
    EXPECT_EQ(poly_div_exact(quotient * divisor, divisor), quotient);
  }
}

TEST(TriPoly, PartialEvaluation) {
  // lambda + t_r t_c
  TriPoly<Rational> p(2, 2, 2, Rational(0));
  p.at(1, 0, 0) = 1;
  p.at(0, 1, 1) = 1;
  EXPECT_EQ(p.evaluate_t(Rational(2), Rational(3)), poly({6, 1}));
}

}  // namespace
}  // namespace ramanujan
