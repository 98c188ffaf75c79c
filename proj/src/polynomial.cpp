#include "ramanujan/polynomial.hpp"

namespace ramanujan {

UniPoly<QuadNum> lift(const UniPoly<Rational>& p, std::uint64_t radicand) {
  std::vector<QuadNum> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(QuadNum::from_rational(c, radicand));
  return UniPoly<QuadNum>(std::move(out));
}

UniPoly<QuadNum> poly_shift_by_sqrt(const UniPoly<Rational>& p, std::uint64_t q) {
  // Horner in the shifted variable: acc <- acc * (x + sqrt(q)) + c_i.
  const UniPoly<QuadNum> shift(
      {QuadNum::root(q), QuadNum::from_rational(Rational(1), q)});
  UniPoly<QuadNum> acc;
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * shift + UniPoly<QuadNum>({QuadNum::from_rational(*it, q)});
  }
  return acc;
}

}  // namespace ramanujan
