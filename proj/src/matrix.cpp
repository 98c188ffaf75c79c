#include "ramanujan/matrix.hpp"

namespace ramanujan {

Matrix<QuadNum> lift(const Matrix<Rational>& m, std::uint64_t radicand) {
  Matrix<QuadNum> out(m.rows(), m.cols(), QuadNum::from_rational(Rational(0), radicand));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = QuadNum::from_rational(m(i, j), radicand);
  return out;
}

}  // namespace ramanujan
