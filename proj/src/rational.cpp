#include "ramanujan/rational.hpp"

#include <stdexcept>

namespace ramanujan {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  std::string num_str(num_text);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Integer num(num_str, 10);
  if (slash == std::string_view::npos) return Rational(num);

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text, false)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  return make_rational(num, Integer(std::string(den_text), 10));
}

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

}  // namespace ramanujan
