#include "qpfaff/rational.hpp"

#include <stdexcept>

namespace qpfaff {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  // The mpz pair constructor canonicalizes (lowest terms, positive
  // denominator), unlike the built-in integral pair constructor.
  return Rational(num, den);
}

Rational pow_int(const Rational& base, long exp) {
  Rational b = base;
  if (exp < 0) {
    if (b == 0) throw std::domain_error("0 raised to a negative power");
    b = 1 / b;
    exp = -exp;
  }
  Rational r(1);
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string_view::npos) bad();
  }
  auto check_digits = [&](std::string_view s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad();
  };
  check_digits(num);
  check_digits(den);
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) bad();
  return make_rational(n, d);
}

std::string to_string(const Rational& r) { return r.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace qpfaff
