#include "holo/rational.hpp"

#include <cctype>

#include "holo/error.hpp"

namespace holo {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  Integer num, den = 1;
  bool ok;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, num);
  } else {
    std::string_view d = text.substr(slash + 1);
    ok = parse_integer(text.substr(0, slash), num) && !d.empty() && d[0] != '+' && d[0] != '-' &&
         parse_integer(d, den);
  }
  if (!ok) throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

Rational rising_factorial(const Rational& a, long n) {
  Rational acc = 1;
  for (long k = 0; k < n; ++k) acc *= a + k;
  return acc;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace holo
