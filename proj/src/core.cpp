#include "succmin/core.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace succmin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(s.substr(0, slash), text);
  Integer den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw InvalidInput("zero denominator in rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Integer gcd(const Integer& a, const Integer& b) { return bmp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return bmp::abs(a / bmp::gcd(a, b) * b);
}

Integer round_to_integer(const Real& x) {
  Real r = bmp::round(x);
  Integer out;
  mpfr_get_z(out.backend().data(), r.backend().data(), MPFR_RNDN);
  return out;
}

Integer floor_rational(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Real to_real(const Rational& q) { return Real(numerator(q)) / Real(denominator(q)); }

Real to_real(const Integer& z) { return Real(z); }

Real pi_real() { return bmp::acos(Real(-1)); }

Real unit_ball_volume(int n) {
  Real half_n = Real(n) / 2;
  return bmp::pow(pi_real(), half_n) / bmp::tgamma(half_n + 1);
}

}  // namespace succmin
