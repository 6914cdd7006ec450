#include "tropjac/numeric.hpp"

#include "tropjac/errors.hpp"

#include <cctype>

namespace tropjac {

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text, true)) throw ParseError("not an exact rational: \"" + text + "\"");
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw ParseError("not an exact rational: \"" + text + "\"");
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(Integer(num), d);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer floor_div(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;  // truncates toward zero
  if (q * d != n && n < 0) q -= 1;
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_div(r)); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (denominator(x) != 1) return false;
  return true;
}

IntVec to_integer(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x));
  return out;
}

PrimitiveDirection primitive_direction(const RatVec& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  IntVec scaled;
  Integer g = 0;
  for (const auto& x : v) {
    scaled.push_back(numerator(x) * (den / denominator(x)));
    g = gcd(g, scaled.back());
  }
  if (g == 0) return {IntVec(v.size(), 0), 0};
  for (auto& x : scaled) x /= g;
  return {scaled, Rational(g, den)};
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

int leading_sign(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0 ? 1 : -1;
  return 0;
}

int leading_sign(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0 ? 1 : -1;
  return 0;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec operator-(const RatVec& a) {
  RatVec out(a);
  for (auto& x : out) x = -x;
  return out;
}

RatVec operator*(const Rational& s, const RatVec& a) {
  RatVec out(a);
  for (auto& x : out) x *= s;
  return out;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a);
  for (auto& x : out) x = -x;
  return out;
}

IntVec operator*(const Integer& s, const IntVec& a) {
  IntVec out(a);
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::string> to_strings(const RatVec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> to_strings(const IntVec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace tropjac
