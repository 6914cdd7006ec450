#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace tropjac {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else
/// (decimals and exponents are rejected).
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor_div(const Rational& r);
Rational frac(const Rational& r);  // r - floor(r), in [0,1)

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

RatVec to_rational(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_integer(const RatVec& v);  // requires is_integral

/// Primitive integer vector on the ray through a nonzero rational vector,
/// together with the positive scale s such that v = s * primitive.
struct PrimitiveDirection {
  IntVec direction;
  Rational scale;
};
PrimitiveDirection primitive_direction(const RatVec& v);

bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

/// Sign of the first nonzero entry (0 for the zero vector).
int leading_sign(const RatVec& v);
int leading_sign(const IntVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rational& s, const RatVec& a);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Integer& s, const IntVec& a);
Rational dot(const RatVec& a, const RatVec& b);

std::vector<std::string> to_strings(const RatVec& v);
std::vector<std::string> to_strings(const IntVec& v);

}  // namespace tropjac
