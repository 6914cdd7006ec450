#pragma once

#include "tropjac/numeric.hpp"

#include <map>
#include <ostream>
#include <set>
#include <string>

namespace tropjac {

/// Monomial as variable -> exponent (exponents > 0 only).
using Monomial = std::map<std::string, unsigned>;

/// Sparse multivariate polynomial over the rationals with named variables.
/// Symbolic edge lengths and everything derived from them (Gram entries,
/// periods, invariants) live here.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT: numeric literals act as constants
  Poly(const Rational& c);            // NOLINT
  static Poly variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  bool has_integer_coefficients() const;
  std::set<std::string> variables() const;
  unsigned degree() const;

  Rational evaluate(const std::map<std::string, Rational>& values) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  /// Human-readable form, e.g. "a*b + a*d - 2*c^2 + 1". Terms are printed in
  /// graded lexicographic order on the variable names.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Parses the output format of Poly::str (sums of products of integers,
/// rationals and identifiers, with ^ powers). Used by tests and the CLI.
Poly parse_poly(const std::string& text);

std::string monomial_string(const Monomial& m);

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace tropjac
