#include "tropjac/poly.hpp"

#include "tropjac/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tropjac {

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.terms_[Monomial{{name, 1u}}] = 1;
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return denominator(t.second) == 1; });
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw ValidationError("no value for variable " + v);
      for (unsigned k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      out.add_term(m, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) > total_degree(b.first);
  });
  std::string out;
  for (const auto& [m, c] : ordered) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += monomial_string(m);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly p = sum();
    skip();
    if (i_ != s_.size()) fail();
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail() { throw ParseError("malformed polynomial: \"" + s_ + "\""); }

  Poly sum() {
    skip();
    int sign = 1;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      sign = s_[i_] == '-' ? -1 : 1;
      ++i_;
    }
    Poly acc = sign < 0 ? -product() : product();
    for (;;) {
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) return acc;
      bool minus = s_[i_] == '-';
      ++i_;
      Poly t = product();
      acc = minus ? acc - t : acc + t;
    }
  }

  Poly product() {
    Poly acc = factor();
    for (;;) {
      skip();
      if (i_ >= s_.size() || s_[i_] != '*') return acc;
      ++i_;
      acc *= factor();
    }
  }

  Poly factor() {
    skip();
    if (i_ >= s_.size()) fail();
    Poly base;
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/')) ++j;
      base = Poly(parse_rational(s_.substr(i_, j - i_)));
      i_ = j;
    } else if (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      base = Poly::variable(s_.substr(i_, j - i_));
      i_ = j;
    } else if (s_[i_] == '(') {
      ++i_;
      base = sum();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') fail();
      ++i_;
    } else {
      fail();
    }
    skip();
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      skip();
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == i_) fail();
      unsigned e = static_cast<unsigned>(std::stoul(s_.substr(i_, j - i_)));
      i_ = j;
      Poly r = 1;
      for (unsigned k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace tropjac
