#include "tropjac/periods.hpp"

#include "tropjac/errors.hpp"
#include "tropjac/integer_lattice.hpp"

#include <algorithm>

namespace tropjac {

namespace {

void require_genus3(std::size_t g) {
  if (g != 3) throw WrongGenus("Omega_0 is defined for genus 3, got " + std::to_string(g));
}

template <typename S>
S det3(const std::vector<S>& u, const std::vector<S>& v, const std::vector<S>& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
}

template <typename S>
std::vector<S> sub(const std::vector<S>& a, const std::vector<S>& b) {
  std::vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Twice the fan integral of one polygon.
template <typename S>
S doubled_cell_integral(const std::vector<std::vector<S>>& verts, const IntVec& framing) {
  std::vector<S> beta;
  for (const auto& b : framing) beta.push_back(S(Rational(b)));
  S total(0);
  for (std::size_t i = 1; i + 1 < verts.size(); ++i)
    total += det3(sub(verts[i], verts[0]), sub(verts[i + 1], verts[0]), beta);
  return total;
}

// Monomial order used for Hermite pivots: compare the variable lists sorted
// in descending order, larger first; lower degrees after higher ones.
std::vector<std::string> descending_vars(const Monomial& m) {
  std::vector<std::string> out;
  for (const auto& [v, e] : m)
    for (unsigned i = 0; i < e; ++i) out.push_back(v);
  std::sort(out.rbegin(), out.rend());
  return out;
}

struct MonomialSpace {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  explicit MonomialSpace(const std::vector<Poly>& polys) {
    std::set<Monomial> all;
    for (const auto& p : polys)
      for (const auto& [m, c] : p.terms()) all.insert(m);
    monomials.assign(all.begin(), all.end());
    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
      auto va = descending_vars(a), vb = descending_vars(b);
      if (va.size() != vb.size()) return va.size() > vb.size();
      return va > vb;
    });
    for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
  }

  IntVec coords(const Poly& p) const {
    IntVec v(monomials.size(), 0);
    for (const auto& [m, c] : p.terms()) {
      if (denominator(c) != 1) throw ValidationError("polynomial " + p.str() + " has non-integer coefficients");
      v[index.at(m)] = numerator(c);
    }
    return v;
  }

  Poly poly(const IntVec& v) const {
    Poly p;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        Poly t(Rational(v[i]));
        for (const auto& [var, e] : monomials[i])
          for (unsigned k = 0; k < e; ++k) t *= Poly::variable(var);
        p += t;
      }
    return p;
  }
};

// Splits x into integer and fractional coefficient parts.
std::pair<Poly, Poly> split_integer_part(const Poly& x) {
  Poly whole, rest;
  for (const auto& [m, c] : x.terms()) {
    Poly mono(1);
    for (const auto& [var, e] : m)
      for (unsigned k = 0; k < e; ++k) mono *= Poly::variable(var);
    Integer fl = floor_div(c);
    whole += Poly(Rational(fl)) * mono;
    rest += Poly(c - Rational(fl)) * mono;
  }
  return {whole, rest};
}

Poly reduce_poly(const std::vector<Poly>& gens, const Poly& x) {
  auto [whole, rest] = split_integer_part(x);
  std::vector<Poly> all = gens;
  all.push_back(whole);
  MonomialSpace space(all);
  std::vector<IntVec> rows;
  for (const auto& g : gens) rows.push_back(space.coords(g));
  if (rows.empty()) return x;
  std::vector<std::size_t> order(space.monomials.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  HermiteBasis h = hermite_basis(rows, order);
  return space.poly(reduce_modulo(h, space.coords(whole))) + rest;
}

}  // namespace

Rational integrate_omega0(const FramedChain& c) {
  if (c.k != 2) throw ValidationError("Omega_0 integrates 2-chains");
  Rational total = 0;
  for (const auto& cell : c.cells) {
    require_genus3(cell.framing.size());
    total += doubled_cell_integral(cell.verts, cell.framing);
  }
  return total / 2;
}

Poly integrate_omega0(const std::vector<PolyCell>& cells) {
  Poly total;
  for (const auto& cell : cells) {
    require_genus3(cell.framing.size());
    total += doubled_cell_integral(cell.verts, cell.framing);
  }
  return total * Poly(Rational(1, 2));
}

PolyCell parallelogram(const std::vector<Poly>& o, const std::vector<Poly>& u, const std::vector<Poly>& v,
                       const IntVec& framing) {
  std::vector<Poly> ou(o.size()), ouv(o.size()), ov(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    ou[i] = o[i] + u[i];
    ouv[i] = ou[i] + v[i];
    ov[i] = o[i] + v[i];
  }
  return {{o, ou, ouv, ov}, framing};
}

std::string PeriodLattice::str() const {
  if (!symbolic) return to_string(step());
  std::string out;
  for (const auto& p : poly_generators) out += (out.empty() ? "" : ", ") + p.str();
  return "<" + out + ">";
}

std::vector<Poly> period_polynomials(const JacobianData& jd) {
  require_genus3(jd.genus());
  PolyMatrix adj = adjugate(jd.gram_poly());
  std::vector<Poly> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) out.push_back(adj(i, j));
  return out;
}

PeriodLattice numeric_lattice(const std::vector<Rational>& generators) {
  PeriodLattice l;
  l.generators = generators;
  for (const auto& x : generators) l.denominator = lcm(l.denominator, denominator(x));
  for (const auto& x : generators) l.gcd = gcd(l.gcd, abs(numerator(x * Rational(l.denominator))));
  Rational s = l.step();
  if (l.gcd != 0) {
    l.gcd = numerator(s);
    l.denominator = denominator(s);
  } else {
    l.denominator = 1;
  }
  return l;
}

PeriodLattice symbolic_lattice(const std::vector<Poly>& generators) {
  PeriodLattice l;
  l.symbolic = true;
  l.poly_generators = generators;
  return l;
}

PeriodLattice period_generators(const JacobianData& jd) {
  std::vector<Poly> polys = period_polynomials(jd);
  if (jd.is_symbolic()) return symbolic_lattice(polys);
  std::vector<Rational> values;
  for (const auto& p : polys) values.push_back(p.constant_term());
  return numeric_lattice(values);
}

bool is_member(const PeriodLattice& l, const Rational& x) {
  if (l.gcd == 0) return x == 0;
  return denominator(x / l.step()) == 1;
}

bool is_member(const PeriodLattice& l, const Poly& x) {
  if (!x.has_integer_coefficients()) return false;
  std::vector<Poly> all = l.poly_generators;
  all.push_back(x);
  MonomialSpace space(all);
  IntMatrix a(space.monomials.size(), l.poly_generators.size());
  for (std::size_t j = 0; j < l.poly_generators.size(); ++j) {
    IntVec c = space.coords(l.poly_generators[j]);
    for (std::size_t i = 0; i < c.size(); ++i) a(i, j) = c[i];
  }
  if (l.poly_generators.empty()) return x.is_zero();
  return solve_integer(a, space.coords(x)).has_value();
}

Rational residue(const PeriodLattice& l, const Rational& x) {
  if (l.gcd == 0) return abs(x);
  Rational step = l.step();
  Rational r = x - Rational(floor_div(x / step)) * step;
  return std::min(r, step - r == step ? Rational(0) : step - r);
}

Poly residue(const PeriodLattice& l, const Poly& x) {
  Poly a = reduce_poly(l.poly_generators, x);
  Poly b = reduce_poly(l.poly_generators, -x);
  auto key = [](const Poly& p) {
    std::string s = p.str();
    return std::make_tuple(p.terms().size(), s.rfind('-', 0) == 0, s);
  };
  return key(b) < key(a) ? b : a;
}

bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  PeriodLattice la = symbolic_lattice(a), lb = symbolic_lattice(b);
  return std::all_of(b.begin(), b.end(), [&](const Poly& p) { return is_member(la, p); }) &&
         std::all_of(a.begin(), a.end(), [&](const Poly& p) { return is_member(lb, p); });
}

}  // namespace tropjac
