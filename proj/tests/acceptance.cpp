// One line per acceptance criterion; exit status is the number of failures.

#include "tropjac/abel_jacobi.hpp"
#include "tropjac/boundary_solver.hpp"
#include "tropjac/ceresa.hpp"
#include "tropjac/errors.hpp"
#include "tropjac/periods.hpp"
#include "tropjac/zonotope.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace tropjac;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("failed: ") + what;
  }
}

void note(Outcome& o, const std::string& what) { o.detail += (o.detail.empty() ? "" : "; ") + what; }

std::string data(const std::string& name) { return std::string(TROPJAC_TEST_DATA) + "/" + name; }

Poly var(const char* n) { return Poly::variable(n); }

std::vector<Poly> polys(std::initializer_list<const char*> xs) {
  std::vector<Poly> out;
  for (const char* x : xs) out.push_back(parse_poly(x));
  return out;
}

MetricGraph k4_numeric(const std::vector<Rational>& abcdef) {
  std::vector<Length> l(abcdef.begin(), abcdef.end());
  return canonical_k4(l);
}

CeresaOptions numeric_only() {
  CeresaOptions o;
  o.symbolic = false;
  return o;
}

// 2x2 minor of a symmetric 3x3 polynomial matrix, signed like a cofactor
Poly cofactor_oracle(const PolyMatrix& q, std::size_t i, std::size_t j) {
  std::size_t r[2], c[2];
  for (std::size_t k = 0, n = 0; k < 3; ++k)
    if (k != i) r[n++] = k;
  for (std::size_t k = 0, n = 0; k < 3; ++k)
    if (k != j) c[n++] = k;
  Poly m = q(r[0], c[0]) * q(r[1], c[1]) - q(r[0], c[1]) * q(r[1], c[0]);
  return (i + j) % 2 == 0 ? m : Poly(0) - m;
}

// x in the Q-span of gens? Linear algebra on monomial coefficients.
bool in_rational_span(const std::vector<Poly>& gens, const Poly& x) {
  std::set<Monomial> monos;
  for (const auto& g : gens)
    for (const auto& [m, c] : g.terms()) monos.insert(m);
  for (const auto& [m, c] : x.terms()) monos.insert(m);
  std::vector<Monomial> ms(monos.begin(), monos.end());
  auto build = [&](bool with_x) {
    RatMatrix a(ms.size(), gens.size() + (with_x ? 1 : 0));
    for (std::size_t r = 0; r < ms.size(); ++r) {
      for (std::size_t k = 0; k < gens.size(); ++k)
        a(r, k) = gens[k].terms().count(ms[r]) ? gens[k].terms().at(ms[r]) : Rational(0);
      if (with_x) a(r, gens.size()) = x.terms().count(ms[r]) ? x.terms().at(ms[r]) : Rational(0);
    }
    return a;
  };
  return rank(build(false)) == rank(build(true));
}

Outcome gram_identity() {
  Outcome o;
  Poly a = var("a"), b = var("b"), c = var("c"), d = var("d"), e = var("e"), f = var("f");
  PolyMatrix displayed = PolyMatrix::from_rows({{a + e + f, -f, -e}, {-f, b + d + f, -d}, {-e, -d, c + d + e}});
  require(o, JacobianData(canonical_k4()).gram_poly() == displayed, "symbolic Gram matrix differs from the displayed matrix");
  return o;
}

Outcome period_polynomials_match() {
  Outcome o;
  std::vector<Poly> listed = polys({"a*b+a*d+a*f+b*e+d*e+e*f+b*f+d*f", "a*d+d*e+d*f+e*f", "a*c+a*d+a*e+c*e+d*e+c*f+d*f+e*f",
                                    "b*e+d*e+d*f+e*f", "b*c+b*d+b*e+c*d+d*e+c*f+d*f+e*f", "c*f+d*f+e*f+d*e"});
  std::vector<Poly> symmetric = polys({"a*d-b*e", "a*d-c*f", "d*e+d*f+e*f+a*d", "a*b+a*f+b*f+a*d", "a*c+a*e+c*e+a*d",
                                       "b*c+b*d+c*d+a*d"});
  PeriodLattice l = period_generators(JacobianData(canonical_k4()));
  require(o, l.symbolic, "lattice is not symbolic");
  std::set<Poly> mine(l.poly_generators.begin(), l.poly_generators.end());
  require(o, mine == std::set<Poly>(listed.begin(), listed.end()), "generator set differs from the listed six");
  require(o, same_span(l.poly_generators, symmetric), "Z-span differs from the symmetric generators");
  return o;
}

Outcome period_minor_duality() {
  Outcome o;
  JacobianData jd(canonical_k4());
  const PolyMatrix& q = jd.gram_poly();
  std::vector<Poly> origin(3, Poly(0));
  int matched = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      IntVec ej(3, 0);
      ej[j] = 1;
      Poly integral =
          integrate_omega0(std::vector<PolyCell>{parallelogram(origin, q.col((i + 1) % 3), q.col((i + 2) % 3), ej)});
      if (integral == cofactor_oracle(q, i, j)) ++matched;
      else require(o, false, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  note(o, std::to_string(matched) + "/9 pairs");
  return o;
}

Outcome symbolic_nonmembership() {
  Outcome o;
  JacobianData jd(canonical_k4());
  PeriodLattice l = period_generators(jd);
  Poly ad = var("a") * var("d");
  require(o, !is_member(l, ad), "a*d reported as a period");
  require(o, !in_rational_span(l.poly_generators, ad), "a*d lies in the rational span (oracle)");
  require(o, is_member(l, parse_poly("a*d-b*e")), "control a*d-b*e is not a period");
  SymbolicCeresa s = symbolic_ceresa(jd);
  require(o, s.residue == ad || s.residue == Poly(0) - ad, "symbolic invariant is not +-a*d");
  require(o, !s.in_lattice, "symbolic invariant reported as a period");
  note(o, "invariant " + s.residue.str());
  return o;
}

Outcome dicing() {
  Outcome o;
  JacobianData jd(canonical_k4());
  DicingReport r = check_dicing(jd);
  require(o, r.totally_unimodular, "functional system is not totally unimodular");
  require(o, r.gram_identity, "library Gram identity check failed");
  // oracle: exhaustive minors of the 6 x 3 functional matrix, and sum alpha_i e_i e_i^T
  std::vector<IntVec> rows;
  for (const auto& f : jd.functionals()) rows.push_back(f.coords);
  int bad = 0;
  for (unsigned rmask = 1; rmask < 64; ++rmask)
    for (unsigned cmask = 1; cmask < 8; ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::vector<std::size_t> rs, cs;
      for (std::size_t i = 0; i < 6; ++i)
        if (rmask >> i & 1) rs.push_back(i);
      for (std::size_t j = 0; j < 3; ++j)
        if (cmask >> j & 1) cs.push_back(j);
      IntMatrix m(rs.size(), cs.size());
      for (std::size_t x = 0; x < rs.size(); ++x)
        for (std::size_t y = 0; y < cs.size(); ++y) m(x, y) = rows[rs[x]][cs[y]];
      Integer d = determinant(m);
      if (d > 1 || d < -1) ++bad;
    }
  require(o, bad == 0, std::to_string(bad) + " minors outside {0,+-1}");
  PolyMatrix sum(3, 3);
  const MetricGraph& g = jd.graph();
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        sum(i, j) += Poly(Rational(rows[e][i] * rows[e][j])) * g.edges[e].length.poly();
  require(o, sum == jd.gram_poly(), "Q != sum alpha_i e_i^2");
  return o;
}

Outcome unit_k4_invariant() {
  Outcome o;
  CeresaReport r = ceresa_report(k4_numeric(std::vector<Rational>(6, Rational(1))), numeric_only());
  require(o, r.numeric.has_value(), "no numeric result");
  if (!r.numeric) return o;
  const CeresaResult& n = *r.numeric;
  require(o, n.lattice.step() == Rational(4), "lattice is " + n.lattice.str() + ", expected 4");
  require(o, n.residue == Rational(1), "residue " + to_string(n.residue) + ", expected +-1");
  require(o, r.verdict == kCertified, "verdict " + r.verdict);
  require(o, n.routes_agree, "CW and cone integrals differ modulo periods");
  note(o, "integral " + to_string(n.integral) + ", residue " + to_string(n.residue) + " mod " + n.lattice.str() + ", " +
              std::to_string(n.cw_cells) + " 3-cells");
  return o;
}

Outcome degenerations() {
  Outcome o;
  CeresaReport collapsed = ceresa_report(k4_numeric({0, 1, 1, 1, 1, 1}), numeric_only());
  require(o, collapsed.numeric && collapsed.numeric->residue == 0, "a = 0 residue is not 0");
  require(o, collapsed.verdict == kInconclusive, "a = 0 verdict " + collapsed.verdict);

  MetricGraph h = load_curve(data("doubled_4cycle.json"));
  std::mt19937 rng(20240611);
  const Rational pool[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  std::string lengths;
  for (auto& e : h.edges) {
    e.length = Length(pool[rng() % 4]);
    lengths += (lengths.empty() ? "" : ",") + e.length.str();
  }
  CeresaReport hyper = ceresa_report(h, numeric_only());
  require(o, hyper.type == "H1", "doubled 4-cycle classified as " + hyper.type);
  require(o, hyper.numeric && hyper.numeric->residue == 0, "hyperelliptic residue is not 0");
  require(o, hyper.verdict == kInconclusive, "hyperelliptic verdict " + hyper.verdict);
  SymbolicCeresa sym = symbolic_ceresa(JacobianData(symbolic_companion(h)));
  require(o, sym.residue.is_zero(), "symbolic hyperelliptic invariant " + sym.residue.str());
  note(o, "lengths (" + lengths + "), " + (hyper.numeric ? std::to_string(hyper.numeric->cw_cells) : "0") + " 3-cells");
  return o;
}

Outcome higher_genus() {
  Outcome o;
  CeresaReport r = ceresa_report(load_curve(data("genus4_k4_doubled.json")), numeric_only());
  require(o, r.genus == 4, "genus " + std::to_string(r.genus));
  require(o, r.k_range == std::make_pair(1, 2), "k range");
  require(o, r.verdict == kCertified, "verdict " + r.verdict);
  require(o, r.core_edges.size() == 6, "K4 core has " + std::to_string(r.core_edges.size()) + " edges");
  if (r.numeric) note(o, "core residue " + to_string(r.numeric->residue) + " mod " + r.numeric->lattice.str());
  return o;
}

Rational small_rational(std::mt19937& rng) {
  return Rational(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 4) + 1);
}

Outcome chain_calculus() {
  Outcome o;
  JacobianData unit(k4_numeric(std::vector<Rational>(6, Rational(1))));
  Torus torus(unit);
  std::mt19937 rng(1729);

  int dd_fail = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    FramedChain c{2, {}};
    std::size_t cells = 1 + rng() % 4;
    for (std::size_t k = 0; k < cells; ++k) {
      std::vector<RatVec> verts;
      std::size_t nv = 3 + rng() % 2;
      RatVec base{small_rational(rng), small_rational(rng), small_rational(rng)};
      RatVec u{small_rational(rng), small_rational(rng), small_rational(rng)};
      RatVec v{small_rational(rng), small_rational(rng), small_rational(rng)};
      if (is_zero(area_bivector({base, base + u, base + u + v}))) continue;
      verts = {base, base + u, base + u + v};
      if (nv == 4) verts.push_back(base + v);
      IntVec beta{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3};
      c.cells.push_back({verts, beta});
    }
    if (!boundary(torus, boundary(torus, c)).empty()) ++dd_fail;
  }
  require(o, dd_fail == 0, std::to_string(dd_fail) + "/1000 chains with nonzero boundary of boundary");

  FramedChain diff = ceresa_difference(unit, alignment_translation(unit, "C"));
  CWComplex3 cw = build_cw(unit, segments_of(diff));
  Torus cw_torus(cw.q);
  int round_fail = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVec> coeff(cw.faces.size(), IntVec(3, 0));
    std::size_t nz = 1 + rng() % 12;
    for (std::size_t k = 0; k < nz; ++k)
      for (auto& x : coeff[rng() % coeff.size()]) x += static_cast<long>(rng() % 5) - 2;
    FramedChain c = boundary(cw_torus, face_chain(cw, coeff));
    try {
      FramedChain gamma = solve_boundary(cw, c);
      if (!same_chain(cw_torus, boundary(cw_torus, gamma), c)) ++round_fail;
    } catch (const Error&) {
      ++round_fail;
    }
  }
  require(o, round_fail == 0, std::to_string(round_fail) + "/100 boundary round trips failed");

  JacobianData generic(k4_numeric({Rational(3, 2), 2, Rational(5, 4), 1, Rational(7, 3), Rational(1, 2)}));
  Torus gt(generic);
  FramedChain w1 = w1_cycle(generic);
  int sweep_fail = 0;
  for (int trial = 0; trial < 20; ++trial) {
    RatVec t{small_rational(rng), small_rational(rng), small_rational(rng)};
    FramedChain s = sweep_chain(generic, w1, t);
    if (!same_chain(gt, boundary(gt, s), translate(w1, t) - w1)) ++sweep_fail;
  }
  require(o, sweep_fail == 0, std::to_string(sweep_fail) + "/20 sweep identities failed");
  note(o, "1000 dd, 100 round trips on " + std::to_string(cw.cells.size()) + " 3-cells, 20 sweeps");
  return o;
}

Outcome well_definedness() {
  Outcome o;
  MetricGraph g = k4_numeric(std::vector<Rational>(6, Rational(1)));
  JacobianData jd(g);
  CeresaResult base = ceresa_invariant(jd, numeric_only());
  require(o, base.routes_agree, "CW and cone routes differ modulo periods");
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 2; ++trial) {
    CeresaOptions opt = numeric_only();
    opt.extra_shift = {Rational(static_cast<long>(rng() % 4), 4), Rational(static_cast<long>(rng() % 4), 4),
                       Rational(static_cast<long>(rng() % 4), 4)};
    CeresaResult r = ceresa_invariant(jd, opt);
    require(o, r.residue == base.residue, "shifted alignment residue " + to_string(r.residue));
    require(o, r.routes_agree, "shifted alignment routes differ");
  }
  CeresaResult other = ceresa_invariant(JacobianData(g, cycle_basis(g, {"A", "B", "D"})), numeric_only());
  require(o, other.residue == base.residue, "spanning tree {A,B,D} residue " + to_string(other.residue));
  require(o, other.lattice.step() == base.lattice.step(), "spanning tree {A,B,D} lattice " + other.lattice.str());
  note(o, "residue " + to_string(base.residue) + " mod " + base.lattice.str() + " in all runs");
  return o;
}

using P3 = std::array<long, 3>;

P3 sub3(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross3(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
long dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// brute-force hull of the doubled signed sums of integer zone vectors
std::pair<std::size_t, std::size_t> hull_counts(const std::vector<P3>& gens) {
  std::set<P3> pts;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    P3 p{0, 0, 0};
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (int k = 0; k < 3; ++k) p[k] += (mask >> i & 1) ? gens[i][k] : -gens[i][k];
    pts.insert(p);
  }
  std::vector<P3> v(pts.begin(), pts.end());
  std::set<std::pair<P3, long>> facets;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      for (std::size_t c = b + 1; c < v.size(); ++c) {
        P3 n = cross3(sub3(v[b], v[a]), sub3(v[c], v[a]));
        if (n == P3{0, 0, 0}) continue;
        long g = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
        for (auto& x : n) x /= g;
        long off = dot3(n, v[a]);
        bool above = false, below = false;
        for (const auto& p : v) {
          above |= dot3(n, p) > off;
          below |= dot3(n, p) < off;
        }
        if (above && below) continue;
        if (above) {
          for (auto& x : n) x = -x;
          off = -off;
        }
        facets.insert({n, off});
      }
  std::size_t vertices = 0;
  for (const auto& p : v) {
    std::vector<P3> normals;
    for (const auto& [n, off] : facets)
      if (dot3(n, p) == off) normals.push_back(n);
    bool spans = false;
    for (std::size_t i = 0; i < normals.size() && !spans; ++i)
      for (std::size_t j = i + 1; j < normals.size() && !spans; ++j)
        for (std::size_t k = j + 1; k < normals.size() && !spans; ++k)
          spans = dot3(cross3(normals[i], normals[j]), normals[k]) != 0;
    vertices += spans;
  }
  return {vertices, facets.size()};
}

Outcome zonotope_structure() {
  Outcome o;
  JacobianData jd(k4_numeric(std::vector<Rational>(6, Rational(1))));
  Zonotope z = build_zonotope(jd);
  require(o, z.vertices.size() == 24, std::to_string(z.vertices.size()) + " vertices");
  require(o, z.facets().size() == 14, std::to_string(z.facets().size()) + " facets");
  std::vector<P3> gens;
  for (const auto& g : z.generators)
    gens.push_back({g.direction[0].convert_to<long>(), g.direction[1].convert_to<long>(), g.direction[2].convert_to<long>()});
  auto [hv, hf] = hull_counts(gens);
  require(o, hv == 24 && hf == 14, "hull oracle gives " + std::to_string(hv) + " vertices, " + std::to_string(hf) + " facets");
  ProjectionCheck p = project_zonotope(jd, "A");
  require(o, p.matches, "projection along e_A does not match Z(K4 - A)");
  ContractionCheck c = contraction_face(jd, {"A", "E", "F"});
  require(o, c.codim == 1 && c.matches, "triangle contraction does not give a matching facet");
  note(o, "24/14 by covectors and hull; projection and contraction verified");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Gram matrix identity", 1, gram_identity},
      {2, "period polynomials", 1, period_polynomials_match},
      {3, "period/minor duality", 1, period_minor_duality},
      {4, "Ceresa invariant, unit K4", 60, unit_k4_invariant},
      {5, "Ceresa invariant, symbolic", 1, symbolic_nonmembership},
      {6, "degenerations", 120, degenerations},
      {7, "higher genus via K4 core", 60, higher_genus},
      {8, "chain calculus", 60, chain_calculus},
      {9, "well-definedness and basis independence", 120, well_definedness},
      {10, "zonotope structure", 30, zonotope_structure},
      {11, "dicing", 10, dicing},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_seconds) {
      o.ok = false;
      note(o, "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit");
    }
    failures += !o.ok;
    std::printf("%s  %2d  %-42s %7.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
