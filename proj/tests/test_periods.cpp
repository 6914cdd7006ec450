#include "tropjac/errors.hpp"
#include "tropjac/periods.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

using namespace tropjac;

namespace {

JacobianData symbolic_k4() { return JacobianData(canonical_k4()); }

JacobianData k4_with(std::vector<int> abcdef) {
  std::vector<Length> l;
  for (int x : abcdef) l.emplace_back(Rational(x));
  return JacobianData(canonical_k4(l));
}

std::vector<Poly> parse_all(std::initializer_list<const char*> xs) {
  std::vector<Poly> out;
  for (const char* x : xs) out.push_back(parse_poly(x));
  return out;
}

std::vector<Poly> listed_periods() {
  return parse_all({"a*b+a*d+a*f+b*e+d*e+e*f+b*f+d*f", "a*d+d*e+d*f+e*f", "a*c+a*d+a*e+c*e+d*e+c*f+d*f+e*f",
                    "b*e+d*e+d*f+e*f", "b*c+b*d+b*e+c*d+d*e+c*f+d*f+e*f", "c*f+d*f+e*f+d*e"});
}

std::vector<Poly> symmetric_generators() {
  return parse_all({"a*d-b*e", "a*d-c*f", "d*e+d*f+e*f+a*d", "a*b+a*f+b*f+a*d", "a*c+a*e+c*e+a*d", "b*c+b*d+c*d+a*d"});
}

std::vector<Poly> lambda(const JacobianData& jd, std::size_t j) { return jd.gram_poly().col(j); }

IntVec unit(std::size_t j) {
  IntVec e(3, 0);
  e[j] = 1;
  return e;
}

// Oracle: if every generator owns a monomial that no other generator uses,
// a Z-combination equal to x must use the coefficient of x on that monomial.
// Returns the forced coefficients, or nothing if a private monomial is
// missing for some generator.
std::optional<std::vector<Rational>> forced_coefficients(const std::vector<Poly>& gens, const Poly& x) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::optional<Monomial> priv;
    for (const auto& [m, c] : gens[i].terms()) {
      bool shared = false;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i && gens[j].terms().count(m)) shared = true;
      if (!shared) {
        priv = m;
        break;
      }
    }
    if (!priv) return std::nullopt;
    Rational xc = x.terms().count(*priv) ? x.terms().at(*priv) : Rational(0);
    out.push_back(xc / gens[i].terms().at(*priv));
  }
  return out;
}

}  // namespace

TEST(Omega0, UnitSquare) {
  FramedChain sq{2, {{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, {0, 0, 1}}}};
  EXPECT_EQ(integrate_omega0(sq), Rational(1));
}

TEST(Omega0, FramingInPlaneVanishes) {
  FramedChain sq{2, {{{{0, 0, 0}, {2, 1, 0}, {2, 1, 3}, {0, 0, 3}}, {2, 1, 5}}}};
  EXPECT_EQ(integrate_omega0(sq), Rational(0));
}

TEST(Omega0, WrongGenus) {
  FramedChain sq{2, {{{{0, 0}, {1, 0}, {1, 1}}, {1, 0}}}};
  EXPECT_THROW(integrate_omega0(sq), WrongGenus);
}

TEST(Omega0, GeneratorToriGiveListedPeriods) {
  JacobianData jd = symbolic_k4();
  std::vector<Poly> zero(3, Poly(0));
  Poly v23 = integrate_omega0({parallelogram(zero, lambda(jd, 1), lambda(jd, 2), unit(0))});
  EXPECT_EQ(v23, parse_poly("b*c+b*d+b*e+c*d+d*e+c*f+d*f+e*f"));
  Poly v12 = integrate_omega0({parallelogram(zero, lambda(jd, 0), lambda(jd, 1), unit(2))});
  EXPECT_EQ(v12, parse_poly("a*b+a*d+a*f+b*e+d*e+e*f+b*f+d*f"));
}

TEST(Omega0, AllNinePeriodsAreCofactors) {
  JacobianData jd = symbolic_k4();
  std::vector<Poly> zero(3, Poly(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Poly v = integrate_omega0({parallelogram(zero, lambda(jd, (i + 1) % 3), lambda(jd, (i + 2) % 3), unit(j))});
      EXPECT_EQ(v, cofactor(jd.gram_poly(), i, j)) << i << "," << j;
    }
}

TEST(PeriodGenerators, SymbolicMatchesListedPolynomials) {
  std::vector<Poly> got = period_generators(symbolic_k4()).poly_generators;
  std::vector<Poly> want = listed_periods();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(PeriodGenerators, SymmetricSetSpansSameModule) {
  EXPECT_TRUE(same_span(listed_periods(), symmetric_generators()));
  EXPECT_FALSE(same_span(listed_periods(), parse_all({"a*d", "b*e"})));
}

TEST(PeriodGenerators, UnitLengths) {
  PeriodLattice l = period_generators(k4_with({1, 1, 1, 1, 1, 1}));
  std::vector<Rational> g = l.generators;
  std::sort(g.begin(), g.end());
  EXPECT_EQ(g, (std::vector<Rational>{4, 4, 4, 8, 8, 8}));
  EXPECT_EQ(l.step(), Rational(4));
  EXPECT_EQ(l.str(), "4");
}

TEST(PeriodGenerators, GenusMustBeThree) {
  MetricGraph loop = parse_curve(R"({"vertices":["1"],"edges":[{"id":"L","from":"1","to":"1","length":"1"}],"basepoint":"1"})");
  EXPECT_THROW(period_generators(JacobianData(loop)), WrongGenus);
}

TEST(Membership, NumericCases) {
  PeriodLattice unit = period_generators(k4_with({1, 1, 1, 1, 1, 1}));
  EXPECT_FALSE(is_member(unit, Rational(1)));
  EXPECT_TRUE(is_member(unit, Rational(-8)));
  PeriodLattice skew = period_generators(k4_with({2, 1, 1, 1, 1, 1}));
  EXPECT_EQ(skew.step(), Rational(1));
  EXPECT_TRUE(is_member(skew, Rational(2)));
}

TEST(Membership, FractionalLattice) {
  PeriodLattice l = numeric_lattice({Rational(3, 4), Rational(1, 2)});
  EXPECT_EQ(l.step(), Rational(1, 4));
  EXPECT_TRUE(is_member(l, Rational(5, 4)));
  EXPECT_FALSE(is_member(l, Rational(1, 8)));
}

TEST(Membership, SymbolicAdIsNotAPeriod) {
  PeriodLattice l = period_generators(symbolic_k4());
  Poly ad = parse_poly("a*d");
  EXPECT_FALSE(is_member(l, ad));
  EXPECT_FALSE(is_member(l, -ad));
  EXPECT_TRUE(is_member(l, parse_poly("a*d-b*e")));
  EXPECT_TRUE(is_member(l, parse_poly("2*a*d+2*d*e+2*d*f+2*e*f")));
  // oracle: private monomials force every coefficient, and they are all 0
  auto forced = forced_coefficients(symmetric_generators(), ad);
  ASSERT_TRUE(forced.has_value());
  Poly combo;
  for (std::size_t i = 0; i < forced->size(); ++i) combo += Poly((*forced)[i]) * symmetric_generators()[i];
  EXPECT_NE(combo, ad);
}

TEST(Residue, NumericSymmetricClass) {
  PeriodLattice l = numeric_lattice({Rational(4)});
  EXPECT_EQ(residue(l, Rational(1)), Rational(1));
  EXPECT_EQ(residue(l, Rational(-1)), Rational(1));
  EXPECT_EQ(residue(l, Rational(7)), Rational(1));
  EXPECT_EQ(residue(l, Rational(8)), Rational(0));
  EXPECT_EQ(residue(l, Rational(2)), Rational(2));
  EXPECT_EQ(residue(numeric_lattice({Rational(0)}), Rational(-3)), Rational(3));
}

TEST(Residue, SymbolicAdUpToSign) {
  PeriodLattice l = period_generators(symbolic_k4());
  Poly ad = parse_poly("a*d");
  EXPECT_EQ(residue(l, ad), ad);
  EXPECT_EQ(residue(l, -ad), ad);
  EXPECT_EQ(residue(l, parse_poly("b*e")), ad);
  EXPECT_EQ(residue(l, parse_poly("-c*f")), ad);
  EXPECT_EQ(residue(l, parse_poly("a*d-b*e")), Poly(0));
}
