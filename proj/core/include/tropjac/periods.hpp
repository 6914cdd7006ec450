#pragma once

#include "tropjac/chains.hpp"

#include <string>
#include <vector>

namespace tropjac {

/// Polygon with polynomial vertex coordinates, for symbolic integration.
struct PolyCell {
  std::vector<std::vector<Poly>> verts;
  IntVec framing;
};

/// Integral of the determinantal form Omega_0 = sum e_i^* dx_{i+1} ^ dx_{i+2}
/// over framed 2-cells: each polygon is fanned from its first vertex and the
/// triangle (p0, p1, p2) contributes det[p1 - p0, p2 - p0, beta] / 2.
/// Throws WrongGenus unless g = 3.
Rational integrate_omega0(const FramedChain& c);
Poly integrate_omega0(const std::vector<PolyCell>& cells);

/// Parallelogram with corner `origin` spanned by u then v.
PolyCell parallelogram(const std::vector<Poly>& origin, const std::vector<Poly>& u, const std::vector<Poly>& v,
                       const IntVec& framing);

/// Subgroup of R (numeric) or of Z[lengths] (symbolic) generated by the
/// periods of Omega_0, i.e. the signed 2x2 cofactors M_ij of Q.
struct PeriodLattice {
  bool symbolic = false;
  std::vector<Rational> generators;
  std::vector<Poly> poly_generators;
  /// Numeric normal form: the lattice is (gcd / denominator) Z.
  Integer denominator = 1;
  Integer gcd = 0;
  Rational step() const { return Rational(gcd, denominator); }
  std::string str() const;
};

/// The six cofactors M_ij, i <= j, in row-major order. Throws WrongGenus
/// unless g = 3.
std::vector<Poly> period_polynomials(const JacobianData& jd);
/// Numeric lattice when the lengths are numeric, symbolic otherwise.
PeriodLattice period_generators(const JacobianData& jd);
PeriodLattice numeric_lattice(const std::vector<Rational>& generators);
PeriodLattice symbolic_lattice(const std::vector<Poly>& generators);

bool is_member(const PeriodLattice& lattice, const Rational& x);
/// x is a Z-combination of the generators as a polynomial identity.
bool is_member(const PeriodLattice& lattice, const Poly& x);

/// Canonical representative of the class of +-x modulo the lattice: the
/// smaller of (x mod L) and (L - x mod L); |x| when the lattice is zero.
Rational residue(const PeriodLattice& lattice, const Rational& x);
/// Reduced form of +-x modulo the Z-span of the generators (Hermite
/// reduction over monomial coordinates). Equal for two inputs iff they agree
/// up to sign modulo the lattice.
Poly residue(const PeriodLattice& lattice, const Poly& x);

/// True iff the Z-spans of the two polynomial families agree.
bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace tropjac
