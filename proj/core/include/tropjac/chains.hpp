#pragma once

#include "tropjac/jacobian.hpp"

#include <map>
#include <vector>

namespace tropjac {

/// Oriented rational k-cell (k = 0, 1, 2) lifted to the universal cover V,
/// with a constant coefficient in Gamma_2 = Z^g. A 1-cell is the segment
/// verts[0] -> verts[1]; a 2-cell is a convex planar polygon traversed in
/// vertex order.
struct FramedCell {
  std::vector<RatVec> verts;
  IntVec framing;
  friend bool operator==(const FramedCell&, const FramedCell&) = default;
};

/// Formal sum of framed k-cells, identified modulo Gamma_1.
struct FramedChain {
  int k = 1;
  std::vector<FramedCell> cells;
  bool empty() const { return cells.empty(); }
  std::size_t size() const { return cells.size(); }
  friend bool operator==(const FramedChain&, const FramedChain&) = default;
};

/// Homology class in wedge^k Gamma_1 (x) Gamma_2. For k = 1 the matrix is
/// g x g (rows: lambda basis, columns: cotree basis of Gamma_2); for k = 2
/// it is C(g,2) x g with rows ordered (0,1), (0,2), ..., (g-2,g-1).
struct HomologyClass {
  int k = 1;
  IntMatrix matrix;
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// The torus V / Gamma_1 where Gamma_1 is spanned by the columns of Q.
/// Lattice coordinates of p are Q^{-1} p, so Gamma_1 becomes Z^g there.
class Torus {
 public:
  explicit Torus(const JacobianData& jd);
  explicit Torus(RatMatrix q);
  std::size_t dim() const { return q_.rows(); }
  const RatMatrix& q() const { return q_; }
  RatVec to_lattice(const RatVec& p) const { return q_inv_ * p; }
  RatVec from_lattice(const RatVec& c) const { return q_ * c; }

 private:
  RatMatrix q_, q_inv_;
};

/// Merges overlapping collinear segments (and identical polygons or points)
/// by adding framings, drops zero framings and degenerate cells, and moves
/// each cell so its lexicographically smallest vertex, in lattice
/// coordinates, lies in [0,1)^g. Output cells are sorted. Idempotent.
FramedChain canonicalize(const Torus& torus, const FramedChain& c);
FramedChain canonicalize(const JacobianData& jd, const FramedChain& c);

FramedChain boundary(const Torus& torus, const FramedChain& c);
FramedChain boundary(const JacobianData& jd, const FramedChain& c);

FramedChain translate(const FramedChain& c, const RatVec& t);
/// Pushforward under x -> -x: vertices and framings are negated.
FramedChain negate(const FramedChain& c);
/// Same support with the opposite orientation (framings negated).
FramedChain reverse(const FramedChain& c);
FramedChain operator+(const FramedChain& a, const FramedChain& b);
FramedChain operator-(const FramedChain& a, const FramedChain& b);

bool is_cycle(const Torus& torus, const FramedChain& c);
/// a and b agree as chains on the torus.
bool same_chain(const Torus& torus, const FramedChain& a, const FramedChain& b);

/// Throws NotACycle when the boundary is nonzero and NonIntegralClass when
/// the winding data fails to be integral.
HomologyClass homology_class(const JacobianData& jd, const FramedChain& c);

/// Oriented area bivector of a closed polygon, entries ordered (0,1), (0,2),
/// ..., (g-2,g-1).
RatVec area_bivector(const std::vector<RatVec>& polygon);

/// Position of a segment on its closed geodesic in the torus. Two segments
/// lie on the same geodesic iff their `direction` and `offset` agree;
/// `start` and `start + length` are parameters along the geodesic, which has
/// period 1. `reversed` is set when the segment runs against the normalized
/// direction (first nonzero entry positive).
struct GeodesicSegment {
  IntVec direction;
  RatVec offset;
  Rational start;
  Rational length;
  bool reversed = false;
};
/// `p` and `q` are in lattice coordinates and must differ.
GeodesicSegment locate_on_geodesic(const RatVec& p, const RatVec& q);
/// Lattice coordinates of the point with parameter t on the geodesic
/// (direction, offset); inverse of locate_on_geodesic.
RatVec geodesic_point(const IntVec& direction, const RatVec& offset, const Rational& t);

}  // namespace tropjac
