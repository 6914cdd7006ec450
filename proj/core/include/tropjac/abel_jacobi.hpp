#pragma once

#include "tropjac/chains.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tropjac {

/// A point of the curve: a vertex, or a point on an edge at `offset` from
/// the tail (0 <= offset <= length).
struct CurvePoint {
  std::string vertex;
  std::string edge;
  Rational offset = 0;
  static CurvePoint at_vertex(std::string v) { return {std::move(v), {}, 0}; }
  static CurvePoint on_edge(std::string e, Rational t) { return {{}, std::move(e), std::move(t)}; }
};

struct Divisor {
  std::vector<std::pair<CurvePoint, Integer>> terms;
  Integer degree() const;
  bool is_effective() const;
};

/// Unreduced lifts of the vertex images: integral of the edge functionals
/// along the tree path from the base point. Indexed like graph().vertices.
std::vector<RatVec> vertex_lifts(const JacobianData& jd);

/// Abel-Jacobi image of a divisor, reduced into the fundamental domain.
RatVec abel_jacobi_point(const JacobianData& jd, const Divisor& d);

/// The framed 1-cycle W_1: one segment per edge of positive length, from the
/// image of the tail in the direction of the edge functional, framed by that
/// (primitive) functional. Returned in canonical form unless `canonical` is
/// false, in which case cells follow the edge file order.
FramedChain w1_cycle(const JacobianData& jd, bool canonical = true);

/// (-1)_* c, canonicalized.
FramedChain negate_cycle(const JacobianData& jd, const FramedChain& c);

/// Sum of length x functional over the edges of fundamental cycle i.
RatVec cycle_displacement(const JacobianData& jd, std::size_t i);

struct WeightedSegment {
  RatVec from, to;
  Integer weight = 1;
};

/// Tautological framing of a balanced rational-slope 1-complex: each segment
/// is framed by weight x its primitive integral direction. Vertices are
/// compared modulo Gamma_1. Throws NotBalanced naming the first unbalanced
/// vertex.
FramedChain frame_cycle(const JacobianData& jd, const std::vector<WeightedSegment>& support);

/// 2-chain of parallelograms (p, p+t, q+t, q), framed like the segment
/// p -> q, with boundary translate(c, t) - c. Throws NotACycle.
FramedChain sweep_chain(const JacobianData& jd, const FramedChain& c, const RatVec& t);

}  // namespace tropjac
