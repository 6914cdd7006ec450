#pragma once

#include "tropjac/jacobian.hpp"

#include <set>
#include <string>
#include <vector>

namespace tropjac {

struct ZoneGenerator {
  IntVec direction;
  Rational scale;
  std::string edge;
};

using Covector = std::vector<int>;  // entries in {-1, 0, 1}, one per generator

struct Face {
  Covector covector;
  std::vector<std::size_t> vertices;  // indices into Zonotope::vertices
  std::size_t dim = 0;
};

/// Centrally symmetric zonotope sum_i [-scale_i e_i / 2, scale_i e_i / 2].
struct Zonotope {
  std::size_t dim = 0;
  std::vector<ZoneGenerator> generators;
  std::vector<RatVec> vertices;
  std::vector<Covector> vertex_covectors;
  /// faces[k]: faces of codimension k; faces[0] is the zonotope itself.
  std::vector<std::vector<Face>> faces;
  /// Facet normals (cocircuit rays), aligned with faces[1].
  std::vector<IntVec> facet_normals;

  const std::vector<Face>& facets() const { return faces.at(1); }
  /// Exact membership through the support function of every facet normal.
  bool contains(const RatVec& x) const;
  Rational volume() const;
};

/// Generic zonotope from zone generators; zero directions are dropped.
/// Throws WrongRank unless the directions span R^dim.
Zonotope make_zonotope(std::size_t dim, std::vector<ZoneGenerator> generators);

/// Voronoi zonotope of the Jacobian: zone vectors alpha_i e_i over the edges.
Zonotope build_zonotope(const JacobianData& jd);

/// All covectors of the central arrangement e_i^perp, including 0, sorted.
std::vector<Covector> covectors(std::size_t dim, const std::vector<IntVec>& directions);

struct ProjectionCheck {
  Zonotope deleted;           // zonotope of C - e in its own coordinates
  IntMatrix restriction;      // g x (g-1): deleted-curve cycles in the ambient basis
  std::vector<RatVec> image;  // projected vertices of the ambient zonotope
  bool unimodular = false;
  bool matches = false;
};

/// Zonotope of the curve with `edge` deleted, compared against the image of
/// the ambient zonotope under the quotient by the zone of `edge`. Throws
/// BridgeEdge.
ProjectionCheck project_zonotope(const JacobianData& jd, const std::string& edge);

struct ContractionCheck {
  Face face;
  std::size_t codim = 0;
  Zonotope contracted;  // zonotope of C / sub in its own coordinates
  bool unimodular = false;
  bool matches = false;
};

/// The face of the zonotope attached to a connected subcurve of genus k,
/// compared against the zonotope of the contraction. Throws NotASubcurve.
ContractionCheck contraction_face(const JacobianData& jd, const std::set<std::string>& sub);

std::string zonotope_to_json(const Zonotope& z);

}  // namespace tropjac
