#pragma once

#include "tropjac/chains.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace tropjac {

/// Sparse integer matrix stored by columns; entries are (row, value).
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
  std::size_t nonzeros() const;
  /// this * other is zero (dimensions must be compatible).
  bool product_is_zero(const SparseMatrix& other) const;
};

struct CWOptions {
  /// Planes through a segment are spanned by its direction and a lattice
  /// direction lambda_j; with this flag the directions of the other input
  /// segments are candidates too, which usually gives sparser arrangements.
  bool use_segment_directions = true;
};

/// Cell structure on the 3-torus V / Gamma_1 cut out by finitely many
/// periodic plane families plus the faces of the fundamental parallelepiped.
/// Geometry is stored in lattice coordinates (Gamma_1 = Z^3): vertices lie in
/// [0,1)^3, every other cell is a lift whose lexicographically smallest
/// vertex lies in [0,1)^3.
struct CWComplex3 {
  RatMatrix q;  // V coordinates = q * lattice coordinates
  std::vector<RatVec> vertices;
  std::vector<std::array<RatVec, 2>> edges;  // oriented from the lex-smaller end
  std::vector<std::vector<RatVec>> faces;    // counterclockwise about face_normals
  std::vector<IntVec> face_normals;          // primitive, first nonzero entry positive
  std::vector<std::vector<RatVec>> cells;    // vertex sets of the 3-cells
  SparseMatrix d1, d2, d3;
  std::size_t plane_families = 0;
  std::size_t plane_instances = 0;
  long euler_characteristic() const;
};

/// Builds a cell structure whose 1-skeleton contains every segment (given in
/// V coordinates). Throws WrongGenus unless g = 3, SingularLattice when
/// det Q = 0 and DegenerateSegment on a zero-length segment.
CWComplex3 build_cw(const JacobianData& jd, const std::vector<std::array<RatVec, 2>>& segments,
                    const CWOptions& options = {});

/// Segments of a framed 1-chain, for build_cw.
std::vector<std::array<RatVec, 2>> segments_of(const FramedChain& c);

/// Coefficient (a Gamma_2 vector) of every 1-cell in the chain. Throws
/// UnsupportedChain unless the chain is carried by the 1-skeleton.
std::vector<IntVec> edge_coefficients(const CWComplex3& cw, const FramedChain& c);

/// The framed chain sum_i coefficients[i] * (2-cell i), in V coordinates.
FramedChain face_chain(const CWComplex3& cw, const std::vector<IntVec>& coefficients);
/// The framed chain sum_i coefficients[i] * (1-cell i), in V coordinates.
FramedChain edge_chain(const CWComplex3& cw, const std::vector<IntVec>& coefficients);

}  // namespace tropjac
