#pragma once

#include "tropjac/cw_complex.hpp"

#include <optional>
#include <vector>

namespace tropjac {

struct BoundaryStats {
  std::size_t unknowns = 0;
  std::size_t unit_pivots = 0;
  std::size_t residual_rows = 0, residual_cols = 0;
};

/// Integer solution x of A x = b for every right-hand side column, with A
/// sparse. Unit pivots are eliminated first (shortest rows first); whatever
/// remains is solved with a Smith normal form. Returns nothing when some
/// right-hand side has no integer solution.
std::optional<std::vector<IntVec>> solve_sparse_integer(const SparseMatrix& a, const std::vector<IntVec>& rhs_rows,
                                                        std::size_t rhs_width,
                                                        BoundaryStats* stats = nullptr);

/// A framed 2-chain gamma on the cells of `cw` with boundary exactly c
/// (checked before returning). Throws UnsupportedChain if c is not carried by
/// the 1-skeleton, NotACycle if c is not closed and NoSolution if c is not
/// a boundary (nonzero homology class).
FramedChain solve_boundary(const CWComplex3& cw, const FramedChain& c, BoundaryStats* stats = nullptr);

}  // namespace tropjac
