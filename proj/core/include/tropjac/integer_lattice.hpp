#pragma once

#include "tropjac/matrix.hpp"

#include <optional>

namespace tropjac {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix U, D, V;
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Some integer x with A x = b, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `generators`. Pivot columns are taken in the order given by `column_order`
/// (the first listed column is eliminated first); rows are nonzero, pivots
/// positive, and entries of other rows in a pivot column are reduced into
/// [0, pivot).
struct HermiteBasis {
  std::vector<IntVec> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> column_order;
};
HermiteBasis hermite_basis(const std::vector<IntVec>& generators, std::vector<std::size_t> column_order = {});

/// Canonical representative of v modulo the lattice: pivot coordinates end up
/// in [0, pivot). Two vectors are congruent iff their reductions agree.
IntVec reduce_modulo(const HermiteBasis& h, IntVec v);

/// Unimodular M with M * w = e_1, for primitive w.
IntMatrix unimodular_completion(const IntVec& w);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace tropjac
