#pragma once

#include "tropjac/curve.hpp"
#include "tropjac/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropjac {

/// Coordinates of the evaluation functional of an edge in the cotree basis
/// of Gamma_2. Zero exactly for bridges.
struct EdgeFunctional {
  std::string edge;
  IntVec coords;
};

std::vector<EdgeFunctional> edge_functionals(const MetricGraph& g, const CycleBasis& basis);

/// B * diag(lengths) * B^T, entries as polynomials (constants when numeric).
PolyMatrix gram_matrix_poly(const MetricGraph& g, const CycleBasis& basis);
/// Numeric Gram matrix; throws ValidationError on symbolic lengths.
RatMatrix gram_matrix(const MetricGraph& g, const CycleBasis& basis);

bool is_positive_definite(const RatMatrix& q);

/// Polarized lattice data of the Jacobian in the cotree chart V = R^g.
class JacobianData {
 public:
  JacobianData(MetricGraph g, CycleBasis basis);
  explicit JacobianData(const MetricGraph& g);

  const MetricGraph& graph() const { return graph_; }
  const CycleBasis& basis() const { return basis_; }
  std::size_t genus() const { return basis_.genus(); }
  bool is_symbolic() const { return !q_.has_value(); }

  const PolyMatrix& gram_poly() const { return gram_poly_; }
  const RatMatrix& gram() const;               // ValidationError when symbolic
  const RatMatrix& gram_inverse() const;       // SingularLattice when det Q = 0
  const std::vector<EdgeFunctional>& functionals() const { return functionals_; }
  const EdgeFunctional& functional(const std::string& edge) const;
  /// g x m matrix whose columns are the edge functionals (file order).
  const IntMatrix& functional_matrix() const { return basis_.cycles; }

  /// Coordinates of p in the basis lambda_1..lambda_g (Q^{-1} p).
  RatVec lambda_coords(const RatVec& p) const;
  RatVec from_lambda_coords(const RatVec& c) const;

 private:
  MetricGraph graph_;
  CycleBasis basis_;
  PolyMatrix gram_poly_;
  std::optional<RatMatrix> q_;
  std::optional<RatMatrix> q_inv_;
  std::vector<EdgeFunctional> functionals_;
};

/// lambda_j = column j of Q. Throws SingularLattice if det Q = 0.
std::vector<RatVec> lattice_basis(const JacobianData& jd);
std::vector<std::vector<Poly>> lattice_basis_poly(const JacobianData& jd);

struct DicingReport {
  bool totally_unimodular = true;
  /// Offending square submatrix when not totally unimodular.
  std::vector<std::size_t> witness_rows, witness_cols;
  Integer witness_det = 0;
  bool gram_identity = true;
  bool passed() const { return totally_unimodular && gram_identity; }
};

/// Exhaustive check that every square submatrix has determinant in {0, +-1}.
DicingReport check_total_unimodularity(const IntMatrix& m);
/// Total unimodularity of the functionals plus Q = sum alpha_i e_i e_i^T
/// (checked as a polynomial identity).
DicingReport check_dicing(const JacobianData& jd);

/// Representative of p modulo Gamma_1 in the half-open parallelepiped
/// { sum t_j lambda_j : 0 <= t_j < 1 }.
RatVec reduce_point(const JacobianData& jd, const RatVec& p);

}  // namespace tropjac
