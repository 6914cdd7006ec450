#include "tropjac/jacobian.hpp"

#include "tropjac/errors.hpp"

#include <algorithm>
#include <functional>

namespace tropjac {

namespace {

bool any_symbolic(const MetricGraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.length.is_symbolic(); });
}

// Calls f on every k-subset of {0..n-1} (lexicographic); stops when f returns false.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<EdgeFunctional> edge_functionals(const MetricGraph& g, const CycleBasis& basis) {
  std::vector<EdgeFunctional> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) out.push_back({g.edges[e].id, basis.cycles.col(e)});
  return out;
}

PolyMatrix gram_matrix_poly(const MetricGraph& g, const CycleBasis& basis) {
  const std::size_t n = basis.genus();
  PolyMatrix q(n, n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Poly len = g.edges[e].length.poly();
    for (std::size_t i = 0; i < n; ++i) {
      if (basis.cycles(i, e) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (basis.cycles(j, e) == 0) continue;
        q(i, j) += Poly(Rational(basis.cycles(i, e) * basis.cycles(j, e))) * len;
      }
    }
  }
  return q;
}

RatMatrix gram_matrix(const MetricGraph& g, const CycleBasis& basis) {
  if (any_symbolic(g)) throw ValidationError("numeric Gram matrix requested for symbolic lengths");
  const std::size_t n = basis.genus();
  RatMatrix q(n, n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Rational& len = g.edges[e].length.rational();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) += Rational(basis.cycles(i, e) * basis.cycles(j, e)) * len;
  }
  return q;
}

bool is_positive_definite(const RatMatrix& q) {
  if (!q.is_symmetric()) return false;
  for (std::size_t k = 1; k <= q.rows(); ++k) {
    RatMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = q(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

JacobianData::JacobianData(MetricGraph g, CycleBasis basis) : graph_(std::move(g)), basis_(std::move(basis)) {
  gram_poly_ = gram_matrix_poly(graph_, basis_);
  functionals_ = edge_functionals(graph_, basis_);
  if (!any_symbolic(graph_)) {
    q_ = gram_matrix(graph_, basis_);
    if (determinant(*q_) != 0) q_inv_ = inverse(*q_);
  }
}

JacobianData::JacobianData(const MetricGraph& g) : JacobianData(g, cycle_basis(g)) {}

const RatMatrix& JacobianData::gram() const {
  if (!q_) throw ValidationError("numeric lengths required");
  return *q_;
}

const RatMatrix& JacobianData::gram_inverse() const {
  if (!q_) throw ValidationError("numeric lengths required");
  if (!q_inv_) throw SingularLattice("det Q = 0: the lattice Gamma_1 is degenerate");
  return *q_inv_;
}

const EdgeFunctional& JacobianData::functional(const std::string& edge) const {
  return functionals_[graph_.edge_index(edge)];
}

RatVec JacobianData::lambda_coords(const RatVec& p) const { return gram_inverse() * p; }

RatVec JacobianData::from_lambda_coords(const RatVec& c) const { return gram() * c; }

std::vector<RatVec> lattice_basis(const JacobianData& jd) {
  jd.gram_inverse();
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < jd.genus(); ++j) out.push_back(jd.gram().col(j));
  return out;
}

std::vector<std::vector<Poly>> lattice_basis_poly(const JacobianData& jd) {
  if (det_expand(jd.gram_poly()).is_zero()) throw SingularLattice("det Q vanishes identically");
  std::vector<std::vector<Poly>> out;
  for (std::size_t j = 0; j < jd.genus(); ++j) out.push_back(jd.gram_poly().col(j));
  return out;
}

DicingReport check_total_unimodularity(const IntMatrix& m) {
  DicingReport report;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax && report.totally_unimodular; ++k) {
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Integer d = determinant(sub);
        if (d == 0 || d == 1 || d == -1) return true;
        report.totally_unimodular = false;
        report.witness_rows = rows;
        report.witness_cols = cols;
        report.witness_det = d;
        return false;
      });
    });
  }
  return report;
}

DicingReport check_dicing(const JacobianData& jd) {
  DicingReport report = check_total_unimodularity(jd.functional_matrix());
  const std::size_t n = jd.genus();
  PolyMatrix sum(n, n);
  for (std::size_t e = 0; e < jd.functionals().size(); ++e) {
    const IntVec& v = jd.functionals()[e].coords;
    const Poly len = jd.graph().edges[e].length.poly();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (v[i] != 0 && v[j] != 0) sum(i, j) += Poly(Rational(v[i] * v[j])) * len;
  }
  report.gram_identity = (sum == jd.gram_poly());
  return report;
}

RatVec reduce_point(const JacobianData& jd, const RatVec& p) {
  RatVec c = jd.lambda_coords(p);
  for (auto& x : c) x = frac(x);
  return jd.from_lambda_coords(c);
}

}  // namespace tropjac
