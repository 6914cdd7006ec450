#include "tropjac/integer_lattice.hpp"

#include "tropjac/errors.hpp"

#include <numeric>
#include <utility>

namespace tropjac {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm s{IntMatrix::identity(rows), a, IntMatrix::identity(cols), 0};
  IntMatrix& D = s.D;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block becomes the pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (D(i, j) != 0 && (pr == rows || abs(D(i, j)) < abs(D(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(D, t, pr);
    swap_rows(s.U, t, pr);
    swap_cols(D, t, pc);
    swap_cols(s.V, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row(D, i, t, q);
        add_row(s.U, i, t, q);
        if (D(i, t) != 0) {
          swap_rows(D, t, i);
          swap_rows(s.U, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col(D, j, t, q);
        add_col(s.V, j, t, q);
        if (D(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(s.V, t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: fold any entry not divisible by the pivot into row t
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (D(i, j) % D(t, t) != 0) {
              add_row(D, t, i, Integer(-1));
              add_row(s.U, t, i, Integer(-1));
              clean = false;
              break;
            }
      }
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.U(t, j) = -s.U(t, j);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  // A x = b  <=>  D (V^-1 x) = U b
  SmithForm s = smith_normal_form(a);
  IntVec ub = s.U * b;
  IntVec y(a.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

HermiteBasis hermite_basis(const std::vector<IntVec>& generators, std::vector<std::size_t> column_order) {
  HermiteBasis h;
  if (generators.empty()) return h;
  const std::size_t n = generators[0].size();
  if (column_order.empty()) {
    column_order.resize(n);
    std::iota(column_order.begin(), column_order.end(), 0);
  }
  h.column_order = column_order;
  std::vector<IntVec> work = generators;
  std::size_t top = 0;
  for (std::size_t c : column_order) {
    // Euclid on column c among rows [top, end)
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t i = top; i < work.size(); ++i)
        if (work[i][c] != 0 && (best == work.size() || abs(work[i][c]) < abs(work[best][c]))) best = i;
      if (best == work.size()) break;
      std::swap(work[top], work[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < work.size(); ++i) {
        if (work[i][c] == 0) continue;
        Integer q = work[i][c] / work[top][c];
        work[i] = work[i] - q * work[top];
        if (work[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (top < work.size() && work[top][c] != 0) {
      if (work[top][c] < 0) work[top] = -work[top];
      h.pivots.push_back(c);
      ++top;
    }
  }
  work.resize(top);
  h.rows = work;
  // reduce entries above pivots
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    std::size_t c = h.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      Integer q = floor_div(Rational(h.rows[i][c], h.rows[k][c]));
      if (q != 0) h.rows[i] = h.rows[i] - q * h.rows[k];
    }
  }
  return h;
}

IntVec reduce_modulo(const HermiteBasis& h, IntVec v) {
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    std::size_t c = h.pivots[k];
    Integer q = floor_div(Rational(v[c], h.rows[k][c]));
    if (q != 0) v = v - q * h.rows[k];
  }
  return v;
}

IntMatrix unimodular_completion(const IntVec& w) {
  const std::size_t n = w.size();
  IntMatrix m = IntMatrix::identity(n);
  IntVec v = w;
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0 && (piv == n || abs(v[i]) < abs(v[piv]))) piv = i;
    if (piv == n) throw ValidationError("unimodular completion of the zero vector");
    bool single = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || v[j] == 0) continue;
      Integer q = v[j] / v[piv];
      v[j] -= q * v[piv];
      add_row(m, j, piv, q);
      if (v[j] != 0) single = false;
    }
    if (single) {
      if (abs(v[piv]) != 1) throw ValidationError("vector is not primitive");
      swap_rows(m, 0, piv);
      std::swap(v[0], v[piv]);
      if (v[0] < 0)
        for (std::size_t j = 0; j < n; ++j) m(0, j) = -m(0, j);
      return m;
    }
  }
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rational(m));
  return inv.map<Integer>([](const Rational& x) {
    if (denominator(x) != 1) throw ValidationError("matrix is not unimodular");
    return numerator(x);
  });
}

}  // namespace tropjac
