#include "tropjac/boundary_solver.hpp"

#include "tropjac/errors.hpp"
#include "tropjac/integer_lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tropjac {

namespace {

using Row = std::map<std::size_t, Integer>;

struct Elimination {
  std::vector<Row> rows;
  std::vector<IntVec> rhs;
  std::vector<std::set<std::size_t>> col_rows;
  std::vector<bool> row_done;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<Row> pivot_rows;
  std::vector<IntVec> pivot_rhs;

  void axpy(std::size_t target, const Integer& factor, std::size_t source) {
    Row& t = rows[target];
    for (const auto& [c, v] : rows[source]) {
      auto it = t.find(c);
      if (it == t.end()) {
        t.emplace(c, -factor * v);
        col_rows[c].insert(target);
      } else {
        it->second -= factor * v;
        if (it->second == 0) {
          t.erase(it);
          col_rows[c].erase(target);
        }
      }
    }
    rhs[target] = rhs[target] - factor * rhs[source];
  }

  void pivot(std::size_t r, std::size_t c) {
    const Integer a = rows[r].at(c);
    std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
    for (std::size_t i : others)
      if (i != r) axpy(i, rows[i].at(c) * a, r);  // a = +-1, so a^-1 = a
    pivots.emplace_back(r, c);
    pivot_rows.push_back(rows[r]);
    pivot_rhs.push_back(rhs[r]);
    for (const auto& [cc, v] : rows[r]) col_rows[cc].erase(r);
    rows[r].clear();
    row_done[r] = true;
  }
};

}  // namespace

std::optional<std::vector<IntVec>> solve_sparse_integer(const SparseMatrix& a, const std::vector<IntVec>& rhs_rows,
                                                        std::size_t width, BoundaryStats* stats) {
  Elimination el;
  el.rows.assign(a.rows, {});
  el.rhs = rhs_rows;
  el.col_rows.assign(a.cols, {});
  el.row_done.assign(a.rows, false);
  for (std::size_t c = 0; c < a.cols; ++c)
    for (auto [r, v] : a.columns[c]) {
      el.rows[r][c] += v;
      el.col_rows[c].insert(r);
    }
  for (std::size_t r = 0; r < a.rows; ++r)
    for (auto it = el.rows[r].begin(); it != el.rows[r].end();)
      if (it->second == 0) {
        el.col_rows[it->first].erase(r);
        it = el.rows[r].erase(it);
      } else {
        ++it;
      }

  // shortest rows first, re-queued lazily when their length changes
  using Item = std::pair<std::size_t, std::size_t>;  // (length, row)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  for (std::size_t r = 0; r < a.rows; ++r)
    if (!el.rows[r].empty()) queue.emplace(el.rows[r].size(), r);
  std::set<std::size_t> stuck;
  while (!queue.empty()) {
    auto [len, r] = queue.top();
    queue.pop();
    if (el.row_done[r] || el.rows[r].empty()) continue;
    if (len != el.rows[r].size()) {
      queue.emplace(el.rows[r].size(), r);
      continue;
    }
    std::size_t best = a.cols;
    for (const auto& [c, v] : el.rows[r])
      if ((v == 1 || v == -1) && (best == a.cols || el.col_rows[c].size() < el.col_rows[best].size())) best = c;
    if (best == a.cols) {
      stuck.insert(r);
      continue;
    }
    std::vector<std::size_t> touched(el.col_rows[best].begin(), el.col_rows[best].end());
    el.pivot(r, best);
    for (std::size_t i : touched)
      if (i != r && !el.rows[i].empty()) {
        stuck.erase(i);
        queue.emplace(el.rows[i].size(), i);
      }
  }

  std::vector<IntVec> x(a.cols, IntVec(width, 0));
  // residual core
  std::vector<std::size_t> res_rows, res_cols;
  std::set<std::size_t> col_set;
  for (std::size_t r = 0; r < a.rows; ++r) {
    if (el.row_done[r]) continue;
    if (el.rows[r].empty()) {
      if (!is_zero(el.rhs[r])) return std::nullopt;
      continue;
    }
    res_rows.push_back(r);
    for (const auto& [c, v] : el.rows[r]) col_set.insert(c);
  }
  res_cols.assign(col_set.begin(), col_set.end());
  if (stats) {
    stats->unknowns = a.cols;
    stats->unit_pivots = el.pivots.size();
    stats->residual_rows = res_rows.size();
    stats->residual_cols = res_cols.size();
  }
  if (!res_rows.empty()) {
    IntMatrix m(res_rows.size(), res_cols.size());
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t j = 0; j < res_cols.size(); ++j) col_pos[res_cols[j]] = j;
    for (std::size_t i = 0; i < res_rows.size(); ++i)
      for (const auto& [c, v] : el.rows[res_rows[i]]) m(i, col_pos[c]) = v;
    for (std::size_t k = 0; k < width; ++k) {
      IntVec b;
      for (auto r : res_rows) b.push_back(el.rhs[r][k]);
      auto sol = solve_integer(m, b);
      if (!sol) return std::nullopt;
      for (std::size_t j = 0; j < res_cols.size(); ++j) x[res_cols[j]][k] = (*sol)[j];
    }
  }
  for (std::size_t i = el.pivots.size(); i-- > 0;) {
    auto [r, c] = el.pivots[i];
    const Row& row = el.pivot_rows[i];
    IntVec acc = el.pivot_rhs[i];
    for (const auto& [cc, v] : row)
      if (cc != c) acc = acc - v * x[cc];
    const Integer& a_rc = row.at(c);
    x[c] = a_rc * acc;  // a_rc = +-1
  }
  return x;
}

FramedChain solve_boundary(const CWComplex3& cw, const FramedChain& c, BoundaryStats* stats) {
  const std::size_t g = 3;
  Torus torus(cw.q);
  if (c.k != 1) throw ValidationError("solve_boundary expects a 1-chain");
  if (!is_cycle(torus, c)) throw NotACycle("chain to fill has nonzero boundary");
  std::vector<IntVec> b = edge_coefficients(cw, c);
  if (std::all_of(b.begin(), b.end(), [](const IntVec& v) { return is_zero(v); })) return {2, {}};

  // Faces on a spanning tree of the dual graph can be taken to be zero.
  const std::size_t nc = cw.cells.size(), nf = cw.faces.size();
  std::vector<std::vector<std::size_t>> face_cells(nf);
  for (std::size_t k = 0; k < nc; ++k)
    for (auto [f, v] : cw.d3.columns[k]) face_cells[f].push_back(k);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nc);  // (face, other cell)
  for (std::size_t f = 0; f < nf; ++f)
    if (face_cells[f].size() == 2 && face_cells[f][0] != face_cells[f][1]) {
      adj[face_cells[f][0]].emplace_back(f, face_cells[f][1]);
      adj[face_cells[f][1]].emplace_back(f, face_cells[f][0]);
    }
  std::vector<bool> seen(nc, false), tree_face(nf, false);
  std::queue<std::size_t> bfs;
  if (nc > 0) {
    bfs.push(0);
    seen[0] = true;
  }
  while (!bfs.empty()) {
    std::size_t k = bfs.front();
    bfs.pop();
    for (auto [f, o] : adj[k])
      if (!seen[o]) {
        seen[o] = true;
        tree_face[f] = true;
        bfs.push(o);
      }
  }
  std::vector<std::size_t> free_faces;
  for (std::size_t f = 0; f < nf; ++f)
    if (!tree_face[f]) free_faces.push_back(f);
  SparseMatrix a;
  a.rows = cw.edges.size();
  a.cols = free_faces.size();
  for (auto f : free_faces) a.columns.push_back(cw.d2.columns[f]);

  auto sol = solve_sparse_integer(a, b, g, stats);
  if (!sol) throw NoSolution("the chain is not a boundary (its homology class is nonzero)");
  std::vector<IntVec> x(nf, IntVec(g, 0));
  for (std::size_t j = 0; j < free_faces.size(); ++j) x[free_faces[j]] = (*sol)[j];
  FramedChain gamma = face_chain(cw, x);
  if (!same_chain(torus, boundary(torus, gamma), c))
    throw NoSolution("internal check failed: solved chain has the wrong boundary");
  return gamma;
}

}  // namespace tropjac
