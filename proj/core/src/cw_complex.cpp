#include "tropjac/cw_complex.hpp"

#include "tropjac/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropjac {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

bool SparseMatrix::product_is_zero(const SparseMatrix& other) const {
  if (cols != other.rows) return false;
  for (const auto& col : other.columns) {
    std::map<std::size_t, long> acc;
    for (auto [k, v] : col)
      for (auto [i, w] : columns[k]) acc[i] += static_cast<long>(v) * w;
    for (const auto& [i, x] : acc)
      if (x != 0) return false;
  }
  return true;
}

long CWComplex3::euler_characteristic() const {
  return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(faces.size()) -
         static_cast<long>(cells.size());
}

namespace {

RatVec cross(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational eval(const IntVec& n, const RatVec& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] != 0) s += Rational(n[i]) * v[i];
  return s;
}

IntVec canonical_normal(const RatVec& n) {
  IntVec d = primitive_direction(n).direction;
  return leading_sign(d) < 0 ? -d : d;
}

Integer l1(const IntVec& n) {
  Integer s = 0;
  for (const auto& x : n) s += abs(x);
  return s;
}

IntVec unit(std::size_t i) {
  IntVec e(3, 0);
  e[i] = 1;
  return e;
}

RatVec floor_vec(const RatVec& v) {
  RatVec out;
  for (const auto& x : v) out.emplace_back(floor_div(x));
  return out;
}

RatVec frac_vec(const RatVec& v) {
  RatVec out;
  for (const auto& x : v) out.push_back(frac(x));
  return out;
}

struct Facet {
  IntVec n;
  Rational s;
};

struct Polytope {
  std::vector<RatVec> verts;
  std::vector<Facet> facets;
};

std::vector<std::size_t> on_plane(const Polytope& p, const Facet& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.verts.size(); ++i)
    if (eval(f.n, p.verts[i]) == f.s) out.push_back(i);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> polytope_edges(const Polytope& p) {
  std::vector<std::vector<std::size_t>> inc;
  for (const auto& f : p.facets) inc.push_back(on_plane(p, f));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < inc.size(); ++i)
    for (std::size_t j = i + 1; j < inc.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(inc[i].begin(), inc[i].end(), inc[j].begin(), inc[j].end(), std::back_inserter(common));
      if (common.size() == 2) edges.insert({common[0], common[1]});
    }
  return {edges.begin(), edges.end()};
}

Polytope restrict_facets(Polytope part, const std::vector<Facet>& old, const Facet& cut) {
  for (const auto& f : old)
    if (on_plane(part, f).size() >= 3) part.facets.push_back(f);
  part.facets.push_back(cut);
  return part;
}

// Splits p by the plane n.x = s, which must cross its interior.
std::pair<Polytope, Polytope> split(const Polytope& p, const IntVec& n, const Rational& s) {
  std::vector<Rational> side;
  for (const auto& v : p.verts) side.push_back(eval(n, v) - s);
  Polytope neg, pos;
  for (std::size_t i = 0; i < p.verts.size(); ++i) {
    if (side[i] <= 0) neg.verts.push_back(p.verts[i]);
    if (side[i] >= 0) pos.verts.push_back(p.verts[i]);
  }
  for (auto [a, b] : polytope_edges(p)) {
    if ((side[a] < 0 && side[b] > 0) || (side[a] > 0 && side[b] < 0)) {
      RatVec x = p.verts[a] + (side[a] / (side[a] - side[b])) * (p.verts[b] - p.verts[a]);
      neg.verts.push_back(x);
      pos.verts.push_back(x);
    }
  }
  Facet cut{n, s};
  return {restrict_facets(neg, p.facets, cut), restrict_facets(pos, p.facets, cut)};
}

Polytope unit_cube() {
  Polytope c;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) c.verts.push_back({Rational(x), Rational(y), Rational(z)});
  for (std::size_t i = 0; i < 3; ++i) {
    c.facets.push_back({unit(i), Rational(0)});
    c.facets.push_back({unit(i), Rational(1)});
  }
  return c;
}

using Family = std::pair<IntVec, Rational>;  // normal, offset mod 1

// Two plane families through the segment, spanned by its direction and the
// candidate directions giving the fewest translates, plus transversal
// coordinate planes through both endpoints.
void add_segment_families(std::set<Family>& families, const RatVec& p, const RatVec& q,
                          const std::vector<IntVec>& candidates) {
  RatVec d = q - p;
  std::vector<std::pair<Integer, IntVec>> options;
  for (const auto& u : candidates) {
    RatVec c = cross(d, to_rational(u));
    if (is_zero(c)) continue;
    IntVec n = canonical_normal(c);
    options.emplace_back(l1(n), n);
  }
  std::sort(options.begin(), options.end());
  std::size_t taken = 0;
  IntVec first;
  for (const auto& [size, n] : options) {
    if (taken == 1 && n == first) continue;
    families.insert({n, frac(eval(n, p))});
    if (taken++ == 0) first = n;
    if (taken == 2) break;
  }
  std::size_t i = 0;
  while (d[i] == 0) ++i;
  for (const RatVec* x : {&p, &q}) families.insert({unit(i), frac((*x)[i])});
}

std::vector<Polytope> cut_cube(const std::set<Family>& families, std::size_t& instances) {
  std::vector<Polytope> cells{unit_cube()};
  instances = 0;
  for (const auto& [n, offset] : families) {
    Integer lo = 0, hi = 0;
    for (const auto& x : n) (x < 0 ? lo : hi) += x;
    for (Integer m = lo - 1; m <= hi; ++m) {
      Rational s = offset + Rational(m);
      if (s > Rational(lo) && s < Rational(hi)) ++instances;
    }
    std::vector<Polytope> next;
    for (auto& cell : cells) {
      Rational mn = eval(n, cell.verts[0]), mx = mn;
      for (const auto& v : cell.verts) {
        Rational x = eval(n, v);
        mn = std::min(mn, x);
        mx = std::max(mx, x);
      }
      Polytope rest = std::move(cell);
      Rational s = offset + Rational(floor_div(mn - offset));
      if (s <= mn) s += 1;
      for (; s < mx; s += 1) {
        auto [below, above] = split(rest, n, s);
        next.push_back(std::move(below));
        rest = std::move(above);
      }
      next.push_back(std::move(rest));
    }
    cells = std::move(next);
  }
  return cells;
}

// Orders coplanar polygon vertices counterclockwise about n.
std::vector<RatVec> ccw_order(std::vector<RatVec> pts, const IntVec& n) {
  RatVec ctr(3, 0);
  for (const auto& p : pts) ctr = ctr + p;
  ctr = Rational(1, static_cast<long>(pts.size())) * ctr;
  RatVec u = pts[0] - ctr;
  RatVec w = cross(to_rational(n), u);
  auto coords = [&](const RatVec& p) {
    RatVec r = p - ctr;
    return std::pair<Rational, Rational>{dot(u, r), dot(w, r)};
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
    auto [xa, ya] = coords(a);
    auto [xb, yb] = coords(b);
    bool ha = ya < 0 || (ya == 0 && xa < 0);
    bool hb = yb < 0 || (yb == 0 && xb < 0);
    if (ha != hb) return !ha;
    return xa * yb - ya * xb > 0;
  });
  return pts;
}

struct Assembler {
  CWComplex3& cw;
  std::map<RatVec, std::size_t> vertex_index;
  std::map<std::pair<RatVec, RatVec>, std::size_t> edge_index;
  std::map<std::vector<RatVec>, std::size_t> face_index;

  std::size_t vertex(const RatVec& v) {
    RatVec key = frac_vec(v);
    auto [it, fresh] = vertex_index.try_emplace(key, cw.vertices.size());
    if (fresh) cw.vertices.push_back(key);
    return it->second;
  }

  // Returns (edge index, sign of a -> b relative to the stored orientation).
  std::pair<std::size_t, int> edge(const RatVec& a, const RatVec& b) {
    bool forward = a < b;
    const RatVec& lo = forward ? a : b;
    const RatVec& hi = forward ? b : a;
    RatVec shift = floor_vec(lo);
    std::pair<RatVec, RatVec> key{lo - shift, hi - shift};
    auto [it, fresh] = edge_index.try_emplace(key, cw.edges.size());
    if (fresh) {
      cw.edges.push_back({key.first, key.second});
      std::size_t v0 = vertex(key.first), v1 = vertex(key.second);
      std::vector<std::pair<std::size_t, int>> col;
      if (v0 != v1) col = {{v0, -1}, {v1, 1}};
      cw.d1.columns.push_back(col);
    }
    return {it->second, forward ? 1 : -1};
  }

  std::size_t face(const std::vector<RatVec>& pts, const IntVec& n) {
    std::vector<RatVec> poly = ccw_order(pts, n);
    auto lowest = std::min_element(poly.begin(), poly.end());
    std::rotate(poly.begin(), lowest, poly.end());
    RatVec shift = floor_vec(poly[0]);
    for (auto& p : poly) p = p - shift;
    std::vector<RatVec> key = poly;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = face_index.try_emplace(key, cw.faces.size());
    if (fresh) {
      cw.faces.push_back(poly);
      cw.face_normals.push_back(n);
      std::map<std::size_t, int> col;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        auto [e, sign] = edge(poly[i], poly[(i + 1) % poly.size()]);
        col[e] += sign;
      }
      std::vector<std::pair<std::size_t, int>> entries;
      for (auto [e, v] : col)
        if (v != 0) entries.emplace_back(e, v);
      cw.d2.columns.push_back(entries);
    }
    return it->second;
  }

  void cell(const Polytope& p) {
    RatVec ctr(3, 0);
    for (const auto& v : p.verts) ctr = ctr + v;
    ctr = Rational(1, static_cast<long>(p.verts.size())) * ctr;
    std::map<std::size_t, int> col;
    for (const auto& f : p.facets) {
      std::vector<RatVec> pts;
      for (auto i : on_plane(p, f)) pts.push_back(p.verts[i]);
      std::size_t idx = face(pts, f.n);
      col[idx] += eval(f.n, ctr) < f.s ? 1 : -1;
    }
    std::vector<std::pair<std::size_t, int>> entries;
    for (auto [fi, v] : col)
      if (v != 0) entries.emplace_back(fi, v);
    cw.d3.columns.push_back(entries);
    cw.cells.push_back(p.verts);
  }
};

std::vector<RatVec> lattice_points(const Torus& t, const std::vector<RatVec>& pts) {
  std::vector<RatVec> out;
  for (const auto& p : pts) out.push_back(t.to_lattice(p));
  return out;
}

}  // namespace

CWComplex3 build_cw(const JacobianData& jd, const std::vector<std::array<RatVec, 2>>& segments,
                    const CWOptions& options) {
  if (jd.genus() != 3) throw WrongGenus("cell structures are built for genus 3, got " + std::to_string(jd.genus()));
  Torus torus(jd);
  std::vector<std::array<RatVec, 2>> lat;
  for (const auto& s : segments) {
    if (s[0] == s[1]) throw DegenerateSegment("zero-length segment");
    lat.push_back({torus.to_lattice(s[0]), torus.to_lattice(s[1])});
  }
  std::vector<IntVec> candidates{unit(0), unit(1), unit(2)};
  if (options.use_segment_directions) {
    std::set<IntVec> dirs;
    for (const auto& s : lat) dirs.insert(canonical_normal(s[1] - s[0]));
    candidates.insert(candidates.end(), dirs.begin(), dirs.end());
  }
  std::set<Family> families;
  for (const auto& s : lat) add_segment_families(families, s[0], s[1], candidates);

  CWComplex3 cw;
  cw.q = jd.gram();
  cw.plane_families = families.size();
  std::vector<Polytope> cells = cut_cube(families, cw.plane_instances);
  Assembler a{cw, {}, {}, {}};
  for (const auto& c : cells) a.cell(c);
  cw.d1.rows = cw.vertices.size();
  cw.d1.cols = cw.edges.size();
  cw.d2.rows = cw.edges.size();
  cw.d2.cols = cw.faces.size();
  cw.d3.rows = cw.faces.size();
  cw.d3.cols = cw.cells.size();
  return cw;
}

std::vector<std::array<RatVec, 2>> segments_of(const FramedChain& c) {
  std::vector<std::array<RatVec, 2>> out;
  for (const auto& cell : c.cells) out.push_back({cell.verts[0], cell.verts[1]});
  return out;
}

std::vector<IntVec> edge_coefficients(const CWComplex3& cw, const FramedChain& c) {
  const std::size_t g = 3;
  Torus lattice(RatMatrix::identity(g));
  Torus torus(cw.q);
  FramedChain lc{1, {}};
  for (const auto& cell : c.cells) lc.cells.push_back({lattice_points(torus, cell.verts), cell.framing});
  lc = canonicalize(lattice, lc);

  std::map<std::pair<IntVec, RatVec>, std::vector<std::tuple<Rational, Rational, IntVec>>> arcs;
  for (const auto& cell : lc.cells) {
    GeodesicSegment s = locate_on_geodesic(cell.verts[0], cell.verts[1]);
    arcs[{s.direction, s.offset}].emplace_back(s.start, s.length, s.reversed ? -cell.framing : cell.framing);
  }
  std::vector<IntVec> coeff(cw.edges.size(), IntVec(g, 0));
  for (std::size_t e = 0; e < cw.edges.size(); ++e) {
    GeodesicSegment s = locate_on_geodesic(cw.edges[e][0], cw.edges[e][1]);
    auto it = arcs.find({s.direction, s.offset});
    if (it == arcs.end()) continue;
    Rational mid = s.start + s.length / 2;
    for (const auto& [start, length, beta] : it->second)
      if (frac(mid - start) < length) coeff[e] = coeff[e] + (s.reversed ? -beta : beta);
  }
  FramedChain rebuilt{1, {}};
  for (std::size_t e = 0; e < cw.edges.size(); ++e)
    if (!is_zero(coeff[e])) rebuilt.cells.push_back({{cw.edges[e][0], cw.edges[e][1]}, coeff[e]});
  if (!same_chain(lattice, rebuilt, lc)) throw UnsupportedChain("chain is not carried by the 1-skeleton");
  return coeff;
}

FramedChain face_chain(const CWComplex3& cw, const std::vector<IntVec>& coefficients) {
  FramedChain out{2, {}};
  for (std::size_t f = 0; f < cw.faces.size(); ++f) {
    if (is_zero(coefficients[f])) continue;
    FramedCell cell{{}, coefficients[f]};
    for (const auto& v : cw.faces[f]) cell.verts.push_back(cw.q * v);
    out.cells.push_back(cell);
  }
  return out;
}

FramedChain edge_chain(const CWComplex3& cw, const std::vector<IntVec>& coefficients) {
  FramedChain out{1, {}};
  for (std::size_t e = 0; e < cw.edges.size(); ++e) {
    if (is_zero(coefficients[e])) continue;
    out.cells.push_back({{cw.q * cw.edges[e][0], cw.q * cw.edges[e][1]}, coefficients[e]});
  }
  return out;
}

}  // namespace tropjac
