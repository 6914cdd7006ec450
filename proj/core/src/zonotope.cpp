#include "tropjac/zonotope.hpp"

#include "tropjac/curve.hpp"
#include "tropjac/errors.hpp"
#include "tropjac/integer_lattice.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace tropjac {

namespace {

int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Integer idot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// generalized cross product of dim-1 rows; zero when they are dependent
IntVec normal_of(const std::vector<IntVec>& rows, std::size_t dim) {
  IntVec r(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    IntMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0, c = 0; k < dim; ++k)
        if (k != j) m(i, c++) = rows[i][k];
    Integer d = det_expand(m);
    r[j] = j % 2 == 0 ? d : Integer(-d);
  }
  Integer g = 0;
  for (const auto& x : r) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : r) x /= g;
  return r;
}

Covector covector_of(const std::vector<IntVec>& directions, const IntVec& w) {
  Covector out;
  for (const auto& e : directions) out.push_back(sign_of(idot(e, w)));
  return out;
}

Covector compose(const Covector& x, const Covector& y) {
  Covector out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == 0) out[i] = y[i];
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::map<Covector, IntVec> cocircuits(std::size_t dim, const std::vector<IntVec>& directions) {
  std::map<Covector, IntVec> out;
  for_each_subset(directions.size(), dim - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVec> rows;
    for (auto i : s) rows.push_back(directions[i]);
    IntVec r = normal_of(rows, dim);
    if (is_zero(r)) return;
    out.emplace(covector_of(directions, r), r);
    out.emplace(covector_of(directions, -r), -r);
  });
  return out;
}

std::size_t rank_of(const std::vector<IntVec>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  RatMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rational(rows[i][j]);
  return rank(m);
}

RatVec cross3(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// counterclockwise about the outward normal
void order_facet(std::vector<std::size_t>& idx, const std::vector<RatVec>& verts, const IntVec& normal) {
  RatVec n = to_rational(normal);
  RatVec centroid(3, 0);
  for (auto i : idx) centroid = centroid + verts[i];
  centroid = Rational(1, static_cast<long>(idx.size())) * centroid;
  RatVec u = verts[idx.front()] - centroid;
  auto half = [&](const RatVec& a) {
    Rational s = dot(cross3(u, a), n);
    return (s > 0 || (s == 0 && dot(u, a) > 0)) ? 0 : 1;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    RatVec a = verts[i] - centroid, b = verts[j] - centroid;
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return dot(cross3(a, b), n) > 0;
  });
}

}  // namespace

std::vector<Covector> covectors(std::size_t dim, const std::vector<IntVec>& directions) {
  std::vector<Covector> circuits;
  for (const auto& [x, r] : cocircuits(dim, directions)) circuits.push_back(x);
  std::set<Covector> seen{Covector(directions.size(), 0)};
  std::vector<Covector> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Covector> next;
    for (const auto& x : frontier)
      for (const auto& c : circuits) {
        Covector y = compose(x, c);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Zonotope make_zonotope(std::size_t dim, std::vector<ZoneGenerator> generators) {
  Zonotope z;
  z.dim = dim;
  if (dim == 0) {
    z.vertices = {RatVec{}};
    z.vertex_covectors = {Covector{}};
    z.faces = {{Face{{}, {0}, 0}}};
    return z;
  }
  for (auto& gen : generators)
    if (!is_zero(gen.direction) && gen.scale != 0) z.generators.push_back(std::move(gen));
  std::vector<IntVec> dirs;
  for (const auto& gen : z.generators) dirs.push_back(gen.direction);
  if (rank_of(dirs, dim) != dim) throw WrongRank("zone vectors do not span R^" + std::to_string(dim));

  std::map<Covector, IntVec> rays = cocircuits(dim, dirs);
  std::vector<Covector> all = covectors(dim, dirs);

  std::map<Covector, std::size_t> vertex_index;
  for (const auto& x : all) {
    if (std::find(x.begin(), x.end(), 0) != x.end()) continue;
    RatVec v(dim, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      v = v + (Rational(x[i]) * z.generators[i].scale / 2) * to_rational(dirs[i]);
    vertex_index[x] = z.vertices.size();
    z.vertices.push_back(v);
    z.vertex_covectors.push_back(x);
  }

  z.faces.assign(dim + 1, {});
  for (const auto& x : all) {
    std::vector<IntVec> zero_dirs;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] == 0) zero_dirs.push_back(dirs[i]);
    Face f{x, {}, rank_of(zero_dirs, dim)};
    for (const auto& [t, vi] : vertex_index) {
      bool conforms = true;
      for (std::size_t i = 0; i < x.size() && conforms; ++i) conforms = x[i] == 0 || x[i] == t[i];
      if (conforms) f.vertices.push_back(vi);
    }
    if (dim - f.dim == 1 && dim == 3) order_facet(f.vertices, z.vertices, rays.at(x));
    z.faces[dim - f.dim].push_back(std::move(f));
  }
  for (const auto& f : z.faces[1]) z.facet_normals.push_back(rays.at(f.covector));
  return z;
}

bool Zonotope::contains(const RatVec& x) const {
  for (const auto& r : facet_normals) {
    Rational support = 0;
    for (const auto& gen : generators) support += gen.scale * Rational(abs(idot(r, gen.direction))) / 2;
    Rational h = dot(to_rational(r), x);
    if (h > support || -h > support) return false;
  }
  return true;
}

Rational Zonotope::volume() const {
  Rational total = 0;
  for_each_subset(generators.size(), dim, [&](const std::vector<std::size_t>& s) {
    IntMatrix m(dim, dim);
    Rational w = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t r = 0; r < dim; ++r) m(r, c) = generators[s[c]].direction[r];
      w *= generators[s[c]].scale;
    }
    total += w * Rational(abs(determinant(m)));
  });
  return total;
}

Zonotope build_zonotope(const JacobianData& jd) {
  if (jd.is_symbolic()) throw ValidationError("zonotope needs numeric lengths");
  std::vector<ZoneGenerator> gens;
  const MetricGraph& g = jd.graph();
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    gens.push_back({jd.functionals()[e].coords, g.edges[e].length.rational(), g.edges[e].id});
  return make_zonotope(jd.genus(), std::move(gens));
}

std::string zonotope_to_json(const Zonotope& z) {
  nlohmann::ordered_json j;
  j["dim"] = z.dim;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : z.vertices) j["vertices"].push_back(to_strings(v));
  j["facets"] = nlohmann::json::array();
  if (z.faces.size() > 1)
    for (const auto& f : z.facets()) j["facets"].push_back(f.vertices);
  return j.dump(2) + "\n";
}

namespace {

// coordinates (values on the cotree edges of jd) of a flow given by edge id
IntVec ambient_coordinates(const JacobianData& jd, const std::map<std::string, Integer>& flow) {
  const MetricGraph& g = jd.graph();
  IntVec c;
  for (auto e : jd.basis().cotree) {
    auto it = flow.find(g.edges[e].id);
    c.push_back(it == flow.end() ? Integer(0) : it->second);
  }
  return c;
}

std::vector<std::map<std::string, Integer>> cycle_flows(const JacobianData& jd) {
  const MetricGraph& g = jd.graph();
  std::vector<std::map<std::string, Integer>> out;
  for (std::size_t i = 0; i < jd.genus(); ++i) {
    std::map<std::string, Integer> f;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (jd.basis().cycles(i, e) != 0) f[g.edges[e].id] = jd.basis().cycles(i, e);
    out.push_back(std::move(f));
  }
  return out;
}

IntVec transpose_times(const IntMatrix& k, const IntVec& v) {
  IntVec out(k.cols(), 0);
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < k.rows(); ++i) out[j] += k(i, j) * v[i];
  return out;
}

RatVec transpose_times(const IntMatrix& k, const RatVec& v) {
  RatVec out(k.cols(), 0);
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < k.rows(); ++i) out[j] += Rational(k(i, j)) * v[i];
  return out;
}

bool primitive_sublattice(const IntMatrix& k) {
  SmithForm snf = smith_normal_form(k);
  if (snf.rank != k.cols()) return false;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (abs(snf.D(i, i)) != 1) return false;
  return true;
}

bool same_vertex_sets(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  return std::set<RatVec>(a.begin(), a.end()) == std::set<RatVec>(b.begin(), b.end());
}

}  // namespace

ProjectionCheck project_zonotope(const JacobianData& jd, const std::string& edge) {
  const MetricGraph& g = jd.graph();
  if (is_zero(jd.functional(edge).coords)) throw BridgeEdge(edge + " is a bridge");
  Zonotope ambient = build_zonotope(jd);
  ProjectionCheck out;
  if (g.edges.size() == 1) {
    out.deleted = make_zonotope(0, {});
    out.restriction = IntMatrix(jd.genus(), 0);
    out.image = {RatVec{}};
    out.unimodular = out.matches = true;
    return out;
  }
  JacobianData jdd(delete_edge(g, edge, false));
  out.deleted = build_zonotope(jdd);
  std::vector<std::map<std::string, Integer>> flows = cycle_flows(jdd);
  out.restriction = IntMatrix(jd.genus(), jdd.genus());
  for (std::size_t k = 0; k < flows.size(); ++k) {
    IntVec c = ambient_coordinates(jd, flows[k]);
    for (std::size_t i = 0; i < c.size(); ++i) out.restriction(i, k) = c[i];
  }
  out.unimodular = primitive_sublattice(out.restriction);
  for (const auto& v : ambient.vertices) out.image.push_back(transpose_times(out.restriction, v));

  bool functionals_agree = true;
  for (const auto& e : jdd.graph().edges)
    functionals_agree = functionals_agree &&
                        jdd.functional(e.id).coords == transpose_times(out.restriction, jd.functional(e.id).coords);
  std::set<RatVec> image(out.image.begin(), out.image.end());
  bool vertices_hit = std::all_of(out.deleted.vertices.begin(), out.deleted.vertices.end(),
                                  [&](const RatVec& v) { return image.count(v) > 0; });
  bool image_inside = std::all_of(image.begin(), image.end(), [&](const RatVec& v) { return out.deleted.contains(v); });
  out.matches = out.unimodular && functionals_agree && vertices_hit && image_inside;
  return out;
}

ContractionCheck contraction_face(const JacobianData& jd, const std::set<std::string>& sub) {
  const MetricGraph& g = jd.graph();
  for (const auto& id : sub)
    if (!g.has_edge(id)) throw NotASubcurve("unknown edge " + id);
  if (sub.empty()) throw NotASubcurve("empty edge set");
  MetricGraph subgraph = induced_subgraph(g, sub);
  if (!is_connected(subgraph)) throw NotASubcurve("edges do not form a connected subcurve");

  // H_1 of the subcurve inside the ambient lattice
  JacobianData jds(subgraph, cycle_basis(subgraph));
  std::vector<IntVec> sub_cycles;
  for (const auto& f : cycle_flows(jds)) sub_cycles.push_back(ambient_coordinates(jd, f));
  const std::size_t k = sub_cycles.size();

  // generic cycle: weights 3^j
  IntVec w(jd.genus(), 0);
  Integer weight = 1;
  for (const auto& c : sub_cycles) {
    w = w + weight * c;
    weight *= 3;
  }
  Zonotope z = build_zonotope(jd);
  std::vector<IntVec> dirs;
  for (const auto& gen : z.generators) dirs.push_back(gen.direction);
  Covector x = covector_of(dirs, w);

  ContractionCheck out;
  bool found = false;
  for (std::size_t c = 0; c < z.faces.size() && !found; ++c)
    for (const auto& f : z.faces[c])
      if (f.covector == x) {
        out.face = f;
        out.codim = c;
        found = true;
        break;
      }
  if (!found) throw NotASubcurve("no face with the subcurve covector");

  // flow-carrying edges of the subcurve
  std::set<std::string> core;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) core.insert(z.generators[i].edge);
  std::vector<std::string> rest;
  for (const auto& e : g.edges)
    if (!core.count(e.id)) rest.push_back(e.id);
  if (core.empty()) {
    out.contracted = z;
    out.unimodular = true;
    out.matches = out.codim == 0 && k == 0;
    return out;
  }
  if (!is_connected(induced_subgraph(g, core))) throw NotASubcurve("cycles of the subcurve are not connected without its bridges");
  if (jd.genus() == k) {
    out.contracted = make_zonotope(0, {});
  } else {
    JacobianData jdc(contract_subcurve(g, core));
    out.contracted = build_zonotope(jdc);
    // lift the contracted cycles: integer c with e_i . c = flow_i off the subcurve
    IntMatrix a(rest.size(), jd.genus());
    for (std::size_t r = 0; r < rest.size(); ++r)
      for (std::size_t j = 0; j < jd.genus(); ++j) a(r, j) = jd.functional(rest[r]).coords[j];
    IntMatrix lift(jd.genus(), jdc.genus());
    std::vector<std::map<std::string, Integer>> flows = cycle_flows(jdc);
    for (std::size_t col = 0; col < flows.size(); ++col) {
      IntVec b;
      for (const auto& id : rest) b.push_back(flows[col].count(id) ? flows[col].at(id) : Integer(0));
      auto c = solve_integer(a, b);
      if (!c) return out;
      for (std::size_t i = 0; i < c->size(); ++i) lift(i, col) = (*c)[i];
    }
    IntMatrix full(jd.genus(), jd.genus());
    for (std::size_t i = 0; i < jd.genus(); ++i) {
      for (std::size_t j = 0; j < lift.cols(); ++j) full(i, j) = lift(i, j);
      for (std::size_t j = 0; j < k; ++j) full(i, lift.cols() + j) = sub_cycles[j][i];
    }
    out.unimodular = abs(determinant(full)) == 1;

    RatVec center(jd.genus(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) center = center + (Rational(x[i]) * z.generators[i].scale / 2) * to_rational(dirs[i]);
    std::vector<RatVec> mapped;
    for (auto vi : out.face.vertices) mapped.push_back(transpose_times(lift, z.vertices[vi] - center));
    bool functionals_agree = true;
    for (const auto& id : rest)
      functionals_agree =
          functionals_agree && jdc.functional(id).coords == transpose_times(lift, jd.functional(id).coords);
    out.matches = out.unimodular && functionals_agree && out.codim == k &&
                  same_vertex_sets(mapped, out.contracted.vertices);
    return out;
  }
  out.unimodular = abs(determinant([&] {
                     IntMatrix m(jd.genus(), jd.genus());
                     for (std::size_t i = 0; i < jd.genus(); ++i)
                       for (std::size_t j = 0; j < k; ++j) m(i, j) = sub_cycles[j][i];
                     return m;
                   }())) == 1;
  out.matches = out.unimodular && out.codim == k && out.face.vertices.size() == 1;
  return out;
}

}  // namespace tropjac
