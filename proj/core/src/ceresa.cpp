#include "tropjac/ceresa.hpp"

#include "tropjac/abel_jacobi.hpp"
#include "tropjac/errors.hpp"

namespace tropjac {

namespace {

std::vector<std::vector<Poly>> poly_vertex_lifts(const JacobianData& jd) {
  const MetricGraph& g = jd.graph();
  std::vector<std::vector<Poly>> out;
  for (const auto& path : tree_paths(g, jd.basis())) {
    std::vector<Poly> p(jd.genus(), Poly(0));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (path[e] == 0) continue;
      Poly step = Poly(Rational(path[e])) * g.edges[e].length.poly();
      const IntVec& f = jd.functionals()[e].coords;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (f[i] != 0) p[i] += Poly(Rational(f[i])) * step;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> scaled(const IntVec& v, const Poly& s) {
  std::vector<Poly> out;
  for (const auto& x : v) out.push_back(Poly(Rational(x)) * s);
  return out;
}

std::vector<Poly> plus(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Poly> minus(const std::vector<Poly>& a) {
  std::vector<Poly> out;
  for (const auto& x : a) out.push_back(Poly(0) - x);
  return out;
}

// distinct primes over 97, one per length variable
std::map<std::string, Rational> generic_point(const PolyMatrix& q) {
  static const int primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179};
  std::set<std::string> names;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      for (const auto& v : q(i, j).variables()) names.insert(v);
  std::map<std::string, Rational> out;
  std::size_t k = 0;
  for (const auto& v : names) {
    out[v] = Rational(primes[k % 16] + 200 * static_cast<int>(k / 16), 97);
    ++k;
  }
  return out;
}

void require_genus3(const JacobianData& jd) {
  if (jd.genus() != 3) throw WrongGenus("the invariant needs genus 3, got " + std::to_string(jd.genus()));
}

}  // namespace

std::string default_align_edge(const JacobianData& jd) {
  const MetricGraph& g = jd.graph();
  for (std::size_t e = g.edges.size(); e-- > 0;)
    if (!is_zero(jd.functionals()[e].coords)) return g.edges[e].id;
  throw ValidationError("curve has no edge with a nonzero functional");
}

RatVec alignment_translation(const JacobianData& jd, const std::string& edge) {
  const MetricGraph& g = jd.graph();
  std::size_t e = g.edge_index(edge);
  RatVec tail = vertex_lifts(jd)[g.vertex_index(g.edges[e].tail)];
  return Rational(2) * tail + g.edges[e].length.rational() * to_rational(jd.functionals()[e].coords);
}

FramedChain ceresa_difference(const JacobianData& jd, const RatVec& t) {
  FramedChain w1 = w1_cycle(jd, false);
  return canonicalize(jd, w1 - translate(negate(w1), t));
}

SymbolicCeresa symbolic_ceresa(const JacobianData& jd, const std::string& align_edge) {
  require_genus3(jd);
  const MetricGraph& g = jd.graph();
  const std::string edge = align_edge.empty() ? default_align_edge(jd) : align_edge;
  std::vector<std::vector<Poly>> lifts = poly_vertex_lifts(jd);

  std::size_t ae = g.edge_index(edge);
  std::vector<Poly> tail_c = lifts[g.vertex_index(g.edges[ae].tail)];
  std::vector<Poly> t = plus(plus(tail_c, tail_c), scaled(jd.functionals()[ae].coords, g.edges[ae].length.poly()));

  std::vector<PolySegment> cycle;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const IntVec& f = jd.functionals()[e].coords;
    if (is_zero(f) || g.edges[e].length.poly().is_zero()) continue;
    std::vector<Poly> p = lifts[g.vertex_index(g.edges[e].tail)];
    std::vector<Poly> q = plus(p, scaled(f, g.edges[e].length.poly()));
    cycle.push_back({p, q, f});
    // -(W_1^- + t): reversed framing of the translated negative image
    cycle.push_back({plus(minus(p), t), plus(minus(q), t), f});
  }
  const PolyMatrix& qm = jd.gram_poly();
  std::vector<PolyCell> chain = cone_chain(cycle, qm, generic_point(qm));

  SymbolicCeresa out;
  out.integral = integrate_omega0(chain);
  out.lattice = period_generators(jd);
  if (out.lattice.symbolic) {
    out.residue = residue(out.lattice, out.integral);
    out.in_lattice = is_member(out.lattice, out.integral);
  } else {
    Rational x = out.integral.evaluate({});
    out.residue = Poly(residue(out.lattice, x));
    out.in_lattice = is_member(out.lattice, x);
  }
  return out;
}

CeresaResult ceresa_invariant(const JacobianData& jd, const CeresaOptions& options) {
  require_genus3(jd);
  if (jd.is_symbolic()) throw ValidationError("numeric invariant needs rational lengths");
  const std::string edge = options.align_edge.empty() ? default_align_edge(jd) : options.align_edge;
  RatVec t = alignment_translation(jd, edge);
  if (!options.extra_shift.empty()) t = t + options.extra_shift;

  CeresaResult out;
  out.difference = ceresa_difference(jd, t);
  CWComplex3 cw = build_cw(jd, segments_of(out.difference), options.cw);
  out.cw_vertices = cw.vertices.size();
  out.cw_edges = cw.edges.size();
  out.cw_faces = cw.faces.size();
  out.cw_cells = cw.cells.size();
  out.connecting = solve_boundary(cw, out.difference, &out.stats);
  out.integral = integrate_omega0(out.connecting);

  out.lattice = period_generators(jd);
  out.residue = residue(out.lattice, out.integral);
  out.in_lattice = is_member(out.lattice, out.integral);

  std::vector<PolySegment> cycle;
  for (const auto& cell : out.difference.cells)
    cycle.push_back({constant_vector(cell.verts[0]), constant_vector(cell.verts[1]), cell.framing});
  out.cone_integral = integrate_omega0(cone_chain(cycle, jd.gram_poly())).evaluate({});
  out.routes_agree = is_member(out.lattice, out.integral - out.cone_integral);

  if (options.symbolic) out.symbolic = symbolic_ceresa(JacobianData(symbolic_companion(jd.graph()), jd.basis()), edge);
  return out;
}

CeresaReport ceresa_report(const MetricGraph& input, const CeresaOptions& options) {
  const int g = genus(input);
  if (g < 3) throw WrongGenus("the Ceresa obstruction needs genus >= 3, got " + std::to_string(g));
  CeresaReport out;
  out.genus = g;
  out.k_range = {1, g - 2};

  MetricGraph core;
  if (g == 3) {
    out.type = to_string(classify_genus3(input));
    core = normalize_curve(input);
  } else {
    auto k4 = find_k4(input);
    if (!k4) {
      out.type = "none";
      out.verdict = kInconclusive;
      out.message = "no K4 subgraph: no certificate from this method";
      return out;
    }
    out.type = "K4-core";
    out.core_edges.assign(k4->begin(), k4->end());
    core = normalize_curve(induced_subgraph(input, *k4));
  }

  JacobianData jd(core);
  if (core.is_symbolic()) {
    out.symbolic = symbolic_ceresa(jd, options.align_edge);
    out.verdict = out.symbolic->in_lattice ? kInconclusive : kCertified;
  } else {
    out.numeric = ceresa_invariant(jd, options);
    out.symbolic = out.numeric->symbolic;
    out.verdict = out.numeric->in_lattice ? kInconclusive : kCertified;
  }

  if (out.verdict == kCertified)
    out.message = g == 3 ? "invariant is not a period: W_1 and W_1^- are not algebraically equivalent"
                         : "K4 core certificate survives the projection: W_k is not algebraically equivalent to W_k^- for k in [1, " +
                               std::to_string(g - 2) + "]";
  else if (out.symbolic && !out.symbolic->in_lattice)
    out.message = "invariant is a period at these lengths; the symbolic companion is not, so generic lengths are certified";
  else
    out.message = "invariant vanishes modulo periods: no certificate";
  return out;
}

}  // namespace tropjac
