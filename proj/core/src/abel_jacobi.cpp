#include "tropjac/abel_jacobi.hpp"

#include "tropjac/errors.hpp"

#include <map>

namespace tropjac {

Integer Divisor::degree() const {
  Integer d = 0;
  for (const auto& [p, a] : terms) d += a;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [p, a] : terms)
    if (a < 0) return false;
  return true;
}

namespace {

RatVec functional_rat(const JacobianData& jd, std::size_t e) { return to_rational(jd.functionals()[e].coords); }

}  // namespace

std::vector<RatVec> vertex_lifts(const JacobianData& jd) {
  const MetricGraph& g = jd.graph();
  std::vector<IntVec> paths = tree_paths(g, jd.basis());
  std::vector<RatVec> out;
  for (const auto& path : paths) {
    RatVec p(jd.genus(), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (path[e] != 0) p = p + (Rational(path[e]) * g.edges[e].length.rational()) * functional_rat(jd, e);
    out.push_back(p);
  }
  return out;
}

RatVec abel_jacobi_point(const JacobianData& jd, const Divisor& d) {
  const MetricGraph& g = jd.graph();
  std::vector<RatVec> lifts = vertex_lifts(jd);
  RatVec total(jd.genus(), 0);
  for (const auto& [pt, coeff] : d.terms) {
    RatVec p;
    if (!pt.edge.empty()) {
      std::size_t e = g.edge_index(pt.edge);
      const Rational& len = g.edges[e].length.rational();
      if (pt.offset < 0 || pt.offset > len)
        throw ValidationError("offset " + to_string(pt.offset) + " outside edge " + pt.edge);
      p = lifts[g.vertex_index(g.edges[e].tail)] + pt.offset * functional_rat(jd, e);
    } else {
      if (!g.has_vertex(pt.vertex)) throw ValidationError("unknown vertex " + pt.vertex);
      p = lifts[g.vertex_index(pt.vertex)];
    }
    total = total + Rational(coeff) * p;
  }
  return reduce_point(jd, total);
}

FramedChain w1_cycle(const JacobianData& jd, bool canonical) {
  const MetricGraph& g = jd.graph();
  std::vector<RatVec> lifts = vertex_lifts(jd);
  FramedChain c{1, {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Rational& len = g.edges[e].length.rational();
    const IntVec& dir = jd.functionals()[e].coords;
    if (len == 0 || is_zero(dir)) continue;
    RatVec p = lifts[g.vertex_index(g.edges[e].tail)];
    c.cells.push_back({{p, p + len * to_rational(dir)}, dir});
  }
  return canonical ? canonicalize(jd, c) : c;
}

FramedChain negate_cycle(const JacobianData& jd, const FramedChain& c) { return canonicalize(jd, negate(c)); }

RatVec cycle_displacement(const JacobianData& jd, std::size_t i) {
  const MetricGraph& g = jd.graph();
  RatVec total(jd.genus(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Integer s = jd.basis().cycles(i, e);
    if (s != 0) total = total + (Rational(s) * g.edges[e].length.rational()) * functional_rat(jd, e);
  }
  return total;
}

FramedChain frame_cycle(const JacobianData& jd, const std::vector<WeightedSegment>& support) {
  Torus torus(jd);
  const std::size_t n = jd.genus();
  std::map<RatVec, IntVec> flux;  // vertex (mod Gamma_1) -> incoming minus outgoing
  std::map<RatVec, RatVec> witness;
  FramedChain c{1, {}};
  for (const auto& s : support) {
    RatVec d = s.to - s.from;
    if (is_zero(d)) throw DegenerateSegment("support segment has zero length");
    IntVec beta = s.weight * primitive_direction(d).direction;
    c.cells.push_back({{s.from, s.to}, beta});
    for (auto [p, sign] : {std::pair{s.from, -1}, std::pair{s.to, 1}}) {
      RatVec key = torus.to_lattice(p);
      for (auto& x : key) x = frac(x);
      auto& slot = flux.try_emplace(key, IntVec(n, 0)).first->second;
      slot = slot + Integer(sign) * beta;
      witness.try_emplace(key, p);
    }
  }
  for (const auto& [key, f] : flux)
    if (!is_zero(f)) {
      std::string where;
      for (const auto& x : witness[key]) where += (where.empty() ? "" : ",") + to_string(x);
      throw NotBalanced("support is not balanced at (" + where + ")");
    }
  return canonicalize(torus, c);
}

FramedChain sweep_chain(const JacobianData& jd, const FramedChain& c, const RatVec& t) {
  Torus torus(jd);
  if (c.k != 1) throw ValidationError("sweep_chain needs a 1-chain");
  if (!is_cycle(torus, c)) throw NotACycle("sweep_chain needs a closed 1-chain");
  FramedChain out{2, {}};
  if (is_zero(t)) return out;
  for (const auto& cell : c.cells) {
    const RatVec& p = cell.verts[0];
    const RatVec& q = cell.verts[1];
    out.cells.push_back({{p, p + t, q + t, q}, cell.framing});
  }
  return canonicalize(torus, out);
}

}  // namespace tropjac
