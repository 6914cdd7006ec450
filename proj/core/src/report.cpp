#include "tropjac/report.hpp"

#include "tropjac/abel_jacobi.hpp"

#include <nlohmann/json.hpp>

namespace tropjac {

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json lattice_json(const PeriodLattice& l) {
  json j;
  j["symbolic"] = l.symbolic;
  json gens = json::array();
  if (l.symbolic)
    for (const auto& p : l.poly_generators) gens.push_back(p.str());
  else
    for (const auto& x : l.generators) gens.push_back(to_string(x));
  j["generators"] = gens;
  j["normal_form"] = l.str();
  return j;
}

}  // namespace

std::string analyze_json(const MetricGraph& g) {
  json j;
  const int gen = genus(g);
  j["genus"] = gen;
  j["vertices"] = g.vertices.size();
  j["edges"] = g.edges.size();
  if (gen == 3) j["type"] = to_string(classify_genus3(g));
  if (gen == 0) return j.dump(2) + "\n";

  JacobianData jd(g);
  json jac;
  json basis = json::array();
  for (auto e : jd.basis().cotree) basis.push_back(g.edges[e].id);
  jac["cotree"] = basis;
  jac["Q"] = matrix_json(jd.gram_poly());
  json functionals = json::object();
  for (const auto& f : jd.functionals()) functionals[f.edge] = to_strings(f.coords);
  jac["functionals"] = functionals;
  if (!jd.is_symbolic()) jac["positive_definite"] = is_positive_definite(jd.gram());
  if (gen == 3) jac["periods"] = lattice_json(period_generators(jd));
  DicingReport d = check_dicing(jd);
  jac["dicing"] = {{"totally_unimodular", d.totally_unimodular}, {"gram_identity", d.gram_identity}, {"passed", d.passed()}};
  j["jacobian"] = jac;
  return j.dump(2) + "\n";
}

std::string ceresa_json(const CeresaReport& r) {
  json j;
  j["genus"] = r.genus;
  j["type"] = r.type;
  if (r.numeric) {
    j["invariant"] = to_string(r.numeric->residue);
    j["lattice"] = r.numeric->lattice.str();
  } else if (r.symbolic) {
    j["invariant"] = r.symbolic->residue.str();
    j["lattice"] = r.symbolic->lattice.str();
  }
  j["verdict"] = r.verdict;
  if (r.symbolic) j["symbolic"] = {{"invariant", r.symbolic->residue.str()}, {"member", r.symbolic->in_lattice}};
  if (r.numeric) j["chain_cells"] = r.numeric->connecting.size();
  j["k_range"] = {r.k_range.first, r.k_range.second};
  j["message"] = r.message;
  if (!r.core_edges.empty()) j["core_edges"] = r.core_edges;
  if (r.numeric) {
    const CeresaResult& n = *r.numeric;
    j["integral"] = to_string(n.integral);
    j["cone_integral"] = to_string(n.cone_integral);
    j["routes_agree"] = n.routes_agree;
    j["cw"] = {{"vertices", n.cw_vertices}, {"edges", n.cw_edges}, {"faces", n.cw_faces}, {"cells", n.cw_cells}};
  }
  return j.dump(2) + "\n";
}

std::string chain_json(const FramedChain& c) {
  json j;
  j["k"] = c.k;
  json cells = json::array();
  for (const auto& cell : c.cells) {
    json verts = json::array();
    for (const auto& v : cell.verts) verts.push_back(to_strings(v));
    cells.push_back({{"verts", verts}, {"framing", to_strings(cell.framing)}});
  }
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

}  // namespace tropjac
