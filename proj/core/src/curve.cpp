#include "tropjac/curve.hpp"

#include "tropjac/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace tropjac {

using nlohmann::json;

// ---------------------------------------------------------------- Length

const Rational& Length::rational() const {
  if (is_symbolic()) throw ValidationError("symbolic length " + str() + " used where a number is required");
  return std::get<Rational>(value_);
}

Poly Length::poly() const {
  if (is_symbolic()) return std::get<Poly>(value_);
  return Poly(std::get<Rational>(value_));
}

std::string Length::str() const {
  if (is_symbolic()) return std::get<Poly>(value_).str();
  return to_string(std::get<Rational>(value_));
}

Length operator+(const Length& a, const Length& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return Length(a.rational() + b.rational());
  return Length(a.poly() + b.poly());
}

// ---------------------------------------------------------------- MetricGraph

std::size_t MetricGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  if (it == vertices.end()) throw ValidationError("unknown vertex \"" + id + "\"");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t MetricGraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return i;
  throw UnknownEdge("unknown edge \"" + id + "\"");
}

bool MetricGraph::has_vertex(const std::string& id) const {
  return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

bool MetricGraph::has_edge(const std::string& id) const {
  return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.id == id; });
}

bool MetricGraph::is_symbolic() const {
  return !edges.empty() && std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.length.is_symbolic(); });
}

std::size_t MetricGraph::degree(const std::string& v) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.tail == v) + (e.head == v);
  return d;
}

std::vector<std::size_t> MetricGraph::incident_edges(const std::string& v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].tail == v || edges[i].head == v) out.push_back(i);
  return out;
}

namespace {

// Vertices reachable from `start` using edges with keep[i] set.
std::vector<bool> reachable(const MetricGraph& g, const std::string& start, const std::vector<bool>& keep) {
  std::vector<bool> seen(g.vertices.size(), false);
  std::queue<std::size_t> q;
  std::size_t s = g.vertex_index(start);
  seen[s] = true;
  q.push(s);
  while (!q.empty()) {
    const std::string& u = g.vertices[q.front()];
    q.pop();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (!keep[i]) continue;
      const Edge& e = g.edges[i];
      std::string other;
      if (e.tail == u) other = e.head;
      else if (e.head == u) other = e.tail;
      else continue;
      std::size_t o = g.vertex_index(other);
      if (!seen[o]) {
        seen[o] = true;
        q.push(o);
      }
    }
  }
  return seen;
}

}  // namespace

void MetricGraph::validate(bool allow_zero_lengths) const {
  if (vertices.empty()) throw ValidationError("vertices: empty vertex list");
  std::set<std::string> vs;
  for (const auto& v : vertices)
    if (!vs.insert(v).second) throw ValidationError("vertices: duplicate vertex \"" + v + "\"");
  std::set<std::string> es;
  bool any_symbolic = false, any_numeric = false;
  for (const auto& e : edges) {
    if (!es.insert(e.id).second) throw ValidationError("edges: duplicate edge id \"" + e.id + "\"");
    if (!vs.count(e.tail)) throw ValidationError("edges." + e.id + ".from: unknown vertex \"" + e.tail + "\"");
    if (!vs.count(e.head)) throw ValidationError("edges." + e.id + ".to: unknown vertex \"" + e.head + "\"");
    if (e.length.is_symbolic()) {
      any_symbolic = true;
    } else {
      any_numeric = true;
      const Rational& l = e.length.rational();
      if (l < 0 || (l == 0 && !allow_zero_lengths))
        throw ValidationError("edges." + e.id + ".length: must be positive, got " + to_string(l));
    }
  }
  if (any_symbolic && any_numeric) throw ValidationError("edges: numeric and symbolic lengths are mixed");
  if (!vs.count(basepoint)) throw ValidationError("basepoint: unknown vertex \"" + basepoint + "\"");
  if (!is_connected(*this)) throw ValidationError("graph is disconnected");
}

bool is_connected(const MetricGraph& g) {
  if (g.vertices.empty()) return false;
  auto seen = reachable(g, g.vertices.front(), std::vector<bool>(g.edges.size(), true));
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

int genus(const MetricGraph& g) {
  return static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
}

std::vector<std::size_t> bridges(const MetricGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].is_loop()) continue;
    std::vector<bool> keep(g.edges.size(), true);
    keep[i] = false;
    auto seen = reachable(g, g.edges[i].tail, keep);
    if (!seen[g.vertex_index(g.edges[i].head)]) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------- JSON

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string json_string(const json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(field + ": expected a string");
}

Length parse_length(const json& j, const std::string& field) {
  if (j.is_number_float()) throw ParseError(field + ": floating-point lengths are not allowed");
  std::string s = json_string(j, field);
  if (is_identifier(s)) return Length::variable(s);
  try {
    return Length(parse_rational(s));
  } catch (const ParseError&) {
    throw ParseError(field + ": not an exact rational or variable name: \"" + s + "\"");
  }
}

}  // namespace

MetricGraph parse_curve(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  for (const char* key : {"vertices", "edges", "basepoint"})
    if (!doc.contains(key)) throw ParseError(std::string(key) + ": missing field");
  if (!doc["vertices"].is_array()) throw ParseError("vertices: expected an array");
  if (!doc["edges"].is_array()) throw ParseError("edges: expected an array");

  MetricGraph g;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
    g.vertices.push_back(json_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const json& e = doc["edges"][i];
    std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    for (const char* key : {"id", "from", "to", "length"})
      if (!e.contains(key)) throw ParseError(where + "." + key + ": missing field");
    Edge edge;
    edge.id = json_string(e["id"], where + ".id");
    edge.tail = json_string(e["from"], where + ".from");
    edge.head = json_string(e["to"], where + ".to");
    edge.length = parse_length(e["length"], where + ".length");
    g.edges.push_back(std::move(edge));
  }
  g.basepoint = json_string(doc["basepoint"], "basepoint");
  g.validate(false);
  return g;
}

MetricGraph load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve(ss.str());
}

std::string curve_to_json(const MetricGraph& g) {
  json doc;
  doc["vertices"] = g.vertices;
  doc["edges"] = json::array();
  for (const auto& e : g.edges)
    doc["edges"].push_back({{"id", e.id}, {"from", e.tail}, {"to", e.head}, {"length", e.length.str()}});
  doc["basepoint"] = g.basepoint;
  return doc.dump();
}

MetricGraph symbolic_companion(const MetricGraph& g) {
  MetricGraph s = g;
  for (auto& e : s.edges) {
    std::string name;
    for (char c : e.id) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!is_identifier(name)) name = "l_" + name;
    e.length = Length::variable(name);
  }
  return s;
}

MetricGraph specialize(const MetricGraph& g, const std::map<std::string, Rational>& values) {
  MetricGraph s = g;
  for (auto& e : s.edges)
    if (e.length.is_symbolic()) e.length = Length(e.length.poly().evaluate(values));
  return s;
}

// ---------------------------------------------------------------- normalization

NormalizedCurve normalize_with_provenance(const MetricGraph& input, bool keep_basepoint) {
  NormalizedCurve out{input, {}};
  MetricGraph& g = out.graph;
  for (const auto& e : g.edges) out.provenance[e.id] = {{e.id, 1}};

  auto remove_vertex = [&](const std::string& v) {
    g.vertices.erase(std::find(g.vertices.begin(), g.vertices.end(), v));
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t vi = 0; vi < g.vertices.size() && !changed; ++vi) {
      const std::string v = g.vertices[vi];
      std::size_t deg = g.degree(v);
      if (deg == 0 && g.vertices.size() > 1) {
        if (v == g.basepoint) continue;
        remove_vertex(v);
        changed = true;
      } else if (deg == 1) {
        std::size_t ei = g.incident_edges(v).front();
        std::string other = g.edges[ei].tail == v ? g.edges[ei].head : g.edges[ei].tail;
        out.provenance.erase(g.edges[ei].id);
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(ei));
        if (g.basepoint == v) g.basepoint = other;
        remove_vertex(v);
        changed = true;
      } else if (deg == 2) {
        auto inc = g.incident_edges(v);
        if (inc.size() != 2) continue;  // a loop
        if (v == g.basepoint && keep_basepoint) continue;
        Edge e1 = g.edges[inc[0]];
        Edge e2 = g.edges[inc[1]];
        std::string u = e1.tail == v ? e1.head : e1.tail;
        std::string w = e2.tail == v ? e2.head : e2.tail;
        Edge merged = e1;
        auto path1 = out.provenance[e1.id];
        auto path2 = out.provenance[e2.id];
        int sign2;
        if (e1.head == v) {  // u -> v -> w
          merged.tail = u;
          merged.head = w;
          sign2 = e2.tail == v ? 1 : -1;
        } else {  // w -> v -> u
          merged.tail = w;
          merged.head = u;
          sign2 = e2.head == v ? 1 : -1;
        }
        merged.length = e1.length + e2.length;
        for (auto [id, s] : path2) path1.emplace_back(id, s * sign2);
        out.provenance[e1.id] = path1;
        out.provenance.erase(e2.id);
        g.edges[inc[0]] = merged;
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(inc[1]));
        if (g.basepoint == v) g.basepoint = u;
        remove_vertex(v);
        changed = true;
      }
    }
  }
  if (g.edges.empty()) throw DegenerateError("normalized curve has no edges");
  return out;
}

MetricGraph normalize_curve(const MetricGraph& g) { return normalize_with_provenance(g).graph; }

// ---------------------------------------------------------------- cycle bases

namespace {

struct SpanningTree {
  std::vector<std::size_t> tree;
  std::vector<long> parent_edge;  // per vertex, -1 at the root
  std::vector<std::size_t> order;  // BFS order of vertices
};

SpanningTree bfs_tree(const MetricGraph& g, const std::vector<bool>& allowed) {
  SpanningTree t;
  const std::size_t n = g.vertices.size();
  t.parent_edge.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  std::size_t root = g.vertex_index(g.basepoint);
  seen[root] = true;
  q.push(root);
  while (!q.empty()) {
    std::size_t ui = q.front();
    q.pop();
    t.order.push_back(ui);
    const std::string& u = g.vertices[ui];
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (!allowed[i]) continue;
      const Edge& e = g.edges[i];
      if (e.is_loop()) continue;
      std::string other;
      if (e.tail == u) other = e.head;
      else if (e.head == u) other = e.tail;
      else continue;
      std::size_t oi = g.vertex_index(other);
      if (seen[oi]) continue;
      seen[oi] = true;
      t.parent_edge[oi] = static_cast<long>(i);
      t.tree.push_back(i);
      q.push(oi);
    }
  }
  if (t.order.size() != n) throw ValidationError("graph is disconnected");
  std::sort(t.tree.begin(), t.tree.end());
  return t;
}

std::vector<IntVec> paths_from_tree(const MetricGraph& g, const SpanningTree& t) {
  const std::size_t m = g.edges.size();
  std::vector<IntVec> paths(g.vertices.size(), IntVec(m, 0));
  for (std::size_t vi : t.order) {
    long pe = t.parent_edge[vi];
    if (pe < 0) continue;
    const Edge& e = g.edges[static_cast<std::size_t>(pe)];
    bool forward = e.head == g.vertices[vi];
    std::size_t parent = g.vertex_index(forward ? e.tail : e.head);
    paths[vi] = paths[parent];
    paths[vi][static_cast<std::size_t>(pe)] += forward ? 1 : -1;
  }
  return paths;
}

CycleBasis basis_from_tree(const MetricGraph& g, const SpanningTree& t) {
  CycleBasis b;
  b.tree = t.tree;
  std::vector<bool> in_tree(g.edges.size(), false);
  for (auto i : t.tree) in_tree[i] = true;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (!in_tree[i]) b.cotree.push_back(i);
  auto paths = paths_from_tree(g, t);
  b.cycles = IntMatrix(b.cotree.size(), g.edges.size());
  for (std::size_t r = 0; r < b.cotree.size(); ++r) {
    const Edge& e = g.edges[b.cotree[r]];
    // e followed by the tree path head -> tail
    IntVec row = paths[g.vertex_index(e.tail)] - paths[g.vertex_index(e.head)];
    row[b.cotree[r]] += 1;
    for (std::size_t j = 0; j < row.size(); ++j) b.cycles(r, j) = row[j];
  }
  return b;
}

SpanningTree tree_from_edges(const MetricGraph& g, const std::vector<std::size_t>& tree) {
  std::vector<bool> allowed(g.edges.size(), false);
  for (auto i : tree) allowed[i] = true;
  return bfs_tree(g, allowed);
}

}  // namespace

CycleBasis cycle_basis(const MetricGraph& g) {
  return basis_from_tree(g, bfs_tree(g, std::vector<bool>(g.edges.size(), true)));
}

CycleBasis cycle_basis(const MetricGraph& g, const std::set<std::string>& tree_edges) {
  std::vector<bool> allowed(g.edges.size(), false);
  for (const auto& id : tree_edges) allowed[g.edge_index(id)] = true;
  if (tree_edges.size() + 1 != g.vertices.size()) throw ValidationError("tree edge set is not a spanning tree");
  SpanningTree t = bfs_tree(g, allowed);
  if (t.tree.size() != tree_edges.size()) throw ValidationError("tree edge set contains a cycle");
  return basis_from_tree(g, t);
}

std::vector<IntVec> tree_paths(const MetricGraph& g, const CycleBasis& basis) {
  return paths_from_tree(g, tree_from_edges(g, basis.tree));
}

bool is_circulation(const MetricGraph& g, const std::vector<Integer>& flow) {
  std::vector<Integer> net(g.vertices.size(), 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    net[g.vertex_index(g.edges[i].tail)] -= flow[i];
    net[g.vertex_index(g.edges[i].head)] += flow[i];
  }
  return std::all_of(net.begin(), net.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------- deletion / contraction

MetricGraph delete_edge(const MetricGraph& g, const std::string& edge, bool normalize) {
  std::size_t ei = g.edge_index(edge);
  MetricGraph out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(ei));
  if (out.edges.empty()) throw DegenerateError("deleting " + edge + " leaves no edges");
  auto seen = reachable(out, out.basepoint, std::vector<bool>(out.edges.size(), true));
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    MetricGraph kept;
    kept.basepoint = out.basepoint;
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
      if (seen[i]) kept.vertices.push_back(out.vertices[i]);
    for (const auto& e : out.edges)
      if (seen[out.vertex_index(e.tail)]) kept.edges.push_back(e);
    out = kept;
  }
  if (out.edges.empty()) throw DegenerateError("deleting " + edge + " leaves no edges");
  return normalize ? normalize_curve(out) : out;
}

MetricGraph induced_subgraph(const MetricGraph& g, const std::set<std::string>& edges) {
  MetricGraph out;
  std::set<std::string> used;
  for (const auto& e : g.edges)
    if (edges.count(e.id)) {
      out.edges.push_back(e);
      used.insert(e.tail);
      used.insert(e.head);
    }
  for (const auto& id : edges) g.edge_index(id);
  for (const auto& v : g.vertices)
    if (used.count(v)) out.vertices.push_back(v);
  out.basepoint = used.count(g.basepoint) ? g.basepoint : (out.vertices.empty() ? "" : out.vertices.front());
  return out;
}

MetricGraph contract_subcurve(const MetricGraph& g, const std::set<std::string>& edges) {
  MetricGraph sub = induced_subgraph(g, edges);
  if (sub.edges.empty()) throw DisconnectedSubcurve("empty subcurve");
  if (!is_connected(sub)) throw DisconnectedSubcurve("subcurve edges do not form a connected subgraph");
  std::set<std::string> merged(sub.vertices.begin(), sub.vertices.end());
  const std::string rep = sub.vertices.front();
  MetricGraph out;
  for (const auto& v : g.vertices)
    if (!merged.count(v) || v == rep) out.vertices.push_back(v);
  for (auto e : g.edges) {
    if (edges.count(e.id)) continue;
    if (merged.count(e.tail)) e.tail = rep;
    if (merged.count(e.head)) e.head = rep;
    out.edges.push_back(e);
  }
  out.basepoint = merged.count(g.basepoint) ? rep : g.basepoint;
  if (out.edges.empty()) throw DegenerateError("contraction leaves no edges");
  return out;
}

// ---------------------------------------------------------------- K4 search

namespace {

// Is the edge subset (bitmask over g.edges) a subdivision of K4?
bool is_k4_subdivision(const MetricGraph& g, const std::vector<std::size_t>& subset) {
  std::map<std::string, std::vector<std::size_t>> inc;
  for (auto i : subset) {
    const Edge& e = g.edges[i];
    if (e.is_loop()) return false;
    inc[e.tail].push_back(i);
    inc[e.head].push_back(i);
  }
  std::vector<std::string> branch;
  for (const auto& [v, es] : inc) {
    if (es.size() == 3) branch.push_back(v);
    else if (es.size() != 2) return false;
  }
  if (branch.size() != 4) return false;
  // trace the 6 branch paths
  std::set<std::pair<std::string, std::string>> links;
  std::set<std::size_t> used;
  for (const auto& b : branch)
    for (auto start : inc[b]) {
      if (used.count(start)) continue;
      std::string cur = b;
      std::size_t ei = start;
      for (;;) {
        used.insert(ei);
        const Edge& e = g.edges[ei];
        cur = e.tail == cur ? e.head : e.tail;
        if (inc[cur].size() == 3) break;
        ei = inc[cur][0] == ei ? inc[cur][1] : inc[cur][0];
      }
      if (cur == b) return false;
      auto key = std::minmax(b, cur);
      if (!links.insert(key).second) return false;
    }
  return links.size() == 6 && used.size() == subset.size();
}

}  // namespace

std::optional<std::set<std::string>> find_k4(const MetricGraph& g) {
  const std::size_t m = g.edges.size();
  for (std::size_t k = 6; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (is_k4_subdivision(g, idx)) {
        std::set<std::string> out;
        for (auto i : idx) out.insert(g.edges[i].id);
        return out;
      }
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- genus 3 types

std::string to_string(Genus3Type t) {
  switch (t) {
    case Genus3Type::K4: return "K4";
    case Genus3Type::H1: return "H1";
    case Genus3Type::H2: return "H2";
    case Genus3Type::H3: return "H3";
    case Genus3Type::H4: return "H4";
    case Genus3Type::Degenerate: return "degenerate";
  }
  return "degenerate";
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

const std::array<std::pair<Genus3Type, EdgeList>, 5>& catalog() {
  static const std::array<std::pair<Genus3Type, EdgeList>, 5> c{{
      {Genus3Type::K4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {Genus3Type::H1, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}}},
      {Genus3Type::H2, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 3}}},
      {Genus3Type::H3, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}}},
      {Genus3Type::H4, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 2}, {3, 3}}},
  }};
  return c;
}

std::multiset<std::pair<int, int>> relabel(const EdgeList& edges, const std::array<int, 4>& perm) {
  std::multiset<std::pair<int, int>> out;
  for (auto [a, b] : edges) out.insert(std::minmax(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]));
  return out;
}

}  // namespace

Genus3Type classify_genus3(const MetricGraph& input) {
  if (genus(input) != 3) throw WrongGenus("classify_genus3 needs genus 3, got " + std::to_string(genus(input)));
  MetricGraph g = normalize_with_provenance(input, false).graph;
  if (g.vertices.size() != 4 || g.edges.size() != 6) return Genus3Type::Degenerate;
  for (const auto& v : g.vertices)
    if (g.degree(v) != 3) return Genus3Type::Degenerate;
  EdgeList mine;
  for (const auto& e : g.edges)
    mine.emplace_back(static_cast<int>(g.vertex_index(e.tail)), static_cast<int>(g.vertex_index(e.head)));
  std::multiset<std::pair<int, int>> target;
  for (auto [a, b] : mine) target.insert(std::minmax(a, b));
  for (const auto& [type, edges] : catalog()) {
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      if (relabel(edges, perm) == target) return type;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return Genus3Type::Degenerate;
}

MetricGraph genus3_catalog_graph(Genus3Type t) {
  for (const auto& [type, edges] : catalog()) {
    if (type != t) continue;
    MetricGraph g;
    g.vertices = {"1", "2", "3", "4"};
    int k = 0;
    for (auto [a, b] : edges)
      g.edges.push_back({std::string(1, static_cast<char>('A' + k++)), std::to_string(a + 1), std::to_string(b + 1), Length(Rational(1))});
    g.basepoint = "1";
    return g;
  }
  throw ValidationError("no catalog graph for type " + to_string(t));
}

MetricGraph canonical_k4(const std::vector<Length>& lengths) {
  std::vector<Length> l = lengths;
  if (l.empty())
    for (const char* v : {"a", "b", "c", "d", "e", "f"}) l.push_back(Length::variable(v));
  if (l.size() != 6) throw ValidationError("canonical_k4 needs six lengths");
  MetricGraph g;
  g.vertices = {"1", "2", "3", "4"};
  g.edges = {{"D", "3", "4", l[3]}, {"E", "2", "3", l[4]}, {"F", "1", "3", l[5]},
             {"A", "1", "2", l[0]}, {"B", "4", "1", l[1]}, {"C", "2", "4", l[2]}};
  g.basepoint = "3";
  return g;
}

}  // namespace tropjac
