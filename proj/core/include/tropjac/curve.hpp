#pragma once

#include "tropjac/matrix.hpp"
#include "tropjac/poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tropjac {

/// Edge length: an exact rational, or (symbolic mode) a polynomial in the
/// declared length variables. Parsed symbolic lengths are single variables;
/// sums appear when 2-valent vertices are smoothed out.
class Length {
 public:
  Length() : value_(Rational(0)) {}
  Length(const Rational& r) : value_(r) {}  // NOLINT
  Length(const Poly& p) : value_(p) {}      // NOLINT
  static Length variable(const std::string& name) { return Length(Poly::variable(name)); }

  bool is_symbolic() const { return std::holds_alternative<Poly>(value_); }
  const Rational& rational() const;
  Poly poly() const;  // numeric lengths become constants
  std::string str() const;

  friend Length operator+(const Length& a, const Length& b);
  friend bool operator==(const Length& a, const Length& b) { return a.value_ == b.value_; }

 private:
  std::variant<Rational, Poly> value_;
};

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  Length length;

  bool is_loop() const { return tail == head; }
};

/// Connected multigraph with oriented, metrized edges and a base point. The
/// file order of vertices and edges is significant: every basis choice
/// downstream is derived from it.
struct MetricGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::string basepoint;

  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;  // throws UnknownEdge
  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;
  bool is_symbolic() const;  // true iff every length is symbolic
  std::size_t degree(const std::string& v) const;  // loops count twice
  std::vector<std::size_t> incident_edges(const std::string& v) const;

  /// Checks ids, endpoints, basepoint, connectivity and length signs. Zero
  /// lengths are accepted only when `allow_zero_lengths` is set.
  void validate(bool allow_zero_lengths = false) const;
};

bool is_connected(const MetricGraph& g);
int genus(const MetricGraph& g);
/// Indices of edges whose removal disconnects the graph.
std::vector<std::size_t> bridges(const MetricGraph& g);

/// Parses the curve JSON format. Throws ParseError for malformed content and
/// ValidationError for semantic violations.
MetricGraph parse_curve(const std::string& text);
MetricGraph load_curve(const std::string& path);
std::string curve_to_json(const MetricGraph& g);

/// Replace every length by the variable named after the lower-cased edge id.
MetricGraph symbolic_companion(const MetricGraph& g);
/// Substitute numeric values for all length variables.
MetricGraph specialize(const MetricGraph& g, const std::map<std::string, Rational>& values);

/// Each edge of a normalized graph is a path of original edges; the sign
/// records whether the original edge runs along (+1) or against (-1) it.
using EdgeProvenance = std::map<std::string, std::vector<std::pair<std::string, int>>>;

struct NormalizedCurve {
  MetricGraph graph;
  EdgeProvenance provenance;
};

/// Removes leaves and smooths 2-valent vertices. A 2-valent base point is
/// kept unless `keep_basepoint` is false.
NormalizedCurve normalize_with_provenance(const MetricGraph& g, bool keep_basepoint = true);
MetricGraph normalize_curve(const MetricGraph& g);

/// Fundamental cycles of a spanning tree. `cycles` is g x m (columns in edge
/// file order); row i is the cycle of cotree edge i, with +1 on that edge.
struct CycleBasis {
  std::vector<std::size_t> tree;    // edge indices, file order
  std::vector<std::size_t> cotree;  // edge indices, file order
  IntMatrix cycles;
  std::size_t genus() const { return cotree.size(); }
};

/// Breadth-first spanning tree from the base point, scanning edges in file
/// order.
CycleBasis cycle_basis(const MetricGraph& g);
/// Basis for a caller-chosen spanning tree (edge ids).
CycleBasis cycle_basis(const MetricGraph& g, const std::set<std::string>& tree_edges);

/// Signed edge flow (length m, file order) of the tree path from the base
/// point to each vertex; indexed like `g.vertices`.
std::vector<IntVec> tree_paths(const MetricGraph& g, const CycleBasis& basis);

/// True iff every row of `cycles` satisfies flow conservation at each vertex.
bool is_circulation(const MetricGraph& g, const std::vector<Integer>& flow);

MetricGraph delete_edge(const MetricGraph& g, const std::string& edge, bool normalize = true);
MetricGraph contract_subcurve(const MetricGraph& g, const std::set<std::string>& edges);
/// Subgraph on the given edges (vertices that keep an edge), unnormalized.
MetricGraph induced_subgraph(const MetricGraph& g, const std::set<std::string>& edges);

/// Edge set of a subdivided K4 inside g, smallest first, then lexicographic
/// in edge file order.
std::optional<std::set<std::string>> find_k4(const MetricGraph& g);

/// The five trivalent genus-3 types. K4 is the complete graph; the four
/// hyperelliptic types are, in this catalog's order:
///   H1 - 4-cycle with two opposite edges doubled
///   H2 - triangle with one doubled side and a looped pendant edge
///   H3 - chain loop = double edge = loop
///   H4 - three loops on the leaves of a 3-star
enum class Genus3Type { K4, H1, H2, H3, H4, Degenerate };
std::string to_string(Genus3Type t);
Genus3Type classify_genus3(const MetricGraph& g);
/// Catalog graphs with unit lengths (vertices "1".."4").
MetricGraph genus3_catalog_graph(Genus3Type t);

/// K4 with the labeling A=(1,2), B=(1,4), C=(2,4), D=(3,4), E=(2,3), F=(1,3),
/// listed D,E,F,A,B,C with base point 3 so that the BFS tree is {D,E,F}. B
/// runs 4 -> 1. Lengths default to a..f (symbolic) when `lengths` is empty.
MetricGraph canonical_k4(const std::vector<Length>& lengths_abcdef = {});

}  // namespace tropjac
