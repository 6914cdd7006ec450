#include "tropjac/errors.hpp"
#include "tropjac/zonotope.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

using namespace tropjac;

namespace {

JacobianData unit_k4() { return JacobianData(canonical_k4(std::vector<Length>(6, Length(Rational(1))))); }

using P3 = std::array<long, 3>;

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
long dotp(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Hull {
  std::set<P3> vertices;
  std::set<std::pair<P3, long>> facets;  // primitive normal, offset
};

// brute-force hull of all signed sums 2 * sum(+-alpha_i e_i / 2), integer lengths
Hull hull_oracle(const std::vector<P3>& gens) {
  std::set<P3> pts;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    P3 p{0, 0, 0};
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (int k = 0; k < 3; ++k) p[k] += (mask >> i & 1) ? gens[i][k] : -gens[i][k];
    pts.insert(p);
  }
  std::vector<P3> v(pts.begin(), pts.end());
  Hull h;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      for (std::size_t c = b + 1; c < v.size(); ++c) {
        P3 n = cross(sub(v[b], v[a]), sub(v[c], v[a]));
        if (n == P3{0, 0, 0}) continue;
        long g = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
        for (auto& x : n) x /= g;
        long off = dotp(n, v[a]);
        bool above = false, below = false;
        for (const auto& p : v) {
          long s = dotp(n, p) - off;
          above |= s > 0;
          below |= s < 0;
        }
        if (above && below) continue;
        if (above)
          for (auto& x : n) x = -x;
        h.facets.insert({n, above ? -off : off});
      }
  for (const auto& p : v) {
    std::vector<P3> normals;
    for (const auto& [n, off] : h.facets)
      if (dotp(n, p) == off) normals.push_back(n);
    bool spans = false;
    for (std::size_t i = 0; i < normals.size() && !spans; ++i)
      for (std::size_t j = i + 1; j < normals.size() && !spans; ++j)
        for (std::size_t k = j + 1; k < normals.size() && !spans; ++k)
          spans = dotp(cross(normals[i], normals[j]), normals[k]) != 0;
    if (spans) h.vertices.insert(p);
  }
  return h;
}

int acyclic_orientations_k4() {
  const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int count = 0;
  for (int mask = 0; mask < 64; ++mask) {
    // acyclic iff some vertex order is compatible: try all 24 orders
    std::array<int, 4> order{0, 1, 2, 3};
    bool ok = false;
    do {
      std::array<int, 4> pos{};
      for (int i = 0; i < 4; ++i) pos[order[i]] = i;
      bool fits = true;
      for (int e = 0; e < 6 && fits; ++e) {
        auto [u, v] = edges[e];
        fits = (mask >> e & 1) ? pos[u] < pos[v] : pos[v] < pos[u];
      }
      ok = fits;
    } while (!ok && std::next_permutation(order.begin(), order.end()));
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Zonotope, K4CountsMatchOracles) {
  JacobianData jd = unit_k4();
  Zonotope z = build_zonotope(jd);
  EXPECT_EQ(z.vertices.size(), 24u);
  EXPECT_EQ(z.facets().size(), 14u);
  EXPECT_EQ(z.vertices.size(), static_cast<std::size_t>(acyclic_orientations_k4()));

  std::vector<P3> gens;
  for (const auto& g : z.generators) gens.push_back({g.direction[0].convert_to<long>(), g.direction[1].convert_to<long>(), g.direction[2].convert_to<long>()});
  Hull h = hull_oracle(gens);
  EXPECT_EQ(h.facets.size(), 14u);
  std::set<P3> doubled;
  for (const auto& v : z.vertices) doubled.insert({(2 * v[0]).convert_to<long>(), (2 * v[1]).convert_to<long>(), (2 * v[2]).convert_to<long>()});
  EXPECT_EQ(doubled, h.vertices);
}

TEST(Zonotope, FaceLatticeOfK4) {
  Zonotope z = build_zonotope(unit_k4());
  ASSERT_EQ(z.faces.size(), 4u);
  EXPECT_EQ(z.faces[0].size(), 1u);
  EXPECT_EQ(z.faces[2].size(), 36u);  // edges: V - E + F = 2
  EXPECT_EQ(z.faces[3].size(), 24u);
  for (const auto& f : z.faces[2]) EXPECT_EQ(f.vertices.size(), 2u);
  std::size_t squares = 0, hexagons = 0;
  for (const auto& f : z.facets()) {
    squares += f.vertices.size() == 4;
    hexagons += f.vertices.size() == 6;
  }
  EXPECT_EQ(squares, 6u);
  EXPECT_EQ(hexagons, 8u);
}

TEST(Zonotope, SymmetryVolumeAndIntegrality) {
  JacobianData jd(canonical_k4({Rational(3, 2), Rational(2), Rational(5, 4), Rational(1), Rational(7, 3), Rational(1, 2)}));
  Zonotope z = build_zonotope(jd);
  std::set<RatVec> verts(z.vertices.begin(), z.vertices.end());
  for (const auto& v : z.vertices) EXPECT_TRUE(verts.count(-v));
  EXPECT_EQ(z.volume(), determinant(jd.gram()));
  for (const auto& v : z.vertices) EXPECT_TRUE(z.contains(v));
  EXPECT_FALSE(z.contains(Rational(2) * z.vertices.front()));
}

TEST(Zonotope, OneDimensional) {
  Zonotope seg = make_zonotope(1, {{{1}, Rational(3), "X"}});
  EXPECT_EQ(seg.vertices.size(), 2u);
  Zonotope two = make_zonotope(1, {{{1}, Rational(3), "X"}, {{-1}, Rational(1, 2), "Y"}, {{0}, Rational(5), "Z"}});
  EXPECT_EQ(two.generators.size(), 2u);
  std::set<RatVec> v(two.vertices.begin(), two.vertices.end());
  EXPECT_EQ(v, (std::set<RatVec>{{Rational(-7, 4)}, {Rational(7, 4)}}));
  EXPECT_THROW(make_zonotope(2, {{{1, 0}, Rational(1), "X"}}), WrongRank);
}

TEST(Projection, DeleteAFromK4) {
  ProjectionCheck p = project_zonotope(unit_k4(), "A");
  EXPECT_EQ(p.deleted.dim, 2u);
  EXPECT_EQ(p.deleted.generators.size(), 5u);
  EXPECT_TRUE(p.unimodular);
  EXPECT_TRUE(p.matches);
}

TEST(Projection, EveryEdgeOfGenericK4) {
  JacobianData jd(canonical_k4({Rational(3, 2), Rational(2), Rational(5, 4), Rational(1), Rational(7, 3), Rational(1, 2)}));
  for (const auto& e : jd.graph().edges) EXPECT_TRUE(project_zonotope(jd, e.id).matches) << e.id;
}

TEST(Projection, TwoDeletionsCommute) {
  MetricGraph g = unit_k4().graph();
  JacobianData a(delete_edge(g, "A", false)), b(delete_edge(g, "B", false));
  ProjectionCheck ab = project_zonotope(a, "B"), ba = project_zonotope(b, "A");
  EXPECT_TRUE(ab.matches);
  EXPECT_TRUE(ba.matches);
  EXPECT_EQ(ab.deleted.vertices.size(), ba.deleted.vertices.size());
  EXPECT_EQ(ab.deleted.volume(), ba.deleted.volume());
}

TEST(Projection, LoopProjectsToPoint) {
  ProjectionCheck p = project_zonotope(JacobianData(load_curve(std::string(TROPJAC_TEST_DATA) + "/loop.json")), "L");
  EXPECT_EQ(p.deleted.dim, 0u);
  EXPECT_EQ(p.deleted.vertices.size(), 1u);
}

TEST(Projection, BridgeIsRejected) {
  MetricGraph g;
  g.vertices = {"1", "2"};
  g.edges = {{"L", "1", "1", Length(Rational(1))}, {"B", "1", "2", Length(Rational(1))}};
  g.basepoint = "1";
  EXPECT_THROW(project_zonotope(JacobianData(g), "B"), BridgeEdge);
}

TEST(Contraction, TriangleGivesFacet) {
  ContractionCheck c = contraction_face(unit_k4(), {"A", "E", "F"});
  EXPECT_EQ(c.codim, 1u);
  EXPECT_TRUE(c.matches);
  EXPECT_EQ(c.face.vertices.size(), c.contracted.vertices.size());
}

TEST(Contraction, GenusTwoGivesEdge) {
  ContractionCheck c = contraction_face(unit_k4(), {"A", "B", "C", "D", "E"});
  EXPECT_EQ(c.codim, 2u);
  EXPECT_EQ(c.face.vertices.size(), 2u);
  EXPECT_TRUE(c.matches);
}

TEST(Contraction, TreeAndWholeCurve) {
  ContractionCheck tree = contraction_face(unit_k4(), {"D"});
  EXPECT_EQ(tree.codim, 0u);
  EXPECT_TRUE(tree.matches);
  ContractionCheck all = contraction_face(unit_k4(), {"A", "B", "C", "D", "E", "F"});
  EXPECT_EQ(all.codim, 3u);
  EXPECT_TRUE(all.matches);
}

TEST(Contraction, DisconnectedIsRejected) {
  EXPECT_THROW(contraction_face(unit_k4(), {"A", "D"}), NotASubcurve);
  EXPECT_THROW(contraction_face(unit_k4(), {"Q"}), NotASubcurve);
}

TEST(ZonotopeJson, ShapeOfExport) {
  std::string j = zonotope_to_json(build_zonotope(unit_k4()));
  EXPECT_NE(j.find("\"dim\": 3"), std::string::npos);
  EXPECT_NE(j.find("\"facets\""), std::string::npos);
}
