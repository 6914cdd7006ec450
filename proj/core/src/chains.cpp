#include "tropjac/chains.hpp"

#include "tropjac/errors.hpp"
#include "tropjac/integer_lattice.hpp"

#include <algorithm>
#include <mutex>

namespace tropjac {

Torus::Torus(const JacobianData& jd) : q_(jd.gram()), q_inv_(jd.gram_inverse()) {}

Torus::Torus(RatMatrix q) : q_(std::move(q)), q_inv_(inverse(q_)) {}

namespace {

struct Chart {
  RatMatrix m, m_inv;
};

// Unimodular charts sending a primitive direction to e_1, cached per direction.
const Chart& chart_for(const IntVec& w) {
  static std::mutex mu;
  static std::map<IntVec, Chart> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  IntMatrix m = unimodular_completion(w);
  return cache.emplace(w, Chart{to_rational(m), to_rational(unimodular_inverse(m))}).first->second;
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

std::vector<RatVec> to_lattice(const Torus& t, const std::vector<RatVec>& verts) {
  std::vector<RatVec> out;
  for (const auto& v : verts) out.push_back(t.to_lattice(v));
  return out;
}

FramedCell from_lattice(const Torus& t, const std::vector<RatVec>& verts, const IntVec& framing) {
  FramedCell cell{{}, framing};
  for (const auto& v : verts) cell.verts.push_back(t.from_lattice(v));
  return cell;
}

bool collinear(const RatVec& a, const RatVec& b) { return is_zero(area_bivector({RatVec(a.size(), 0), a, b})); }

FramedChain sorted(FramedChain c) {
  std::sort(c.cells.begin(), c.cells.end(), [](const FramedCell& a, const FramedCell& b) {
    return std::tie(a.verts, a.framing) < std::tie(b.verts, b.framing);
  });
  return c;
}

FramedChain canonicalize_points(const Torus& t, const FramedChain& c) {
  std::map<RatVec, IntVec> acc;
  const std::size_t g = t.dim();
  for (const auto& cell : c.cells) {
    auto& slot = acc.try_emplace(frac_vec(t.to_lattice(cell.verts[0])), IntVec(g, 0)).first->second;
    slot = slot + cell.framing;
  }
  FramedChain out{0, {}};
  for (const auto& [p, beta] : acc)
    if (!is_zero(beta)) out.cells.push_back(from_lattice(t, {p}, beta));
  return sorted(out);
}

// Piecewise-constant Gamma_2-valued function on a closed geodesic of period 1.
struct CircleFunction {
  IntVec base;
  std::map<Rational, IntVec> delta;  // jumps at points of [0,1)
};

void add_arc(CircleFunction& f, const Rational& start, const Rational& length, const IntVec& beta) {
  Integer wraps = floor_div(length);
  f.base = f.base + wraps * beta;
  Rational rest = length - Rational(wraps);
  if (rest == 0) return;
  Rational a = frac(start);
  Rational b = a + rest;
  auto bump = [&](const Rational& x, const IntVec& v) {
    auto& slot = f.delta.try_emplace(x, IntVec(beta.size(), 0)).first->second;
    slot = slot + v;
  };
  if (b <= 1) {
    bump(a, beta);
    if (b < 1) bump(b, -beta);
  } else {
    f.base = f.base + beta;
    bump(b - 1, -beta);
    bump(a, beta);
  }
}

// Maximal arcs [s, e) (e may exceed 1 for arcs through 0) with constant value.
std::vector<std::tuple<Rational, Rational, IntVec>> arcs_of(const CircleFunction& f) {
  std::vector<std::pair<Rational, IntVec>> pieces;  // value on [point, next point)
  IntVec value = f.base;
  bool have_zero = f.delta.count(Rational(0)) > 0;
  if (!have_zero) pieces.emplace_back(Rational(0), value);
  for (const auto& [x, d] : f.delta) {
    value = value + d;
    if (!pieces.empty() && pieces.back().second == value) continue;
    pieces.emplace_back(x, value);
  }
  std::vector<std::tuple<Rational, Rational, IntVec>> out;
  if (pieces.size() == 1 || std::all_of(pieces.begin(), pieces.end(), [&](const auto& p) { return p.second == pieces[0].second; })) {
    if (!is_zero(pieces[0].second)) out.emplace_back(Rational(0), Rational(1), pieces[0].second);
    return out;
  }
  std::size_t n = pieces.size();
  bool wrap_merge = pieces.front().first == 0 && pieces.front().second == pieces.back().second;
  std::size_t first = wrap_merge ? 1 : 0;
  std::size_t last = wrap_merge ? n - 1 : n;
  for (std::size_t i = first; i < last; ++i) {
    Rational end = i + 1 < n ? pieces[i + 1].first : Rational(1);
    if (!is_zero(pieces[i].second)) out.emplace_back(pieces[i].first, end, pieces[i].second);
  }
  if (wrap_merge && !is_zero(pieces.back().second))
    out.emplace_back(pieces.back().first, Rational(1) + pieces[1].first, pieces.back().second);
  return out;
}

FramedChain canonicalize_segments(const Torus& t, const FramedChain& c) {
  const std::size_t g = t.dim();
  std::map<std::pair<IntVec, RatVec>, CircleFunction> lines;
  for (const auto& cell : c.cells) {
    RatVec p = t.to_lattice(cell.verts[0]);
    RatVec q = t.to_lattice(cell.verts[1]);
    if (p == q || is_zero(cell.framing)) continue;
    GeodesicSegment s = locate_on_geodesic(p, q);
    auto& f = lines.try_emplace({s.direction, s.offset}, CircleFunction{IntVec(g, 0), {}}).first->second;
    add_arc(f, s.start, s.length, s.reversed ? -cell.framing : cell.framing);
  }
  FramedChain out{1, {}};
  for (const auto& [key, f] : lines) {
    for (const auto& [s, e, beta] : arcs_of(f)) {
      RatVec a = geodesic_point(key.first, key.second, s);
      RatVec b = geodesic_point(key.first, key.second, e);
      RatVec shift = floor_vec(a);
      out.cells.push_back(from_lattice(t, {a - shift, b - shift}, beta));
    }
  }
  return sorted(out);
}

FramedChain canonicalize_polygons(const Torus& t, const FramedChain& c) {
  const std::size_t g = t.dim();
  std::map<std::vector<RatVec>, IntVec> acc;
  for (const auto& cell : c.cells) {
    if (is_zero(cell.framing)) continue;
    std::vector<RatVec> raw = to_lattice(t, cell.verts);
    std::vector<RatVec> vs;
    for (const auto& v : raw)
      if (vs.empty() || vs.back() != v) vs.push_back(v);
    while (vs.size() > 1 && vs.front() == vs.back()) vs.pop_back();
    // drop vertices interior to a side
    bool changed = true;
    while (changed && vs.size() >= 3) {
      changed = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const RatVec& prev = vs[(i + vs.size() - 1) % vs.size()];
        const RatVec& next = vs[(i + 1) % vs.size()];
        if (collinear(vs[i] - prev, next - vs[i])) {
          vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    if (vs.size() < 3) continue;
    RatVec area = area_bivector(vs);
    int sign = leading_sign(area);
    if (sign == 0) continue;
    std::size_t i0 = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    std::rotate(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i0), vs.end());
    IntVec beta = cell.framing;
    if (sign < 0) {
      std::reverse(vs.begin() + 1, vs.end());
      beta = -beta;
    }
    RatVec shift = floor_vec(vs[0]);
    for (auto& v : vs) v = v - shift;
    auto& slot = acc.try_emplace(vs, IntVec(g, 0)).first->second;
    slot = slot + beta;
  }
  FramedChain out{2, {}};
  for (const auto& [vs, beta] : acc)
    if (!is_zero(beta)) out.cells.push_back(from_lattice(t, vs, beta));
  return sorted(out);
}

}  // namespace

RatVec area_bivector(const std::vector<RatVec>& poly) {
  const std::size_t g = poly.empty() ? 0 : poly[0].size();
  RatVec out;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = j + 1; k < g; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const RatVec& a = poly[i];
        const RatVec& b = poly[(i + 1) % poly.size()];
        s += a[j] * b[k] - a[k] * b[j];
      }
      out.push_back(s / 2);
    }
  return out;
}

GeodesicSegment locate_on_geodesic(const RatVec& p, const RatVec& q) {
  RatVec d = q - p;
  if (is_zero(d)) throw DegenerateSegment("segment has zero length");
  PrimitiveDirection pd = primitive_direction(d);
  GeodesicSegment s;
  s.direction = pd.direction;
  s.length = pd.scale;
  RatVec start = p;
  if (leading_sign(s.direction) < 0) {
    s.direction = -s.direction;
    start = q;
    s.reversed = true;
  }
  const Chart& chart = chart_for(s.direction);
  RatVec y = chart.m * start;
  s.start = y[0];
  for (std::size_t i = 1; i < y.size(); ++i) s.offset.push_back(frac(y[i]));
  return s;
}

RatVec geodesic_point(const IntVec& direction, const RatVec& offset, const Rational& t) {
  RatVec y{t};
  y.insert(y.end(), offset.begin(), offset.end());
  return chart_for(direction).m_inv * y;
}

FramedChain canonicalize(const Torus& torus, const FramedChain& c) {
  switch (c.k) {
    case 0: return canonicalize_points(torus, c);
    case 1: return canonicalize_segments(torus, c);
    case 2: return canonicalize_polygons(torus, c);
    default: throw ValidationError("chains of dimension " + std::to_string(c.k) + " are not supported");
  }
}

FramedChain canonicalize(const JacobianData& jd, const FramedChain& c) { return canonicalize(Torus(jd), c); }

FramedChain boundary(const Torus& torus, const FramedChain& c) {
  if (c.k < 1) throw ValidationError("boundary of a 0-chain");
  FramedChain out{c.k - 1, {}};
  for (const auto& cell : c.cells) {
    if (c.k == 1) {
      out.cells.push_back({{cell.verts[1]}, cell.framing});
      out.cells.push_back({{cell.verts[0]}, -cell.framing});
    } else {
      for (std::size_t i = 0; i < cell.verts.size(); ++i)
        out.cells.push_back({{cell.verts[i], cell.verts[(i + 1) % cell.verts.size()]}, cell.framing});
    }
  }
  return canonicalize(torus, out);
}

FramedChain boundary(const JacobianData& jd, const FramedChain& c) { return boundary(Torus(jd), c); }

FramedChain translate(const FramedChain& c, const RatVec& t) {
  FramedChain out = c;
  for (auto& cell : out.cells)
    for (auto& v : cell.verts) v = v + t;
  return out;
}

FramedChain negate(const FramedChain& c) {
  FramedChain out = c;
  for (auto& cell : out.cells) {
    for (auto& v : cell.verts) v = -v;
    cell.framing = -cell.framing;
  }
  return out;
}

FramedChain reverse(const FramedChain& c) {
  FramedChain out = c;
  for (auto& cell : out.cells) cell.framing = -cell.framing;
  return out;
}

FramedChain operator+(const FramedChain& a, const FramedChain& b) {
  if (!a.empty() && !b.empty() && a.k != b.k) throw ValidationError("adding chains of different dimension");
  FramedChain out{a.empty() ? b.k : a.k, a.cells};
  out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
  return out;
}

FramedChain operator-(const FramedChain& a, const FramedChain& b) { return a + reverse(b); }

bool is_cycle(const Torus& torus, const FramedChain& c) { return c.k == 0 || boundary(torus, c).empty(); }

bool same_chain(const Torus& torus, const FramedChain& a, const FramedChain& b) {
  return canonicalize(torus, a - b).empty();
}

HomologyClass homology_class(const JacobianData& jd, const FramedChain& c) {
  Torus torus(jd);
  const std::size_t g = torus.dim();
  if (!is_cycle(torus, c)) throw NotACycle("chain has nonzero boundary");
  if (c.k != 1 && c.k != 2) throw ValidationError("homology classes are computed for k = 1, 2");
  std::size_t rows = c.k == 1 ? g : g * (g - 1) / 2;
  RatMatrix acc(rows, g);
  for (const auto& cell : c.cells) {
    RatVec w = c.k == 1 ? torus.to_lattice(cell.verts[1] - cell.verts[0]) : area_bivector(to_lattice(torus, cell.verts));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < g; ++j) acc(i, j) += w[i] * Rational(cell.framing[j]);
  }
  HomologyClass h{c.k, IntMatrix(rows, g)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (denominator(acc(i, j)) != 1) throw NonIntegralClass("winding entry " + to_string(acc(i, j)) + " is not an integer");
      h.matrix(i, j) = numerator(acc(i, j));
    }
  return h;
}

}  // namespace tropjac
