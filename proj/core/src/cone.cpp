#include "tropjac/cone.hpp"

#include "tropjac/errors.hpp"

namespace tropjac {

namespace {

RatVec specialize(const std::vector<Poly>& v, const std::map<std::string, Rational>& values) {
  RatVec out;
  for (const auto& x : v) out.push_back(x.evaluate(values));
  return out;
}

std::vector<Poly> add(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Poly> combination(const PolyMatrix& q, const IntVec& n) {
  std::vector<Poly> out(q.rows(), Poly(0));
  for (std::size_t j = 0; j < q.cols(); ++j) {
    if (n[j] == 0) continue;
    Poly c(Rational(n[j]));
    for (std::size_t i = 0; i < q.rows(); ++i) out[i] += c * q(i, j);
  }
  return out;
}

struct Endpoint {
  std::vector<Poly> point;
  IntVec framing;
  int sign;  // +1 start of a segment, -1 end
};

}  // namespace

std::vector<Poly> constant_vector(const RatVec& v) {
  std::vector<Poly> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::vector<PolyCell> cone_chain(const std::vector<PolySegment>& cycle, const PolyMatrix& q,
                                 const std::map<std::string, Rational>& generic_values) {
  const std::size_t g = q.rows();
  RatMatrix qn = q.map<Rational>([&](const Poly& p) { return p.evaluate(generic_values); });
  RatMatrix qinv = inverse(qn);
  const std::vector<Poly> origin(g, Poly(0));

  std::vector<PolyCell> out;
  std::vector<Endpoint> ends;
  for (const auto& s : cycle) {
    out.push_back({{origin, s.from, s.to}, s.framing});
    ends.push_back({s.from, s.framing, 1});
    ends.push_back({s.to, s.framing, -1});
  }

  // group endpoints by point class on the torus
  std::map<RatVec, std::vector<std::pair<std::size_t, IntVec>>> classes;
  std::map<RatVec, std::vector<Poly>> representative;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    RatVec c = qinv * specialize(ends[i].point, generic_values);
    RatVec key;
    IntVec shift;
    for (const auto& x : c) {
      key.push_back(frac(x));
      shift.push_back(floor_div(x));
    }
    classes[key].emplace_back(i, shift);
  }
  IntVec total_class_check(g * g, 0);
  for (const auto& [key, members] : classes) {
    const IntVec& base_shift = members.front().second;
    std::vector<Poly> rep = ends[members.front().first].point;
    IntVec balance(g, 0);
    for (const auto& [i, shift] : members) {
      const Endpoint& e = ends[i];
      IntVec n = shift - base_shift;
      std::vector<Poly> lam = combination(q, n);
      if (add(rep, lam) != e.point) throw NotACycle("endpoint lifts are not lattice translates of each other");
      balance = balance + Integer(e.sign) * e.framing;
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) total_class_check[a * g + b] += Integer(e.sign) * n[a] * e.framing[b];
      if (is_zero(n)) continue;
      IntVec beta = Integer(e.sign) * e.framing;
      out.push_back({{origin, lam, e.point}, beta});
      std::vector<Poly> prev = origin;
      IntVec partial(g, 0);
      for (std::size_t k = 0; k < g; ++k) {
        if (n[k] == 0) continue;
        partial[k] = n[k];
        std::vector<Poly> next = combination(q, partial);
        if (prev != origin) out.push_back({{origin, prev, next}, beta});
        prev = next;
      }
    }
    if (!is_zero(balance)) throw NotBalanced("framings do not balance at an endpoint class");
  }
  if (!is_zero(total_class_check)) throw NotACycle("cycle has a nonzero homology class");
  return out;
}

}  // namespace tropjac
