#pragma once

#include "tropjac/periods.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropjac {

/// Segment with polynomial endpoint coordinates in V.
struct PolySegment {
  std::vector<Poly> from, to;
  IntVec framing;
};

/// Connecting 2-chain for a null-homologous framed 1-cycle, built as a cone
/// from the origin: one triangle per segment, plus correction triangles at
/// every endpoint that move its lift back to a common representative of its
/// point class and unwind the lattice offset along lambda_1, ..., lambda_g.
/// Point classes and lattice offsets are read off at `generic_values` (a
/// numeric specialization of the length variables; unused for numeric
/// input). Throws NotBalanced or NotACycle when the input is not a
/// null-homologous cycle at that specialization.
std::vector<PolyCell> cone_chain(const std::vector<PolySegment>& cycle, const PolyMatrix& q,
                                 const std::map<std::string, Rational>& generic_values = {});

std::vector<Poly> constant_vector(const RatVec& v);

}  // namespace tropjac
