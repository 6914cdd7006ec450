#pragma once

#include "tropjac/boundary_solver.hpp"
#include "tropjac/cone.hpp"
#include "tropjac/curve.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropjac {

struct CeresaOptions {
  /// Edge whose images in W_1 and the translated W_1^- are made to coincide.
  /// Empty: the last edge in file order with a nonzero functional.
  std::string align_edge;
  /// Extra translation of W_1^- (V coordinates), added to the alignment.
  RatVec extra_shift;
  CWOptions cw;
  /// Also run the cone route on the symbolic companion.
  bool symbolic = true;
};

/// Translation t with W_1^- + t containing the image of `edge` in W_1.
RatVec alignment_translation(const JacobianData& jd, const std::string& edge);
std::string default_align_edge(const JacobianData& jd);

/// W_1 - (W_1^- + t), canonicalized; homologous to zero.
FramedChain ceresa_difference(const JacobianData& jd, const RatVec& t);

struct SymbolicCeresa {
  Poly integral;
  Poly residue;
  PeriodLattice lattice;
  bool in_lattice = false;
};

struct CeresaResult {
  FramedChain difference;
  FramedChain connecting;  // 2-chain with boundary `difference`
  Rational integral;
  Rational cone_integral;
  Rational residue;
  PeriodLattice lattice;
  bool in_lattice = false;
  bool routes_agree = false;  // integral - cone_integral lies in the lattice
  std::size_t cw_vertices = 0, cw_edges = 0, cw_faces = 0, cw_cells = 0;
  BoundaryStats stats;
  std::optional<SymbolicCeresa> symbolic;
};

/// Numeric Ceresa invariant of a genus 3 Jacobian with rational lengths:
/// integral of Omega_0 over a connecting 2-chain found in a CW structure,
/// cross-checked against the cone construction.
CeresaResult ceresa_invariant(const JacobianData& jd, const CeresaOptions& options = {});

/// Cone construction over polynomial coordinates; works for symbolic and
/// numeric graphs alike.
SymbolicCeresa symbolic_ceresa(const JacobianData& jd, const std::string& align_edge = {});

struct CeresaReport {
  int genus = 0;
  std::string type;  // genus 3 type, "reduced-from-K4", or "none"
  std::string verdict;
  std::string message;
  std::pair<int, int> k_range{0, 0};
  std::vector<std::string> core_edges;  // edges of the K4 core used
  std::optional<CeresaResult> numeric;
  std::optional<SymbolicCeresa> symbolic;
};

inline constexpr const char* kCertified = "certified-inequivalent";
inline constexpr const char* kInconclusive = "inconclusive";

/// Full pipeline: normalize, classify, reduce higher genus curves to a K4
/// core, then compute the invariant where the curve has one.
CeresaReport ceresa_report(const MetricGraph& g, const CeresaOptions& options = {});

}  // namespace tropjac
