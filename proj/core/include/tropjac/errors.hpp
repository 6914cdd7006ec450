#pragma once

#include <stdexcept>
#include <string>

namespace tropjac {

/// Base of every error raised by the library. `kind()` is a stable tag used
/// by the CLI and by reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TROPJAC_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

TROPJAC_DEFINE_ERROR(ParseError)
TROPJAC_DEFINE_ERROR(ValidationError)
TROPJAC_DEFINE_ERROR(DegenerateError)
TROPJAC_DEFINE_ERROR(UnknownEdge)
TROPJAC_DEFINE_ERROR(DisconnectedSubcurve)
TROPJAC_DEFINE_ERROR(WrongGenus)
TROPJAC_DEFINE_ERROR(SingularLattice)
TROPJAC_DEFINE_ERROR(NotBalanced)
TROPJAC_DEFINE_ERROR(NotACycle)
TROPJAC_DEFINE_ERROR(NonIntegralClass)
TROPJAC_DEFINE_ERROR(NoSolution)
TROPJAC_DEFINE_ERROR(UnsupportedChain)
TROPJAC_DEFINE_ERROR(DegenerateSegment)
TROPJAC_DEFINE_ERROR(WrongRank)
TROPJAC_DEFINE_ERROR(BridgeEdge)
TROPJAC_DEFINE_ERROR(NotASubcurve)

#undef TROPJAC_DEFINE_ERROR

}  // namespace tropjac
