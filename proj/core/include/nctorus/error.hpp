#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nct {

enum class Errc {
  RationalTheta,
  NonSquarefree,
  ZeroDenominator,
  NonPositiveRank,
  NotPrimitive,
  NonPositive,
  OracleBoundTooSmall,
  OracleAmbiguous,
  OutOfRange,
  TargetOnBoundary,
  ZeroRankPiece,
  PreconditionFailed,
  NotInCTheta,
  NonConvergence,
  EqualVectors,
  ConeViolation,
  IncompatiblePresentations,
  NonPositiveQuotient,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Raised for every violated domain precondition. The CLI maps these to exit
/// status 1; malformed input text is reported separately as a usage error.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nct
