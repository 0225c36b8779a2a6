#pragma once

#include "nctorus/kinv.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/quadratic.hpp"
#include "nctorus/theta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nct {

enum class EpsAction { Kept, Dropped, Shrunk };

std::string_view eps_action_name(EpsAction a) noexcept;

/// One stable piece P of the plan with the rank share and slope bound it was
/// handed. A shrunk piece becomes P' = P - V for V = (q, p) taken from a
/// positive convergent.
struct EpsStep {
  LatticeElem input;
  QuadNumber share;
  QuadNumber bound;
  EpsAction action = EpsAction::Kept;
  std::optional<Convergent> convergent;
  std::optional<LatticeElem> output;
  std::size_t scanned = 0;
};

struct EpsPlan {
  FormalSum input;
  std::vector<HnGroup> groups;
  Rational eps;
  Rational c;
  FormalSum output;
  std::vector<EpsStep> ledger;
  std::vector<std::string> notes;
};

/// A subobject P' of the input with rk P' > rk P - eps whose pieces all have
/// slope < C. Semistable pieces are split into gcd copies of their primitive
/// part; the list (in decreasing slope order) is halved recursively, both
/// halves get eps/2 and the bound min(C, slope of the first piece). Throws
/// NotInCTheta, NonPositive for eps <= 0, NonConvergence past the scan cap.
EpsPlan eps_plan(const ThetaContext& ctx, const FormalSum& input, const Rational& eps, const Rational& c,
                 std::size_t scan_cap = 2000);

struct EpsCheck {
  bool rank_ok = false;
  bool slopes_ok = false;
  bool degrees_ok = false;
  bool ok() const { return rank_ok && slopes_ok && degrees_ok; }
};

/// Re-checks the plan's guarantees exactly.
EpsCheck validate_eps_plan(const ThetaContext& ctx, const EpsPlan& plan);

}  // namespace nct
