#include "nctorus/constructions/eps_plan.hpp"

#include "nctorus/error.hpp"

#include <algorithm>

namespace nct {

std::string_view eps_action_name(EpsAction a) noexcept {
  switch (a) {
    case EpsAction::Kept: return "kept";
    case EpsAction::Dropped: return "dropped";
    case EpsAction::Shrunk: return "shrunk";
  }
  return "unknown";
}

namespace {

struct Planner {
  const ThetaContext& ctx;
  std::size_t scan_cap;
  EpsPlan& plan;

  bool below(const LatticeElem& v, const QuadNumber& bound) const { return compare(ctx, slope(ctx, v), bound) < 0; }

  void keep(const LatticeElem& v, const QuadNumber& share, const QuadNumber& bound) {
    plan.ledger.push_back(EpsStep{v, share, bound, EpsAction::Kept, std::nullopt, v, 0});
    plan.output.pieces.push_back(Piece{v, Stability::Stable});
  }

  void stable_step(const LatticeElem& v, const QuadNumber& share, const QuadNumber& bound) {
    if (below(v, bound)) {
      keep(v, share, bound);
      return;
    }
    QuadNumber rank = value(ctx, v);
    if (rank < share) {
      plan.ledger.push_back(EpsStep{v, share, bound, EpsAction::Dropped, std::nullopt, std::nullopt, 0});
      return;
    }
    SlopeValue mu = slope(ctx, v);
    PositiveConvergentStream stream(ctx);
    for (std::size_t scanned = 1; scanned <= scan_cap; ++scanned) {
      Convergent cv = stream.next();
      LatticeElem sub(cv.q, cv.p);
      QuadNumber sub_rank = value(ctx, sub);
      if (sub_rank >= rank || sub_rank >= share) continue;
      if (compare(slope(ctx, sub), mu) <= 0) continue;
      LatticeElem rest = v - sub;
      if (!below(rest, bound)) continue;
      plan.ledger.push_back(EpsStep{v, share, bound, EpsAction::Shrunk, cv, rest, scanned});
      plan.output.pieces.push_back(Piece{rest, rest.is_primitive() ? Stability::Stable : Stability::Semistable});
      return;
    }
    throw DomainError(Errc::NonConvergence,
                      "no convergent shrinks " + v.to_string() + " within " + std::to_string(scan_cap) + " terms");
  }

  void run(const std::vector<LatticeElem>& pieces, std::size_t lo, std::size_t hi, const QuadNumber& share,
           const QuadNumber& bound) {
    if (lo == hi) return;
    bool all_below = true;
    for (std::size_t i = lo; i < hi && all_below; ++i) all_below = below(pieces[i], bound);
    if (all_below) {
      for (std::size_t i = lo; i < hi; ++i) keep(pieces[i], share, bound);
      return;
    }
    if (hi - lo == 1) {
      stable_step(pieces[lo], share, bound);
      return;
    }
    QuadNumber first = slope(ctx, pieces[lo]).value(ctx);
    QuadNumber tighter = first < bound ? first : bound;
    QuadNumber half = share / QuadNumber(2);
    run(pieces, lo, lo + 1, half, tighter);
    run(pieces, lo + 1, hi, half, tighter);
  }
};

}  // namespace

EpsPlan eps_plan(const ThetaContext& ctx, const FormalSum& input, const Rational& eps, const Rational& c,
                 std::size_t scan_cap) {
  if (!input.lies_in_c_theta(ctx)) throw DomainError(Errc::NotInCTheta, "every piece must have positive rank");
  if (sgn(eps) <= 0) throw DomainError(Errc::NonPositive, "eps must be positive");
  EpsPlan plan{input, hn_group(ctx, input), eps, c, {}, {}, {}};
  std::vector<LatticeElem> stable;
  for (const auto& g : plan.groups)
    for (const auto& p : g.pieces.pieces) {
      Int k = p.inv.multiplicity();
      if (k > 1) plan.notes.push_back(p.inv.to_string() + " split into " + k.get_str() + " stable copies");
      LatticeElem unit(p.inv.m / k, p.inv.n / k);
      for (Int i = 0; i < k; ++i) stable.push_back(unit);
    }
  if (plan.groups.size() > 1) plan.notes.push_back("extensions between pieces of decreasing slope split");
  Planner planner{ctx, scan_cap, plan};
  planner.run(stable, 0, stable.size(), QuadNumber(eps), QuadNumber(c));
  EpsCheck check = validate_eps_plan(ctx, plan);
  if (!check.ok()) throw std::logic_error("eps plan failed its own validation");
  return plan;
}

EpsCheck validate_eps_plan(const ThetaContext& ctx, const EpsPlan& plan) {
  EpsCheck out;
  QuadNumber deficit = plan.input.total_rank(ctx) - plan.output.total_rank(ctx);
  out.rank_ok = deficit < QuadNumber(plan.eps);
  QuadNumber bound(plan.c);
  out.slopes_ok = std::all_of(plan.output.pieces.begin(), plan.output.pieces.end(), [&](const Piece& p) {
    return sign(ctx, p.inv) > 0 && compare(ctx, slope(ctx, p.inv), bound) < 0;
  });
  out.degrees_ok = std::all_of(plan.ledger.begin(), plan.ledger.end(), [](const EpsStep& s) {
    switch (s.action) {
      case EpsAction::Kept: return s.output && *s.output == s.input;
      case EpsAction::Dropped: return !s.output;
      case EpsAction::Shrunk:
        return s.convergent && s.output && s.output->m == s.input.m - s.convergent->q &&
               s.output->n == s.input.n - s.convergent->p;
    }
    return false;
  });
  return out;
}

}  // namespace nct
