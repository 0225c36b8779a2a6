#pragma once

#include "nctorus/lattice.hpp"
#include "nctorus/quadratic.hpp"
#include "nctorus/theta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nct {

/// A presentation of P/S where S = union of the chain S_1 < S_2 < ... inside
/// P, everything recorded by lattice ranks. `declared_limit` is the exact rank
/// of S when known; `terminates` says S equals the last chain element.
struct ChainPresentation {
  ThetaContext theta;
  LatticeElem ambient;
  std::vector<LatticeElem> chain;
  std::optional<QuadNumber> declared_limit;
  bool terminates = false;
};

/// Throws PreconditionFailed unless 0 <= S_1 < S_2 < ... <= P, any declared
/// limit sits in [last, rk P], and a terminating chain is nonempty.
void validate_chain(const ChainPresentation& cp);

/// Ranks S_i -> r of a quasi-subsheaf of the stable P: normalize rk P to 1,
/// approach r / rk P from below with the division tree and map back. The
/// limit r is declared exactly. Throws PreconditionFailed unless 0 < r < rk P,
/// TargetOnBoundary if r / rk P is a division point.
ChainPresentation quasi_subsheaf_chain(const ThetaContext& ctx, const LatticeElem& p_rank, const QuadNumber& r,
                                       std::size_t n);

/// Exact rk(P/S) when the chain terminates or its limit is declared,
/// otherwise the bracket rk P - (limit guess) with lower bound 0 and upper
/// bound rk P - rk S_last.
struct QuotientRank {
  std::optional<QuadNumber> exact;
  QuadNumber lower;
  QuadNumber upper;

  std::string to_string() const;
};

QuotientRank rank_of_quotient(const ChainPresentation& cp);

/// Drops the first k chain elements (a cofinal subchain). A terminating
/// chain keeps at least its last element.
ChainPresentation drop_prefix(const ChainPresentation& cp, std::size_t k);
/// Prepends smaller elements to the chain.
ChainPresentation prepend(const ChainPresentation& cp, const std::vector<LatticeElem>& head);
/// Presents (P + U)/(S + U) by adding U to the ambient and to every S_i.
ChainPresentation pad_ambient(const ChainPresentation& cp, const LatticeElem& u);

/// Chains of a short exact sequence of quotients, with matching lengths and
/// a_i + b_i = c_i + rk P_sub termwise (a = sub, b = quot, c = whole).
struct AdditivityReport {
  bool exact = false;
  bool holds = false;
  QuadNumber sub_rank;
  QuadNumber quot_rank;
  QuadNumber whole_rank;
  std::vector<std::string> notes;
};

/// Throws IncompatiblePresentations when the three chains do not fit
/// together. With no exact limits the last chain elements are compared.
AdditivityReport rank_additivity_check(const ChainPresentation& sub, const ChainPresentation& whole,
                                       const ChainPresentation& quot);

/// sub = (Q, q_i), quot = (Q + R, Q + r_i), whole = (Q + R, q_i + r_i) from
/// two chains of the same length and shared theta.
struct SplitTriple {
  ChainPresentation sub;
  ChainPresentation whole;
  ChainPresentation quot;
};

SplitTriple direct_sum_triple(const ChainPresentation& q, const ChainPresentation& r);

struct HnEntry {
  LatticeElem quotient;
  SlopeValue slope;
  QuadNumber rank;
};

/// Successive quotients F_k / F_{k-1} of a filtration 0 = F_0 < F_1 < ...
/// with the ordering conditions on them.
struct HnProfile {
  std::vector<HnEntry> entries;
  /// Adjacent equal-slope quotients folded into one semistable quotient.
  std::size_t merged_steps = 0;
  bool slopes_strictly_decreasing = true;
  bool ranks_strictly_decreasing = true;
  std::size_t zero_degree_count = 0;
  bool valid = true;
};

/// Quotients of the chain elements, read as 0 = F_0 < F_1 < ... Throws
/// NonPositiveQuotient if some quotient has rank <= 0. Violated ordering
/// conditions are reported, not thrown. With `merge_equal_slopes`, adjacent
/// quotients of equal slope are combined first, as in passing to the coarsest
/// filtration with semistable quotients.
HnProfile hn_profile(const ChainPresentation& cp, bool merge_equal_slopes = false);
HnProfile hn_profile(const ThetaContext& ctx, const std::vector<LatticeElem>& filtration,
                     bool merge_equal_slopes = false);

}  // namespace nct
