#pragma once

#include "nctorus/lattice.hpp"
#include "nctorus/quadratic.hpp"
#include "nctorus/theta.hpp"

#include <vector>

namespace nct {

/// Ranks of a subobject of V = V_1 + ... + V_n (stable pieces, slopes
/// nonincreasing): full pieces before index i, r' inside piece i, zero after.
struct RankWitness {
  /// The last piece's rank v_n, the lemma's v.
  LatticeElem v;
  std::vector<LatticeElem> split;
  /// Zero-based index of the piece that is cut.
  std::size_t index = 0;
  /// chi(r', v_i), computed as chi(r, v_i) - sum_{j<i} chi(v_j, v_i).
  Int chi_residual;
};

/// Throws PreconditionFailed unless the pieces are primitive with positive
/// rank and nonincreasing slopes, 0 <= r <= total and chi(r, v_n) >= 0.
RankWitness sub_rank_witness(const ThetaContext& ctx, const std::vector<LatticeElem>& pieces, const LatticeElem& r);

struct PairMatch {
  LatticeElem rank;
  /// V1 and V2 were exchanged so that chi(v1, v2) >= 0.
  bool swapped = false;
  RankWitness first;
  RankWitness second;
  Int m_bound;
};

/// A common subobject rank r > min(rk V1, rk V2) - eps admissible for both
/// sides. Throws NonPositive for eps <= 0 and NonConvergence when no
/// candidate appears with |m| <= m_bound_cap.
PairMatch pair_match(const ThetaContext& ctx, const std::vector<LatticeElem>& v1, const std::vector<LatticeElem>& v2,
                     const QuadNumber& eps, const Int& m_bound_cap = 1 << 14);

struct ScheduleStage {
  std::size_t k = 0;
  QuadNumber eps;
  QuadNumber residual;
  LatticeElem bundle;
  LatticeElem bundle_prime;
  PairMatch match;
  /// Invariant of W_k / W_{k-1}.
  LatticeElem quotient;
  LatticeElem cumulative;
};

struct InterleaveSchedule {
  QuadNumber target;
  std::vector<LatticeElem> chain;
  std::vector<ScheduleStage> stages;
};

/// Ranks W_1 < W_2 < ... with rk W_k > r - 1/k: at stage k two distinct
/// stable ranks in (rho - 1/(2k), rho), rho the residual r - rk W_{k-1}, are
/// matched by pair_match with eps = 1/(2k). Throws NonPositive for r <= 0.
InterleaveSchedule interleave_schedule(const ThetaContext& ctx, const QuadNumber& r, std::size_t n);

}  // namespace nct
