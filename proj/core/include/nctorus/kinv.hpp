#pragma once

#include "nctorus/lattice.hpp"
#include "nctorus/quadratic.hpp"
#include "nctorus/theta.hpp"

#include <compare>
#include <string>
#include <vector>

namespace nct {

QuadNumber rank_theta(const ThetaContext& ctx, const LatticeElem& v);
inline const Int& degree(const LatticeElem& v) { return v.m; }

/// Slope order of two positive-rank invariants; throws NonPositiveRank.
std::strong_ordering is_semistable_order(const ThetaContext& ctx, const LatticeElem& a, const LatticeElem& b);

enum class Stability { Stable, Semistable };

struct Piece {
  LatticeElem inv;
  Stability tag = Stability::Semistable;

  friend bool operator==(const Piece& x, const Piece& y) { return x.inv == y.inv && x.tag == y.tag; }
};

/// A direct sum of semistable objects, recorded by their (deg, rk_E)
/// invariants. Stability is carried as a tag; only slopes are computed.
struct FormalSum {
  std::vector<Piece> pieces;

  /// Tags each invariant stable when primitive and semistable otherwise.
  static FormalSum from_invariants(const std::vector<LatticeElem>& invariants);

  LatticeElem total() const;
  QuadNumber total_rank(const ThetaContext& ctx) const;
  /// Every piece has rk_theta = m*theta + n > 0.
  bool lies_in_c_theta(const ThetaContext& ctx) const;
  bool empty() const { return pieces.empty(); }
};

struct TriangleSplit {
  FormalSum h0;
  FormalSum hminus1;
};

/// Positive-rank pieces form H^0, negative-rank pieces H^{-1}; throws
/// ZeroRankPiece for a piece of rank zero.
TriangleSplit triangle_decompose(const ThetaContext& ctx, const FormalSum& z);

struct HnGroup {
  SlopeValue slope;
  FormalSum pieces;
};

/// Pieces grouped by equal slope, groups in strictly decreasing slope order.
/// Input order is kept inside a group. Throws NonPositiveRank.
std::vector<HnGroup> hn_group(const ThetaContext& ctx, const FormalSum& s);

/// A det-1 fractional-linear change theta -> (a*theta + b)/(c*theta + d)
/// acting on coefficients by (m, n) -> (m*d - n*c, -m*b + n*a), so that
/// values scale exactly by 1/(c*theta + d).
class MoritaMap {
 public:
  /// Throws InvalidArgument unless a*d - b*c = 1.
  static MoritaMap make(const ThetaContext& source, const Int& a, const Int& b, const Int& c, const Int& d);
  static MoritaMap identity(const ThetaContext& source);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }
  const ThetaContext& source() const { return source_; }
  const ThetaContext& target() const { return target_; }

  /// c*theta + d in the source field.
  QuadNumber scale() const;
  /// c*theta + d > 0: the map preserves order.
  bool preserves_order() const;

  LatticeElem apply(const LatticeElem& v) const;
  LatticeElem apply_inverse(const LatticeElem& w) const;
  MoritaMap inverse() const;

  /// rk_{theta'}(g v) * (c*theta + d) == rk_theta(v), evaluated exactly.
  bool scaling_holds(const LatticeElem& v) const;

 private:
  MoritaMap(ThetaContext source, ThetaContext target, Int a, Int b, Int c, Int d)
      : source_(std::move(source)), target_(std::move(target)), a_(std::move(a)), b_(std::move(b)),
        c_(std::move(c)), d_(std::move(d)) {}

  ThetaContext source_;
  ThetaContext target_;
  Int a_, b_, c_, d_;
};

/// A map sending the primitive positive v to rank 1, i.e. (0, 1).
/// Throws NotPrimitive or NonPositiveRank.
MoritaMap morita_normalize(const ThetaContext& ctx, const LatticeElem& v);

/// w -> w / (a - theta), theta' = 1/(a - theta), as the map (0, 1, -1, a).
MoritaMap shrink_map(const ThetaContext& ctx);

LatticeElem morita_apply(const MoritaMap& g, const LatticeElem& v);

}  // namespace nct
