#pragma once

#include "nctorus/lattice.hpp"
#include "nctorus/quadratic.hpp"
#include "nctorus/theta.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nct {

/// [a, b] with a < b and b - a primitive of positive value.
struct Segment {
  LatticeElem a;
  LatticeElem b;

  LatticeElem length() const { return b - a; }
  friend bool operator==(const Segment& x, const Segment& y) { return x.a == y.a && x.b == y.b; }
};

Segment unit_segment();
/// Throws NonPositive or NotPrimitive when the segment is not a valid
/// division segment.
void validate_segment(const ThetaContext& ctx, const Segment& s);

/// The unique primitive w with 0 < w < v and chi(w, v) = 1, solved through
/// the residue of the theta-coefficient and its window of length |m|.
LatticeElem phi(const ThetaContext& ctx, const LatticeElem& v);

/// Whether m1 lies in the window 0 < sign(m) * (m1 + 1/v) < |m| (m != 0).
bool in_phi_window(const ThetaContext& ctx, const LatticeElem& v, const Int& m1);

/// Exhaustive search for phi(v) over |m1|, |n1| <= bound, independent of the
/// modular solution. Throws OracleBoundTooSmall when nothing is found and
/// OracleAmbiguous if more than one candidate qualifies.
LatticeElem phi_oracle(const ThetaContext& ctx, const LatticeElem& v, const Int& bound);

LatticeElem division_point(const ThetaContext& ctx, const Segment& s);
std::pair<Segment, Segment> divide(const ThetaContext& ctx, const Segment& s);

struct DivisionNode {
  Segment segment;
  std::optional<LatticeElem> point;
  int left = -1;
  int right = -1;
  unsigned depth = 0;
};

/// Complete division tree of [0, 1] to a fixed depth. Node 0 is the root;
/// internal nodes carry their division point.
class DivisionTree {
 public:
  DivisionTree(ThetaContext theta, std::vector<DivisionNode> nodes, unsigned depth)
      : theta_(std::move(theta)), nodes_(std::move(nodes)), depth_(depth) {}

  const ThetaContext& theta() const { return theta_; }
  const std::vector<DivisionNode>& nodes() const { return nodes_; }
  unsigned depth() const { return depth_; }

  /// All 2^depth - 1 division points in increasing order.
  std::vector<LatticeElem> points() const;

 private:
  ThetaContext theta_;
  std::vector<DivisionNode> nodes_;
  unsigned depth_;
};

DivisionTree build_tree(const ThetaContext& ctx, unsigned depth);

/// Re-derives a tree node by node: root [0, 1], every point the division
/// point of its segment, children split at it, leaves exactly at `depth`,
/// every point with m < 0. Returns the failures found.
std::vector<std::string> validate_tree(const DivisionTree& tree);

enum class MoveKind { Flip, Shrink };

struct MembershipStep {
  MoveKind kind;
  ThetaContext theta_before;
  LatticeElem v_before;
  /// The integer a with 0 < a - theta < 1 for theta_before.
  Int a;
  ThetaContext theta_after;
  LatticeElem v_after;
};

struct MembershipTrace {
  std::vector<MembershipStep> steps;
  bool verdict = false;
  std::string reason;

  std::size_t shrink_count() const;
};

/// Decides v in B_theta by the recursive reduction: v = a - theta is the base
/// case; otherwise Flip (theta -> -theta, v -> 1 - v) brings v below a - theta
/// and Shrink (theta -> 1/(a - theta), v -> v/(a - theta)) moves to a smaller
/// |m|. A Shrink that fails to decrease |m| proves non-membership.
/// Throws OutOfRange unless 0 < v < 1.
MembershipTrace member_b_theta(const ThetaContext& ctx, const LatticeElem& v);

struct TreeLocation {
  bool found = false;
  /// Segments from [0, 1] down to the one whose division point is v.
  std::vector<Segment> path;
};

/// Follows the unique child containing v until v is a division point or
/// max_depth levels have been used.
TreeLocation locate_point(const ThetaContext& ctx, const LatticeElem& v, std::size_t max_depth);

struct ApproachResult {
  std::vector<LatticeElem> points;
  bool reached_tolerance = false;
  std::size_t descents = 0;
};

/// Strictly increasing division points converging to r from below, emitted
/// while descending along the child containing r. Stops after `steps`
/// emissions, once r - a_k < tol, or after max_descents subdivisions.
/// Throws OutOfRange unless 0 < r < 1 and TargetOnBoundary if r is met
/// exactly as a division point.
ApproachResult approach_target(const ThetaContext& ctx, const QuadNumber& target, std::size_t steps,
                               const QuadNumber& tol, std::size_t max_descents = 1000000);

}  // namespace nct
