#pragma once

#include "nctorus/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nct {

struct Vec2 {
  Int x;
  Int y;

  Vec2() = default;
  Vec2(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}
  Vec2(long x_, long y_) : x(x_), y(y_) {}

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  std::string to_string() const { return x.get_str() + "," + y.get_str(); }
};

Int det(const Vec2& a, const Vec2& b);
Int dot(const Vec2& a, const Vec2& b);

/// A nonempty multiset of primitive vectors in Z^2, kept in insertion order.
class VectorTuple {
 public:
  /// Throws NotPrimitive for a non-primitive entry, InvalidArgument if empty.
  static VectorTuple make(std::vector<Vec2> vectors);

  const std::vector<Vec2>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  Vec2 sum() const;
  bool all_equal() const;
  /// "x,y;x,y;..."
  std::string to_string() const;

  friend bool operator==(const VectorTuple& a, const VectorTuple& b) { return a.vectors_ == b.vectors_; }

 private:
  explicit VectorTuple(std::vector<Vec2> v) : vectors_(std::move(v)) {}
  std::vector<Vec2> vectors_;
};

/// Parses "x,y;x,y;...". Throws std::invalid_argument on malformed text.
VectorTuple parse_tuple(const std::string& text);

struct HalfplaneResult {
  bool ok = false;
  /// u with u . v > 0 for every vector, when ok.
  std::optional<Vec2> witness;
};

/// Whether all vectors lie in one open half-plane through the origin.
HalfplaneResult halfplane_check(const VectorTuple& t);

/// Sum over ordered pairs of max(det(v_i, v_j), 0).
Int potential_D(const VectorTuple& t);

struct ReduceStep {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec2 vi;
  Vec2 vj;
  Vec2 w;
  Int multiplicity;
  Int d_before;
  Int d_after;
};

/// Replaces v_i, v_j by m copies of the primitive w with v_i + v_j = m*w,
/// placed at the position of v_i. Throws EqualVectors, ConeViolation, or
/// InvalidArgument for bad indices.
VectorTuple reduce_step(const VectorTuple& t, std::size_t i, std::size_t j, ReduceStep* record = nullptr);

struct Reduction {
  VectorTuple canonical;
  std::vector<ReduceStep> trace;
};

/// Reduces the lexicographically first unequal pair until all vectors agree.
/// Throws ConeViolation.
Reduction reduce_full(const VectorTuple& t);

struct Equivalence {
  bool equivalent = false;
  bool canonical_agree = false;
  Vec2 sum1;
  Vec2 sum2;
};

/// Equal sums, cross-checked against the canonical forms. Throws ConeViolation.
Equivalence tuples_equivalent(const VectorTuple& t1, const VectorTuple& t2);

}  // namespace nct
