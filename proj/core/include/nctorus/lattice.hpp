#pragma once

#include "nctorus/integer.hpp"
#include "nctorus/quadratic.hpp"
#include "nctorus/theta.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace nct {

/// m*theta + n in L_theta = Z*theta + Z. As the K-invariant of an object,
/// m is the degree and n the rank on the elliptic curve side.
struct LatticeElem {
  Int m;
  Int n;

  LatticeElem() = default;
  LatticeElem(Int m_, Int n_) : m(std::move(m_)), n(std::move(n_)) {}
  LatticeElem(long m_, long n_) : m(m_), n(n_) {}

  bool is_zero() const { return m == 0 && n == 0; }
  bool is_primitive() const { return gcd(m, n) == 1; }
  /// gcd(m, n); the number of stable constituents of a semistable invariant.
  Int multiplicity() const { return gcd(m, n); }

  friend LatticeElem operator+(const LatticeElem& x, const LatticeElem& y) { return {x.m + y.m, x.n + y.n}; }
  friend LatticeElem operator-(const LatticeElem& x, const LatticeElem& y) { return {x.m - y.m, x.n - y.n}; }
  friend LatticeElem operator*(const Int& k, const LatticeElem& x) { return {k * x.m, k * x.n}; }
  LatticeElem operator-() const { return {-m, -n}; }
  friend bool operator==(const LatticeElem& x, const LatticeElem& y) { return x.m == y.m && x.n == y.n; }
  /// Lexicographic order on (m, n); unrelated to the order of values.
  friend bool lex_less(const LatticeElem& x, const LatticeElem& y) {
    return x.m < y.m || (x.m == y.m && x.n < y.n);
  }

  std::string to_string() const { return "[" + m.get_str() + "," + n.get_str() + "]"; }
};

/// chi(m*theta + n, m'*theta + n') = m'*n - m*n'.
Int chi(const LatticeElem& a, const LatticeElem& b);

QuadNumber value(const ThetaContext& ctx, const LatticeElem& v);
int sign(const ThetaContext& ctx, const LatticeElem& v);
std::strong_ordering compare(const ThetaContext& ctx, const LatticeElem& a, const LatticeElem& b);

/// mu = m / (m*theta + n) with positive denominator.
struct SlopeValue {
  Int num;
  LatticeElem den;

  QuadNumber value(const ThetaContext& ctx) const;
};

/// Exact slope; throws NonPositiveRank unless m*theta + n > 0.
SlopeValue slope(const ThetaContext& ctx, const LatticeElem& v);

/// For positive denominators mu(a) - mu(b) has the sign of m_a*n_b - m_b*n_a,
/// so slope comparison needs no theta.
std::strong_ordering compare(const SlopeValue& a, const SlopeValue& b);
std::strong_ordering compare(const ThetaContext& ctx, const SlopeValue& s, const QuadNumber& bound);

/// All (m, n) with |m| <= m_bound and lo < m*theta + n < hi, sorted by value.
std::vector<LatticeElem> enumerate_interval(const ThetaContext& ctx, const QuadNumber& lo, const QuadNumber& hi,
                                            const Int& m_bound);

struct MSet {
  /// Distinct slope values, strictly decreasing; each carries one witness.
  std::vector<SlopeValue> values;
  std::optional<SlopeValue> max;
  /// The |m| bound used for the enumeration (floor(c*N)).
  Int m_bound;
};

/// M_N intersected with [-c, 0], where M_N = { m/(m*theta+n) : m <= 0,
/// 0 < m*theta + n < N }.
MSet m_set(const ThetaContext& ctx, const QuadNumber& n_bound, const Rational& c);

}  // namespace nct
