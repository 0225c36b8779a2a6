#pragma once

#include "nctorus/integer.hpp"
#include "nctorus/quadratic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nct {

/// An irrational parameter theta = (p + q*sqrt(d)) / r with q != 0 and d > 1
/// squarefree, held in canonical form (r > 0, gcd(p, q, r) = 1) so that equal
/// values have identical fields. Immutable after construction.
class ThetaContext {
 public:
  /// Validating constructor. Throws DomainError with RationalTheta,
  /// NonSquarefree or ZeroDenominator.
  static ThetaContext make(const Int& p, const Int& q, const Int& r, const Int& d);
  /// Wraps an irrational field element; throws RationalTheta for b = 0.
  static ThetaContext from_value(const QuadNumber& value);

  const Int& p() const { return value_.a(); }
  const Int& q() const { return value_.b(); }
  const Int& r() const { return value_.c(); }
  const Int& d() const { return value_.d(); }
  const QuadNumber& value() const { return value_; }

  /// Exact sign of m*theta + n; zero only for m = n = 0.
  int sign_linear(const Int& m, const Int& n) const;
  /// The field element m*theta + n.
  QuadNumber linear(const Int& m, const Int& n) const;

  /// The unique integer a with 0 < a - theta < 1.
  Int next_integer() const;

  ThetaContext negated() const;

  /// "qi:p,q,r,d", accepted back by parse_theta.
  std::string spec() const;

  friend bool operator==(const ThetaContext& x, const ThetaContext& y) { return x.value_ == y.value_; }

 private:
  explicit ThetaContext(QuadNumber value) : value_(std::move(value)) {}

  QuadNumber value_;
};

ThetaContext qi_new(const Int& p, const Int& q, const Int& r, const Int& d);

int sign_linear(const ThetaContext& ctx, const Int& m, const Int& n);

/// Presets: "golden" -> (sqrt(5)-1)/2, "sqrt:d", "qi:p,q,r,d".
/// Throws std::invalid_argument for malformed text and DomainError for
/// well-formed but invalid parameters.
ThetaContext parse_theta(const std::string& text);

struct CfExpansion {
  std::vector<Int> quotients;
  /// Index of the first partial quotient of the repeating block and its
  /// length, when the period was found within the search cap.
  std::optional<std::size_t> period_start;
  std::optional<std::size_t> period_length;
};

/// First k partial quotients of the simple continued fraction, plus the
/// eventual period of the expansion.
CfExpansion cf_expansion(const ThetaContext& ctx, std::size_t k);

/// A coprime pair with p + q*theta > 0, q > 0; as a lattice element it is
/// (m, n) = (q, p).
struct Convergent {
  Int p;
  Int q;
  int value_sign = 1;
  /// Position in the convergent sequence of -theta.
  std::size_t index = 0;
};

/// Streams the convergents p/q of -theta that satisfy p + q*theta > 0.
class PositiveConvergentStream {
 public:
  explicit PositiveConvergentStream(const ThetaContext& ctx);

  Convergent next();

 private:
  ThetaContext ctx_;
  QuadNumber tail_;
  Int h_prev_{1}, h_prev2_{0};
  Int k_prev_{0}, k_prev2_{1};
  std::size_t index_ = 0;
};

/// First k convergents of -theta with positive value; values strictly
/// decrease to 0 and q strictly increases.
std::vector<Convergent> positive_convergents(const ThetaContext& ctx, std::size_t k);

}  // namespace nct
