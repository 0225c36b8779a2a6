#pragma once

#include "nctorus/integer.hpp"

#include <compare>
#include <string>

namespace nct {

/// An exact element (a + b*sqrt(d)) / c of a real quadratic field.
///
/// Canonical form: c > 0, gcd(a, b, c) = 1. A value with b = 0 is rational
/// and is compatible with every field; d = 0 marks a number that was built
/// as a rational and has not been tied to a field yet. Mixing two irrational
/// values with different radicands throws std::logic_error.
class QuadNumber {
 public:
  QuadNumber() : a_(0), b_(0), c_(1), d_(0) {}
  QuadNumber(Int a, Int b, Int c, Int d);
  QuadNumber(const Int& value);  // NOLINT(google-explicit-constructor)
  QuadNumber(long value) : QuadNumber(Int(value)) {}  // NOLINT(google-explicit-constructor)
  QuadNumber(const Rational& value);  // NOLINT(google-explicit-constructor)

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rational as_rational() const;

  int sign() const;
  Int floor() const;
  Int ceil() const;
  QuadNumber reciprocal() const;
  QuadNumber conjugate() const;

  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);
  QuadNumber operator-() const;

  friend bool operator==(const QuadNumber& x, const QuadNumber& y);
  friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y);

  /// Decimal expansion truncated toward zero after `digits` fractional digits.
  std::string to_decimal(int digits = 12) const;
  double to_double() const;
  /// "(a+b*sqrt(d))/c" style rendering; rationals render as "p/q".
  std::string to_string() const;

 private:
  void normalize();

  Int a_, b_, c_, d_;
};

/// Exact sign of A + B*sqrt(d) for non-square d >= 0.
int sign_surd(const Int& a, const Int& b, const Int& d);

}  // namespace nct
