#include "nctorus/quadratic.hpp"

#include "nctorus/error.hpp"

#include <stdexcept>

namespace nct {

namespace {

Int common_radicand(const QuadNumber& x, const QuadNumber& y) {
  if (x.b() != 0 && y.b() != 0 && x.d() != y.d())
    throw std::logic_error("mixing quadratic fields sqrt(" + x.d().get_str() + ") and sqrt(" +
                           y.d().get_str() + ")");
  if (x.b() != 0) return x.d();
  if (y.b() != 0) return y.d();
  return x.d() != 0 ? x.d() : y.d();
}

Int isqrt(const Int& n) {
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

}  // namespace

int sign_surd(const Int& a, const Int& b, const Int& d) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0 || d == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Int lhs = a * a;
  Int rhs = b * b * d;
  return lhs > rhs ? sa : sb;
}

QuadNumber::QuadNumber(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw DomainError(Errc::ZeroDenominator, "quadratic number with zero denominator");
  normalize();
}

QuadNumber::QuadNumber(const Int& value) : a_(value), b_(0), c_(1), d_(0) {}

QuadNumber::QuadNumber(const Rational& value)
    : a_(value.get_num()), b_(0), c_(value.get_den()), d_(0) {
  normalize();
}

void QuadNumber::normalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Int g = nct::gcd(nct::gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational QuadNumber::as_rational() const {
  if (b_ != 0) throw std::logic_error("irrational value has no rational form");
  Rational q(a_, c_);
  q.canonicalize();
  return q;
}

int QuadNumber::sign() const { return sign_surd(a_, b_, d_); }

Int QuadNumber::floor() const {
  if (b_ == 0) return floor_div(a_, c_);
  Int s = isqrt(b_ * b_ * d_);
  if (b_ > 0) return floor_div(a_ + s, c_);
  return floor_div(a_ - s - 1, c_);
}

Int QuadNumber::ceil() const {
  if (b_ == 0) return ceil_div(a_, c_);
  return floor() + 1;
}

QuadNumber QuadNumber::reciprocal() const {
  Int norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) throw DomainError(Errc::ZeroDenominator, "reciprocal of zero");
  return QuadNumber(c_ * a_, -c_ * b_, norm, d_);
}

QuadNumber QuadNumber::conjugate() const { return QuadNumber(a_, -b_, c_, d_); }

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
  Int d = common_radicand(x, y);
  return QuadNumber(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  Int d = common_radicand(x, y);
  return QuadNumber(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) { return x * y.reciprocal(); }

QuadNumber QuadNumber::operator-() const {
  QuadNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const QuadNumber& x, const QuadNumber& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && (x.b_ == 0 || x.d_ == y.d_);
}

std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadNumber::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  bool negative = sign() < 0;
  QuadNumber mag = negative ? -*this : *this;
  Int truncated = (mag * QuadNumber(scale)).floor();
  Int whole = truncated / scale;
  Int frac = truncated % scale;
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

double QuadNumber::to_double() const { return std::stod(to_decimal(20)); }

std::string QuadNumber::to_string() const {
  if (b_ == 0) return c_ == 1 ? a_.get_str() : a_.get_str() + "/" + c_.get_str();
  std::string num = a_.get_str();
  num += b_ < 0 ? "-" : "+";
  Int bb = nct::abs(b_);
  if (bb != 1) num += bb.get_str() + "*";
  num += "sqrt(" + d_.get_str() + ")";
  return c_ == 1 ? num : "(" + num + ")/" + c_.get_str();
}

}  // namespace nct
