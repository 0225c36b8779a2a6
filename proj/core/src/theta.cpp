#include "nctorus/theta.hpp"

#include "nctorus/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nct {

namespace {

constexpr std::size_t kPeriodSearchCap = 100000;

Int parse_int(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer '" + text + "'");
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

ThetaContext ThetaContext::make(const Int& p, const Int& q, const Int& r, const Int& d) {
  if (r == 0) throw DomainError(Errc::ZeroDenominator, "theta denominator r = 0");
  if (q == 0) throw DomainError(Errc::RationalTheta, "q = 0 gives a rational theta");
  if (d <= 1 || !is_squarefree(d))
    throw DomainError(Errc::NonSquarefree, "radicand " + d.get_str() + " is not a squarefree integer > 1");
  return ThetaContext(QuadNumber(p, q, r, d));
}

ThetaContext ThetaContext::from_value(const QuadNumber& value) {
  if (value.is_rational()) throw DomainError(Errc::RationalTheta, "theta must be irrational");
  return make(value.a(), value.b(), value.c(), value.d());
}

int ThetaContext::sign_linear(const Int& m, const Int& n) const {
  // r > 0, so sign(m*theta + n) = sign((m*p + n*r) + m*q*sqrt(d)).
  return sign_surd(m * p() + n * r(), m * q(), d());
}

QuadNumber ThetaContext::linear(const Int& m, const Int& n) const {
  return QuadNumber(m * p() + n * r(), m * q(), r(), d());
}

Int ThetaContext::next_integer() const { return value_.floor() + 1; }

ThetaContext ThetaContext::negated() const { return ThetaContext(-value_); }

std::string ThetaContext::spec() const {
  return "qi:" + p().get_str() + "," + q().get_str() + "," + r().get_str() + "," + d().get_str();
}

ThetaContext qi_new(const Int& p, const Int& q, const Int& r, const Int& d) {
  return ThetaContext::make(p, q, r, d);
}

int sign_linear(const ThetaContext& ctx, const Int& m, const Int& n) { return ctx.sign_linear(m, n); }

ThetaContext parse_theta(const std::string& text) {
  if (text == "golden") return qi_new(-1, 1, 2, 5);
  if (text.rfind("sqrt:", 0) == 0) return qi_new(0, 1, 1, parse_int(text.substr(5)));
  if (text.rfind("qi:", 0) == 0) {
    auto parts = split(text.substr(3), ',');
    if (parts.size() != 4) throw std::invalid_argument("theta 'qi:' needs four integers p,q,r,d");
    return qi_new(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3]));
  }
  throw std::invalid_argument("unknown theta spec '" + text + "' (expected golden, sqrt:d or qi:p,q,r,d)");
}

CfExpansion cf_expansion(const ThetaContext& ctx, std::size_t k) {
  CfExpansion out;
  std::map<std::tuple<Int, Int, Int>, std::size_t> seen;
  QuadNumber x = ctx.value();
  std::size_t limit = std::max(k, kPeriodSearchCap);
  for (std::size_t i = 0; i < limit; ++i) {
    if (!out.period_start) {
      auto key = std::make_tuple(x.a(), x.b(), x.c());
      auto [it, inserted] = seen.emplace(key, i);
      if (!inserted) {
        out.period_start = it->second;
        out.period_length = i - it->second;
      }
    }
    if (out.period_start && out.quotients.size() >= k) break;
    Int a = x.floor();
    if (out.quotients.size() < k) out.quotients.push_back(a);
    x = (x - QuadNumber(a)).reciprocal();
  }
  return out;
}

PositiveConvergentStream::PositiveConvergentStream(const ThetaContext& ctx)
    : ctx_(ctx), tail_(-ctx.value()) {}

Convergent PositiveConvergentStream::next() {
  for (;;) {
    Int a = tail_.floor();
    Int h = a * h_prev_ + h_prev2_;
    Int k = a * k_prev_ + k_prev2_;
    h_prev2_ = h_prev_;
    h_prev_ = h;
    k_prev2_ = k_prev_;
    k_prev_ = k;
    tail_ = (tail_ - QuadNumber(a)).reciprocal();
    std::size_t index = index_++;
    if (ctx_.sign_linear(k, h) > 0) return Convergent{h, k, 1, index};
  }
}

std::vector<Convergent> positive_convergents(const ThetaContext& ctx, std::size_t k) {
  if (k == 0) throw DomainError(Errc::InvalidArgument, "positive_convergents needs k >= 1");
  PositiveConvergentStream stream(ctx);
  std::vector<Convergent> out;
  out.reserve(k);
  while (out.size() < k) out.push_back(stream.next());
  return out;
}

}  // namespace nct
