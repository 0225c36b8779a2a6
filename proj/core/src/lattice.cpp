#include "nctorus/lattice.hpp"

#include "nctorus/error.hpp"

#include <algorithm>

namespace nct {

namespace {

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Integers n with lo < m*theta + n < hi.
std::pair<Int, Int> n_range(const ThetaContext& ctx, const Int& m, const QuadNumber& lo, const QuadNumber& hi) {
  QuadNumber mt = ctx.linear(m, 0);
  Int first = (lo - mt).floor() + 1;
  Int last = (hi - mt).ceil() - 1;
  return {first, last};
}

}  // namespace

Int chi(const LatticeElem& a, const LatticeElem& b) { return b.m * a.n - a.m * b.n; }

QuadNumber value(const ThetaContext& ctx, const LatticeElem& v) { return ctx.linear(v.m, v.n); }

int sign(const ThetaContext& ctx, const LatticeElem& v) { return ctx.sign_linear(v.m, v.n); }

std::strong_ordering compare(const ThetaContext& ctx, const LatticeElem& a, const LatticeElem& b) {
  return to_ordering(ctx.sign_linear(a.m - b.m, a.n - b.n));
}

QuadNumber SlopeValue::value(const ThetaContext& ctx) const {
  return QuadNumber(num) / nct::value(ctx, den);
}

SlopeValue slope(const ThetaContext& ctx, const LatticeElem& v) {
  if (sign(ctx, v) <= 0) throw DomainError(Errc::NonPositiveRank, "slope of " + v.to_string() + " needs positive rank");
  return SlopeValue{v.m, v};
}

std::strong_ordering compare(const SlopeValue& a, const SlopeValue& b) {
  return to_ordering(sgn(a.num * b.den.n - b.num * a.den.n));
}

std::strong_ordering compare(const ThetaContext& ctx, const SlopeValue& s, const QuadNumber& bound) {
  // den > 0: mu < B  <=>  num - B*den < 0.
  return to_ordering((QuadNumber(s.num) - bound * value(ctx, s.den)).sign());
}

std::vector<LatticeElem> enumerate_interval(const ThetaContext& ctx, const QuadNumber& lo, const QuadNumber& hi,
                                            const Int& m_bound) {
  if (!(lo < hi)) throw DomainError(Errc::InvalidArgument, "enumerate_interval needs lo < hi");
  std::vector<LatticeElem> out;
  for (Int m = -m_bound; m <= m_bound; ++m) {
    auto [first, last] = n_range(ctx, m, lo, hi);
    for (Int n = first; n <= last; ++n) out.emplace_back(m, n);
  }
  std::sort(out.begin(), out.end(),
            [&](const LatticeElem& x, const LatticeElem& y) { return compare(ctx, x, y) < 0; });
  return out;
}

MSet m_set(const ThetaContext& ctx, const QuadNumber& n_bound, const Rational& c) {
  if (n_bound.sign() <= 0) throw DomainError(Errc::NonPositive, "m_set needs N > 0");
  if (c <= 0) throw DomainError(Errc::NonPositive, "m_set needs c > 0");
  MSet out;
  // A member with slope >= -c has |m| <= c * (m*theta + n) < c * N.
  out.m_bound = (QuadNumber(c) * n_bound).floor();
  QuadNumber cq(c);
  for (Int m = 0; m >= -out.m_bound; --m) {
    auto [first, last] = n_range(ctx, m, QuadNumber(0), n_bound);
    for (Int n = first; n <= last; ++n) {
      SlopeValue s{m, LatticeElem(m, n)};
      if (compare(ctx, s, -cq) < 0) continue;
      bool duplicate = std::any_of(out.values.begin(), out.values.end(),
                                   [&](const SlopeValue& t) { return compare(s, t) == 0; });
      if (!duplicate) out.values.push_back(std::move(s));
    }
  }
  std::sort(out.values.begin(), out.values.end(),
            [](const SlopeValue& x, const SlopeValue& y) { return compare(x, y) > 0; });
  if (!out.values.empty()) out.max = out.values.front();
  return out;
}

}  // namespace nct
