#include "nctorus/kinv.hpp"

#include "nctorus/error.hpp"

#include <algorithm>

namespace nct {

QuadNumber rank_theta(const ThetaContext& ctx, const LatticeElem& v) { return value(ctx, v); }

std::strong_ordering is_semistable_order(const ThetaContext& ctx, const LatticeElem& a, const LatticeElem& b) {
  return compare(slope(ctx, a), slope(ctx, b));
}

FormalSum FormalSum::from_invariants(const std::vector<LatticeElem>& invariants) {
  FormalSum s;
  for (const auto& v : invariants)
    s.pieces.push_back(Piece{v, v.is_primitive() ? Stability::Stable : Stability::Semistable});
  return s;
}

LatticeElem FormalSum::total() const {
  LatticeElem t(0, 0);
  for (const auto& p : pieces) t = t + p.inv;
  return t;
}

QuadNumber FormalSum::total_rank(const ThetaContext& ctx) const { return value(ctx, total()); }

bool FormalSum::lies_in_c_theta(const ThetaContext& ctx) const {
  return std::all_of(pieces.begin(), pieces.end(), [&](const Piece& p) { return sign(ctx, p.inv) > 0; });
}

TriangleSplit triangle_decompose(const ThetaContext& ctx, const FormalSum& z) {
  TriangleSplit out;
  for (const auto& p : z.pieces) {
    int s = sign(ctx, p.inv);
    if (s == 0) throw DomainError(Errc::ZeroRankPiece, "piece " + p.inv.to_string() + " has rank zero");
    (s > 0 ? out.h0 : out.hminus1).pieces.push_back(p);
  }
  return out;
}

std::vector<HnGroup> hn_group(const ThetaContext& ctx, const FormalSum& s) {
  std::vector<HnGroup> groups;
  for (const auto& p : s.pieces) {
    SlopeValue mu = slope(ctx, p.inv);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const HnGroup& g) { return compare(g.slope, mu) == 0; });
    if (it == groups.end())
      groups.push_back(HnGroup{mu, FormalSum{{p}}});
    else
      it->pieces.pieces.push_back(p);
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const HnGroup& x, const HnGroup& y) { return compare(x.slope, y.slope) > 0; });
  return groups;
}

MoritaMap MoritaMap::make(const ThetaContext& source, const Int& a, const Int& b, const Int& c, const Int& d) {
  if (a * d - b * c != 1) throw DomainError(Errc::InvalidArgument, "Morita map needs a*d - b*c = 1");
  QuadNumber t = (QuadNumber(a) * source.value() + QuadNumber(b)) / (QuadNumber(c) * source.value() + QuadNumber(d));
  return MoritaMap(source, ThetaContext::from_value(t), a, b, c, d);
}

MoritaMap MoritaMap::identity(const ThetaContext& source) { return make(source, 1, 0, 0, 1); }

QuadNumber MoritaMap::scale() const { return source_.linear(c_, d_); }

bool MoritaMap::preserves_order() const { return source_.sign_linear(c_, d_) > 0; }

LatticeElem MoritaMap::apply(const LatticeElem& v) const { return {v.m * d_ - v.n * c_, -v.m * b_ + v.n * a_}; }

LatticeElem MoritaMap::apply_inverse(const LatticeElem& w) const {
  return {w.m * a_ + w.n * c_, w.m * b_ + w.n * d_};
}

MoritaMap MoritaMap::inverse() const {
  return MoritaMap(target_, source_, d_, -b_, -c_, a_);
}

bool MoritaMap::scaling_holds(const LatticeElem& v) const {
  return value(target_, apply(v)) * scale() == value(source_, v);
}

MoritaMap morita_normalize(const ThetaContext& ctx, const LatticeElem& v) {
  if (!v.is_primitive()) throw DomainError(Errc::NotPrimitive, v.to_string() + " is not primitive");
  if (sign(ctx, v) <= 0) throw DomainError(Errc::NonPositiveRank, v.to_string() + " does not have positive rank");
  // (c, d) = (m, n) is forced; (a, b) solves n*a - m*b = 1, and the family
  // (a + t*m, b + t*n) is reduced to 0 <= b < |n|.
  if (v.m == 0) return MoritaMap::identity(ctx);
  if (v.n == 0) return MoritaMap::make(ctx, 0, -v.m, v.m, 0);
  Int x, y;
  ext_gcd(v.n, Int(-v.m), x, y);
  Int b = mod_floor(y, v.n);
  Int t = (b - y) / v.n;
  Int a = x + t * v.m;
  return MoritaMap::make(ctx, a, b, v.m, v.n);
}

MoritaMap shrink_map(const ThetaContext& ctx) { return MoritaMap::make(ctx, 0, 1, -1, ctx.next_integer()); }

LatticeElem morita_apply(const MoritaMap& g, const LatticeElem& v) { return g.apply(v); }

}  // namespace nct
