#include "nctorus/constructions/subbundle.hpp"

#include "nctorus/error.hpp"

namespace nct {

namespace {

// Each Shrink is one level of the tree. A Flip right before it means the
// move went right in the flipped coordinates; every Flip mirrors all later
// moves, so the original-coordinate direction also depends on the parity of
// earlier flips.
std::vector<bool> moves_from_trace(const MembershipTrace& trace) {
  std::vector<bool> go_right;
  bool mirrored = false;
  bool flipped_here = false;
  for (const auto& step : trace.steps) {
    if (step.kind == MoveKind::Flip) {
      flipped_here = true;
      continue;
    }
    go_right.push_back(flipped_here != mirrored);
    if (flipped_here) mirrored = !mirrored;
    flipped_here = false;
  }
  return go_right;
}

ExactTriple triple_for(const ThetaContext& ctx, const Segment& seg) {
  LatticeElem c = division_point(ctx, seg);
  return ExactTriple{c - seg.a, seg.b - seg.a, seg.b - c, chi(c - seg.a, seg.b - seg.a)};
}

}  // namespace

SubbundleCertificate subbundle_certificate(const ThetaContext& ctx, const LatticeElem& p_rank, const LatticeElem& r) {
  if (!p_rank.is_primitive()) throw DomainError(Errc::NotPrimitive, "rk P = " + p_rank.to_string() + " is not primitive");
  if (sign(ctx, p_rank) <= 0) throw DomainError(Errc::PreconditionFailed, "rk P must be positive");
  if (sign(ctx, r) <= 0 || compare(ctx, r, p_rank) >= 0)
    throw DomainError(Errc::PreconditionFailed, "need 0 < r < rk P");
  if (chi(r, p_rank) <= 0)
    throw DomainError(Errc::PreconditionFailed, "need chi(r, rk P) > 0, got " + chi(r, p_rank).get_str());

  MoritaMap g = morita_normalize(ctx, p_rank);
  const ThetaContext& normalized = g.target();
  LatticeElem r_norm = g.apply(r);
  // In rank-1 coordinates chi(r, 1) = -m > 0, so r lies in B_theta.
  MembershipTrace trace = member_b_theta(normalized, r_norm);
  if (!trace.verdict) throw std::logic_error("normalized target rejected by the membership recursion");

  SubbundleCertificate cert{ctx, p_rank, r, g, {}, {}, false};
  Segment seg = unit_segment();
  for (bool right : moves_from_trace(trace)) {
    cert.path.push_back(seg);
    auto [left_child, right_child] = divide(normalized, seg);
    seg = right ? right_child : left_child;
  }
  cert.path.push_back(seg);
  for (const auto& s : cert.path) cert.triples.push_back(triple_for(normalized, s));

  CertificateCheck check = validate_certificate(cert);
  if (!check.valid) throw std::logic_error("constructed certificate failed validation: " + check.failures.front());
  cert.valid = true;
  return cert;
}

CertificateCheck validate_certificate(const SubbundleCertificate& cert) {
  CertificateCheck out;
  auto fail = [&](std::string why) {
    out.valid = false;
    out.failures.push_back(std::move(why));
  };
  const ThetaContext& ctx = cert.theta;
  if (!cert.p_rank.is_primitive() || sign(ctx, cert.p_rank) <= 0) fail("rk P is not primitive and positive");
  if (sign(ctx, cert.target) <= 0 || compare(ctx, cert.target, cert.p_rank) >= 0) fail("target not in (0, rk P)");
  if (chi(cert.target, cert.p_rank) <= 0) fail("chi(r, rk P) <= 0");

  const MoritaMap& g = cert.morita;
  if (!(g.source() == ctx)) fail("Morita map source differs from theta");
  if (g.a() * g.d() - g.b() * g.c() != 1) fail("Morita map determinant is not 1");
  if (!g.preserves_order()) fail("Morita map does not preserve order");
  if (!(g.apply(cert.p_rank) == LatticeElem(0, 1))) fail("Morita map does not send rk P to 1");
  if (!g.scaling_holds(cert.target)) fail("rank scaling identity fails for the target");
  if (!out.valid) return out;

  const ThetaContext& normalized = g.target();
  LatticeElem r_norm = g.apply(cert.target);
  if (cert.path.empty()) {
    fail("empty path");
    return out;
  }
  if (!(cert.path.front() == unit_segment())) fail("path does not start at [0, 1]");
  for (std::size_t i = 0; i + 1 < cert.path.size(); ++i) {
    auto [l, r] = divide(normalized, cert.path[i]);
    if (!(cert.path[i + 1] == l) && !(cert.path[i + 1] == r))
      fail("path segment " + std::to_string(i + 1) + " is not a child of its predecessor");
  }
  if (out.valid && !(division_point(normalized, cert.path.back()) == r_norm))
    fail("final segment does not divide at the normalized target");

  if (cert.triples.size() != cert.path.size()) {
    fail("ledger size differs from path length");
    return out;
  }
  for (std::size_t i = 0; i < cert.triples.size(); ++i) {
    const ExactTriple& t = cert.triples[i];
    const Segment& s = cert.path[i];
    std::string where = "ledger entry " + std::to_string(i);
    if (!(t.sub + t.quot == t.mid)) fail(where + ": ranks are not additive");
    if (!(t.mid == s.length())) fail(where + ": middle term is not the segment length");
    if (!out.valid) continue;
    ExactTriple expect = triple_for(normalized, s);
    if (!(t.sub == expect.sub) || !(t.quot == expect.quot)) fail(where + ": does not match the division of its segment");
    Int recomputed = chi(t.sub, t.mid);
    if (recomputed != 1 || t.chi != recomputed) fail(where + ": chi(c - a, b - a) != 1");
  }
  return out;
}

}  // namespace nct
