#include "nctorus/constructions/rank_search.hpp"

#include "nctorus/error.hpp"

namespace nct {

namespace {

LatticeElem sum_of(const std::vector<LatticeElem>& pieces) {
  LatticeElem t(0, 0);
  for (const auto& p : pieces) t = t + p;
  return t;
}

}  // namespace

RankWitness sub_rank_witness(const ThetaContext& ctx, const std::vector<LatticeElem>& pieces, const LatticeElem& r) {
  auto fail = [](const std::string& why) { return DomainError(Errc::PreconditionFailed, why); };
  if (pieces.empty()) throw fail("no pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].is_primitive() || sign(ctx, pieces[i]) <= 0)
      throw fail("piece " + pieces[i].to_string() + " is not a primitive positive rank");
    if (i > 0 && compare(slope(ctx, pieces[i - 1]), slope(ctx, pieces[i])) < 0)
      throw fail("slopes are not nonincreasing");
  }
  const LatticeElem& last = pieces.back();
  if (sign(ctx, r) < 0 || compare(ctx, r, sum_of(pieces)) > 0) throw fail("r is outside [0, rk V]");
  if (chi(r, last) < 0) throw fail("chi(r, v_n) < 0");

  RankWitness w{last, std::vector<LatticeElem>(pieces.size(), LatticeElem(0, 0)), 0, 0};
  if (r.is_zero()) return w;
  LatticeElem before(0, 0);
  std::size_t i = 0;
  while (compare(ctx, r, before + pieces[i]) > 0) before = before + pieces[i++];
  LatticeElem rest = r - before;
  Int residual = chi(r, pieces[i]);
  for (std::size_t j = 0; j < i; ++j) residual -= chi(pieces[j], pieces[i]);
  if (residual != chi(rest, pieces[i])) throw std::logic_error("chi is not additive");
  if (residual < 0) throw fail("chi(r', v_i) < 0");
  for (std::size_t j = 0; j < i; ++j) w.split[j] = pieces[j];
  w.split[i] = rest;
  w.index = i;
  w.chi_residual = residual;
  return w;
}

PairMatch pair_match(const ThetaContext& ctx, const std::vector<LatticeElem>& v1, const std::vector<LatticeElem>& v2,
                     const QuadNumber& eps, const Int& m_bound_cap) {
  if (eps.sign() <= 0) throw DomainError(Errc::NonPositive, "eps must be positive");
  if (v1.empty() || v2.empty()) throw DomainError(Errc::PreconditionFailed, "both sides need pieces");
  PairMatch out;
  const std::vector<LatticeElem>* a = &v1;
  const std::vector<LatticeElem>* b = &v2;
  if (chi(v1.back(), v2.back()) < 0) {
    std::swap(a, b);
    out.swapped = true;
  }
  const LatticeElem& w1 = a->back();
  LatticeElem ta = sum_of(*a), tb = sum_of(*b);
  LatticeElem smaller = compare(ctx, ta, tb) <= 0 ? ta : tb;
  QuadNumber top = value(ctx, smaller);
  QuadNumber lo = top - eps;

  auto finish = [&](const LatticeElem& r, const Int& bound) {
    out.rank = r;
    out.m_bound = bound;
    out.first = sub_rank_witness(ctx, *a, r);
    out.second = sub_rank_witness(ctx, *b, r);
    return out;
  };
  if (chi(smaller, w1) >= 0) return finish(smaller, 0);
  if (lo.sign() < 0) lo = QuadNumber(0);
  for (Int bound = 1; bound <= m_bound_cap; bound *= 2) {
    std::vector<LatticeElem> cands = enumerate_interval(ctx, lo, top, bound);
    for (auto it = cands.rbegin(); it != cands.rend(); ++it)
      if (chi(*it, w1) >= 0) return finish(*it, bound);
  }
  if ((top - eps).sign() < 0) return finish(LatticeElem(0, 0), 0);
  throw DomainError(Errc::NonConvergence, "no admissible rank with |m| <= " + m_bound_cap.get_str());
}

InterleaveSchedule interleave_schedule(const ThetaContext& ctx, const QuadNumber& r, std::size_t n) {
  if (r.sign() <= 0) throw DomainError(Errc::NonPositive, "target rank must be positive");
  InterleaveSchedule sched{r, {}, {}};
  LatticeElem cum(0, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    QuadNumber eps(Rational(Int(1), Int(2 * static_cast<long>(k))));
    QuadNumber rho = r - value(ctx, cum);
    QuadNumber lo = rho - eps;
    if (lo.sign() < 0) lo = QuadNumber(0);
    // Two distinct stable ranks just below the residual.
    std::vector<LatticeElem> stable;
    for (Int bound = 1; stable.size() < 2; bound *= 2) {
      if (bound > (Int(1) << 20)) throw DomainError(Errc::NonConvergence, "no stable ranks below the residual");
      stable.clear();
      for (const auto& c : enumerate_interval(ctx, lo, rho, bound))
        if (c.is_primitive()) stable.push_back(c);
    }
    const LatticeElem& p = stable[stable.size() - 1];
    const LatticeElem& pp = stable[stable.size() - 2];
    PairMatch m = pair_match(ctx, {p}, {pp}, eps);
    cum = cum + m.rank;
    sched.chain.push_back(cum);
    sched.stages.push_back(ScheduleStage{k, eps, rho, p, pp, m, m.rank, cum});
  }
  return sched;
}

}  // namespace nct
