#include "nctorus/constructions/chains.hpp"

#include "nctorus/division.hpp"
#include "nctorus/error.hpp"
#include "nctorus/kinv.hpp"

namespace nct {

namespace {

QuadNumber chain_top(const ChainPresentation& cp) {
  return cp.chain.empty() ? QuadNumber(0) : value(cp.theta, cp.chain.back());
}

std::optional<QuadNumber> exact_limit(const ChainPresentation& cp) {
  if (cp.declared_limit) return cp.declared_limit;
  if (cp.terminates) return chain_top(cp);
  return std::nullopt;
}

}  // namespace

void validate_chain(const ChainPresentation& cp) {
  const ThetaContext& ctx = cp.theta;
  if (sign(ctx, cp.ambient) < 0) throw DomainError(Errc::PreconditionFailed, "ambient rank is negative");
  for (std::size_t i = 0; i < cp.chain.size(); ++i) {
    const LatticeElem& s = cp.chain[i];
    if (sign(ctx, s) < 0) throw DomainError(Errc::PreconditionFailed, "chain element " + s.to_string() + " is negative");
    if (compare(ctx, s, cp.ambient) > 0)
      throw DomainError(Errc::PreconditionFailed, "chain element " + s.to_string() + " exceeds the ambient rank");
    if (i > 0 && compare(ctx, cp.chain[i - 1], s) >= 0)
      throw DomainError(Errc::PreconditionFailed, "chain is not strictly increasing at index " + std::to_string(i));
  }
  if (cp.terminates && cp.chain.empty()) throw DomainError(Errc::PreconditionFailed, "a terminating chain is empty");
  if (cp.declared_limit) {
    if (*cp.declared_limit < chain_top(cp) || *cp.declared_limit > value(ctx, cp.ambient))
      throw DomainError(Errc::PreconditionFailed, "declared limit lies outside [last element, ambient]");
    if (cp.terminates && !(*cp.declared_limit == chain_top(cp)))
      throw DomainError(Errc::PreconditionFailed, "terminating chain declares a different limit");
  }
}

ChainPresentation quasi_subsheaf_chain(const ThetaContext& ctx, const LatticeElem& p_rank, const QuadNumber& r,
                                       std::size_t n) {
  if (!p_rank.is_primitive()) throw DomainError(Errc::NotPrimitive, p_rank.to_string() + " is not primitive");
  QuadNumber total = value(ctx, p_rank);
  if (r.sign() <= 0 || r >= total) throw DomainError(Errc::PreconditionFailed, "need 0 < r < rk P");
  MoritaMap g = morita_normalize(ctx, p_rank);
  // rk P scales to 1, so the normalized target is r / rk P.
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 60);
  QuadNumber tol(Rational(Int(1), scale));
  ApproachResult approach = approach_target(g.target(), r / total, n, tol);
  ChainPresentation cp{ctx, p_rank, {}, r, false};
  for (const auto& w : approach.points) cp.chain.push_back(g.apply_inverse(w));
  return cp;
}

std::string QuotientRank::to_string() const {
  if (exact) return exact->to_decimal();
  return "[" + lower.to_decimal() + ", " + upper.to_decimal() + "]";
}

QuotientRank rank_of_quotient(const ChainPresentation& cp) {
  QuadNumber total = value(cp.theta, cp.ambient);
  QuotientRank out;
  if (auto lim = exact_limit(cp)) {
    out.exact = total - *lim;
    out.lower = out.upper = *out.exact;
    return out;
  }
  out.lower = QuadNumber(0);
  out.upper = total - chain_top(cp);
  return out;
}

ChainPresentation drop_prefix(const ChainPresentation& cp, std::size_t k) {
  ChainPresentation out = cp;
  std::size_t keep_from = std::min(k, cp.chain.size());
  if (cp.terminates && keep_from == cp.chain.size()) keep_from = cp.chain.size() - 1;
  out.chain.erase(out.chain.begin(), out.chain.begin() + static_cast<std::ptrdiff_t>(keep_from));
  return out;
}

ChainPresentation prepend(const ChainPresentation& cp, const std::vector<LatticeElem>& head) {
  ChainPresentation out = cp;
  out.chain.insert(out.chain.begin(), head.begin(), head.end());
  validate_chain(out);
  return out;
}

ChainPresentation pad_ambient(const ChainPresentation& cp, const LatticeElem& u) {
  if (sign(cp.theta, u) < 0) throw DomainError(Errc::PreconditionFailed, "padding must have nonnegative rank");
  ChainPresentation out = cp;
  out.ambient = cp.ambient + u;
  for (auto& s : out.chain) s = s + u;
  if (cp.declared_limit) out.declared_limit = *cp.declared_limit + value(cp.theta, u);
  return out;
}

AdditivityReport rank_additivity_check(const ChainPresentation& sub, const ChainPresentation& whole,
                                       const ChainPresentation& quot) {
  auto incompatible = [](const std::string& why) { return DomainError(Errc::IncompatiblePresentations, why); };
  if (!(sub.theta == whole.theta) || !(quot.theta == whole.theta)) throw incompatible("theta differs");
  if (!(quot.ambient == whole.ambient)) throw incompatible("quotient and whole have different ambients");
  if (sub.chain.size() != whole.chain.size() || quot.chain.size() != whole.chain.size())
    throw incompatible("chain lengths differ");
  for (std::size_t i = 0; i < whole.chain.size(); ++i)
    if (!(sub.chain[i] + quot.chain[i] == whole.chain[i] + sub.ambient))
      throw incompatible("a_i + b_i != c_i + rk P_sub at index " + std::to_string(i));
  if (sub.terminates != whole.terminates || quot.terminates != whole.terminates)
    throw incompatible("termination flags differ");
  const bool declared = whole.declared_limit.has_value();
  if (sub.declared_limit.has_value() != declared || quot.declared_limit.has_value() != declared)
    throw incompatible("limits are declared on only some of the chains");
  const ThetaContext& ctx = whole.theta;
  if (declared && !(*sub.declared_limit + *quot.declared_limit == *whole.declared_limit + value(ctx, sub.ambient)))
    throw incompatible("declared limits are not additive");
  for (const auto* cp : {&sub, &whole, &quot}) validate_chain(*cp);

  AdditivityReport rep;
  QuotientRank a = rank_of_quotient(sub), b = rank_of_quotient(quot), c = rank_of_quotient(whole);
  rep.exact = a.exact && b.exact && c.exact;
  rep.sub_rank = a.exact ? *a.exact : a.upper;
  rep.quot_rank = b.exact ? *b.exact : b.upper;
  rep.whole_rank = c.exact ? *c.exact : c.upper;
  if (!rep.exact) rep.notes.push_back("no exact limits; compared the ranks bounded by the last chain elements");
  rep.holds = rep.sub_rank + rep.quot_rank == rep.whole_rank;
  return rep;
}

SplitTriple direct_sum_triple(const ChainPresentation& q, const ChainPresentation& r) {
  if (!(q.theta == r.theta)) throw DomainError(Errc::IncompatiblePresentations, "theta differs");
  if (q.chain.size() != r.chain.size()) throw DomainError(Errc::IncompatiblePresentations, "chain lengths differ");
  if (q.terminates != r.terminates || q.declared_limit.has_value() != r.declared_limit.has_value())
    throw DomainError(Errc::IncompatiblePresentations, "limit data differ");
  const ThetaContext& ctx = q.theta;
  LatticeElem total = q.ambient + r.ambient;
  SplitTriple t{q, ChainPresentation{ctx, total, {}, std::nullopt, q.terminates},
                ChainPresentation{ctx, total, {}, std::nullopt, q.terminates}};
  for (std::size_t i = 0; i < q.chain.size(); ++i) {
    t.whole.chain.push_back(q.chain[i] + r.chain[i]);
    t.quot.chain.push_back(q.ambient + r.chain[i]);
  }
  if (q.declared_limit) {
    t.whole.declared_limit = *q.declared_limit + *r.declared_limit;
    t.quot.declared_limit = value(ctx, q.ambient) + *r.declared_limit;
  }
  return t;
}

HnProfile hn_profile(const ChainPresentation& cp, bool merge_equal_slopes) {
  return hn_profile(cp.theta, cp.chain, merge_equal_slopes);
}

HnProfile hn_profile(const ThetaContext& ctx, const std::vector<LatticeElem>& filtration, bool merge_equal_slopes) {
  HnProfile prof;
  LatticeElem prev(0, 0);
  for (const auto& f : filtration) {
    LatticeElem q = f - prev;
    if (sign(ctx, q) <= 0)
      throw DomainError(Errc::NonPositiveQuotient, "quotient " + q.to_string() + " after " + prev.to_string() +
                                                       " does not have positive rank");
    prev = f;
    if (merge_equal_slopes && !prof.entries.empty() && compare(prof.entries.back().slope, slope(ctx, q)) == 0) {
      HnEntry& last = prof.entries.back();
      last.quotient = last.quotient + q;
      last.slope = slope(ctx, last.quotient);
      last.rank = value(ctx, last.quotient);
      ++prof.merged_steps;
      continue;
    }
    prof.entries.push_back(HnEntry{q, slope(ctx, q), value(ctx, q)});
  }
  for (std::size_t i = 0; i < prof.entries.size(); ++i) {
    if (prof.entries[i].quotient.m == 0) ++prof.zero_degree_count;
    if (i == 0) continue;
    if (compare(prof.entries[i - 1].slope, prof.entries[i].slope) <= 0) prof.slopes_strictly_decreasing = false;
    if (prof.entries[i - 1].rank <= prof.entries[i].rank) prof.ranks_strictly_decreasing = false;
  }
  prof.valid = prof.slopes_strictly_decreasing && prof.ranks_strictly_decreasing && prof.zero_degree_count <= 1;
  return prof;
}

}  // namespace nct
