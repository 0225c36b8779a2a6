#include "nctorus/acceptance.hpp"

#include "nctorus/constructions/chains.hpp"
#include "nctorus/constructions/eps_plan.hpp"
#include "nctorus/constructions/subbundle.hpp"
#include "nctorus/constructions/tuples.hpp"
#include "nctorus/division.hpp"
#include "nctorus/error.hpp"
#include "nctorus/kinv.hpp"
#include "nctorus/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

namespace nct::acceptance {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

std::string dec(const QuadNumber& x, int digits = 6) { return x.to_decimal(digits); }

// 0 < m*theta + n < 1 fixes n for each m.
Int unit_n(const ThetaContext& ctx, const Int& m) { return (-ctx.linear(m, 0)).floor() + 1; }

LatticeElem random_positive_primitive(const ThetaContext& ctx, Rng& rng, long bound) {
  for (;;) {
    LatticeElem v(uniform(rng, -bound, bound), uniform(rng, -bound, bound));
    if (v.is_primitive() && sign(ctx, v) > 0) return v;
  }
}

bool tree_points_sorted(const ThetaContext& ctx, const std::vector<LatticeElem>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (compare(ctx, pts[i - 1], pts[i]) >= 0) return false;
  return true;
}

// 1
Outcome phi_oracle_equivalence(Rng&) {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& ctx : thetas()) {
    for (long m = -100; m <= 100; ++m) {
      Int n = unit_n(ctx, Int(m));
      if (abs(n) > 100) continue;
      LatticeElem v(Int(m), n);
      if (!v.is_primitive() || compare(ctx, v, LatticeElem(0, 1)) >= 0) continue;
      // phi(v) has |m1| < |m| + 1/v, and |n1| <= 2|m1| + 1 since |theta| < 2.
      Int bound = 3 * (abs(v.m) + value(ctx, v).reciprocal().ceil()) + 10;
      try {
        LatticeElem fast = phi(ctx, v), slow = phi_oracle(ctx, v, bound);
        if (!(fast == slow)) out.fail(ctx.spec() + " v=" + v.to_string() + ": " + fast.to_string() + " vs " + slow.to_string());
      } catch (const DomainError& e) {
        out.fail(ctx.spec() + " v=" + v.to_string() + ": " + e.what());
      }
      ++checked;
    }
  }
  out.detail = std::to_string(checked) + " vectors, unique oracle solution each";
  return out;
}

// 2
Outcome tree_forward(Rng&) {
  Outcome out;
  std::size_t total = 0;
  for (const auto& ctx : thetas()) {
    DivisionTree tree = build_tree(ctx, 14);
    auto pts = tree.points();
    total += pts.size();
    if (pts.size() != (1u << 14) - 1) out.fail(ctx.spec() + ": point count " + std::to_string(pts.size()));
    for (const auto& p : pts)
      if (p.m >= 0) {
        out.fail(ctx.spec() + ": point " + p.to_string() + " has m >= 0");
        break;
      }
    if (!tree_points_sorted(ctx, pts)) out.fail(ctx.spec() + ": in-order points not increasing");
  }
  out.detail = std::to_string(total) + " points, all with m < 0";
  return out;
}

// 3
Outcome membership_converse(Rng&) {
  Outcome out;
  std::size_t max_steps = 0, max_depth = 0, checked = 0;
  for (const auto& ctx : thetas()) {
    for (long m = -25; m <= -1; ++m) {
      LatticeElem v(Int(m), unit_n(ctx, Int(m)));
      MembershipTrace t = member_b_theta(ctx, v);
      TreeLocation loc = locate_point(ctx, v, 200);
      max_steps = std::max(max_steps, t.steps.size());
      max_depth = std::max(max_depth, loc.path.size());
      if (!t.verdict || t.steps.size() >= 200) out.fail(ctx.spec() + " v=" + v.to_string() + ": " + t.reason);
      if (!loc.found) out.fail(ctx.spec() + " v=" + v.to_string() + ": not located by descent");
      else if (!(division_point(ctx, loc.path.back()) == v)) out.fail(ctx.spec() + " v=" + v.to_string() + ": descent ends elsewhere");
      ++checked;
    }
  }
  out.detail = std::to_string(checked) + " points, max trace " + std::to_string(max_steps) + ", max descent " +
               std::to_string(max_depth);
  return out;
}

// 4
Outcome symmetries(Rng& rng) {
  Outcome out;
  std::size_t phi_checks = 0;
  for (const auto& ctx : thetas()) {
    ThetaContext neg = ctx.negated();
    auto pts = build_tree(ctx, 10).points();
    auto neg_pts = build_tree(neg, 10).points();
    std::set<std::pair<std::string, std::string>> mirrored, actual;
    // 1 - (m*theta + n) = m*(-theta) + (1 - n).
    for (const auto& p : pts) mirrored.insert({p.m.get_str(), Int(1 - p.n).get_str()});
    for (const auto& p : neg_pts) actual.insert({p.m.get_str(), p.n.get_str()});
    if (mirrored != actual) out.fail(ctx.spec() + ": depth-10 point sets are not mirror images");
  }
  std::vector<ThetaContext> ts = thetas();
  for (int i = 0; i < 500; ++i) {
    const ThetaContext& ctx = ts[static_cast<std::size_t>(i) % ts.size()];
    LatticeElem v = random_positive_primitive(ctx, rng, 60);
    // The same real number in coordinates of -theta is (-m, n).
    LatticeElem w = phi(ctx.negated(), LatticeElem(Int(-v.m), v.n));
    LatticeElem lhs(Int(-w.m), w.n);
    if (!(lhs == v - phi(ctx, v))) out.fail(ctx.spec() + " v=" + v.to_string() + ": phi_{-theta}(v) != v - phi(v)");
    ++phi_checks;
  }
  out.detail = std::to_string(ts.size()) + " point-set reflections, " + std::to_string(phi_checks) + " phi identities";
  return out;
}

// 5
Outcome morita_compat(Rng& rng) {
  Outcome out;
  std::vector<ThetaContext> ts = thetas();
  std::size_t reversing = 0;
  for (int i = 0; i < 1000; ++i) {
    const ThetaContext& ctx = ts[static_cast<std::size_t>(i) % ts.size()];
    long a, b, c, d;
    for (;;) {
      a = uniform(rng, -10, 10), b = uniform(rng, -10, 10), c = uniform(rng, -10, 10);
      if (a == 0) {
        if (b * c != -1) continue;
        d = uniform(rng, -10, 10);
        break;
      }
      if ((1 + b * c) % a != 0) continue;
      d = (1 + b * c) / a;
      if (d >= -10 && d <= 10) break;
    }
    MoritaMap g = MoritaMap::make(ctx, a, b, c, d);
    LatticeElem u(uniform(rng, -50, 50), uniform(rng, -50, 50));
    LatticeElem v(uniform(rng, -50, 50), uniform(rng, -50, 50));
    std::string where = ctx.spec() + " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                        std::to_string(d) + ")";
    if (chi(g.apply(u), g.apply(v)) != chi(u, v)) out.fail(where + ": chi not preserved");
    if (!g.scaling_holds(u) || !g.scaling_holds(v)) out.fail(where + ": rank scaling fails");
    if (!(g.apply_inverse(g.apply(u)) == u)) out.fail(where + ": inverse does not undo the map");
    if (u == v) continue;
    bool same = compare(ctx, u, v) == compare(g.target(), g.apply(u), g.apply(v));
    if (same != g.preserves_order()) out.fail(where + ": order behaviour disagrees with the sign of c*theta + d");
    if (!g.preserves_order()) ++reversing;
  }
  out.detail = "1000 maps and pairs, " + std::to_string(reversing) + " order-reversing";
  return out;
}

// 6
Outcome certificates(Rng& rng) {
  Outcome out;
  ThetaContext ctx = parse_theta("golden");
  std::size_t max_path = 0;
  for (int i = 0; i < 200; ++i) {
    LatticeElem p, r;
    for (;;) {
      p = random_positive_primitive(ctx, rng, 50);
      r = LatticeElem(uniform(rng, -50, 50), uniform(rng, -50, 50));
      if (sign(ctx, r) > 0 && compare(ctx, r, p) < 0 && chi(r, p) > 0) break;
    }
    try {
      SubbundleCertificate cert = subbundle_certificate(ctx, p, r);
      CertificateCheck check = validate_certificate(cert);
      if (!check.valid) out.fail("P=" + p.to_string() + " r=" + r.to_string() + ": " + check.failures.front());
      max_path = std::max(max_path, cert.path.size());
    } catch (const std::exception& e) {
      out.fail("P=" + p.to_string() + " r=" + r.to_string() + ": " + e.what());
    }
  }
  out.detail = "200 certificates re-validated, longest path " + std::to_string(max_path);
  return out;
}

VectorTuple random_halfplane_tuple(Rng& rng) {
  for (;;) {
    std::size_t size = static_cast<std::size_t>(uniform(rng, 1, 8));
    std::vector<Vec2> vs;
    while (vs.size() < size) {
      Vec2 v(uniform(rng, -20, 20), uniform(rng, -20, 20));
      if (gcd(v.x, v.y) == 1) vs.push_back(v);
    }
    VectorTuple t = VectorTuple::make(vs);
    if (halfplane_check(t).ok) return t;
  }
}

// 7
Outcome tuple_calculus(Rng& rng) {
  Outcome out;
  std::size_t steps = 0;
  for (int i = 0; i < 1000; ++i) {
    VectorTuple t = random_halfplane_tuple(rng);
    Reduction red = reduce_full(t);
    steps += red.trace.size();
    Int prev = potential_D(t);
    for (const auto& s : red.trace) {
      if (s.d_before != prev || s.d_after >= s.d_before) out.fail(t.to_string() + ": potential did not strictly decrease");
      prev = s.d_after;
    }
    if (prev != potential_D(red.canonical) || potential_D(red.canonical) != 0) out.fail(t.to_string() + ": final potential not 0");
    if (!(red.canonical.sum() == t.sum())) out.fail(t.to_string() + ": sum changed");
    if (!red.canonical.all_equal()) out.fail(t.to_string() + ": terminal tuple not constant");
  }
  std::size_t equal_pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    VectorTuple t1 = random_halfplane_tuple(rng);
    VectorTuple t2 = random_halfplane_tuple(rng);
    if (i % 2 == 0) {
      // A same-sum partner: a few random reductions of t1, then a shuffle.
      t2 = t1;
      for (long k = uniform(rng, 0, 3); k > 0 && !t2.all_equal(); --k) {
        std::size_t a, b;
        do {
          a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(t2.size()) - 1));
          b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(t2.size()) - 1));
        } while (a == b || t2.vectors()[a] == t2.vectors()[b]);
        t2 = reduce_step(t2, a, b);
      }
      std::vector<Vec2> vs = t2.vectors();
      std::shuffle(vs.begin(), vs.end(), rng);
      t2 = VectorTuple::make(vs);
    }
    try {
      Equivalence e = tuples_equivalent(t1, t2);
      if (e.equivalent != (t1.sum() == t2.sum())) out.fail(t1.to_string() + " vs " + t2.to_string() + ": verdict differs from sums");
      if (e.equivalent) ++equal_pairs;
    } catch (const std::exception& e) {
      out.fail(t1.to_string() + " vs " + t2.to_string() + ": " + e.what());
    }
  }
  out.detail = "1000 reductions (" + std::to_string(steps) + " steps), 1000 pairs (" + std::to_string(equal_pairs) +
               " equivalent)";
  return out;
}

// 8
Outcome approach(Rng&) {
  Outcome out;
  ThetaContext ctx = parse_theta("golden");
  QuadNumber tol(Rational(1, 1000000));
  std::ostringstream d;
  for (const char* text : {"0.5", "0.123456", "0.999"}) {
    QuadNumber r(parse_rational(text));
    ApproachResult res = approach_target(ctx, r, 300, tol);
    if (res.points.empty()) {
      out.fail(std::string(text) + ": no points");
      continue;
    }
    for (std::size_t i = 0; i < res.points.size(); ++i) {
      if (i > 0 && compare(ctx, res.points[i - 1], res.points[i]) >= 0) out.fail(std::string(text) + ": not increasing");
      if (value(ctx, res.points[i]) >= r) out.fail(std::string(text) + ": point above target");
      if (!member_b_theta(ctx, res.points[i]).verdict) out.fail(std::string(text) + ": " + res.points[i].to_string() + " not in B");
    }
    QuadNumber gap = r - value(ctx, res.points.back());
    if (!(gap < tol)) out.fail(std::string(text) + ": final gap " + dec(gap, 9));
    d << text << ": " << res.points.size() << " points, gap " << dec(gap, 9) << "; ";
  }
  out.detail = d.str();
  out.detail.resize(out.detail.size() - 2);
  return out;
}

// 9
Outcome eps_plans(Rng& rng) {
  Outcome out;
  std::vector<ThetaContext> ts = thetas();
  std::size_t shrunk = 0, dropped = 0;
  for (int i = 0; i < 100; ++i) {
    const ThetaContext& ctx = ts[static_cast<std::size_t>(i) % ts.size()];
    std::vector<LatticeElem> pieces;
    long count = uniform(rng, 1, 4);
    while (static_cast<long>(pieces.size()) < count) {
      LatticeElem v(uniform(rng, -10, 10), uniform(rng, -10, 10));
      if (sign(ctx, v) > 0) pieces.push_back(v);
    }
    Rational eps(uniform(rng, 1, 20), 20), c(uniform(rng, -12, 4), 2);
    eps.canonicalize();
    c.canonicalize();
    FormalSum input = FormalSum::from_invariants(pieces);
    try {
      EpsPlan plan = eps_plan(ctx, input, eps, c);
      EpsCheck check = validate_eps_plan(ctx, plan);
      if (!check.rank_ok) out.fail(ctx.spec() + ": rank deficit not below eps");
      if (!check.slopes_ok) out.fail(ctx.spec() + ": some slope >= C");
      if (!check.degrees_ok) out.fail(ctx.spec() + ": ledger degrees inconsistent");
      for (const auto& s : plan.ledger) {
        shrunk += s.action == EpsAction::Shrunk;
        dropped += s.action == EpsAction::Dropped;
      }
    } catch (const std::exception& e) {
      out.fail(ctx.spec() + ": " + e.what());
    }
  }
  out.detail = "100 plans, " + std::to_string(shrunk) + " shrink steps, " + std::to_string(dropped) + " drops";
  return out;
}

ChainPresentation random_chain(const ThetaContext& ctx, Rng& rng, int kind, std::size_t length) {
  LatticeElem p = random_positive_primitive(ctx, rng, 6);
  QuadNumber total = value(ctx, p);
  if (kind == 0) {
    for (;;) {
      QuadNumber r = total * QuadNumber(Rational(uniform(rng, 1, 99), 100));
      try {
        ChainPresentation cp = quasi_subsheaf_chain(ctx, p, r, length);
        if (cp.chain.size() == length) return cp;
      } catch (const DomainError&) {
      }
    }
  }
  // A strictly increasing run of lattice ranks below rk P.
  for (Int bound = 4;; bound *= 2) {
    std::vector<LatticeElem> cands = enumerate_interval(ctx, QuadNumber(0), total, bound);
    if (cands.size() < length) continue;
    std::vector<LatticeElem> pick;
    std::sample(cands.begin(), cands.end(), std::back_inserter(pick), length, rng);
    ChainPresentation cp{ctx, p, pick, std::nullopt, kind == 1};
    validate_chain(cp);
    return cp;
  }
}

// 10
Outcome rank_calculus(Rng& rng) {
  Outcome out;
  std::vector<ThetaContext> ts = thetas();
  std::size_t exact = 0;
  for (int i = 0; i < 100; ++i) {
    const ThetaContext& ctx = ts[static_cast<std::size_t>(i) % ts.size()];
    int kind = i % 3;
    std::size_t length = static_cast<std::size_t>(uniform(rng, 2, 6));
    ChainPresentation q = random_chain(ctx, rng, kind, length), r = random_chain(ctx, rng, kind, length);
    std::string where = ctx.spec() + " triple " + std::to_string(i);
    try {
      QuotientRank base = rank_of_quotient(q);
      if (base.exact) {
        // Independence of the presentation.
        std::vector<ChainPresentation> variants{drop_prefix(q, 1), pad_ambient(q, random_positive_primitive(ctx, rng, 6))};
        std::vector<LatticeElem> head =
            enumerate_interval(ctx, QuadNumber(0), value(ctx, q.chain.front()), Int(8));
        if (!head.empty()) variants.push_back(prepend(q, {head.front()}));
        variants.push_back(prepend(q, {LatticeElem(0, 0)}));
        for (const auto& v : variants)
          if (!(rank_of_quotient(v).exact && *rank_of_quotient(v).exact == *base.exact))
            out.fail(where + ": quotient rank depends on the presentation");
      }
      SplitTriple t = direct_sum_triple(q, r);
      AdditivityReport rep = rank_additivity_check(t.sub, t.whole, t.quot);
      if (!rep.holds) out.fail(where + ": ranks are not additive");
      exact += rep.exact;
    } catch (const std::exception& e) {
      out.fail(where + ": " + e.what());
    }
  }
  out.detail = "100 triples additive (" + std::to_string(exact) + " with exact limits)";
  return out;
}

// 11
Outcome m_set_finiteness(Rng&) {
  Outcome out;
  std::ostringstream d;
  std::size_t cases = 0;
  for (const char* spec : {"golden", "sqrt:2"}) {
    ThetaContext ctx = parse_theta(spec);
    for (const QuadNumber& n_bound : {QuadNumber(1), QuadNumber(1) + ctx.value()}) {
      for (long c : {3L, 10L}) {
        MSet s = m_set(ctx, n_bound, Rational(c));
        QuadNumber lo(-c);
        for (const auto& v : s.values)
          if (v.value(ctx) < lo || v.value(ctx) > QuadNumber(0)) out.fail(std::string(spec) + ": value outside [-c, 0]");
        // Independent scan over twice the bound, comparing field values.
        Int wide = (QuadNumber(2 * c) * n_bound).floor();
        std::optional<QuadNumber> best;
        for (Int m = 0; m >= -wide; --m) {
          QuadNumber mt = ctx.linear(m, 0);
          for (Int n = (-mt).floor() - 1; n <= (n_bound - mt).floor() + 1; ++n) {
            QuadNumber v = mt + QuadNumber(n);
            if (v.sign() <= 0 || v >= n_bound) continue;
            QuadNumber mu = QuadNumber(m) / v;
            if (mu < lo) continue;
            if (!best || mu > *best) best = mu;
          }
        }
        bool agree = best.has_value() == s.max.has_value() && (!best || *best == s.max->value(ctx));
        if (!agree) out.fail(std::string(spec) + " N=" + dec(n_bound) + " c=" + std::to_string(c) + ": maximum differs");
        ++cases;
      }
    }
  }
  out.detail = std::to_string(cases) + " cases, maxima agree with a scan over twice the bound";
  return out;
}

// 12
Outcome hn_on_division_chain(Rng&) {
  Outcome out;
  ThetaContext ctx = parse_theta("golden");
  ChainPresentation cp = quasi_subsheaf_chain(ctx, LatticeElem(0, 1), QuadNumber(Rational(1, 2)), 10);
  if (cp.chain.size() != 10) out.fail("chain has " + std::to_string(cp.chain.size()) + " elements");
  HnProfile raw = hn_profile(cp, false);
  HnProfile prof = hn_profile(cp, true);
  if (!prof.slopes_strictly_decreasing) out.fail("slopes not strictly decreasing");
  if (!prof.ranks_strictly_decreasing) out.fail("quotient ranks not strictly decreasing");
  if (prof.zero_degree_count > 1) out.fail("more than one degree-zero quotient");
  if (!(prof.entries.back().rank < prof.entries.front().rank)) out.fail("last quotient rank not below the first");
  out.detail = std::to_string(raw.entries.size()) + " raw quotients, " + std::to_string(prof.merged_steps) +
               " adjacent equal-slope steps merged into " + std::to_string(prof.entries.size()) +
               " semistable quotients, last rank " + dec(prof.entries.back().rank, 9);
  return out;
}

// 13
Outcome convergents(Rng&) {
  Outcome out;
  QuadNumber threshold(Rational(1, 10000));
  for (const auto& ctx : thetas()) {
    auto cs = positive_convergents(ctx, 12);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (gcd(cs[i].p, cs[i].q) != 1) out.fail(ctx.spec() + ": convergent not coprime");
      if (i == 0) continue;
      if (!(ctx.linear(cs[i].q, cs[i].p) < ctx.linear(cs[i - 1].q, cs[i - 1].p))) out.fail(ctx.spec() + ": values not decreasing");
      if (cs[i].q <= cs[i - 1].q) out.fail(ctx.spec() + ": q not increasing");
    }
    if (cs.size() != 12 || !(ctx.linear(cs.back().q, cs.back().p) < threshold)) out.fail(ctx.spec() + ": final value not below 1e-4");
  }
  out.detail = std::to_string(thetas().size()) + " parameters, 12 convergents each";
  return out;
}

struct Criterion {
  const char* name;
  Outcome (*run)(Rng&);
  double time_limit;  // seconds, 0 for none
};

const std::vector<Criterion>& registry() {
  static const std::vector<Criterion> all{
      {"phi-oracle equivalence", phi_oracle_equivalence, 60},
      {"division points have m < 0", tree_forward, 30},
      {"every m < 0 point is reached", membership_converse, 60},
      {"reflection symmetries", symmetries, 0},
      {"Morita compatibility", morita_compat, 0},
      {"subbundle certificates", certificates, 60},
      {"tuple calculus", tuple_calculus, 0},
      {"approach to a target rank", approach, 0},
      {"eps-plans", eps_plans, 0},
      {"rank calculus on chains", rank_calculus, 0},
      {"M_N finiteness", m_set_finiteness, 0},
      {"HN profile of a division chain", hn_on_division_chain, 0},
      {"positive convergents", convergents, 0},
  };
  return all;
}

Result run_one(int id, std::uint64_t seed) {
  const Criterion& c = registry()[static_cast<std::size_t>(id - 1)];
  Result r{id, c.name, false, "", 0};
  Rng rng(seed + static_cast<std::uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run(rng);
  } catch (const std::exception& e) {
    o.fail(std::string("unexpected exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.time_limit > 0 && r.seconds >= c.time_limit)
    o.fail("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(c.time_limit) + " s");
  r.pass = o.pass;
  r.detail = o.pass ? o.detail : o.first_failure;
  return r;
}

}  // namespace

std::vector<std::string> theta_specs() {
  // The fourth entry, (sqrt(5) + 1)/2 - 1, equals the first.
  return {"golden", "sqrt:2", "sqrt:3", "qi:-1,1,2,5", "qi:1,1,3,2", "qi:1,-1,4,7"};
}

std::vector<ThetaContext> thetas() {
  std::vector<ThetaContext> out;
  for (const auto& s : theta_specs()) out.push_back(parse_theta(s));
  return out;
}

int criterion_count() { return static_cast<int>(registry().size()); }

std::vector<Result> run(const Options& opts) {
  std::vector<int> ids = opts.only;
  if (ids.empty())
    for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
  for (int id : ids)
    if (id < 1 || id > criterion_count()) throw DomainError(Errc::InvalidArgument, "no criterion " + std::to_string(id));
  std::vector<Result> results;
  if (!opts.parallel) {
    for (int id : ids) results.push_back(run_one(id, opts.seed));
    return results;
  }
  std::vector<std::future<Result>> pending;
  for (int id : ids) pending.push_back(std::async(std::launch::async, run_one, id, opts.seed));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

std::string format(const Result& r, bool with_time) {
  char id[8];
  std::snprintf(id, sizeof id, "%2d", r.id);
  std::string line = std::string(r.pass ? "PASS " : "FAIL ") + id + " " + r.name + ": " + r.detail;
  if (with_time) {
    char t[32];
    std::snprintf(t, sizeof t, " (%.2f s)", r.seconds);
    line += t;
  }
  return line;
}

}  // namespace nct::acceptance
