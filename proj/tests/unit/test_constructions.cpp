#include "helpers.hpp"
#include "nctorus/constructions/chains.hpp"
#include "nctorus/constructions/eps_plan.hpp"
#include "nctorus/constructions/rank_search.hpp"
#include "nctorus/constructions/subbundle.hpp"
#include "nctorus/constructions/tuples.hpp"
#include "nctorus/error.hpp"

using namespace nct;
using testing::golden;
using testing::pairs;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("no DomainError thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("subbundle certificates") {
  ThetaContext g = golden();
  SubbundleCertificate one = subbundle_certificate(g, LatticeElem(0, 1), LatticeElem(-1, 1));
  CHECK(one.valid);
  CHECK(one.path.size() == 1);
  CHECK(one.triples[0].sub == LatticeElem(-1, 1));
  CHECK(one.triples[0].chi == 1);
  SubbundleCertificate two = subbundle_certificate(g, LatticeElem(0, 1), LatticeElem(-3, 2));
  CHECK(two.path.size() == 2);
  CHECK(two.path[1] == Segment{LatticeElem(0, 0), LatticeElem(-1, 1)});
  CHECK(code_of([&] { subbundle_certificate(g, LatticeElem(0, 1), LatticeElem(1, 0)); }) == Errc::PreconditionFailed);
  CHECK(code_of([&] { subbundle_certificate(g, LatticeElem(2, 2), LatticeElem(-1, 1)); }) == Errc::NotPrimitive);
}

TEST_CASE("certificates for random stable ranks re-validate") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-30, 30);
  for (const char* spec : {"golden", "sqrt:2", "qi:1,1,3,2"}) {
    ThetaContext t = parse_theta(spec);
    for (int made = 0; made < 30;) {
      LatticeElem p = testing::random_positive_primitive(t, rng, 30), r(d(rng), d(rng));
      if (sign(t, r) <= 0 || compare(t, r, p) >= 0 || chi(r, p) <= 0) continue;
      ++made;
      CHECK(validate_certificate(subbundle_certificate(t, p, r)).valid);
    }
  }
}

TEST_CASE("a tampered certificate fails validation") {
  ThetaContext g = golden();
  SubbundleCertificate c = subbundle_certificate(g, LatticeElem(0, 1), LatticeElem(-3, 2));
  SubbundleCertificate bad = c;
  bad.triples[1].quot = bad.triples[1].quot + LatticeElem(1, 0);
  CHECK_FALSE(validate_certificate(bad).valid);
  bad = c;
  bad.path.pop_back();
  CHECK_FALSE(validate_certificate(bad).valid);
  bad = c;
  bad.target = LatticeElem(-2, 2);
  CHECK_FALSE(validate_certificate(bad).valid);
}

TEST_CASE("chains toward a real rank") {
  ThetaContext g = golden();
  ChainPresentation cp = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(Rational(1, 2)), 2);
  CHECK(cp.chain == pairs({{-1, 1}, {-9, 6}}));
  CHECK(rank_of_quotient(cp).exact == QuadNumber(Rational(1, 2)));
  CHECK(code_of([&] { quasi_subsheaf_chain(g, LatticeElem(0, 1), value(g, LatticeElem(-1, 1)), 3); }) ==
        Errc::TargetOnBoundary);
  // Near the top of [0, rk P] the chain gets within 2 * delta.
  QuadNumber delta(Rational(1, 1000));
  ChainPresentation top = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(1) - delta, 200);
  CHECK(value(g, top.chain.back()) > QuadNumber(1) - QuadNumber(2) * delta);
  // A non-unit ambient is mapped back through the normalization.
  ChainPresentation other = quasi_subsheaf_chain(g, LatticeElem(1, 1), QuadNumber(Rational(1, 2)), 5);
  validate_chain(other);
  for (std::size_t i = 1; i < other.chain.size(); ++i) CHECK(sign(g, other.chain[i] - other.chain[i - 1]) > 0);
}

TEST_CASE("quotient ranks") {
  ThetaContext g = golden();
  ChainPresentation empty{g, LatticeElem(0, 1), {}, std::nullopt, false};
  CHECK(rank_of_quotient(empty).upper == QuadNumber(1));
  ChainPresentation full{g, LatticeElem(0, 1), {LatticeElem(0, 1)}, std::nullopt, true};
  CHECK(rank_of_quotient(full).exact == QuadNumber(0));
  ChainPresentation open{g, LatticeElem(0, 1), pairs({{-1, 1}, {-9, 6}}), std::nullopt, false};
  QuotientRank q = rank_of_quotient(open);
  CHECK_FALSE(q.exact);
  CHECK(q.upper == QuadNumber(1) - value(g, LatticeElem(-9, 6)));
  ChainPresentation bad{g, LatticeElem(0, 1), pairs({{-9, 6}, {-1, 1}}), std::nullopt, false};
  CHECK_THROWS_AS(validate_chain(bad), DomainError);
}

TEST_CASE("quotient rank does not depend on the presentation") {
  ThetaContext g = golden();
  ChainPresentation cp = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(Rational(1, 3)), 6);
  QuadNumber r = *rank_of_quotient(cp).exact;
  CHECK(*rank_of_quotient(drop_prefix(cp, 3)).exact == r);
  CHECK(*rank_of_quotient(prepend(cp, {LatticeElem(0, 0)})).exact == r);
  CHECK(*rank_of_quotient(pad_ambient(cp, LatticeElem(2, 1))).exact == r);
}

TEST_CASE("additivity on split triples") {
  ThetaContext g = golden();
  ChainPresentation a = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(Rational(1, 2)), 4);
  ChainPresentation b = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(Rational(1, 2)), 4);
  SplitTriple t = direct_sum_triple(a, b);
  AdditivityReport rep = rank_additivity_check(t.sub, t.whole, t.quot);
  CHECK(rep.exact);
  CHECK(rep.holds);
  CHECK(rep.sub_rank + rep.quot_rank == QuadNumber(1));
  // S = 0: the quotient has the whole rank.
  ChainPresentation zero{g, LatticeElem(0, 1), {LatticeElem(0, 0)}, std::nullopt, true};
  SplitTriple z = direct_sum_triple(zero, ChainPresentation{g, LatticeElem(-1, 1), {LatticeElem(-1, 1)}, std::nullopt, true});
  CHECK(rank_additivity_check(z.sub, z.whole, z.quot).holds);
  ChainPresentation wrong = t.quot;
  wrong.chain[0] = wrong.chain[0] + LatticeElem(-1, 1);
  CHECK(code_of([&] { rank_additivity_check(t.sub, t.whole, wrong); }) == Errc::IncompatiblePresentations);
}

TEST_CASE("HN profile of the descent toward 1/2") {
  ThetaContext g = golden();
  ChainPresentation cp = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(Rational(1, 2)), 2);
  HnProfile p = hn_profile(cp);
  REQUIRE(p.entries.size() == 2);
  CHECK(p.entries[0].quotient == LatticeElem(-1, 1));
  CHECK(p.entries[1].quotient == LatticeElem(-8, 5));
  CHECK(p.entries[1].slope.value(g).to_decimal(1) == "-143.5");
  CHECK(p.valid);
  // Ten steps repeat each quotient; merging equal slopes restores strict decrease.
  ChainPresentation ten = quasi_subsheaf_chain(g, LatticeElem(0, 1), QuadNumber(Rational(1, 2)), 10);
  CHECK_FALSE(hn_profile(ten).slopes_strictly_decreasing);
  HnProfile merged = hn_profile(ten, true);
  CHECK(merged.valid);
  CHECK(merged.merged_steps == 4);
}

TEST_CASE("HN profile reports without throwing") {
  ThetaContext g = golden();
  CHECK(hn_profile(g, {LatticeElem(-1, 1)}).valid);
  HnProfile up = hn_profile(g, pairs({{-1, 1}, {-1, 2}}));
  CHECK_FALSE(up.slopes_strictly_decreasing);
  CHECK_FALSE(up.valid);
  CHECK(code_of([&] { hn_profile(g, pairs({{-1, 2}, {-1, 1}})); }) == Errc::NonPositiveQuotient);
}

TEST_CASE("eps plans") {
  ThetaContext g = golden();
  EpsPlan p = eps_plan(g, FormalSum::from_invariants({LatticeElem(0, 1)}), Rational(3, 10), Rational(-1));
  REQUIRE(p.ledger.size() == 1);
  CHECK(p.ledger[0].action == EpsAction::Shrunk);
  CHECK(p.ledger[0].convergent->q == 2);
  CHECK(p.ledger[0].convergent->p == -1);
  CHECK(p.output.pieces[0].inv == LatticeElem(-2, 2));
  CHECK(validate_eps_plan(g, p).ok());
  EpsPlan keep = eps_plan(g, FormalSum::from_invariants({LatticeElem(-1, 1)}), Rational(1, 10), Rational(0));
  CHECK(keep.output.pieces[0].inv == LatticeElem(-1, 1));
  EpsPlan drop = eps_plan(g, FormalSum::from_invariants({LatticeElem(-1, 1)}), Rational(1), Rational(-5));
  CHECK(drop.output.empty());
  CHECK(code_of([&] { eps_plan(g, FormalSum::from_invariants({LatticeElem(1, -1)}), Rational(1), Rational(0)); }) ==
        Errc::NotInCTheta);
}

TEST_CASE("eps plans on random sums") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> d(-12, 12), k(1, 4);
  ThetaContext t = parse_theta("sqrt:3");
  for (int i = 0; i < 40; ++i) {
    std::vector<LatticeElem> pieces;
    for (long n = k(rng); static_cast<long>(pieces.size()) < n;) {
      LatticeElem v(d(rng), d(rng));
      if (sign(t, v) > 0) pieces.push_back(v);
    }
    EpsPlan p = eps_plan(t, FormalSum::from_invariants(pieces), Rational(1, 1 + i), Rational(d(rng), 3));
    CHECK(validate_eps_plan(t, p).ok());
  }
}

TEST_CASE("sub-rank witnesses") {
  ThetaContext g = golden();
  RankWitness w = sub_rank_witness(g, pairs({{0, 1}, {-1, 1}}), LatticeElem(-1, 1));
  CHECK(w.index == 0);
  CHECK(w.split == pairs({{-1, 1}, {0, 0}}));
  CHECK(w.chi_residual == 1);
  RankWitness zero = sub_rank_witness(g, pairs({{0, 1}, {-1, 1}}), LatticeElem(0, 0));
  CHECK(zero.split == pairs({{0, 0}, {0, 0}}));
  RankWitness single = sub_rank_witness(g, pairs({{0, 1}}), LatticeElem(-3, 2));
  CHECK(single.split == pairs({{-3, 2}}));
  CHECK_THROWS_AS(sub_rank_witness(g, pairs({{-1, 1}, {0, 1}}), LatticeElem(0, 0)), DomainError);
  CHECK_THROWS_AS(sub_rank_witness(g, pairs({{0, 1}}), LatticeElem(1, 0)), DomainError);
}

TEST_CASE("pair matching") {
  ThetaContext g = golden();
  PairMatch same = pair_match(g, {LatticeElem(-1, 1)}, {LatticeElem(-1, 1)}, QuadNumber(Rational(1, 10)));
  CHECK(same.rank == LatticeElem(-1, 1));
  QuadNumber eps(Rational(1, 10));
  PairMatch m = pair_match(g, {LatticeElem(0, 1)}, {LatticeElem(-1, 1)}, eps);
  QuadNumber r = value(g, m.rank);
  CHECK(r > value(g, LatticeElem(-1, 1)) - eps);
  CHECK(r <= value(g, LatticeElem(-1, 1)));
  PairMatch wide = pair_match(g, {LatticeElem(0, 1)}, {LatticeElem(1, 0)}, QuadNumber(5));
  CHECK(sign(g, wide.rank) >= 0);
}

TEST_CASE("interleaved schedules") {
  ThetaContext g = golden();
  InterleaveSchedule s = interleave_schedule(g, QuadNumber(1), 3);
  REQUIRE(s.chain.size() == 3);
  LatticeElem total(0, 0);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(value(g, s.chain[k]) > QuadNumber(1) - QuadNumber(Rational(Int(1), Int(static_cast<long>(k + 1)))));
    if (k > 0) CHECK(compare(g, s.chain[k - 1], s.chain[k]) < 0);
    total = total + s.stages[k].quotient;
  }
  CHECK(total == s.chain.back());
  InterleaveSchedule one = interleave_schedule(parse_theta("sqrt:2"), QuadNumber(Rational(7, 3)), 1);
  CHECK(value(parse_theta("sqrt:2"), one.chain[0]) > QuadNumber(Rational(4, 3)));
}

TEST_CASE("half-plane checks") {
  HalfplaneResult r = halfplane_check(parse_tuple("1,0;0,1"));
  CHECK(r.ok);
  CHECK(*r.witness == Vec2(1, 1));
  CHECK_FALSE(halfplane_check(parse_tuple("1,0;-1,0")).ok);
  CHECK(halfplane_check(parse_tuple("3,-2")).ok);
  CHECK_FALSE(halfplane_check(parse_tuple("3,1;-1,2;-2,-1")).ok);
  VectorTuple narrow = parse_tuple("1,0;-5,1;-7,1");
  HalfplaneResult thin = halfplane_check(narrow);
  REQUIRE(thin.ok);
  for (const auto& v : narrow.vectors()) CHECK(dot(*thin.witness, v) > 0);
}

TEST_CASE("potential and reduction steps") {
  CHECK(potential_D(parse_tuple("1,0;1,2")) == 2);
  CHECK(potential_D(parse_tuple("1,0;0,1;1,1")) == 3);
  CHECK(potential_D(parse_tuple("2,3;2,3;2,3")) == 0);
  ReduceStep rec;
  VectorTuple t = reduce_step(parse_tuple("1,0;1,2"), 0, 1, &rec);
  CHECK(t.to_string() == "1,1;1,1");
  CHECK(rec.multiplicity == 2);
  CHECK(rec.d_before == 2);
  CHECK(rec.d_after == 0);
  CHECK(reduce_step(parse_tuple("1,0;0,1;1,1"), 1, 0).to_string() == "1,1;1,1");
  CHECK(code_of([] { reduce_step(parse_tuple("1,0;1,0"), 0, 1); }) == Errc::EqualVectors);
  CHECK(code_of([] { reduce_step(parse_tuple("1,0;-1,0"), 0, 1); }) == Errc::ConeViolation);
  CHECK_THROWS_AS(parse_tuple("2,2"), DomainError);
  CHECK_THROWS_AS(parse_tuple("1;2"), std::invalid_argument);
}

TEST_CASE("full reduction and equivalence") {
  Reduction r = reduce_full(parse_tuple("1,0;1,2"));
  CHECK(r.canonical.to_string() == "1,1;1,1");
  CHECK(r.trace.size() == 1);
  CHECK(reduce_full(parse_tuple("2,1;2,1")).trace.empty());
  CHECK(tuples_equivalent(parse_tuple("1,0;1,2"), parse_tuple("1,1;1,1")).equivalent);
  CHECK_FALSE(tuples_equivalent(parse_tuple("1,0"), parse_tuple("0,1")).equivalent);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-20, 20), n(1, 8);
  for (int made = 0; made < 300;) {
    std::vector<Vec2> vs;
    for (long k = n(rng); static_cast<long>(vs.size()) < k;) {
      Vec2 v(d(rng), d(rng));
      if (gcd(v.x, v.y) == 1) vs.push_back(v);
    }
    VectorTuple t = VectorTuple::make(vs);
    if (!halfplane_check(t).ok) continue;
    ++made;
    Reduction red = reduce_full(t);
    CHECK(red.canonical.all_equal());
    CHECK(red.canonical.sum() == t.sum());
    for (const auto& s : red.trace) CHECK(s.d_after < s.d_before);
  }
}
