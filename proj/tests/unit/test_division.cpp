#include "helpers.hpp"
#include "nctorus/division.hpp"
#include "nctorus/error.hpp"

using namespace nct;
using testing::golden;
using testing::pairs;

TEST_CASE("phi matches the brute-force reference") {
  // From tests/oracle/oracle.py.
  ThetaContext g = golden();
  CHECK(phi(g, LatticeElem(0, 1)) == LatticeElem(-1, 1));
  CHECK(phi(g, LatticeElem(1, 0)) == LatticeElem(-1, 1));
  CHECK(phi(g, LatticeElem(-1, 1)) == LatticeElem(-3, 2));
  CHECK(phi(g, LatticeElem(-3, 2)) == LatticeElem(-8, 5));
  CHECK(phi(g, LatticeElem(-8, 5)) == LatticeElem(-21, 13));
  CHECK(phi(g, LatticeElem(3, -1)) == LatticeElem(1, 0));
  ThetaContext r2 = parse_theta("sqrt:2");
  CHECK(phi(r2, LatticeElem(0, 1)) == LatticeElem(-1, 2));
  CHECK(phi(r2, LatticeElem(-1, 2)) == LatticeElem(-2, 3));
  CHECK(phi(r2, LatticeElem(1, -1)) == LatticeElem(-2, 3));
  CHECK(phi(r2, LatticeElem(-5, 8)) == LatticeElem(-2, 3));
  CHECK(phi(r2, LatticeElem(2, -1)) == LatticeElem(1, 0));
  ThetaContext q = parse_theta("qi:1,1,3,2");
  CHECK(phi(q, LatticeElem(-1, 1)) == LatticeElem(-6, 5));
  CHECK(phi(q, LatticeElem(3, 1)) == LatticeElem(2, 1));
}

TEST_CASE("phi solves chi(w, v) = 1 strictly inside (0, v)") {
  std::mt19937_64 rng(3);
  for (const char* spec : {"golden", "sqrt:2", "qi:1,-1,4,7"}) {
    ThetaContext t = parse_theta(spec);
    for (int i = 0; i < 200; ++i) {
      LatticeElem v = testing::random_positive_primitive(t, rng, 80);
      LatticeElem w = phi(t, v);
      CHECK(chi(w, v) == 1);
      CHECK(sign(t, w) > 0);
      CHECK(compare(t, w, v) < 0);
    }
  }
}

TEST_CASE("phi rejects invalid lengths") {
  ThetaContext g = golden();
  CHECK_THROWS_AS(phi(g, LatticeElem(2, 2)), DomainError);
  CHECK_THROWS_AS(phi(g, LatticeElem(1, -1)), DomainError);
}

TEST_CASE("the oracle reports a bound that is too small") {
  ThetaContext g = golden();
  CHECK(phi_oracle(g, LatticeElem(-3, 2), 20) == LatticeElem(-8, 5));
  CHECK_THROWS_AS(phi_oracle(g, LatticeElem(-3, 2), 3), DomainError);
}

TEST_CASE("depth-3 trees match the brute-force reference") {
  // From tests/oracle/oracle.py.
  CHECK(build_tree(golden(), 3).points() == pairs({{-8, 5}, {-3, 2}, {-6, 4}, {-1, 1}, {-4, 3}, {-2, 2}, {-5, 4}}));
  CHECK(build_tree(parse_theta("sqrt:2"), 3).points() ==
        pairs({{-7, 10}, {-2, 3}, {-4, 6}, {-1, 2}, {-8, 12}, {-3, 5}, {-5, 8}}));
  CHECK(build_tree(parse_theta("sqrt:3"), 3).points() ==
        pairs({{-15, 26}, {-4, 7}, {-8, 14}, {-1, 2}, {-5, 9}, {-2, 4}, {-3, 6}}));
  CHECK(build_tree(parse_theta("qi:1,1,3,2"), 3).points() ==
        pairs({{-11, 9}, {-6, 5}, {-47, 38}, {-1, 1}, {-7, 6}, {-2, 2}, {-3, 3}}));
}

TEST_CASE("trees validate and tampering is detected") {
  DivisionTree t = build_tree(golden(), 5);
  CHECK(validate_tree(t).empty());
  auto nodes = t.nodes();
  nodes[1].point = LatticeElem(-5, 3);
  CHECK_FALSE(validate_tree(DivisionTree(t.theta(), nodes, t.depth())).empty());
}

TEST_CASE("membership") {
  ThetaContext g = golden();
  MembershipTrace first = member_b_theta(g, LatticeElem(-1, 1));
  CHECK(first.verdict);
  CHECK(first.steps.empty());
  CHECK_FALSE(member_b_theta(g, LatticeElem(1, 0)).verdict);
  CHECK(member_b_theta(g, LatticeElem(-2, 2)).verdict);
  // (-25, 16) appears at depth 6 of the reference tree.
  MembershipTrace deep = member_b_theta(g, LatticeElem(-25, 16));
  CHECK(deep.verdict);
  CHECK(deep.shrink_count() == 5);
  CHECK_THROWS_AS(member_b_theta(g, LatticeElem(0, 1)), DomainError);
  CHECK_THROWS_AS(member_b_theta(g, LatticeElem(1, -1)), DomainError);
}

TEST_CASE("membership agrees with tree enumeration") {
  for (const char* spec : {"golden", "sqrt:2", "qi:1,1,3,2"}) {
    CAPTURE(spec);
    ThetaContext t = parse_theta(spec);
    auto pts = build_tree(t, 8).points();
    for (const auto& p : pts) CHECK(member_b_theta(t, p).verdict);
    for (long m = 1; m <= 30; ++m) {
      LatticeElem v(Int(m), (-t.linear(m, 0)).floor() + 1);
      CHECK_FALSE(member_b_theta(t, v).verdict);
    }
  }
}

TEST_CASE("directed descent locates division points") {
  ThetaContext g = golden();
  TreeLocation loc = locate_point(g, LatticeElem(-3, 2), 10);
  CHECK(loc.found);
  CHECK(loc.path.size() == 2);
  CHECK(division_point(g, loc.path.back()) == LatticeElem(-3, 2));
  CHECK_FALSE(locate_point(g, LatticeElem(1, 0), 30).found);
}

TEST_CASE("approach matches the brute-force reference") {
  // From tests/oracle/oracle.py.
  ThetaContext g = golden();
  QuadNumber tiny(Rational(1, 1000000000));
  CHECK(approach_target(g, QuadNumber(Rational(1, 2)), 6, tiny).points ==
        pairs({{-1, 1}, {-9, 6}, {-17, 11}, {-161, 100}, {-305, 189}, {-2889, 1786}}));
  CHECK(approach_target(g, QuadNumber(parse_rational("0.123456")), 4, tiny).points ==
        pairs({{-8, 5}, {-16, 10}, {-71, 44}, {-215, 133}}));
  CHECK(approach_target(parse_theta("sqrt:2"), QuadNumber(parse_rational("0.9")), 4, tiny).points ==
        pairs({{-1, 2}, {-3, 5}, {-10, 15}, {-22, 32}}));
}

TEST_CASE("approach errors") {
  ThetaContext g = golden();
  QuadNumber tol(Rational(1, 100));
  CHECK_THROWS_AS(approach_target(g, QuadNumber(1), 3, tol), DomainError);
  CHECK_THROWS_AS(approach_target(g, QuadNumber(0), 3, tol), DomainError);
  CHECK_THROWS_AS(approach_target(g, value(g, LatticeElem(-1, 1)), 3, tol), DomainError);
  CHECK_THROWS_AS(approach_target(g, QuadNumber(Rational(1, 2)), 3, QuadNumber(0)), DomainError);
}

TEST_CASE("reflection identities") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"golden", "sqrt:3", "qi:1,1,3,2"}) {
    ThetaContext t = parse_theta(spec), n = t.negated();
    for (int i = 0; i < 100; ++i) {
      LatticeElem v = testing::random_positive_primitive(t, rng, 50);
      LatticeElem w = phi(n, LatticeElem(Int(-v.m), v.n));
      CHECK(LatticeElem(Int(-w.m), w.n) == v - phi(t, v));
    }
  }
}
