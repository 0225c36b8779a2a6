#include "helpers.hpp"
#include "nctorus/error.hpp"
#include "nctorus/lattice.hpp"

using namespace nct;
using testing::golden;

TEST_CASE("chi is antisymmetric and bilinear") {
  CHECK(chi(LatticeElem(-1, 1), LatticeElem(0, 1)) == 1);
  CHECK(chi(LatticeElem(0, 1), LatticeElem(-1, 1)) == -1);
  CHECK(chi(LatticeElem(-3, 2), LatticeElem(0, 1)) == 3);
  CHECK(chi(LatticeElem(1, 0), LatticeElem(0, 1)) == -1);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int i = 0; i < 200; ++i) {
    LatticeElem a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
    CHECK(chi(a, b) == -chi(b, a));
    CHECK(chi(a + b, c) == chi(a, c) + chi(b, c));
  }
}

TEST_CASE("comparison of lattice values") {
  ThetaContext g = golden();
  CHECK(compare(g, LatticeElem(-1, 1), LatticeElem(0, 1)) < 0);
  CHECK(compare(g, LatticeElem(1, 0), LatticeElem(-1, 1)) > 0);
  CHECK(compare(g, LatticeElem(2, 0), LatticeElem(2, 0)) == 0);
  CHECK(value(g, LatticeElem(-1, 1)).to_decimal(6) == "0.381966");
}

TEST_CASE("slopes") {
  ThetaContext g = golden();
  CHECK(slope(g, LatticeElem(0, 1)).value(g) == QuadNumber(0));
  CHECK(slope(g, LatticeElem(-1, 1)).value(g).to_decimal(6) == "-2.618033");
  CHECK(slope(g, LatticeElem(2, -1)).value(g).to_decimal(3) == "8.472");
  CHECK_THROWS_AS(slope(g, LatticeElem(1, -1)), DomainError);
  CHECK(compare(slope(g, LatticeElem(1, 0)), slope(g, LatticeElem(2, 0))) == 0);
  CHECK(compare(slope(g, LatticeElem(0, 1)), slope(g, LatticeElem(-1, 1))) > 0);
}

TEST_CASE("chi sign matches slope order for positive ranks") {
  ThetaContext t = parse_theta("sqrt:3");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    LatticeElem a = testing::random_positive_primitive(t, rng, 30), b = testing::random_positive_primitive(t, rng, 30);
    CHECK((chi(a, b) >= 0) == (compare(slope(t, a), slope(t, b)) <= 0));
  }
}

TEST_CASE("interval enumeration") {
  ThetaContext g = golden();
  auto pts = enumerate_interval(g, QuadNumber(0), QuadNumber(1), 2);
  // m in [-2, 2], one n each inside (0, 1).
  CHECK(pts == testing::pairs({{2, -1}, {-1, 1}, {1, 0}, {-2, 2}}));
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(compare(g, pts[i - 1], pts[i]) < 0);
  CHECK_THROWS_AS(enumerate_interval(g, QuadNumber(1), QuadNumber(0), 3), DomainError);
}

TEST_CASE("M_N maxima match the brute-force reference") {
  // From tests/oracle/oracle.py.
  ThetaContext g = golden();
  MSet a = m_set(g, QuadNumber(1), Rational(3));
  REQUIRE(a.max);
  CHECK(a.max->den == LatticeElem(-1, 1));
  CHECK(a.values.size() == 1);
  MSet b = m_set(g, QuadNumber(1) + g.value(), Rational(10));
  REQUIRE(b.max);
  CHECK(b.max->value(g) == QuadNumber(0));
  ThetaContext r2 = parse_theta("sqrt:2");
  MSet c = m_set(r2, QuadNumber(1), Rational(3));
  REQUIRE(c.max);
  CHECK(c.max->den == LatticeElem(-1, 2));
  CHECK(c.max->value(r2).to_decimal(6) == "-1.707106");
  for (const auto& v : b.values) {
    CHECK(v.value(g) >= QuadNumber(-10));
    CHECK(v.value(g) <= QuadNumber(0));
  }
}
