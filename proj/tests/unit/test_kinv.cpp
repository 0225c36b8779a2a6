#include "helpers.hpp"
#include "nctorus/error.hpp"
#include "nctorus/kinv.hpp"

using namespace nct;
using testing::golden;

TEST_CASE("triangle decomposition by sign of rank") {
  ThetaContext g = golden();
  TriangleSplit s = triangle_decompose(g, FormalSum::from_invariants(testing::pairs({{-1, 1}, {1, -1}})));
  REQUIRE(s.h0.pieces.size() == 1);
  REQUIRE(s.hminus1.pieces.size() == 1);
  CHECK(s.h0.pieces[0].inv == LatticeElem(-1, 1));
  CHECK(s.hminus1.pieces[0].inv == LatticeElem(1, -1));
  CHECK_THROWS_AS(triangle_decompose(g, FormalSum::from_invariants({LatticeElem(0, 0)})), DomainError);
}

TEST_CASE("grouping by slope") {
  ThetaContext g = golden();
  auto groups = hn_group(g, FormalSum::from_invariants(testing::pairs({{-1, 1}, {0, 1}})));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].pieces.pieces[0].inv == LatticeElem(0, 1));
  CHECK(groups[1].slope.value(g).to_decimal(3) == "-2.618");
  auto same = hn_group(g, FormalSum::from_invariants(testing::pairs({{1, 0}, {2, 0}})));
  CHECK(same.size() == 1);
  CHECK(same[0].pieces.pieces.size() == 2);
  CHECK(same[0].pieces.pieces[1].tag == Stability::Semistable);
}

TEST_CASE("normalizing a rank to 1") {
  ThetaContext g = golden();
  MoritaMap id = morita_normalize(g, LatticeElem(0, 1));
  CHECK(id.a() == 1);
  CHECK(id.d() == 1);
  MoritaMap m = morita_normalize(g, LatticeElem(-1, 1));
  CHECK(m.a() == 1);
  CHECK(m.b() == 0);
  CHECK(m.c() == -1);
  CHECK(m.d() == 1);
  CHECK(m.apply(LatticeElem(-1, 1)) == LatticeElem(0, 1));
  CHECK(m.target().value() == g.value() / (QuadNumber(1) - g.value()));
  CHECK(m.scale() == QuadNumber(1) - g.value());
  CHECK_THROWS_AS(morita_normalize(g, LatticeElem(2, 2)), DomainError);
  CHECK_THROWS_AS(morita_normalize(g, LatticeElem(1, -1)), DomainError);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    LatticeElem v = testing::random_positive_primitive(g, rng, 60);
    MoritaMap n = morita_normalize(g, v);
    CHECK(n.apply(v) == LatticeElem(0, 1));
    CHECK(n.preserves_order());
    CHECK(n.scaling_holds(LatticeElem(3, -7)));
  }
}

TEST_CASE("the shrinking map") {
  ThetaContext g = golden();
  MoritaMap a = shrink_map(g);
  // 1 -> theta' and theta -> a*theta' - 1.
  CHECK(a.apply(LatticeElem(0, 1)) == LatticeElem(1, 0));
  CHECK(a.apply(LatticeElem(1, 0)) == LatticeElem(g.next_integer(), Int(-1)));
  CHECK(a.target().value() == (QuadNumber(g.next_integer()) - g.value()).reciprocal());
  CHECK(value(a.target(), a.apply(LatticeElem(5, -2))) * (QuadNumber(1) - g.value()) == value(g, LatticeElem(5, -2)));
}

TEST_CASE("det-1 maps preserve chi and scale ranks exactly") {
  ThetaContext t = parse_theta("sqrt:2");
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(-6, 6);
  int tried = 0;
  while (tried < 200) {
    long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a * e - b * c != 1) continue;
    ++tried;
    MoritaMap g = MoritaMap::make(t, a, b, c, e);
    LatticeElem u(d(rng), d(rng)), v(d(rng), d(rng));
    CHECK(chi(g.apply(u), g.apply(v)) == chi(u, v));
    CHECK(g.scaling_holds(u));
    CHECK(g.inverse().apply(g.apply(u)) == u);
    if (!(u == v))
      CHECK((compare(t, u, v) == compare(g.target(), g.apply(u), g.apply(v))) == g.preserves_order());
  }
  CHECK_THROWS_AS(MoritaMap::make(t, 2, 0, 0, 1), DomainError);
}
