#include "helpers.hpp"
#include "nctorus/json.hpp"

using namespace nct;
using testing::golden;

TEST_CASE("integers switch to strings past 64 bits") {
  CHECK(int_json(Int(-5)) == Json(-5));
  Int big("123456789012345678901234567890");
  CHECK(int_json(big) == Json("123456789012345678901234567890"));
  CHECK(int_from_json(int_json(big)) == big);
  CHECK_THROWS(int_from_json(Json("12x")));
}

TEST_CASE("trees round-trip") {
  DivisionTree t = build_tree(golden(), 4);
  Json j = to_json(t, 6);
  CHECK(j["root"]["point"] == Json::array({-1, 1}));
  CHECK(j["root"]["decimal"] == "0.381966");
  DivisionTree back = tree_from_json(Json::parse(j.dump()));
  CHECK(back.points() == t.points());
  CHECK(validate_tree(back).empty());
}

TEST_CASE("certificates round-trip") {
  SubbundleCertificate c = subbundle_certificate(golden(), LatticeElem(1, 1), LatticeElem(-1, 1));
  Json j = to_json(c);
  CHECK(j["P"] == Json::array({1, 1}));
  CHECK(j["triples"][0]["chi"] == 1);
  SubbundleCertificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(validate_certificate(back).valid);
  CHECK(back.path == c.path);
  Json tampered = j;
  tampered["triples"][0]["sub"] = Json::array({0, 0});
  CHECK_FALSE(validate_certificate(certificate_from_json(tampered)).valid);
}

TEST_CASE("formal sums round-trip") {
  FormalSum s = FormalSum::from_invariants(testing::pairs({{0, 1}, {-2, 2}}));
  Json j = to_json(s);
  CHECK(j.dump() == R"({"pieces":[[0,1],[-2,2]]})");
  FormalSum back = formal_sum_from_json(j);
  CHECK(back.pieces == s.pieces);
  CHECK(back.pieces[1].tag == Stability::Semistable);
}
