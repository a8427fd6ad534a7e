#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanpath/json_io.hpp"
#include "cartanpath/selfcheck.hpp"

using namespace cartanpath;

TEST_CASE("ad_Y round trip") {
  TestRng rng(139);
  for (int i = 0; i < 100; ++i) {
    AdYMatrix A = rng.valid_ady();
    Json j = ady_to_json(A);
    CHECK(ady_from_json(j) == A);
    // a reader must also accept the bare rows array
    CHECK(ady_from_json(j["ad_Y"]) == A);
  }
}

TEST_CASE("ad_Y reader rejects malformed input") {
  CHECK_THROWS_AS(ady_from_json(Json::parse(R"({"ad_Y": [["1","1"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ady_from_json(Json::parse(R"([["c?","-1"],["1","-1"],["0","0"]])")),
      std::invalid_argument);
  CHECK_THROWS_AS(ady_from_json(Json::parse(R"([[1,1],[1,-1],[0,0]])")),
                  std::invalid_argument);  // numbers, not strings
  // well-formed JSON, invalid constraints
  CHECK_THROWS_AS(
      ady_from_json(Json::parse(R"([["1","0"],["0","0"],["0","0"]])")),
      ConstraintError);
}

TEST_CASE("structure constants round trip and sparse storage") {
  TestRng rng(149);
  for (int i = 0; i < 100; ++i) {
    StructureConstants sc = to_structure_constants(rng.valid_ady());
    CHECK(sc_from_json(sc_to_json(sc)) == sc);
  }
  // Heisenberg serializes only its single nonzero bracket
  StructureConstants heis(Vec3{Rat(0), Rat(0), Rat(-1)}, Vec3{}, Vec3{});
  Json j = sc_to_json(heis);
  CHECK(j["dim"] == 3);
  REQUIRE(j["brackets"].size() == 1);
  CHECK(j["brackets"][0]["i"] == 1);
  CHECK(j["brackets"][0]["j"] == 2);
  CHECK(j["brackets"][0]["coeffs"][2] == "-1");
}

TEST_CASE("structure constants reader validation") {
  CHECK_THROWS_AS(sc_from_json(Json::parse(R"({"dim": 4, "brackets": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      sc_from_json(Json::parse(
          R"({"dim":3,"brackets":[{"i":2,"j":1,"coeffs":["0","0","1"]}]})")),
      std::invalid_argument);
}

TEST_CASE("line pair round trip") {
  TestRng rng(151);
  for (int i = 0; i < 100; ++i) {
    LinePair p = rng.contact_pair();
    CHECK(pair_from_json(pair_to_json(p)) == p);
  }
  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"D1": ["1","0","0"]})")),
                  std::invalid_argument);
  // equal lines are rejected by the pair type itself
  CHECK_THROWS_AS(
      pair_from_json(Json::parse(R"({"D1": ["1","0","0"], "D2": ["2","0","0"]})")),
      std::domain_error);
}
