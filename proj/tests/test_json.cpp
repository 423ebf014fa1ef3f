#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cha/json_io.hpp"
#include "cha/sampling.hpp"

using namespace cha;

TEST_CASE("ChaElement json round trip and schema") {
  const json j = json::parse(R"({"n": 1, "z": 0.0, "a": [1.0], "b": [0.0], "c": 0.0})");
  const ChaElement x = j.get<ChaElement>();
  CHECK(x.n() == 1);
  CHECK(x.a[0] == 1.0);

  Rng rng(4001);
  for (int trial = 0; trial < 50; ++trial) {
    const ChaElement e = rng.element(1 + trial % 3, -5, 5);
    const json round = json(e);
    CHECK(round.get<ChaElement>() == e);
  }

  CHECK_THROWS(json::parse(R"({"n": 1)").get<ChaElement>());
  CHECK_THROWS_AS(json::parse(R"({"n": 2, "z": 0, "a": [1], "b": [0, 1], "c": 0})").get<ChaElement>(),
                  DimensionError);
  CHECK_THROWS_AS(json::parse(R"({"n": 0, "z": 0, "a": [], "b": [], "c": 0})").get<ChaElement>(),
                  DimensionError);
  CHECK_THROWS(json::parse(R"({"z": 0, "a": [1], "b": [0], "c": 0})").get<ChaElement>());
}

TEST_CASE("StructuredExpMatrix json") {
  Rng rng(4002);
  const ChaElement x = rng.element(2, -2, 2);
  const StructuredExpMatrix m = exp_ad_matrix(x);
  const json j = json(m);
  const auto back = j.get<StructuredExpMatrix>();
  CHECK(back.m == m.m);
  CHECK(back.m12 == m.m12);
  CHECK(back.m14 == m.m14);
  CHECK_THROWS_AS(json::parse(R"({"n": 2, "m": 0, "m12": [1], "m13": [1, 2], "m24": [0, 0], "m14": 0})")
                      .get<StructuredExpMatrix>(),
                  DimensionError);
}

TEST_CASE("DenseMatrix json") {
  Rng rng(4003);
  const DenseMatrix m = ad_matrix(rng.element(1, -2, 2));
  const json j = dense_to_json(m);
  CHECK(j.at("dim") == 4);
  const DenseMatrix back = dense_from_json(j);
  CHECK((back - m).norm() == 0.0);
  CHECK_THROWS_AS(dense_from_json(json::parse(R"({"dim": 2, "entries": [[1, 2]]})")),
                  DimensionError);
}
