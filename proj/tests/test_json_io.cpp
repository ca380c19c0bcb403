#include "doctest.h"
#include "oracles.hpp"
#include "ybx/json_io.hpp"

using namespace ybx;
using ybx::testing::lp;

TEST_CASE("polynomial encoding") {
  const LaurentPoly p = lp("3q^-2-q+7q^5");
  const auto j = io::to_json(p);
  CHECK(j.dump() == R"([[-2,"3"],[1,"-1"],[5,"7"]])");
  CHECK(io::laurent_from_json(j) == p);
  CHECK(io::to_json(LaurentPoly{}).dump() == "[]");
}

TEST_CASE("big coefficients survive as decimal strings") {
  LaurentPoly p = LaurentPoly::constant(1);
  for (int s = 0; s < 90; ++s) p *= lp("1+2q");
  const auto text = io::to_json(p).dump();
  CHECK(io::laurent_from_json(nlohmann::json::parse(text)) == p);
}

TEST_CASE("random polynomial round trips") {
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly p = ybx::testing::random_laurent(6, 10, 1000);
    CHECK(io::laurent_from_json(nlohmann::json::parse(io::to_json(p).dump())) == p);
  }
}

TEST_CASE("spectral sum round trip") {
  SpectralSum s;
  s.add(1, 4, lp("-q^2+q^4"));
  s.add(0, -3, lp("q^-1"));
  const auto j = io::to_json(s);
  CHECK(j.size() == 2);
  CHECK(j[0].contains("d"));
  CHECK(io::spectral_from_json(nlohmann::json::parse(j.dump())) == s);
}

TEST_CASE("block round trip") {
  const smatrix::SBlock block = smatrix::s_block(Signature::parse("101"), 2, 1);
  const auto j = io::to_json(block);
  CHECK(j["schema"] == "ybx/1");
  const smatrix::SBlock back = io::sblock_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.eps == block.eps);
  CHECK(back.l == block.l);
  CHECK(back.m == block.m);
  CHECK(back.basis_l == block.basis_l);
  CHECK(back.basis_m == block.basis_m);
  CHECK(back.entries == block.entries);
  CHECK(io::to_json(back) == j);
}

TEST_CASE("limit and combinatorial R encodings") {
  CHECK(io::to_json(LimitValue::Zero()) == nlohmann::json{{"zero", true}});
  CHECK(io::to_json(LimitValue::Monomial(2, -1))["sign"] == -1);
  const Signature e = Signature::parse("01010");
  const auto r = crystal::comb_r({e, {0, 1, 3, 1, 3}}, {e, {1, 0, 2, 1, 0}});
  const auto j = io::to_json(r);
  CHECK(j["b"] == "01012");
  CHECK(j["a"] == "10511");
  CHECK(j["H"] == 2);
  CHECK(j["borders"] == nlohmann::json{1, 2, 0, 0, 2});
  CHECK(j["pairs"].size() == 4);
}
