#include "doctest.h"
#include "oracles.hpp"
#include "ybx/oscillator.hpp"
#include "ybx/threed.hpp"

using namespace ybx;
using namespace ybx::osc;
using ybx::testing::lp;

TEST_CASE("generator matrices") {
  FockMatrix am = generator_matrix(Generator::AMinus, 4);
  CHECK(am.at(2, 3) == lp("1-q^6"));
  for (int r = 0; r < 4; ++r) CHECK(am.at(r, 0).is_zero());

  FockMatrix k = generator_matrix(Generator::K, 3);
  CHECK(k.at(0, 0) == lp("1"));
  CHECK(k.at(1, 1) == lp("q"));
  CHECK(k.at(2, 2) == lp("q^2"));
  CHECK(k.at(0, 1).is_zero());

  FockMatrix ap = generator_matrix(Generator::APlus, 4);
  CHECK(ap.at(1, 0) == lp("1"));
  CHECK(ap.at(3, 2) == lp("1"));
  for (int r = 0; r < 4; ++r) CHECK(ap.at(r, 3).is_zero());  // truncated top state

  FockMatrix h = generator_matrix(Generator::H, 5);
  CHECK(h.at(4, 4) == lp("4"));
}

TEST_CASE("oscillator relations") {
  CHECK(check_osc_relations(8).pass);
  CHECK(check_osc_relations(3).pass);
  CHECK(check_osc_relations(12).pass);
  CHECK_THROWS_AS(check_osc_relations(2), std::invalid_argument);
}

TEST_CASE("mutated annihilator breaks the relations") {
  OscGenerators g = standard_generators(6);
  g.aminus.at(1, 2) = -g.aminus.at(1, 2);
  Report r = check_osc_relations(g);
  CHECK_FALSE(r.pass);
  bool mentions_product = false;
  for (const auto& m : r.mismatches) mentions_product |= m.find("a+ a-") != std::string::npos;
  CHECK(mentions_product);
}

TEST_CASE("operator form examples") {
  const int n = 10;
  FockMatrix ap = generator_matrix(Generator::APlus, n);
  FockMatrix am = generator_matrix(Generator::AMinus, n);
  FockMatrix k = generator_matrix(Generator::K, n);

  // a+ k^3, exact on every column below the top
  CHECK(ropp_operator(4, 0, 3, 1, n).first_difference(ap * power(k, 3), n - 2) == "");
  // -q^-2 (a-)^3 k
  CHECK(ropp_operator(0, 4, 3, 1, n).first_difference(power(am, 3) * k * qpow(-2, -1), n - 2) == "");
  CHECK(ropp_operator(1, 0, 0, 0, n).is_zero());
}

TEST_CASE("operator form agrees with the element formula") {
  const int n = 12;
  int compared = 0;
  for (int s = 0; s <= 5; ++s) {
    for (int a = 0; a <= s; ++a) {
      for (int i = 0; i <= s; ++i) {
        const int b = s - a, j = s - i;
        FockMatrix op = ropp_operator(a, b, i, j, n);
        for (int c = 0; c <= n - 1 - j; ++c) {
          for (int cp = 0; cp < n; ++cp) {
            CHECK(op.at(cp, c) == threed::r_elem(a, b, cp, i, j, c));
            ++compared;
          }
        }
      }
    }
  }
  CHECK(compared > 1000);
}
