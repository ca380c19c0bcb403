#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "ybx/errors.hpp"
#include "ybx/poly.hpp"
#include "ybx/spectral.hpp"

using namespace ybx;
using ybx::testing::lift_z;
using ybx::testing::lp;

namespace {

// Dense schoolbook product keyed by exponent, used as an independent multiply.
std::map<int, BigInt> dense_product(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, BigInt> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ExactRational pochhammer_value(int m, const ExactRational& q) {
  ExactRational out = 1;
  for (int s = 1; s <= m; ++s) out *= 1 - rational_pow(q, 2 * s);
  return out;
}

SpectralSum single(int d, int k, const LaurentPoly& p) {
  SpectralSum s;
  s.add(d, k, p);
  return s;
}

}  // namespace

TEST_SUITE("laurent arithmetic") {
  TEST_CASE("products and identities") {
    CHECK(qpow(2) * lp("1-q^2") == lp("q^2-q^4"));
    const LaurentPoly p = lp("3q^-2-q+7q^5");
    CHECK(p + LaurentPoly{} == p);
    CHECK(p - p == LaurentPoly{});
    CHECK(lp("1+q^2") * lp("1-q^6") == lp("1+q^2-q^6-q^8"));
  }

  TEST_CASE("multiplication agrees with a dense expansion on random inputs") {
    for (int trial = 0; trial < 200; ++trial) {
      LaurentPoly a = ybx::testing::random_laurent(5, 8, 20);
      LaurentPoly b = ybx::testing::random_laurent(5, 8, 20);
      const auto expected = dense_product(a, b);
      const auto product = a * b;
      CHECK(std::map<int, BigInt>(product.terms().begin(), product.terms().end()) == expected);
    }
  }

  TEST_CASE("ring axioms on random sparse inputs") {
    for (int trial = 0; trial < 200; ++trial) {
      LaurentPoly a = ybx::testing::random_laurent();
      LaurentPoly b = ybx::testing::random_laurent();
      LaurentPoly c = ybx::testing::random_laurent();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }

  TEST_CASE("canonical form never stores zero coefficients") {
    LaurentPoly p = lp("1+q");
    p.add_term(1, -1);
    CHECK(p == LaurentPoly::constant(1));
    CHECK(p.size() == 1);
    p *= BigInt(0);
    CHECK(p.is_zero());
  }

  TEST_CASE("coefficients beyond 64 bits stay exact") {
    LaurentPoly p = lp("1+q");
    LaurentPoly acc = LaurentPoly::constant(1);
    for (int s = 0; s < 80; ++s) acc *= p;
    CHECK(acc.coeff(40) == BigInt("107507208733336176461620"));
  }

  TEST_CASE("string round trip") {
    for (int trial = 0; trial < 100; ++trial) {
      LaurentPoly p = ybx::testing::random_laurent(6, 9, 50);
      CHECK(parse_laurent(to_string(p)) == p);
    }
    CHECK(to_string(LaurentPoly{}) == "0");
    CHECK_THROWS_AS(parse_laurent("1+*q"), std::invalid_argument);
  }

  TEST_CASE("exact division") {
    auto q = divide_exact(lp("1-q^8"), lp("1-q^2"));
    REQUIRE(q);
    CHECK(*q == lp("1+q^2+q^4+q^6"));
    CHECK_FALSE(divide_exact(lp("1+q^3"), lp("1-q^2")));
    CHECK_THROWS(divide_exact(lp("1"), LaurentPoly{}));
  }

  TEST_CASE("point evaluation") {
    CHECK(evaluate(lp("1+q^2"), ExactRational(1, 2)) == ExactRational(5, 4));
    CHECK(evaluate(lp("q^-2"), ExactRational(1, 3)) == 9);
  }
}

TEST_SUITE("gaussian binomials") {
  TEST_CASE("small values") {
    CHECK(q_binomial(2, 1, 2) == lp("1+q^2"));
    for (int m = 0; m < 6; ++m) CHECK(q_binomial(m, 0, 2) == LaurentPoly::constant(1));
    CHECK(q_binomial(1, 2, 2).is_zero());
    CHECK(q_binomial(3, -1, 2).is_zero());
  }

  TEST_CASE("quotient of pochhammer symbols by polynomial division") {
    for (int m = 0; m <= 7; ++m) {
      for (int k = 0; k <= m; ++k) {
        auto q = divide_exact(q_pochhammer(m), q_pochhammer(k) * q_pochhammer(m - k));
        REQUIRE(q);
        CHECK(*q == q_binomial(m, k, 2));
      }
    }
  }

  TEST_CASE("value at random rational q matches the direct product") {
    for (int trial = 0; trial < 60; ++trial) {
      const ExactRational q = ybx::testing::random_q();
      const int m = ybx::testing::uniform(0, 8);
      const int k = ybx::testing::uniform(0, m);
      const ExactRational expected = pochhammer_value(m, q) / (pochhammer_value(k, q) * pochhammer_value(m - k, q));
      CHECK(evaluate(q_binomial(m, k, 2), q) == expected);
    }
  }

  TEST_CASE("other bases") {
    CHECK(q_binomial(2, 1, 1) == lp("1+q"));
    CHECK(q_binomial(3, 1, 1) == lp("1+q+q^2"));
  }
}

TEST_SUITE("spectral sums") {
  TEST_CASE("merging and zero terms") {
    SpectralSum s;
    s.add(1, 2, lp("q"));
    s.add(1, 2, lp("-q"));
    CHECK(s.is_zero());
    s.add(0, 3, lp("1"));
    s.add(0, 3, lp("q"));
    CHECK(s.size() == 1);
    CHECK(s.terms()[0].p == lp("1+q"));
  }

  TEST_CASE("single fraction") {
    // one term with slope 4 cross-multiplied by the factor of slope 6
    SpectralSum s = single(1, 4, lp("-q^2+q^4"));
    s.add(0, 6, LaurentPoly{});
    RationalFunction f = spectral_to_fraction(s);
    CHECK(f.slopes == std::vector<int>{4});
    CHECK(f.numerator == lift_z(lp("-q^2+q^4"), 1));

    RationalFunction golden{lift_z(lp("-q^2+q^4"), 1) * (BiPoly::constant(1) - BiPoly::monomial(Exp2{6, 1})), {4, 6}};
    CHECK(f.equivalent(golden));

    RationalFunction empty = spectral_to_fraction(SpectralSum{});
    CHECK(empty.numerator.is_zero());
    CHECK(empty.slopes.empty());

    RationalFunction geometric = spectral_to_fraction(single(0, 0, lp("1")));
    CHECK(geometric.slopes == std::vector<int>{0});
    CHECK(geometric.numerator == BiPoly::constant(1));
  }

  TEST_CASE("fraction and term-wise evaluation agree at random points") {
    for (int trial = 0; trial < 30; ++trial) {
      SpectralSum s;
      const int terms = ybx::testing::uniform(1, 5);
      for (int t = 0; t < terms; ++t) {
        s.add(ybx::testing::uniform(0, 3), ybx::testing::uniform(-4, 6), ybx::testing::random_laurent(3, 5, 9));
      }
      RationalFunction f = spectral_to_fraction(s);
      int used = 0;
      while (used < 20) {
        const ExactRational q = ybx::testing::random_q();
        const ExactRational z = ybx::testing::random_rational(11);
        ExactRational termwise, fraction;
        try {
          termwise = evaluate(s, q, z);
        } catch (const PoleAtPoint&) {
          CHECK_THROWS_AS(evaluate(f, q, z), PoleAtPoint);
          continue;
        }
        fraction = evaluate(f, q, z);
        CHECK(termwise == fraction);
        ++used;
      }
    }
  }

  TEST_CASE("evaluation examples") {
    CHECK(evaluate(single(0, 0, lp("1")), ExactRational(7, 5), ExactRational(1, 3)) == ExactRational(3, 2));
    // -q^2(1-q^2) z / ((1-q^4 z)(1-q^6 z)) at q = 1/2, z = 1/3, evaluated by hand
    RationalFunction f{lift_z(lp("-q^2+q^4"), 1), {4, 6}};
    CHECK(evaluate(f, ExactRational(1, 2), ExactRational(1, 3)) == ExactRational(-576, 8977));
  }

  TEST_CASE("poles are reported") {
    CHECK_THROWS_AS(evaluate(single(0, 0, lp("1")), ExactRational(1, 2), ExactRational(1)), PoleAtPoint);
    CHECK_THROWS_AS(evaluate(single(0, 2, lp("1")), ExactRational(1, 2), ExactRational(4)), PoleAtPoint);
  }
}

TEST_SUITE("scaled q to 0 limit") {
  TEST_CASE("geometric series with the (1-z) factor") {
    CHECK(scaled_q0_limit(single(0, 0, lp("1")), 0, 1) == LimitValue::Monomial(0));
  }

  TEST_CASE("valuation above the scale gives zero") {
    // q^3 (q^2 - z) / (1 - q^4 z) has q-valuation 3
    SpectralSum s = single(0, 4, lp("q^5"));
    s.add(1, 4, lp("-q^3"));
    CHECK(scaled_q0_limit(s, 0, 0) == LimitValue::Zero());
    CHECK(scaled_q0_limit(s, 2, 0) == LimitValue::Zero());
    CHECK(scaled_q0_limit(s, 3, 0) == LimitValue::Monomial(1, -1));
    CHECK(ybx::testing::series_limit(s, 3, 0) == LimitValue::Monomial(1, -1));
  }

  TEST_CASE("limit below the scale throws") {
    CHECK_THROWS_AS(scaled_q0_limit(single(0, 1, lp("q^-1")), 0, 0), LimitUndefined);
    CHECK_FALSE(ybx::testing::series_limit(single(0, 1, lp("q^-1")), 0, 0));
  }

  TEST_CASE("non-monomial leading coefficient throws") {
    SpectralSum s = single(0, 1, lp("1"));
    s.add(1, 1, lp("1"));
    // leading coefficient 1 + z
    CHECK_THROWS_AS(scaled_q0_limit(s, 0, 0), LimitUndefined);
    CHECK_FALSE(ybx::testing::series_limit(s, 0, 0));
  }

  TEST_CASE("negative slopes expand in 1/z") {
    // z q^2 / (1 - z q^-1) = -q^3 / (1 - q/z) has q-valuation 3 with coefficient -1
    SpectralSum s = single(1, -1, lp("q^2"));
    CHECK(scaled_q0_limit(s, 3, 0) == LimitValue::Monomial(0, -1));
    CHECK(ybx::testing::series_limit(s, 3, 0) == LimitValue::Monomial(0, -1));
    CHECK(scaled_q0_limit(s, 2, 0) == LimitValue::Zero());
  }

  TEST_CASE("agreement with the series oracle on random sums") {
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
      SpectralSum s;
      const int terms = ybx::testing::uniform(1, 3);
      for (int t = 0; t < terms; ++t) {
        LaurentPoly p;
        p.add_term(ybx::testing::uniform(-1, 3), ybx::testing::uniform(0, 1) ? 1 : -1);
        if (ybx::testing::uniform(0, 1)) p.add_term(ybx::testing::uniform(0, 4), ybx::testing::uniform(-2, 2));
        s.add(ybx::testing::uniform(0, 2), ybx::testing::uniform(-2, 3), p);
      }
      const int scale = ybx::testing::uniform(0, 2);
      const int delta = ybx::testing::uniform(0, 1);
      auto expected = ybx::testing::series_limit(s, scale, delta);
      if (expected) {
        CHECK(scaled_q0_limit(s, scale, delta) == *expected);
        ++compared;
      } else {
        CHECK_THROWS_AS(scaled_q0_limit(s, scale, delta), LimitUndefined);
      }
    }
    CHECK(compared > 50);
  }

  TEST_CASE("rendering") {
    CHECK(LimitValue::Zero().to_string() == "0");
    CHECK(LimitValue::Monomial(0).to_string() == "1");
    CHECK(LimitValue::Monomial(1).to_string() == "z");
    CHECK(LimitValue::Monomial(2, -1).to_string() == "-z^2");
  }
}
