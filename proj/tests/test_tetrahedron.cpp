#include "doctest.h"
#include "oracles.hpp"
#include "ybx/tetrahedron.hpp"

using namespace ybx;
using namespace ybx::threed;
using ybx::testing::lp;

namespace {

Tuple6 t6(const char* digits) {
  Tuple6 out{};
  for (int t = 0; t < 6; ++t) out[t] = digits[t] - '0';
  return out;
}

std::vector<Tuple6> chain(std::initializer_list<const char*> words) {
  std::vector<Tuple6> out;
  for (const char* w : words) out.push_back(t6(w));
  return out;
}

// Element source with one entry altered by + q^9.
ElementFn mutated(LayerKind kind, std::array<int, 6> idx) {
  return [kind, idx](LayerKind k, int a, int b, int c, int i, int j, int kk) {
    LaurentPoly v = layer_elem(k, a, b, c, i, j, kk);
    if (k == kind && std::array<int, 6>{a, b, c, i, j, kk} == idx) v += qpow(9);
    return v;
  };
}

std::vector<Tuple6> inputs_up_to(int max_sum, int v_cap) {
  std::vector<Tuple6> out;
  for (int a = 0; a <= std::min(max_sum, v_cap); ++a)
    for (int b = 0; b <= std::min(max_sum, v_cap); ++b)
      for (int c = 0; c <= std::min(max_sum, v_cap); ++c)
        for (int d = 0; d <= max_sum; ++d)
          for (int e = 0; e <= max_sum; ++e)
            for (int f = 0; f <= max_sum; ++f)
              if (a + b + c + d + e + f <= max_sum) out.push_back({a, b, c, d, e, f});
  return out;
}

}  // namespace

TEST_CASE("applying one operator reproduces the element list") {
  TeVector v{{{3, 1, 2}, LaurentPoly::constant(1)}};
  TeVector out = apply_operator(v, LayerKind::R, {0, 1, 2}, cached_elements());
  CHECK(out.size() == 4);
  CHECK(out[{4, 0, 3}] == lp("q^6"));
  CHECK(out[{2, 2, 1}] == r_elem(2, 2, 1, 3, 1, 2));
}

TEST_CASE("RRRR equation") {
  Report vac = verify_te_rrrr({0, 0, 0, 0, 0, 0});
  CHECK(vac.pass);
  CHECK(vac.summary["lhs_terms"] == 1);
  CHECK(vac.summary["rhs_terms"] == 1);
  CHECK(verify_te_rrrr({1, 0, 1, 0, 1, 0}).pass);
  CHECK(verify_te_rrrr({2, 1, 0, 1, 1, 2}).pass);
  Report sweep = sweep_te_rrrr(2, 2);
  CHECK(sweep.pass);
  CHECK(sweep.cases == 28);
}

TEST_CASE("RLLL equation") {
  Report vac = verify_te_rlll({0, 0, 0, 0, 0, 0});
  CHECK(vac.pass);
  CHECK(vac.summary["lhs_terms"] == 1);
  CHECK(verify_te_rlll({1, 0, 1, 2, 0, 1}).pass);
  CHECK(sweep_te_rlll(2, 2).pass);
  CHECK_THROWS_AS(verify_te_rlll({2, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("single-layer equations reduce to the four-term ones") {
  for (const auto& in : inputs_up_to(2, 2)) {
    Report n0 = verify_te_nlayer(Signature::parse("0"), {in[0]}, {in[1]}, {in[2]}, {in[3], in[4], in[5]});
    Report r = verify_te_rrrr(in);
    CHECK(n0.pass == r.pass);
    CHECK(n0.summary["lhs_terms"] == r.summary["lhs_terms"]);
  }
  for (const auto& in : inputs_up_to(3, 1)) {
    Report n1 = verify_te_nlayer(Signature::parse("1"), {in[0]}, {in[1]}, {in[2]}, {in[3], in[4], in[5]});
    Report r = verify_te_rlll(in);
    CHECK(n1.pass == r.pass);
    CHECK(n1.summary["lhs_terms"] == r.summary["lhs_terms"]);
  }
}

TEST_CASE("two-layer equation") {
  CHECK(sweep_te_nlayer(Signature::parse("10"), 1, 2).pass);
  CHECK_THROWS_AS(verify_te_nlayer(Signature::parse("10"), {2, 0}, {0, 0}, {0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("a perturbed element breaks the equations") {
  const auto rrrr_inputs = inputs_up_to(3, 3);
  for (auto idx : {std::array<int, 6>{1, 0, 0, 1, 0, 0}, std::array<int, 6>{0, 1, 0, 0, 1, 0},
                   std::array<int, 6>{1, 1, 1, 1, 1, 1}}) {
    ElementFn bad = mutated(LayerKind::R, idx);
    bool failed = false;
    for (const auto& in : rrrr_inputs) failed |= !verify_te_rrrr(in, bad).pass;
    CHECK_MESSAGE(failed, "perturbation at R" << idx[0] << idx[1] << idx[2] << "/" << idx[3] << idx[4] << idx[5]);
  }
  ElementFn bad_l = mutated(LayerKind::L, {0, 1, 1, 1, 0, 2});
  bool failed = false;
  for (const auto& in : inputs_up_to(3, 1)) failed |= !verify_te_rlll(in, bad_l).pass;
  CHECK(failed);
}

TEST_CASE("combinatorial chains") {
  CombChains rr = combinatorial_chains(CombKind::RRRR, t6("261435"));
  CHECK(rr.lhs == chain({"261435", "261344", "234341", "432361", "432361"}));
  CHECK(rr.rhs == chain({"261435", "621835", "423815", "432816", "432361"}));

  CombChains rl = combinatorial_chains(CombKind::RLLL, t6("011435"));
  CHECK(rl.lhs == chain({"011435", "011344", "011344", "110354", "110354"}));
  CHECK(rl.rhs == chain({"011435", "101535", "101535", "110536", "110354"}));
}

TEST_CASE("combinatorial sweeps") {
  Report rr = verify_combinatorial_te(CombKind::RRRR, 3);
  CHECK(rr.pass);
  CHECK(rr.cases == 4096);
  Report rl = verify_combinatorial_te(CombKind::RLLL, 3);
  CHECK(rl.pass);
  CHECK(rl.cases == 8 * 64);
}
