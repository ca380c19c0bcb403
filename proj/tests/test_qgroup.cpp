#include "doctest.h"
#include "oracles.hpp"
#include "ybx/errors.hpp"
#include "ybx/qgroup.hpp"
#include "ybx/smatrix.hpp"

using namespace ybx;
using namespace ybx::qgroup;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

ExactRational Q(long a, long b = 1) { return ExactRational(a, b); }

}  // namespace

TEST_SUITE("structure constants") {
  TEST_CASE("q_i and D_ij") {
    const Signature e = Signature::parse("10");
    CHECK(q_param(e, 1, Q(1, 3)) == Q(-3));
    CHECK(q_param(e, 0, Q(1, 3)) == Q(1, 3));  // label 0 is box n
    // D_ij = 1 when {i,i+1} and {j,j+1} are disjoint mod n
    const Signature e4 = Signature::parse("0101");
    CHECK(d_param(e4, 0, 2, Q(2, 3)) == 1);
    CHECK(d_param(e4, 1, 3, Q(2, 3)) == 1);
    // D_ii = q_i q_{i+1}
    CHECK(d_param(e4, 1, 1, Q(2, 3)) == q_param(e4, 1, Q(2, 3)) * q_param(e4, 2, Q(2, 3)));
    CHECK(q_number(2, Q(1, 2)) == Q(5, 2));
    CHECK(q_number(0, Q(1, 2)) == 0);
  }
}

TEST_SUITE("representations") {
  TEST_CASE("diagonal k action") {
    RepMatrices r = rep_matrices(Signature::parse("00"), 1, Q(1, 2), Q(3));
    REQUIRE(r.basis == std::vector<StateVector>{{0, 1}, {1, 0}});
    CHECK(r.k[1].get(1, 1) == Q(2));     // k_1 |1,0> = q^-1 |1,0>
    CHECK(r.k[1].get(0, 0) == Q(1, 2));  // k_1 |0,1> = q |0,1>

    RepMatrices f = rep_matrices(Signature::parse("10"), 1, Q(1, 3), Q(1));
    CHECK(f.k[1].get(1, 1) == Q(-1, 3));
  }

  TEST_CASE("e_i annihilates vectors with an empty box i") {
    RepMatrices r = rep_matrices(Signature::parse("000"), 2, Q(2, 5), Q(7));
    for (int col = 0; col < static_cast<int>(r.basis.size()); ++col) {
      if (r.basis[col][0] != 0) continue;
      for (int row = 0; row < static_cast<int>(r.basis.size()); ++row) CHECK(r.e[1].get(row, col) == 0);
    }
  }

  TEST_CASE("spectral parameter sits on e_0 and f_0") {
    RepMatrices r1 = rep_matrices(Signature::parse("00"), 1, Q(1, 2), Q(1));
    RepMatrices r5 = rep_matrices(Signature::parse("00"), 1, Q(1, 2), Q(5));
    CHECK(r5.e[0] == r1.e[0] * Q(5));
    CHECK(r5.f[0] == r1.f[0] * Q(1, 5));
    CHECK(r5.e[1] == r1.e[1]);
  }

  TEST_CASE("dimensions of the homogeneous cases") {
    for (int n = 2; n <= 5; ++n) {
      const Signature ferm(std::vector<int>(n, 1));
      for (int l = 0; l <= n; ++l) CHECK(rep_matrices(ferm, l, Q(2, 3), Q(1)).basis.size() == binomial(n, l));
      const Signature bos(std::vector<int>(n, 0));
      for (int l = 0; l <= 3; ++l) CHECK(rep_matrices(bos, l, Q(2, 3), Q(1)).basis.size() == binomial(n + l - 1, l));
    }
  }

  TEST_CASE("degenerate parameters") {
    const Signature e = Signature::parse("01");
    CHECK_THROWS_AS(rep_matrices(e, 1, Q(0), Q(1)), DegenerateParameter);
    CHECK_THROWS_AS(rep_matrices(e, 1, Q(1), Q(1)), DegenerateParameter);
    CHECK_THROWS_AS(rep_matrices(e, 1, Q(-1), Q(1)), DegenerateParameter);
    CHECK_THROWS_AS(rep_matrices(e, 1, Q(1, 2), Q(0)), DegenerateParameter);
    CHECK_THROWS_AS(rep_matrices(Signature::parse("0"), 1, Q(1, 2), Q(1)), PreconditionError);
  }
}

TEST_SUITE("algebra relations") {
  TEST_CASE("examples") {
    CHECK(check_algebra_relations(Signature::parse("00"), 2, Q(1, 2), Q(3)).pass);
    CHECK(check_algebra_relations(Signature::parse("11"), 1, Q(2, 5), Q(1)).pass);
  }

  TEST_CASE("random admissible points") {
    for (const char* e : {"00", "10", "101", "0101", "0110", "111"}) {
      for (int l = 0; l <= 3; ++l) {
        for (int trial = 0; trial < 5; ++trial) {
          CHECK(check_algebra_relations(Signature::parse(e), l, ybx::testing::random_q(),
                                        ybx::testing::random_rational())
                    .pass);
        }
      }
    }
  }

  TEST_CASE("a perturbed e_0 breaks the commutator relation") {
    RepMatrices r = rep_matrices(Signature::parse("00"), 2, Q(1, 2), Q(3));
    bool changed = false;
    for (int row = 0; row < static_cast<int>(r.basis.size()) && !changed; ++row) {
      for (const auto& [col, v] : r.e[0].row(row)) {
        r.e[0].set(row, col, v * 2);
        changed = true;
        break;
      }
    }
    REQUIRE(changed);
    Report rep = check_algebra_relations(r, Q(1, 2));
    CHECK_FALSE(rep.pass);
    bool commutator = false;
    for (const auto& m : rep.mismatches) commutator |= m.rfind("[e_0,f_0]", 0) == 0;
    CHECK(commutator);
  }
}

TEST_SUITE("coproduct and intertwiner") {
  TEST_CASE("coproduct assembled from the single-factor matrices") {
    const Signature e = Signature::parse("00");
    RepMatrices a = rep_matrices(e, 1, Q(1, 3), Q(2));
    RepMatrices b = rep_matrices(e, 1, Q(1, 3), Q(7));
    const RationalMatrix ia = RationalMatrix::identity(2), ib = RationalMatrix::identity(2);
    CHECK(coproduct_action(a, b, Gen::E, 1, Side::Delta) == kron(ia, b.e[1]) + kron(a.e[1], b.k[1]));
    CHECK(coproduct_action(a, b, Gen::F, 1, Side::Delta) == kron(a.f[1], ib) + kron(a.kinv[1], b.f[1]));
    CHECK(coproduct_action(a, b, Gen::E, 1, Side::DeltaPrime) == kron(a.e[1], ib) + kron(a.k[1], b.e[1]));
    CHECK(coproduct_action(a, b, Gen::K, 0, Side::Delta) == coproduct_action(a, b, Gen::K, 0, Side::DeltaPrime));
    CHECK(coproduct_action(a, b, Gen::E, 1, Side::Delta).nonzeros() == 4);
  }

  TEST_CASE("examples") {
    Report r = verify_intertwiner(Signature::parse("10"), 1, 1, Q(1, 3), Q(2), Q(7));
    CHECK(r.pass);
    CHECK(r.cases == 6);
    CHECK(verify_intertwiner(Signature::parse("101"), 4, 2, Q(2, 9), Q(3), Q(5)).pass);
  }

  TEST_CASE("a random weight-preserving matrix is not an intertwiner") {
    const Signature e = Signature::parse("101");
    const int l = 2, m = 1;
    smatrix::SBlock block = smatrix::s_block(e, l, m);
    RationalMatrix s(block.dim(), block.dim());
    const int nl = static_cast<int>(block.basis_l.size()), nm = static_cast<int>(block.basis_m.size());
    for (int ia = 0; ia < nl; ++ia)
      for (int ib = 0; ib < nm; ++ib)
        for (int ii = 0; ii < nl; ++ii)
          for (int ij = 0; ij < nm; ++ij) {
            bool same_weight = true;
            for (int t = 0; t < e.size(); ++t) {
              same_weight = same_weight && block.basis_l[ia][t] + block.basis_m[ib][t] ==
                                               block.basis_l[ii][t] + block.basis_m[ij][t];
            }
            if (same_weight) s.set(block.pair_index(ia, ib), block.pair_index(ii, ij), ybx::testing::random_rational());
          }
    Report r = verify_intertwiner(e, l, m, Q(2, 7), Q(3), Q(5), s);
    CHECK_FALSE(r.pass);
    // k_i commute with any weight-preserving matrix
    for (int i = 0; i < e.size(); ++i) CHECK(r.detail["generators"]["k_" + std::to_string(i)] == true);
  }

  TEST_CASE("wrong-size candidate is rejected") {
    CHECK_THROWS_AS(verify_intertwiner(Signature::parse("10"), 1, 1, Q(1, 3), Q(2), Q(7), RationalMatrix(3, 3)),
                    PreconditionError);
  }
}
