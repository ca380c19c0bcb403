#pragma once

// The generalized quantum group attached to a signature, its representations
// pi_x on W_l as exact rational matrices, and the intertwining check for S(z).
// Generator labels i run over Z_n = {0, ..., n-1}; label i refers to box i of
// the 1-based occupation vector, with box 0 identified with box n.

#include <string>
#include <vector>

#include "ybx/rational_matrix.hpp"
#include "ybx/report.hpp"
#include "ybx/signature.hpp"

namespace ybx::qgroup {

/// q_i = q for a bosonic box, -1/q for a fermionic one.
ExactRational q_param(const Signature& eps, int i, const ExactRational& q);

/// D_{i,j} = prod over k in {i,i+1} meet {j,j+1} (mod n) of q_k^{2 delta_ij - 1}.
ExactRational d_param(const Signature& eps, int i, int j, const ExactRational& q);

/// [m] = (q^m - q^-m) / (q - q^-1).
ExactRational q_number(int m, const ExactRational& q);

struct RepMatrices {
  Signature eps;
  int level = 0;
  std::vector<StateVector> basis;
  std::vector<RationalMatrix> e, f, k, kinv;  // indexed by i in Z_n
};

/// Throws DegenerateParameter for q in {0, 1, -1}; PreconditionError for n < 2.
RepMatrices rep_matrices(const Signature& eps, int l, const ExactRational& q, const ExactRational& x);

/// The defining relations checked as exact matrix identities.
Report check_algebra_relations(const RepMatrices& rep, const ExactRational& q);
Report check_algebra_relations(const Signature& eps, int l, const ExactRational& q, const ExactRational& x);

enum class Gen { E, F, K };
enum class Side { Delta, DeltaPrime };

std::string generator_name(Gen g, int i);

/// (pi_x (x) pi_y) of Delta(g) or of the opposite coproduct Delta'(g).
RationalMatrix coproduct_action(const RepMatrices& left, const RepMatrices& right, Gen g, int i, Side side);
RationalMatrix coproduct_action(const Signature& eps, int l, int m, const ExactRational& q, const ExactRational& x,
                                const ExactRational& y, Gen g, int i, Side side);

/// Delta'(g) S = S Delta(g) for every e_i, f_i, k_i, with S = S_{l,m}(x/y).
Report verify_intertwiner(const Signature& eps, int l, int m, const ExactRational& q, const ExactRational& x,
                          const ExactRational& y);
/// Same check with a caller-supplied matrix in place of S_{l,m}(x/y).
Report verify_intertwiner(const Signature& eps, int l, int m, const ExactRational& q, const ExactRational& x,
                          const ExactRational& y, const RationalMatrix& s);

}  // namespace ybx::qgroup
