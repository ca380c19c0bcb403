#pragma once

// Matrix elements of S(z) obtained by tracing an n-layer product of 3D R / 3D L
// over an auxiliary Fock space weighted by z^h. The trace is summed in closed
// form: every layer is a polynomial in q and X = q^c, and sum_{c >= c_min}
// z^c q^{kc} is a geometric series.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "ybx/rational_matrix.hpp"
#include "ybx/report.hpp"
#include "ybx/signature.hpp"
#include "ybx/spectral.hpp"

namespace ybx::smatrix {

/// S(z)^{a,b}_{i,j}; the empty sum unless a + b = i + j componentwise, |a| = |i|, |b| = |j|.
SpectralSum s_element(const Signature& eps, const StateVector& a, const StateVector& b, const StateVector& i,
                      const StateVector& j);

/// S_{l,m}(z) on W_l (x) W_m. Entries are keyed by basis positions
/// (a, b, i, j) with a, i indexing basis_l and b, j indexing basis_m.
struct SBlock {
  Signature eps;
  int l = 0;
  int m = 0;
  std::vector<StateVector> basis_l;
  std::vector<StateVector> basis_m;
  std::map<std::array<int, 4>, SpectralSum> entries;

  int dim() const { return static_cast<int>(basis_l.size() * basis_m.size()); }
  /// Row/column of |u> (x) |v> in matrix form.
  int pair_index(int u, int v) const { return u * static_cast<int>(basis_m.size()) + v; }
  int index_l(const StateVector& v) const;  // -1 if absent
  int index_m(const StateVector& v) const;

  const SpectralSum* find(const StateVector& a, const StateVector& b, const StateVector& i,
                          const StateVector& j) const;
};

SBlock s_block(const Signature& eps, int l, int m, int jobs = 1);

/// Exact matrix at (q, z); row (a, b), column (i, j). Throws PoleAtPoint.
RationalMatrix evaluate_block(const SBlock& block, const ExactRational& q, const ExactRational& z);

/// S12(x) S13(xy) S23(y) = S23(y) S13(xy) S12(x) on W_k (x) W_l (x) W_m.
Report verify_ybe_point(const Signature& eps, int k, int l, int m, const ExactRational& q, const ExactRational& x,
                        const ExactRational& y);
Report verify_ybe_point(const SBlock& kl, const SBlock& km, const SBlock& lm, const ExactRational& q,
                        const ExactRational& x, const ExactRational& y);

/// (1 - z)^{delta_{l,m}} lim_{q -> 0} q^{-(m-l)_+} S(z)^{a,b}_{i,j}.
LimitValue s_scaled_limit(const Signature& eps, const StateVector& a, const StateVector& b, const StateVector& i,
                          const StateVector& j);
LimitValue scaled_limit_of(const SpectralSum& s, int l, int m);

enum class LimitSign {
  Literal,      // expect z^H on every block
  LowerLevel,   // expect (-1)^{m-l} z^H when l < m
};

/// Compares every scaled limit of S_{l,m} with z^H times the combinatorial R
/// indicator. With `column`, only that (i, j) column is examined.
Report verify_limit_theorem(const Signature& eps, int l, int m,
                            const std::optional<std::pair<StateVector, StateVector>>& column = std::nullopt,
                            int jobs = 1, LimitSign sign = LimitSign::Literal);

/// Observed sizes of a block, recorded rather than assumed.
struct DegreeStats {
  int nonzero_entries = 0;
  int max_terms = 0;
  int min_q_degree = 0;
  int max_q_degree = 0;
  int min_slope = 0;
  int max_slope = 0;
  int max_numerator_z_degree = 0;
};

DegreeStats degree_stats(const SBlock& block);

}  // namespace ybx::smatrix
