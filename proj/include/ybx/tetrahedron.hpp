#pragma once

// Tetrahedron equations checked coefficient-wise on single basis vectors.
// Conservation bounds every intermediate sum, so no Fock cutoff is involved.

#include <array>
#include <map>
#include <vector>

#include "ybx/report.hpp"
#include "ybx/signature.hpp"
#include "ybx/threed.hpp"

namespace ybx::threed {

using TeState = std::vector<int>;
using TeVector = std::map<TeState, LaurentPoly>;

/// Applies one 3D operator on legs pos (0-based) of every basis vector in v.
TeVector apply_operator(const TeVector& v, LayerKind kind, std::array<int, 3> pos, const ElementFn& elem);

/// R124 R135 R236 R456 = R456 R236 R135 R124 on |input>.
Report verify_te_rrrr(const std::array<int, 6>& input, const ElementFn& elem = cached_elements());

/// L124 L135 L236 R456 = R456 L236 L135 L124; input[0..2] lie in {0,1}.
Report verify_te_rlll(const std::array<int, 6>& input, const ElementFn& elem = cached_elements());

/// n-layer equation on |alpha> (x) |beta> (x) |gamma> (x) |fock>.
Report verify_te_nlayer(const Signature& eps, const StateVector& alpha, const StateVector& beta,
                        const StateVector& gamma, const std::array<int, 3>& fock,
                        const ElementFn& elem = cached_elements());

// Sweeps; mismatches from individual inputs are merged.

/// Every input with component sum <= max_sum.
Report sweep_te_rrrr(int max_sum, int jobs = 1);
/// Every V-input times every Fock input with m4 + m5 + m6 <= max_fock.
Report sweep_te_rlll(int max_fock, int jobs = 1);
/// Every admissible input with all 3n + 3 entries <= max_entry.
Report sweep_te_nlayer(const Signature& eps, int max_entry, int jobs = 1);

enum class CombKind { RRRR, RLLL };

using Tuple6 = std::array<int, 6>;

/// Successive states of both sides at q = 0; front() is the input, back() the image.
struct CombChains {
  std::vector<Tuple6> lhs;  // R456 acts first
  std::vector<Tuple6> rhs;  // (1,2,4) acts first
};

CombChains combinatorial_chains(CombKind kind, const Tuple6& input);

/// Both sides agree for every input with entries <= max_entry (V legs clipped to {0,1}).
Report verify_combinatorial_te(CombKind kind, int max_entry);

/// Involution, index symmetry, factorial transpose and parity class on every
/// conservation block with i + j <= bound and j + k <= bound.
Report check_r_properties(int bound);

}  // namespace ybx::threed
