#pragma once

// Crystals B_l and the combinatorial R with its energy function.
//
// A vector (a_1, ..., a_n) is drawn as a depth-n column with a_t dots in box t;
// row 1 is the top. "Higher" means a smaller row index.

#include <string>
#include <utility>
#include <vector>

#include "ybx/report.hpp"
#include "ybx/signature.hpp"

namespace ybx::crystal {

struct CrystalVector {
  Signature sig;
  StateVector occ;

  int level() const { return ybx::level(occ); }
  std::string to_string() const { return ybx::to_string(occ); }
  friend bool operator==(const CrystalVector&, const CrystalVector&) = default;
};

/// Throws PreconditionError if occ is not admissible under sig.
CrystalVector make_vector(const Signature& sig, StateVector occ);

std::vector<CrystalVector> enumerate_crystal(const Signature& sig, int level);

/// One H-line. Rows are 1-based. For l >= m the source is a dot of the right
/// column j and the target a dot of the left column i; for l < m the roles swap.
struct Pair {
  int source_row = 0;
  int target_row = 0;
  bool winding = false;
  friend bool operator==(const Pair&, const Pair&) = default;
};

struct PairingTrace {
  std::vector<Pair> pairs;
  std::vector<int> borders;  // c_1, ..., c_n; c_0 = c_n

  int winding_count() const;
};

enum class DotOrder { TopToBottom, BottomToTop };

/// R(i (x) j) = b (x) a with energy H.
struct CombR {
  CrystalVector b;
  CrystalVector a;
  int energy = 0;
  PairingTrace trace;
};

CombR comb_r(const CrystalVector& i, const CrystalVector& j, DotOrder order = DotOrder::TopToBottom);

/// Solution of the piecewise-linear border recursion (requires level(i) >= level(j)).
struct PiecewiseLinearResult {
  StateVector b;
  StateVector a;
  int energy = 0;
  std::vector<int> borders;  // c_1, ..., c_n
};

PiecewiseLinearResult pl_oracle(const CrystalVector& i, const CrystalVector& j);

/// Element of Aff(B_l). Modes are kept as label + integer offset so that
/// symbolic modes d, e, f can be tracked; label 0 means a plain integer mode.
struct AffineElement {
  CrystalVector v;
  int d = 0;
  char label = 0;

  std::string to_string() const;
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// i[d] (x) j[e] -> b[e - H] (x) a[d + H]
std::pair<AffineElement, AffineElement> affine_r(const AffineElement& u, const AffineElement& v);

/// 1 iff R(i (x) j) = b (x) a.
int comb_r_indicator(const CrystalVector& a, const CrystalVector& b, const CrystalVector& i, const CrystalVector& j);

/// R_{m,l} o R_{l,m} = id on B_l x B_m, and H_{l,m}(i (x) j) = H_{m,l}(b (x) a).
Report verify_inverse(const Signature& sig, int l, int m);

/// Braid relation of the affine combinatorial R on every triple of
/// Aff(B_k) x Aff(B_l) x Aff(B_m) with symbolic modes d, e, f.
Report verify_ybe_comb(const Signature& sig, int k, int l, int m);

/// Both sides of the braid relation applied to one triple; each side is the
/// final triple of affine elements.
struct BraidImages {
  std::vector<AffineElement> lhs;
  std::vector<AffineElement> rhs;
};
BraidImages braid_images(const AffineElement& x, const AffineElement& y, const AffineElement& z);

}  // namespace ybx::crystal
