#pragma once

// Matrix elements of the 3D R operator on F^{(x)3} and the 3D L operator on
// V (x) V (x) F, plus their q = 0 set-theoretical limits.
//
// Index convention throughout: element(a,b,c, i,j,k) is the coefficient of
// |a,b,c> in the image of |i,j,k>. Every element vanishes unless
// (a+b, b+c) == (i+j, j+k).

#include <array>
#include <functional>
#include <map>
#include <shared_mutex>

#include "ybx/poly.hpp"

namespace ybx::threed {

/// 0 selects the 3D R (all legs Fock), 1 the 3D L (first two legs in V = C^2).
enum class LayerKind : int { R = 0, L = 1 };

inline LayerKind kind_of(int eps) { return eps == 0 ? LayerKind::R : LayerKind::L; }

struct TriIndex {
  int a = 0, b = 0, c = 0;  // output
  int i = 0, j = 0, k = 0;  // input

  bool conserves() const { return a + b == i + j && b + c == j + k; }
  friend bool operator==(const TriIndex&, const TriIndex&) = default;
};

// Three independent formulas for the same element.

/// Double sum over lambda + mu = b with mu <= i, lambda <= j.
LaurentPoly r_elem(int a, int b, int c, int i, int j, int k);
/// Single-constraint sum over lambda + mu = b with mu <= i.
LaurentPoly r_elem_alt(int a, int b, int c, int i, int j, int k);
/// Coefficient of u^b in a ratio of infinite q-Pochhammer products.
/// Throws NonPolynomialResult if the extracted coefficient is not in Z[q, 1/q].
LaurentPoly r_elem_contour(int a, int b, int c, int i, int j, int k);

/// The six nonzero families of the 3D L. Zero when a, b, i or j is outside {0, 1}.
LaurentPoly l_elem(int a, int b, int c, int i, int j, int k);

LaurentPoly layer_elem(LayerKind kind, int a, int b, int c, int i, int j, int k);

/// Thread-safe memo of layer elements keyed by (kind, a,b,c, i,j,k).
class ElementCache {
 public:
  const LaurentPoly& get(LayerKind kind, int a, int b, int c, int i, int j, int k);
  std::size_t size() const;

  static ElementCache& global();

 private:
  using Key = std::array<int, 7>;
  mutable std::shared_mutex mutex_;
  std::map<Key, LaurentPoly> table_;
};

/// Element source used by verifiers; tests substitute perturbed sources.
using ElementFn = std::function<LaurentPoly(LayerKind, int, int, int, int, int, int)>;

/// Memoised layer_elem through ElementCache::global().
ElementFn cached_elements();

/// q -> 0 limits as maps on index triples: (i,j,k) -> (a,b,c).
std::array<int, 3> q0_r_map(int i, int j, int k);
std::array<int, 3> q0_l_map(int i, int j, int k);
std::array<int, 3> q0_map(LayerKind kind, int i, int j, int k);

/// xi in {0,1} with R^{abc}_{ijk} in q^xi Z[q^2]; xi = (a-j)(c-j) mod 2.
int parity_class(int a, int c, int j);

}  // namespace ybx::threed
