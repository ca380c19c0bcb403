#pragma once

// Finite sums  sum_t z^{d_t} p_t(q) / (1 - z q^{k_t})  and their conversion to
// a single fraction over prod_k (1 - z q^k).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybx/poly.hpp"

namespace ybx {

struct SpectralTerm {
  int d = 0;  // z-shift, nonnegative
  int k = 0;  // q-slope of the geometric denominator
  LaurentPoly p;

  friend bool operator==(const SpectralTerm&, const SpectralTerm&) = default;
};

class SpectralSum {
 public:
  SpectralSum() = default;

  /// Adds z^d p / (1 - z q^k); merges with an existing (d, k) term.
  void add(int d, int k, const LaurentPoly& p);
  SpectralSum& operator+=(const SpectralSum& other);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<SpectralTerm> terms() const;

  /// Distinct slopes, ascending.
  std::vector<int> slopes() const;

  friend bool operator==(const SpectralSum&, const SpectralSum&) = default;

 private:
  std::map<std::pair<int, int>, LaurentPoly> terms_;  // (d, k) -> p
};

/// numerator / prod_{k in slopes} (1 - z q^k), slopes distinct and ascending.
struct RationalFunction {
  BiPoly numerator;
  std::vector<int> slopes;

  /// Exact equality as rational functions of (q, z).
  bool equivalent(const RationalFunction& other) const;
  std::string to_string() const;
};

/// prod_{k in slopes} (1 - z q^k)
BiPoly denominator_poly(const std::vector<int>& slopes);

RationalFunction spectral_to_fraction(const SpectralSum& s);

ExactRational evaluate(const SpectralSum& s, const ExactRational& q, const ExactRational& z);
ExactRational evaluate(const RationalFunction& f, const ExactRational& q, const ExactRational& z);

/// Result of (1-z)^delta * lim_{q->0} q^{-scale} * value: either 0 or sign * z^power.
struct LimitValue {
  bool zero = true;
  int power = 0;
  int sign = 1;

  static LimitValue Zero() { return {}; }
  static LimitValue Monomial(int h, int sign = 1) { return {false, h, sign}; }
  friend bool operator==(const LimitValue&, const LimitValue&) = default;
  std::string to_string() const;
};

/// Throws LimitUndefined when the limit diverges or is not +-z^H.
LimitValue scaled_q0_limit(const SpectralSum& s, int scale, int delta);

std::string to_string(const SpectralSum& s);

}  // namespace ybx
