#pragma once

// Sparse exact polynomials with arbitrary-precision integer coefficients.
//
// LaurentPoly  : Z[q, 1/q]
// BiPoly       : Z[q, 1/q][z]       (numerators of spectral sums)
// QxPoly       : Z[q, 1/q][X, 1/X]  (X stands for q^c inside a trace)
//
// Every value is kept in canonical sparse form: no stored coefficient is zero.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ybx {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Exponent of a bivariate monomial q^q * v^v (v is z or X depending on use).
struct Exp2 {
  int q = 0;
  int v = 0;

  auto operator<=>(const Exp2&) const = default;
  friend Exp2 operator+(Exp2 a, Exp2 b) { return {a.q + b.q, a.v + b.v}; }
};

template <typename Exponent, typename Tag>
class SparsePoly {
 public:
  using exponent_type = Exponent;
  using Terms = std::map<Exponent, BigInt>;

  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c) { return monomial(Exponent{}, c); }

  static SparsePoly monomial(Exponent e, const BigInt& c = 1) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  BigInt coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiply by the monomial c * (variables)^e.
  SparsePoly shifted(const Exponent& e, const BigInt& c = 1) const {
    SparsePoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, v * c);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }
  SparsePoly& operator*=(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly out = a;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ka, va] : a.terms_) {
      for (const auto& [kb, vb] : b.terms_) out.add_term(ka + kb, va * vb);
    }
    return out;
  }
  friend SparsePoly operator*(SparsePoly a, const BigInt& c) { return a *= c; }
  friend SparsePoly operator*(const BigInt& c, SparsePoly a) { return a *= c; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

struct LaurentTag {};
struct BiTag {};
struct QxTag {};

using LaurentPoly = SparsePoly<int, LaurentTag>;
using BiPoly = SparsePoly<Exp2, BiTag>;  // Exp2{q, z}
using QxPoly = SparsePoly<Exp2, QxTag>;  // Exp2{q, X}

/// Shorthand for c * q^e.
inline LaurentPoly qpow(int e, const BigInt& c = 1) { return LaurentPoly::monomial(e, c); }

int min_degree(const LaurentPoly& p);  // p must be nonzero
int max_degree(const LaurentPoly& p);  // p must be nonzero

/// p(q) -> p(q^k).
LaurentPoly substitute_power(const LaurentPoly& p, int k);

/// Exact quotient num / den in Z[q, 1/q], or nullopt if den does not divide num.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Gaussian binomial [m choose k] in base q^base_exp, built by the Pascal
/// recurrence so no division is performed. Zero when k < 0 or k > m.
LaurentPoly q_binomial(int m, int k, int base_exp = 2);

/// (q^base; q^base)_m = prod_{s=1..m} (1 - q^{base*s}).
LaurentPoly q_pochhammer(int m, int base_exp = 2);

/// Pure-q Laurent polynomial as a QxPoly with X-degree zero.
QxPoly lift_to_qx(const LaurentPoly& p, int x_exp = 0);

ExactRational rational_pow(const ExactRational& base, long e);
ExactRational evaluate(const LaurentPoly& p, const ExactRational& q);
ExactRational evaluate(const BiPoly& p, const ExactRational& q, const ExactRational& z);

/// "1+q^2-q^6-3q^-1" (ascending exponents); "0" for the zero polynomial.
std::string to_string(const LaurentPoly& p, std::string_view var = "q");
std::string to_string(const BiPoly& p);
std::string to_string(const QxPoly& p);

/// Parses the output format of to_string(LaurentPoly); throws std::invalid_argument.
LaurentPoly parse_laurent(std::string_view text, char var = 'q');

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }

}  // namespace ybx
