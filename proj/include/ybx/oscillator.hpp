#pragma once

// Truncated matrices for the q-oscillators a+, a-, k and the number operator h
// on span{|0>, ..., |N-1>}. Truncation: a+ annihilates |N-1>, so a product of
// operators is exact on a column m only while every intermediate state stays
// below N. Each routine documents its validity window.

#include <string>
#include <vector>

#include "ybx/poly.hpp"
#include "ybx/report.hpp"

namespace ybx::osc {

class FockMatrix {
 public:
  explicit FockMatrix(int cutoff = 1);

  static FockMatrix identity(int cutoff);

  int cutoff() const { return n_; }
  const LaurentPoly& at(int row, int col) const { return cells_[index(row, col)]; }
  LaurentPoly& at(int row, int col) { return cells_[index(row, col)]; }

  FockMatrix& operator+=(const FockMatrix& o);
  FockMatrix& operator-=(const FockMatrix& o);
  FockMatrix& operator*=(const LaurentPoly& s);

  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
  friend FockMatrix operator*(FockMatrix a, const LaurentPoly& s) { return a *= s; }
  friend FockMatrix operator*(const LaurentPoly& s, FockMatrix a) { return a *= s; }
  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
  friend bool operator==(const FockMatrix&, const FockMatrix&) = default;

  bool is_zero() const;

  /// First entry (row, col) with col <= max_col where the two differ; empty when none.
  std::string first_difference(const FockMatrix& other, int max_col) const;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * n_ + col; }
  int n_;
  std::vector<LaurentPoly> cells_;
};

FockMatrix power(const FockMatrix& m, int e);

enum class Generator { APlus, AMinus, K, H };

/// a+|m> = |m+1> (zero at the top), a-|m> = (1-q^{2m})|m-1>, k|m> = q^m|m>, h|m> = m|m>.
FockMatrix generator_matrix(Generator g, int cutoff);

struct OscGenerators {
  FockMatrix aplus;
  FockMatrix aminus;
  FockMatrix k;
};

OscGenerators standard_generators(int cutoff);

/// k a+ = q a+ k, k a- = q^{-1} a- k, a+ a- = 1 - k^2, a- a+ = 1 - q^2 k^2,
/// compared on columns m <= cutoff - 2.
Report check_osc_relations(int cutoff);
Report check_osc_relations(const OscGenerators& g);

/// The Fock-space operator R^{a,b}_{i,j} with <c'|R^{a,b}_{i,j}|c> = R^{a,b,c'}_{i,j,c}.
/// Exact on columns c <= cutoff - 1 - j; zero matrix unless a + b = i + j.
FockMatrix ropp_operator(int a, int b, int i, int j, int cutoff);

}  // namespace ybx::osc
