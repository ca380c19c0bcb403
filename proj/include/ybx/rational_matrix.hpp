#pragma once

#include <map>
#include <string>
#include <vector>

#include "ybx/poly.hpp"

namespace ybx {

/// Sparse matrix over Q; rows are ordered maps column -> nonzero value.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ExactRational get(int r, int c) const;
  void set(int r, int c, const ExactRational& v);
  void add(int r, int c, const ExactRational& v);

  const std::map<int, ExactRational>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const ExactRational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const ExactRational& s) { return a *= s; }
  friend RationalMatrix operator*(const ExactRational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  /// Kronecker product; index of (r1, r2) is r1 * rhs.rows() + r2.
  friend RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

  /// First differing entry as "(r,c): x vs y", empty when equal.
  std::string first_difference(const RationalMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, ExactRational>> data_;
};

}  // namespace ybx
