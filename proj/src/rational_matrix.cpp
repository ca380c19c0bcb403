#include "ybx/rational_matrix.hpp"

#include <stdexcept>

namespace ybx {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r) m.set(r, r, 1);
  return m;
}

ExactRational RationalMatrix::get(int r, int c) const {
  const auto& row = data_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? ExactRational(0) : it->second;
}

void RationalMatrix::set(int r, int c, const ExactRational& v) {
  auto& row = data_[static_cast<std::size_t>(r)];
  if (v == 0) {
    row.erase(c);
  } else {
    row[c] = v;
  }
}

void RationalMatrix::add(int r, int c, const ExactRational& v) {
  if (v == 0) return;
  auto& row = data_[static_cast<std::size_t>(r)];
  auto [it, inserted] = row.try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (int r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : o.row(r)) add(r, c, v);
  }
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (int r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : o.row(r)) add(r, c, -v);
  }
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const ExactRational& s) {
  if (s == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_) {
    for (auto& [c, v] : row) v *= s;
  }
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (const auto& [k, av] : a.row(r)) {
      for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int r1 = 0; r1 < a.rows_; ++r1) {
    for (const auto& [c1, v1] : a.row(r1)) {
      for (int r2 = 0; r2 < b.rows_; ++r2) {
        for (const auto& [c2, v2] : b.row(r2)) out.set(r1 * b.rows_ + r2, c1 * b.cols_ + c2, v1 * v2);
      }
    }
  }
  return out;
}

std::string RationalMatrix::first_difference(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return "shape mismatch";
  for (int r = 0; r < rows_; ++r) {
    if (row(r) == other.row(r)) continue;
    for (int c = 0; c < cols_; ++c) {
      ExactRational x = get(r, c), y = other.get(r, c);
      if (x != y) return "(" + std::to_string(r) + "," + std::to_string(c) + "): " + x.get_str() + " vs " + y.get_str();
    }
  }
  return {};
}

}  // namespace ybx
