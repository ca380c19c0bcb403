#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ybx {

/// Occupation numbers (m_1, ..., m_n); row 1 is the top box.
using StateVector = std::vector<int>;

/// (eps_1, ..., eps_n) in {0,1}^n: eps = 0 marks a bosonic (Fock) box,
/// eps = 1 a fermionic (two-dimensional) box holding at most one.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> eps);

  /// Compact bit-string form such as "0101"; throws std::invalid_argument.
  static Signature parse(std::string_view bits);

  int size() const { return static_cast<int>(eps_.size()); }
  int operator[](int t) const { return eps_[static_cast<std::size_t>(t)]; }
  bool fermionic(int t) const { return eps_[static_cast<std::size_t>(t)] == 1; }
  const std::vector<int>& values() const { return eps_; }

  /// Respects 0 <= m_t and m_t <= 1 on fermionic boxes.
  bool admits(const StateVector& m) const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> eps_;
};

int level(const StateVector& m);

/// All admissible vectors of total `level`, ascending lexicographic order.
std::vector<StateVector> enumerate_states(const Signature& sig, int level);

std::string to_string(const StateVector& m);

/// "1,0,2" or "102" (single digits); throws std::invalid_argument.
StateVector parse_state(std::string_view text);

}  // namespace ybx
