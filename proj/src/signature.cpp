#include "ybx/signature.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace ybx {

Signature::Signature(std::vector<int> eps) : eps_(std::move(eps)) {
  if (eps_.empty()) throw std::invalid_argument("signature must have at least one entry");
  for (int e : eps_) {
    if (e != 0 && e != 1) throw std::invalid_argument("signature entries must be 0 or 1");
  }
}

Signature Signature::parse(std::string_view bits) {
  std::vector<int> eps;
  for (char ch : bits) {
    if (ch == ',' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad signature '" + std::string(bits) + "'");
    eps.push_back(ch - '0');
  }
  return Signature(std::move(eps));
}

bool Signature::admits(const StateVector& m) const {
  if (static_cast<int>(m.size()) != size()) return false;
  for (int t = 0; t < size(); ++t) {
    if (m[t] < 0 || (fermionic(t) && m[t] > 1)) return false;
  }
  return true;
}

std::string Signature::to_string() const {
  std::string s;
  for (int e : eps_) s += static_cast<char>('0' + e);
  return s;
}

int level(const StateVector& m) { return std::accumulate(m.begin(), m.end(), 0); }

namespace {

void enumerate_rec(const Signature& sig, int t, int remaining, StateVector& cur, std::vector<StateVector>& out) {
  if (t == sig.size() - 1) {
    if (sig.fermionic(t) && remaining > 1) return;
    cur[t] = remaining;
    out.push_back(cur);
    return;
  }
  const int top = sig.fermionic(t) ? std::min(1, remaining) : remaining;
  for (int v = 0; v <= top; ++v) {
    cur[t] = v;
    enumerate_rec(sig, t + 1, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<StateVector> enumerate_states(const Signature& sig, int level) {
  std::vector<StateVector> out;
  if (level < 0 || sig.size() == 0) return out;
  StateVector cur(static_cast<std::size_t>(sig.size()), 0);
  enumerate_rec(sig, 0, level, cur, out);
  return out;
}

std::string to_string(const StateVector& m) {
  bool compact = true;
  for (int v : m) compact = compact && v >= 0 && v <= 9;
  std::string s;
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (!compact && t > 0) s += ',';
    s += std::to_string(m[t]);
  }
  return s;
}

StateVector parse_state(std::string_view text) {
  StateVector out;
  const bool has_commas = text.find(',') != std::string_view::npos;
  if (!has_commas) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad vector '" + std::string(text) + "'");
      out.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view item = text.substr(pos, next - pos);
      if (item.empty()) throw std::invalid_argument("bad vector '" + std::string(text) + "'");
      int v = 0;
      for (char ch : item) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad vector '" + std::string(text) + "'");
        v = v * 10 + (ch - '0');
      }
      out.push_back(v);
      pos = next + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty vector");
  return out;
}

}  // namespace ybx
