#include "ybx/threed.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "ybx/errors.hpp"

namespace ybx::threed {

namespace {

bool conserves(int a, int b, int c, int i, int j, int k) {
  return a + b == i + j && b + c == j + k && std::min({a, b, c, i, j, k}) >= 0;
}

BigInt sign(int n) { return (n % 2 == 0) ? 1 : -1; }

/// (q^2)_{c+mu} / (q^2)_c = prod_{s=1..mu} (1 - q^{2(c+s)})
LaurentPoly shifted_pochhammer(int c, int mu) {
  LaurentPoly out = LaurentPoly::constant(1);
  for (int s = 1; s <= mu; ++s) out *= LaurentPoly::constant(1) - qpow(2 * (c + s));
  return out;
}

// Power series in u whose n-th coefficient is num[n] / ((q^2)_n)^weight.
struct PochhammerSeries {
  int weight = 1;
  std::vector<LaurentPoly> num;
};

// Coefficient series of (x u; q^2)_inf (inverse = false) or 1/(x u; q^2)_inf
// with x = -q^x_exp, truncated at u^order.
PochhammerSeries product_series(int x_exp, bool inverse, int order) {
  PochhammerSeries s;
  s.num.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    if (inverse) {
      // x^n = (-1)^n q^{n x_exp}
      s.num[n] = qpow(n * x_exp, sign(n));
    } else {
      // (-1)^n q^{n(n-1)} x^n = q^{n(n-1) + n x_exp}
      s.num[n] = qpow(n * (n - 1) + n * x_exp);
    }
  }
  return s;
}

PochhammerSeries multiply(const PochhammerSeries& s1, const PochhammerSeries& s2) {
  const int order = static_cast<int>(std::min(s1.num.size(), s2.num.size())) - 1;
  PochhammerSeries out;
  out.weight = s1.weight + s2.weight;
  out.num.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    for (int p = 0; p <= n; ++p) {
      if (s1.num[p].is_zero() || s2.num[n - p].is_zero()) continue;
      // Bring both denominators up to ((q^2)_n)^weight.
      LaurentPoly lift1 = LaurentPoly::constant(1);
      LaurentPoly ratio1 = shifted_pochhammer(p, n - p);
      for (int w = 0; w < s1.weight; ++w) lift1 *= ratio1;
      LaurentPoly lift2 = LaurentPoly::constant(1);
      LaurentPoly ratio2 = shifted_pochhammer(n - p, p);
      for (int w = 0; w < s2.weight; ++w) lift2 *= ratio2;
      out.num[n] += s1.num[p] * s2.num[n - p] * lift1 * lift2;
    }
  }
  return out;
}

}  // namespace

LaurentPoly r_elem(int a, int b, int c, int i, int j, int k) {
  if (!conserves(a, b, c, i, j, k)) return {};
  LaurentPoly out;
  for (int lambda = std::max(0, b - i); lambda <= std::min(b, j); ++lambda) {
    const int mu = b - lambda;
    const int e = i * (c - j) + (k + 1) * lambda + mu * (mu - k);
    LaurentPoly term = qpow(e, sign(lambda)) * shifted_pochhammer(c, mu);
    term *= q_binomial(i, mu, 2);
    term *= q_binomial(j, lambda, 2);
    out += term;
  }
  return out;
}

LaurentPoly r_elem_alt(int a, int b, int c, int i, int j, int k) {
  if (!conserves(a, b, c, i, j, k)) return {};
  LaurentPoly out;
  for (int lambda = std::max(0, b - i); lambda <= b; ++lambda) {
    const int mu = b - lambda;
    const int e = i * k + b + lambda * (c - a) + mu * (mu - i - k - 1);
    LaurentPoly term = qpow(e, sign(lambda)) * q_binomial(i, mu, 2);
    term *= q_binomial(lambda + a, a, 2);
    out += term;
  }
  return out;
}

LaurentPoly r_elem_contour(int a, int b, int c, int i, int j, int k) {
  if (!conserves(a, b, c, i, j, k)) return {};
  // (-q^{2+a+c}u; q^2)_inf (-q^{-i-k}u; q^2)_inf / ((-q^{a-c}u; q^2)_inf (-q^{c-a}u; q^2)_inf)
  PochhammerSeries s = product_series(2 + a + c, false, b);
  s = multiply(s, product_series(-i - k, false, b));
  s = multiply(s, product_series(a - c, true, b));
  s = multiply(s, product_series(c - a, true, b));

  LaurentPoly den = LaurentPoly::constant(1);
  const LaurentPoly poch = q_pochhammer(b, 2);
  for (int w = 0; w < s.weight; ++w) den *= poch;

  auto coeff = divide_exact(s.num[b], den);
  if (!coeff) {
    throw NonPolynomialResult("u^b coefficient is not a Laurent polynomial for indices (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + "|" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + ")");
  }
  return coeff->shifted(i * k + b);
}

LaurentPoly l_elem(int a, int b, int c, int i, int j, int k) {
  if (std::max({a, b, i, j}) > 1 || std::min({a, b, c, i, j, k}) < 0) return {};
  if (!conserves(a, b, c, i, j, k)) return {};
  if (a == i && b == j) {
    if (a == b) return LaurentPoly::constant(1);  // 00 -> 00, 11 -> 11
    if (a == 0) return qpow(k + 1, -1);           // 01 -> 01: -q^{k+1}
    return qpow(k);                               // 10 -> 10: q^k
  }
  if (i == 1 && j == 0) return LaurentPoly::constant(1) - qpow(2 * k);  // 10 -> 01, c = k-1
  return LaurentPoly::constant(1);                                      // 01 -> 10, c = k+1
}

LaurentPoly layer_elem(LayerKind kind, int a, int b, int c, int i, int j, int k) {
  return kind == LayerKind::R ? r_elem(a, b, c, i, j, k) : l_elem(a, b, c, i, j, k);
}

const LaurentPoly& ElementCache::get(LayerKind kind, int a, int b, int c, int i, int j, int k) {
  const Key key{static_cast<int>(kind), a, b, c, i, j, k};
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  LaurentPoly value = layer_elem(kind, a, b, c, i, j, k);
  std::unique_lock lock(mutex_);
  // std::map never invalidates references on insert.
  return table_.try_emplace(key, std::move(value)).first->second;
}

std::size_t ElementCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

ElementCache& ElementCache::global() {
  static ElementCache cache;
  return cache;
}

ElementFn cached_elements() {
  return [](LayerKind kind, int a, int b, int c, int i, int j, int k) {
    return ElementCache::global().get(kind, a, b, c, i, j, k);
  };
}

std::array<int, 3> q0_r_map(int i, int j, int k) {
  return {j + std::max(i - k, 0), std::min(i, k), j + std::max(k - i, 0)};
}

std::array<int, 3> q0_l_map(int i, int j, int k) {
  return {j + std::max(i - j - k, 0), std::min(i, k + j), std::max(k + j - i, 0)};
}

std::array<int, 3> q0_map(LayerKind kind, int i, int j, int k) {
  return kind == LayerKind::R ? q0_r_map(i, j, k) : q0_l_map(i, j, k);
}

int parity_class(int a, int c, int j) {
  const long v = static_cast<long>(a - j) * static_cast<long>(c - j);
  return static_cast<int>(((v % 2) + 2) % 2);
}

}  // namespace ybx::threed
