#include "ybx/smatrix.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "ybx/crystal.hpp"
#include "ybx/errors.hpp"
#include "ybx/parallel.hpp"
#include "ybx/threed.hpp"

namespace ybx::smatrix {

namespace {

QxPoly qx_monomial(int q_exp, int x_exp, const BigInt& c = 1) { return QxPoly::monomial(Exp2{q_exp, x_exp}, c); }

// One layer of the trace as a polynomial in q and X = q^c, where the layer's
// auxiliary output is c + dout and its input c + din.
QxPoly r_layer(int b, int i, int j, int dout, int din) {
  QxPoly out;
  for (int lambda = std::max(0, b - i); lambda <= std::min(b, j); ++lambda) {
    const int mu = b - lambda;
    const int q_exp = i * (dout - j) + (din + 1) * lambda + mu * (mu - din);
    QxPoly term = qx_monomial(q_exp, i + lambda - mu, lambda % 2 == 0 ? 1 : -1);
    for (int s = 1; s <= mu; ++s) term *= qx_monomial(0, 0) - qx_monomial(2 * (dout + s), 2);
    term *= lift_to_qx(q_binomial(i, mu) * q_binomial(j, lambda));
    out += term;
  }
  return out;
}

QxPoly l_layer(int a, int b, int i, int j, int din) {
  if (a == i && b == j) {
    if (a == b) return qx_monomial(0, 0);
    if (a == 0) return qx_monomial(din + 1, 1, -1);  // 01 -> 01
    return qx_monomial(din, 1);                       // 10 -> 10
  }
  if (i == 1 && j == 0 && a == 0 && b == 1) return qx_monomial(0, 0) - qx_monomial(2 * din, 2);
  if (i == 0 && j == 1 && a == 1 && b == 0) return qx_monomial(0, 0);
  return {};
}

class LayerCache {
 public:
  QxPoly get(int kind, int a, int b, int i, int j, int dout, int din) {
    const Key key{kind, a, b, i, j, dout, din};
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    QxPoly v = kind == 0 ? r_layer(b, i, j, dout, din) : l_layer(a, b, i, j, din);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  using Key = std::array<int, 7>;
  std::shared_mutex mutex_;
  std::map<Key, QxPoly> table_;
};

LayerCache& layer_cache() {
  static LayerCache cache;
  return cache;
}

bool selection_rule(const Signature& eps, const StateVector& a, const StateVector& b, const StateVector& i,
                    const StateVector& j) {
  const std::size_t n = static_cast<std::size_t>(eps.size());
  if (a.size() != n || b.size() != n || i.size() != n || j.size() != n) return false;
  if (!eps.admits(a) || !eps.admits(b) || !eps.admits(i) || !eps.admits(j)) return false;
  if (level(a) != level(i) || level(b) != level(j)) return false;
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t] + b[t] != i[t] + j[t]) return false;
  }
  return true;
}

int find_index(const std::vector<StateVector>& basis, const StateVector& v) {
  auto it = std::lower_bound(basis.begin(), basis.end(), v);
  return (it != basis.end() && *it == v) ? static_cast<int>(it - basis.begin()) : -1;
}

void check_block_input(const Signature& eps, int l, int m) {
  if (l < 0 || m < 0) throw PreconditionError("block levels must be nonnegative");
  if (eps.size() == 0) throw PreconditionError("empty signature");
}

}  // namespace

SpectralSum s_element(const Signature& eps, const StateVector& a, const StateVector& b, const StateVector& i,
                      const StateVector& j) {
  SpectralSum out;
  if (!selection_rule(eps, a, b, i, j)) return out;
  const int n = eps.size();

  // delta[t] is the offset of c_t from the free summation variable c = c_n.
  std::vector<int> delta(static_cast<std::size_t>(n) + 1, 0);
  for (int t = n; t >= 1; --t) delta[t - 1] = delta[t] + j[t - 1] - b[t - 1];
  const int c_min = std::max(0, -*std::min_element(delta.begin(), delta.end()));

  QxPoly product = qx_monomial(0, 0);
  for (int t = 1; t <= n && !product.is_zero(); ++t) {
    const int s = t - 1;
    product *= layer_cache().get(eps[s], a[s], b[s], i[s], j[s], delta[t - 1], delta[t]);
  }

  std::map<int, LaurentPoly> by_slope;
  for (const auto& [e, coeff] : product.terms()) by_slope[e.v].add_term(e.q + e.v * c_min, coeff);
  for (const auto& [k, tau] : by_slope) out.add(c_min, k, tau);
  return out;
}

int SBlock::index_l(const StateVector& v) const { return find_index(basis_l, v); }
int SBlock::index_m(const StateVector& v) const { return find_index(basis_m, v); }

const SpectralSum* SBlock::find(const StateVector& a, const StateVector& b, const StateVector& i,
                                const StateVector& j) const {
  auto it = entries.find({index_l(a), index_m(b), index_l(i), index_m(j)});
  return it == entries.end() ? nullptr : &it->second;
}

SBlock s_block(const Signature& eps, int l, int m, int jobs) {
  check_block_input(eps, l, m);
  SBlock blk;
  blk.eps = eps;
  blk.l = l;
  blk.m = m;
  blk.basis_l = enumerate_states(eps, l);
  blk.basis_m = enumerate_states(eps, m);

  const std::size_t nl = blk.basis_l.size(), nm = blk.basis_m.size();
  using Column = std::vector<std::pair<std::array<int, 4>, SpectralSum>>;
  std::vector<Column> columns(nl * nm);
  parallel_for(columns.size(), jobs, [&](std::size_t col) {
    const int ii = static_cast<int>(col / nm), ij = static_cast<int>(col % nm);
    const StateVector& i = blk.basis_l[ii];
    const StateVector& j = blk.basis_m[ij];
    for (int ia = 0; ia < static_cast<int>(nl); ++ia) {
      const StateVector& a = blk.basis_l[ia];
      StateVector b(a.size());
      bool ok = true;
      for (std::size_t t = 0; t < a.size(); ++t) {
        b[t] = i[t] + j[t] - a[t];
        if (b[t] < 0) ok = false;
      }
      if (!ok) continue;
      const int ib = blk.index_m(b);
      if (ib < 0) continue;
      SpectralSum s = s_element(eps, a, b, i, j);
      if (!s.is_zero()) columns[col].push_back({{ia, ib, ii, ij}, std::move(s)});
    }
  });
  for (auto& col : columns) {
    for (auto& [key, s] : col) blk.entries.emplace(key, std::move(s));
  }
  return blk;
}

RationalMatrix evaluate_block(const SBlock& block, const ExactRational& q, const ExactRational& z) {
  RationalMatrix mat(block.dim(), block.dim());
  for (const auto& [key, s] : block.entries) {
    mat.set(block.pair_index(key[0], key[1]), block.pair_index(key[2], key[3]), evaluate(s, q, z));
  }
  return mat;
}

namespace {

// Embeds a matrix on factors (f1, f2) of W_k (x) W_l (x) W_m. dims = {|B_k|, |B_l|, |B_m|}.
RationalMatrix embed(const RationalMatrix& s, int f1, int f2, const std::array<int, 3>& dims) {
  const int total = dims[0] * dims[1] * dims[2];
  const int spectator = 3 - f1 - f2;
  const int d2 = dims[f2];
  RationalMatrix out(total, total);
  auto compose = [&](std::array<int, 3> idx) { return (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]; };
  for (int row = 0; row < s.rows(); ++row) {
    const int ra = row / d2, rb = row % d2;
    for (const auto& [col, v] : s.row(row)) {
      const int ca = col / d2, cb = col % d2;
      for (int sp = 0; sp < dims[spectator]; ++sp) {
        std::array<int, 3> r{}, c{};
        r[f1] = ra;
        r[f2] = rb;
        r[spectator] = sp;
        c[f1] = ca;
        c[f2] = cb;
        c[spectator] = sp;
        out.set(compose(r), compose(c), v);
      }
    }
  }
  return out;
}

}  // namespace

Report verify_ybe_point(const SBlock& kl, const SBlock& km, const SBlock& lm, const ExactRational& q,
                        const ExactRational& x, const ExactRational& y) {
  if (kl.l != km.l || kl.m != lm.l || km.m != lm.m || !(kl.eps == km.eps) || !(kl.eps == lm.eps)) {
    throw PreconditionError("blocks do not form a Yang-Baxter triple");
  }
  const std::array<int, 3> dims{static_cast<int>(kl.basis_l.size()), static_cast<int>(kl.basis_m.size()),
                                static_cast<int>(km.basis_m.size())};
  const RationalMatrix s12 = embed(evaluate_block(kl, q, x), 0, 1, dims);
  const RationalMatrix s13 = embed(evaluate_block(km, q, x * y), 0, 2, dims);
  const RationalMatrix s23 = embed(evaluate_block(lm, q, y), 1, 2, dims);
  const RationalMatrix lhs = s12 * s13 * s23;
  const RationalMatrix rhs = s23 * s13 * s12;

  Report rep;
  rep.check = "ybe-s";
  rep.identity = "S12(x) S13(xy) S23(y) = S23(y) S13(xy) S12(x)";
  rep.cases = 1;
  std::string diff = lhs.first_difference(rhs);
  if (!diff.empty()) rep.fail("entry " + diff);
  rep.detail = {{"eps", kl.eps.to_string()},
                {"levels", {kl.l, kl.m, km.m}},
                {"q", q.get_str()},
                {"x", x.get_str()},
                {"y", y.get_str()},
                {"dimension", dims[0] * dims[1] * dims[2]},
                {"lhs_nonzeros", lhs.nonzeros()},
                {"rhs_nonzeros", rhs.nonzeros()}};
  return rep;
}

Report verify_ybe_point(const Signature& eps, int k, int l, int m, const ExactRational& q, const ExactRational& x,
                        const ExactRational& y) {
  return verify_ybe_point(s_block(eps, k, l), s_block(eps, k, m), s_block(eps, l, m), q, x, y);
}

LimitValue scaled_limit_of(const SpectralSum& s, int l, int m) {
  return scaled_q0_limit(s, std::max(m - l, 0), l == m ? 1 : 0);
}

LimitValue s_scaled_limit(const Signature& eps, const StateVector& a, const StateVector& b, const StateVector& i,
                          const StateVector& j) {
  return scaled_limit_of(s_element(eps, a, b, i, j), level(i), level(j));
}

Report verify_limit_theorem(const Signature& eps, int l, int m,
                            const std::optional<std::pair<StateVector, StateVector>>& column, int jobs,
                            LimitSign sign) {
  const int expected_sign = (sign == LimitSign::LowerLevel && l < m && (m - l) % 2 == 1) ? -1 : 1;
  check_block_input(eps, l, m);
  const auto basis_l = enumerate_states(eps, l);
  const auto basis_m = enumerate_states(eps, m);
  std::vector<std::pair<StateVector, StateVector>> columns;
  if (column) {
    if (!eps.admits(column->first) || !eps.admits(column->second) || level(column->first) != l ||
        level(column->second) != m) {
      throw PreconditionError("column is not in B_l x B_m");
    }
    columns.push_back(*column);
  } else {
    for (const auto& i : basis_l) {
      for (const auto& j : basis_m) columns.emplace_back(i, j);
    }
  }

  std::vector<Report> parts(columns.size());
  parallel_for(columns.size(), jobs, [&](std::size_t idx) {
    const auto& [i, j] = columns[idx];
    Report& part = parts[idx];
    const auto ci = crystal::make_vector(eps, i);
    const auto cj = crystal::make_vector(eps, j);
    const crystal::CombR r = crystal::comb_r(ci, cj);
    for (const auto& a : basis_l) {
      StateVector b(a.size());
      bool ok = true;
      for (std::size_t t = 0; t < a.size(); ++t) {
        b[t] = i[t] + j[t] - a[t];
        if (b[t] < 0) ok = false;
      }
      if (!ok || !eps.admits(b)) continue;
      ++part.cases;
      const LimitValue expected =
          (r.b.occ == b && r.a.occ == a) ? LimitValue::Monomial(r.energy, expected_sign) : LimitValue::Zero();
      const std::string where = "S^{" + to_string(a) + "," + to_string(b) + "}_{" + to_string(i) + "," +
                                to_string(j) + "}";
      try {
        const LimitValue got = scaled_limit_of(s_element(eps, a, b, i, j), l, m);
        if (!(got == expected)) part.fail(where + ": limit " + got.to_string() + ", expected " + expected.to_string());
      } catch (const LimitUndefined& e) {
        part.fail(where + ": " + e.what());
      }
    }
  });

  Report rep;
  rep.check = "limit-theorem";
  rep.identity = expected_sign < 0
                     ? "(1-z)^{delta_lm} lim q^{-(m-l)_+} S(z)^{a,b}_{i,j} = -z^H [R(i(x)j) = b(x)a]"
                     : "(1-z)^{delta_lm} lim q^{-(m-l)_+} S(z)^{a,b}_{i,j} = z^H [R(i(x)j) = b(x)a]";
  for (const auto& p : parts) rep.absorb(p);
  rep.detail = {{"eps", eps.to_string()},
                {"l", l},
                {"m", m},
                {"columns", columns.size()},
                {"sign", sign == LimitSign::Literal ? "literal" : "lower-level"}};
  return rep;
}

DegreeStats degree_stats(const SBlock& block) {
  DegreeStats st;
  bool first = true;
  for (const auto& [key, s] : block.entries) {
    ++st.nonzero_entries;
    st.max_terms = std::max(st.max_terms, static_cast<int>(s.size()));
    for (const auto& t : s.terms()) {
      const int lo = min_degree(t.p), hi = max_degree(t.p);
      if (first) {
        st.min_q_degree = lo;
        st.max_q_degree = hi;
        st.min_slope = st.max_slope = t.k;
        first = false;
      }
      st.min_q_degree = std::min(st.min_q_degree, lo);
      st.max_q_degree = std::max(st.max_q_degree, hi);
      st.min_slope = std::min(st.min_slope, t.k);
      st.max_slope = std::max(st.max_slope, t.k);
    }
    const RationalFunction f = spectral_to_fraction(s);
    for (const auto& [e, c] : f.numerator.terms()) st.max_numerator_z_degree = std::max(st.max_numerator_z_degree, e.v);
  }
  return st;
}

}  // namespace ybx::smatrix
