#include "ybx/qgroup.hpp"

#include <algorithm>
#include <set>

#include "ybx/errors.hpp"
#include "ybx/smatrix.hpp"

namespace ybx::qgroup {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// 0-based slot of box i (i taken mod n, box 0 = box n).
int slot(int i, int n) { return mod(i - 1, n); }

void check_params(const Signature& eps, const ExactRational& q) {
  if (eps.size() < 2) throw PreconditionError("the quantum group needs a signature of length at least 2");
  if (q == 0 || q == 1 || q == -1) throw DegenerateParameter("q must avoid 0 and +-1");
}

int find_state(const std::vector<StateVector>& basis, const StateVector& v) {
  auto it = std::lower_bound(basis.begin(), basis.end(), v);
  return (it != basis.end() && *it == v) ? static_cast<int>(it - basis.begin()) : -1;
}

}  // namespace

ExactRational q_param(const Signature& eps, int i, const ExactRational& q) {
  return eps.fermionic(slot(i, eps.size())) ? ExactRational(-1) / q : q;
}

ExactRational d_param(const Signature& eps, int i, int j, const ExactRational& q) {
  const int n = eps.size();
  const std::set<int> a{mod(i, n), mod(i + 1, n)};
  const std::set<int> b{mod(j, n), mod(j + 1, n)};
  ExactRational d = 1;
  for (int k : a) {
    if (b.count(k)) d *= rational_pow(q_param(eps, k, q), mod(i, n) == mod(j, n) ? 1 : -1);
  }
  return d;
}

ExactRational q_number(int m, const ExactRational& q) {
  return (rational_pow(q, m) - rational_pow(q, -m)) / (q - ExactRational(1) / q);
}

RepMatrices rep_matrices(const Signature& eps, int l, const ExactRational& q, const ExactRational& x) {
  check_params(eps, q);
  if (x == 0) throw DegenerateParameter("spectral parameter must be nonzero");
  const int n = eps.size();
  RepMatrices rep;
  rep.eps = eps;
  rep.level = l;
  rep.basis = enumerate_states(eps, l);
  const int dim = static_cast<int>(rep.basis.size());
  for (int i = 0; i < n; ++i) {
    RationalMatrix e(dim, dim), f(dim, dim), k(dim, dim), kinv(dim, dim);
    const int si = slot(i, n), sn = slot(i + 1, n);
    const ExactRational qi = q_param(eps, i, q), qn = q_param(eps, i + 1, q);
    for (int col = 0; col < dim; ++col) {
      const StateVector& m = rep.basis[col];
      const ExactRational kval = rational_pow(qi, -m[si]) * rational_pow(qn, m[sn]);
      k.set(col, col, kval);
      kinv.set(col, col, 1 / kval);

      StateVector up = m;  // m - e_i + e_{i+1}
      --up[si];
      ++up[sn];
      if (eps.admits(up)) {
        const int row = find_state(rep.basis, up);
        e.set(row, col, (i == 0 ? x : ExactRational(1)) * q_number(m[si], q));
      }
      StateVector down = m;  // m + e_i - e_{i+1}
      ++down[si];
      --down[sn];
      if (eps.admits(down)) {
        const int row = find_state(rep.basis, down);
        f.set(row, col, (i == 0 ? 1 / x : ExactRational(1)) * q_number(m[sn], q));
      }
    }
    rep.e.push_back(std::move(e));
    rep.f.push_back(std::move(f));
    rep.k.push_back(std::move(k));
    rep.kinv.push_back(std::move(kinv));
  }
  return rep;
}

std::string generator_name(Gen g, int i) {
  const char* base = g == Gen::E ? "e" : g == Gen::F ? "f" : "k";
  return std::string(base) + "_" + std::to_string(i);
}

Report check_algebra_relations(const RepMatrices& rep, const ExactRational& q) {
  const int n = rep.eps.size();
  const int dim = static_cast<int>(rep.basis.size());
  const RationalMatrix id = RationalMatrix::identity(dim);
  Report out;
  out.check = "algebra-relations";
  out.identity = "k k^-1 = 1, [k_i,k_j] = 0, k_i e_j = D_ij e_j k_i, k_i f_j = D_ij^-1 f_j k_i, "
                 "[e_i,f_j] = delta_ij (k_i - k_i^-1)/(q - q^-1)";
  auto expect = [&](const RationalMatrix& lhs, const RationalMatrix& rhs, const std::string& what) {
    ++out.cases;
    std::string diff = lhs.first_difference(rhs);
    if (!diff.empty()) out.fail(what + " at " + diff);
  };
  const ExactRational qq = q - 1 / q;
  for (int i = 0; i < n; ++i) {
    const std::string si = std::to_string(i);
    expect(rep.k[i] * rep.kinv[i], id, "k_" + si + " k_" + si + "^-1 = 1");
    expect(rep.kinv[i] * rep.k[i], id, "k_" + si + "^-1 k_" + si + " = 1");
    for (int j = 0; j < n; ++j) {
      const std::string sj = std::to_string(j);
      const ExactRational d = d_param(rep.eps, i, j, q);
      expect(rep.k[i] * rep.k[j], rep.k[j] * rep.k[i], "[k_" + si + ",k_" + sj + "] = 0");
      expect(rep.k[i] * rep.e[j], d * (rep.e[j] * rep.k[i]), "k_" + si + " e_" + sj + " = D e_" + sj + " k_" + si);
      expect(rep.k[i] * rep.f[j], (1 / d) * (rep.f[j] * rep.k[i]),
             "k_" + si + " f_" + sj + " = D^-1 f_" + sj + " k_" + si);
      RationalMatrix rhs(dim, dim);
      if (i == j) rhs = (rep.k[i] - rep.kinv[i]) * (1 / qq);
      expect(rep.e[i] * rep.f[j] - rep.f[j] * rep.e[i], rhs, "[e_" + si + ",f_" + sj + "]");
    }
  }
  out.detail = {{"eps", rep.eps.to_string()}, {"l", rep.level}, {"q", q.get_str()}, {"dimension", dim}};
  return out;
}

Report check_algebra_relations(const Signature& eps, int l, const ExactRational& q, const ExactRational& x) {
  Report r = check_algebra_relations(rep_matrices(eps, l, q, x), q);
  r.detail["x"] = x.get_str();
  return r;
}

RationalMatrix coproduct_action(const RepMatrices& left, const RepMatrices& right, Gen g, int i, Side side) {
  const RationalMatrix idl = RationalMatrix::identity(static_cast<int>(left.basis.size()));
  const RationalMatrix idr = RationalMatrix::identity(static_cast<int>(right.basis.size()));
  const bool opposite = side == Side::DeltaPrime;
  // Delta(g) = sum A (x) B; the opposite coproduct uses B (x) A.
  auto term = [&](const RationalMatrix& a_left, const RationalMatrix& b_right, const RationalMatrix& a_as_right,
                  const RationalMatrix& b_as_left) {
    return opposite ? kron(b_as_left, a_as_right) : kron(a_left, b_right);
  };
  switch (g) {
    case Gen::K:
      return kron(left.k[i], right.k[i]);
    case Gen::E:
      // 1 (x) e + e (x) k
      return term(idl, right.e[i], idr, left.e[i]) + term(left.e[i], right.k[i], right.e[i], left.k[i]);
    case Gen::F:
      // f (x) 1 + k^-1 (x) f
      return term(left.f[i], idr, right.f[i], idl) + term(left.kinv[i], right.f[i], right.kinv[i], left.f[i]);
  }
  return {};
}

RationalMatrix coproduct_action(const Signature& eps, int l, int m, const ExactRational& q, const ExactRational& x,
                                const ExactRational& y, Gen g, int i, Side side) {
  return coproduct_action(rep_matrices(eps, l, q, x), rep_matrices(eps, m, q, y), g, i, side);
}

Report verify_intertwiner(const Signature& eps, int l, int m, const ExactRational& q, const ExactRational& x,
                          const ExactRational& y, const RationalMatrix& s) {
  const RepMatrices left = rep_matrices(eps, l, q, x);
  const RepMatrices right = rep_matrices(eps, m, q, y);
  const int dim = static_cast<int>(left.basis.size() * right.basis.size());
  if (s.rows() != dim || s.cols() != dim) throw PreconditionError("intertwiner candidate has the wrong size");
  Report rep;
  rep.check = "intertwiner";
  rep.identity = "Delta'(g) S_{l,m}(x/y) = S_{l,m}(x/y) Delta(g)";
  nlohmann::json per = nlohmann::json::object();
  for (Gen g : {Gen::E, Gen::F, Gen::K}) {
    for (int i = 0; i < eps.size(); ++i) {
      ++rep.cases;
      const RationalMatrix lhs = coproduct_action(left, right, g, i, Side::DeltaPrime) * s;
      const RationalMatrix rhs = s * coproduct_action(left, right, g, i, Side::Delta);
      const std::string diff = lhs.first_difference(rhs);
      per[generator_name(g, i)] = diff.empty();
      if (!diff.empty()) rep.fail(generator_name(g, i) + " at " + diff);
    }
  }
  rep.detail = {{"eps", eps.to_string()}, {"l", l},           {"m", m},
                {"q", q.get_str()},       {"x", x.get_str()}, {"y", y.get_str()},
                {"generators", per}};
  return rep;
}

Report verify_intertwiner(const Signature& eps, int l, int m, const ExactRational& q, const ExactRational& x,
                          const ExactRational& y) {
  check_params(eps, q);
  if (y == 0) throw DegenerateParameter("spectral parameter must be nonzero");
  const RationalMatrix s = smatrix::evaluate_block(smatrix::s_block(eps, l, m), q, x / y);
  return verify_intertwiner(eps, l, m, q, x, y, s);
}

}  // namespace ybx::qgroup
