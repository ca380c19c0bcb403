#include "ybx/tetrahedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "ybx/parallel.hpp"

namespace ybx::threed {

namespace {

std::string state_string(const TeState& s) { return ybx::to_string(s); }

void compare(Report& rep, const TeVector& lhs, const TeVector& rhs, const std::string& where) {
  ++rep.cases;
  auto it = lhs.begin();
  auto jt = rhs.begin();
  while (it != lhs.end() || jt != rhs.end()) {
    if (jt == rhs.end() || (it != lhs.end() && it->first < jt->first)) {
      rep.fail(where + " -> " + state_string(it->first) + ": lhs " + to_string(it->second) + ", rhs 0");
      ++it;
    } else if (it == lhs.end() || jt->first < it->first) {
      rep.fail(where + " -> " + state_string(jt->first) + ": lhs 0, rhs " + to_string(jt->second));
      ++jt;
    } else {
      if (it->second != jt->second) {
        rep.fail(where + " -> " + state_string(it->first) + ": lhs " + to_string(it->second) + ", rhs " +
                 to_string(jt->second));
      }
      ++it;
      ++jt;
    }
  }
  rep.summary["lhs_terms"] = lhs.size();
  rep.summary["rhs_terms"] = rhs.size();
}

struct Step {
  LayerKind kind;
  std::array<int, 3> pos;
};

TeVector run(const TeState& input, const std::vector<Step>& steps, const ElementFn& elem) {
  TeVector v{{input, LaurentPoly::constant(1)}};
  for (const auto& s : steps) v = apply_operator(v, s.kind, s.pos, elem);
  return v;
}

// Steps in acting order (rightmost operator first).
std::vector<Step> four_term_lhs(LayerKind k) { return {{LayerKind::R, {3, 4, 5}}, {k, {1, 2, 5}}, {k, {0, 2, 4}}, {k, {0, 1, 3}}}; }
std::vector<Step> four_term_rhs(LayerKind k) { return {{k, {0, 1, 3}}, {k, {0, 2, 4}}, {k, {1, 2, 5}}, {LayerKind::R, {3, 4, 5}}}; }

Report verify_four_term(const std::array<int, 6>& input, LayerKind kind, const ElementFn& elem) {
  Report rep;
  const TeState in(input.begin(), input.end());
  compare(rep, run(in, four_term_lhs(kind), elem), run(in, four_term_rhs(kind), elem), state_string(in));
  rep.detail = {{"input", in}};
  return rep;
}

template <typename Inputs, typename Fn>
Report sweep(const Inputs& inputs, int jobs, Fn&& check) {
  std::vector<Report> parts(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t idx) { parts[idx] = check(inputs[idx]); });
  Report rep;
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

void tuples(int len, int max_entry, const std::vector<int>& caps, std::vector<int>& cur, std::vector<TeState>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int cap = caps.empty() ? max_entry : std::min(max_entry, caps[cur.size()]);
  for (int v = 0; v <= cap; ++v) {
    cur.push_back(v);
    tuples(len, max_entry, caps, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TeVector apply_operator(const TeVector& v, LayerKind kind, std::array<int, 3> pos, const ElementFn& elem) {
  TeVector out;
  for (const auto& [state, coeff] : v) {
    const int i = state[pos[0]], j = state[pos[1]], k = state[pos[2]];
    for (int b = 0; b <= std::min(i + j, j + k); ++b) {
      const int a = i + j - b, c = j + k - b;
      if (kind == LayerKind::L && (a > 1 || b > 1)) continue;
      LaurentPoly e = elem(kind, a, b, c, i, j, k);
      if (e.is_zero()) continue;
      TeState next = state;
      next[pos[0]] = a;
      next[pos[1]] = b;
      next[pos[2]] = c;
      auto [it, inserted] = out.try_emplace(std::move(next), coeff * e);
      if (!inserted) {
        it->second += coeff * e;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Report verify_te_rrrr(const std::array<int, 6>& input, const ElementFn& elem) {
  Report rep = verify_four_term(input, LayerKind::R, elem);
  rep.check = "te-rrrr";
  rep.identity = "R124 R135 R236 R456 = R456 R236 R135 R124";
  return rep;
}

Report verify_te_rlll(const std::array<int, 6>& input, const ElementFn& elem) {
  for (int t = 0; t < 3; ++t) {
    if (input[t] < 0 || input[t] > 1) throw std::invalid_argument("V legs of the RLLL equation take values 0 or 1");
  }
  Report rep = verify_four_term(input, LayerKind::L, elem);
  rep.check = "te-rlll";
  rep.identity = "L124 L135 L236 R456 = R456 L236 L135 L124";
  return rep;
}

Report verify_te_nlayer(const Signature& eps, const StateVector& alpha, const StateVector& beta,
                        const StateVector& gamma, const std::array<int, 3>& fock, const ElementFn& elem) {
  const int n = eps.size();
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n ||
      static_cast<int>(gamma.size()) != n) {
    throw std::invalid_argument("layer inputs must have one entry per signature position");
  }
  if (!eps.admits(alpha) || !eps.admits(beta) || !eps.admits(gamma)) {
    throw std::invalid_argument("layer input not admissible under the signature");
  }
  // Legs: alpha_1..alpha_n, beta_1..beta_n, gamma_1..gamma_n, 4, 5, 6.
  TeState in;
  in.insert(in.end(), alpha.begin(), alpha.end());
  in.insert(in.end(), beta.begin(), beta.end());
  in.insert(in.end(), gamma.begin(), gamma.end());
  in.insert(in.end(), fock.begin(), fock.end());
  const int f4 = 3 * n, f5 = 3 * n + 1, f6 = 3 * n + 2;

  std::vector<Step> lhs{{LayerKind::R, {f4, f5, f6}}};
  std::vector<Step> rhs;
  for (int t = n - 1; t >= 0; --t) {
    const LayerKind k = kind_of(eps[t]);
    const int al = t, be = n + t, ga = 2 * n + t;
    lhs.push_back({k, {be, ga, f6}});
    lhs.push_back({k, {al, ga, f5}});
    lhs.push_back({k, {al, be, f4}});
    rhs.push_back({k, {al, be, f4}});
    rhs.push_back({k, {al, ga, f5}});
    rhs.push_back({k, {be, ga, f6}});
  }
  rhs.push_back({LayerKind::R, {f4, f5, f6}});

  Report rep;
  rep.check = "te-n";
  rep.identity = "n-layer tetrahedron equation for signature " + eps.to_string();
  compare(rep, run(in, lhs, elem), run(in, rhs, elem), state_string(in));
  rep.detail = {{"eps", eps.to_string()}, {"input", in}};
  return rep;
}

Report sweep_te_rrrr(int max_sum, int jobs) {
  std::vector<TeState> all, inputs;
  std::vector<int> cur;
  tuples(6, max_sum, {}, cur, all);
  for (auto& s : all) {
    if (level(s) <= max_sum) inputs.push_back(std::move(s));
  }
  Report rep = sweep(inputs, jobs, [](const TeState& s) {
    return verify_te_rrrr({s[0], s[1], s[2], s[3], s[4], s[5]});
  });
  rep.check = "te-rrrr";
  rep.identity = "R124 R135 R236 R456 = R456 R236 R135 R124";
  rep.detail = {{"max_component_sum", max_sum}};
  return rep;
}

Report sweep_te_rlll(int max_fock, int jobs) {
  std::vector<TeState> all, inputs;
  std::vector<int> cur;
  tuples(6, max_fock, {1, 1, 1, max_fock, max_fock, max_fock}, cur, all);
  for (auto& s : all) {
    if (s[3] + s[4] + s[5] <= max_fock) inputs.push_back(std::move(s));
  }
  Report rep = sweep(inputs, jobs, [](const TeState& s) {
    return verify_te_rlll({s[0], s[1], s[2], s[3], s[4], s[5]});
  });
  rep.check = "te-rlll";
  rep.identity = "L124 L135 L236 R456 = R456 L236 L135 L124";
  rep.detail = {{"max_fock_sum", max_fock}};
  return rep;
}

Report sweep_te_nlayer(const Signature& eps, int max_entry, int jobs) {
  const int n = eps.size();
  std::vector<int> caps;
  for (int rep = 0; rep < 3; ++rep) {
    for (int t = 0; t < n; ++t) caps.push_back(eps.fermionic(t) ? 1 : max_entry);
  }
  caps.insert(caps.end(), {max_entry, max_entry, max_entry});
  std::vector<TeState> inputs;
  std::vector<int> cur;
  tuples(3 * n + 3, max_entry, caps, cur, inputs);
  Report rep = sweep(inputs, jobs, [&](const TeState& s) {
    auto part = [&](int from) { return StateVector(s.begin() + from, s.begin() + from + n); };
    return verify_te_nlayer(eps, part(0), part(n), part(2 * n), {s[3 * n], s[3 * n + 1], s[3 * n + 2]});
  });
  rep.check = "te-n";
  rep.identity = "n-layer tetrahedron equation for signature " + eps.to_string();
  rep.detail = {{"eps", eps.to_string()}, {"max_entry", max_entry}};
  return rep;
}

CombChains combinatorial_chains(CombKind kind, const Tuple6& input) {
  const LayerKind k = kind == CombKind::RRRR ? LayerKind::R : LayerKind::L;
  auto step = [](Tuple6 s, LayerKind kk, std::array<int, 3> p) {
    auto [a, b, c] = q0_map(kk, s[p[0]], s[p[1]], s[p[2]]);
    s[p[0]] = a;
    s[p[1]] = b;
    s[p[2]] = c;
    return s;
  };
  CombChains out;
  out.lhs.push_back(input);
  for (const auto& s : four_term_lhs(k)) out.lhs.push_back(step(out.lhs.back(), s.kind, s.pos));
  out.rhs.push_back(input);
  for (const auto& s : four_term_rhs(k)) out.rhs.push_back(step(out.rhs.back(), s.kind, s.pos));
  return out;
}

Report verify_combinatorial_te(CombKind kind, int max_entry) {
  Report rep;
  rep.check = "te-comb";
  rep.identity = kind == CombKind::RRRR ? "q = 0 maps: R124 R135 R236 R456 = R456 R236 R135 R124"
                                        : "q = 0 maps: L124 L135 L236 R456 = R456 L236 L135 L124";
  const int v = kind == CombKind::RRRR ? max_entry : std::min(max_entry, 1);
  std::vector<TeState> inputs;
  std::vector<int> cur;
  tuples(6, max_entry, {v, v, v, max_entry, max_entry, max_entry}, cur, inputs);
  for (const auto& s : inputs) {
    ++rep.cases;
    CombChains ch = combinatorial_chains(kind, {s[0], s[1], s[2], s[3], s[4], s[5]});
    if (ch.lhs.back() != ch.rhs.back()) {
      const Tuple6& l = ch.lhs.back();
      const Tuple6& r = ch.rhs.back();
      rep.fail(state_string(s) + ": " + state_string(TeState(l.begin(), l.end())) + " vs " +
               state_string(TeState(r.begin(), r.end())));
    }
  }
  rep.detail = {{"kind", kind == CombKind::RRRR ? "RRRR" : "RLLL"}, {"max_entry", max_entry}};
  return rep;
}

Report check_r_properties(int bound) {
  Report rep;
  rep.check = "r-props";
  rep.identity = "R = R^-1, index symmetry, factorial transpose, parity class";
  ElementFn elem = cached_elements();
  auto R = [&](int a, int b, int c, int i, int j, int k) { return elem(LayerKind::R, a, b, c, i, j, k); };
  auto fact = [](int a, int b, int c) { return q_pochhammer(a) * q_pochhammer(b) * q_pochhammer(c); };
  long involution = 0, symmetry = 0, transpose = 0, parity = 0;

  for (int s1 = 0; s1 <= bound; ++s1) {
    for (int s2 = 0; s2 <= bound; ++s2) {
      // Basis of the block: (s1 - j, j, s2 - j).
      const int dim = std::min(s1, s2) + 1;
      auto triple = [&](int j) { return std::array<int, 3>{s1 - j, j, s2 - j}; };
      std::vector<std::vector<LaurentPoly>> m(dim, std::vector<LaurentPoly>(dim));
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          auto [a, b, cc] = triple(r);
          auto [i, j, k] = triple(c);
          m[r][c] = R(a, b, cc, i, j, k);
        }
      }
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          LaurentPoly sq;
          for (int t = 0; t < dim; ++t) sq += m[r][t] * m[t][c];
          ++involution;
          if (sq != LaurentPoly::constant(r == c ? 1 : 0)) {
            rep.fail("R^2 != 1 in block (" + std::to_string(s1) + "," + std::to_string(s2) + ") at (" +
                     std::to_string(r) + "," + std::to_string(c) + ")");
          }
          auto [a, b, cc] = triple(r);
          auto [i, j, k] = triple(c);
          const LaurentPoly& x = m[r][c];
          ++symmetry;
          if (x != R(cc, b, a, k, j, i)) rep.fail("index symmetry fails at " + std::to_string(a) + std::to_string(b) +
                                                   std::to_string(cc) + "/" + std::to_string(i) + std::to_string(j) +
                                                   std::to_string(k));
          ++transpose;
          if (x * fact(a, b, cc) != fact(i, j, k) * m[c][r]) {
            rep.fail("factorial transpose fails at " + std::to_string(a) + std::to_string(b) + std::to_string(cc) +
                     "/" + std::to_string(i) + std::to_string(j) + std::to_string(k));
          }
          ++parity;
          const int xi = parity_class(a, cc, j);
          for (const auto& [e, coeff] : x.terms()) {
            if (((e % 2) + 2) % 2 != xi) {
              rep.fail("parity class violated at " + std::to_string(a) + std::to_string(b) + std::to_string(cc) +
                       "/" + std::to_string(i) + std::to_string(j) + std::to_string(k));
              break;
            }
          }
        }
      }
    }
  }
  rep.cases = involution + symmetry + transpose + parity;
  rep.detail = {{"bound", bound},
                {"involution_entries", involution},
                {"symmetry_entries", symmetry},
                {"transpose_entries", transpose},
                {"parity_entries", parity}};
  return rep;
}

}  // namespace ybx::threed
