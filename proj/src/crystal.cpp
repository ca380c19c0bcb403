#include "ybx/crystal.hpp"

#include <algorithm>

#include "ybx/errors.hpp"

namespace ybx::crystal {

CrystalVector make_vector(const Signature& sig, StateVector occ) {
  if (!sig.admits(occ)) {
    throw PreconditionError("vector " + ybx::to_string(occ) + " is not admissible under signature " + sig.to_string());
  }
  return {sig, std::move(occ)};
}

std::vector<CrystalVector> enumerate_crystal(const Signature& sig, int level) {
  std::vector<CrystalVector> out;
  for (auto& occ : enumerate_states(sig, level)) out.push_back({sig, std::move(occ)});
  return out;
}

int PairingTrace::winding_count() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const Pair& p) { return p.winding; }));
}

namespace {

std::vector<int> dot_rows(const StateVector& occ, DotOrder order) {
  std::vector<int> rows;
  for (int t = 0; t < static_cast<int>(occ.size()); ++t) {
    for (int c = 0; c < occ[t]; ++c) rows.push_back(t);
  }
  if (order == DotOrder::BottomToTop) std::reverse(rows.begin(), rows.end());
  return rows;
}

// Border counts from c_0 = H and c_t = c_{t-1} - j_t + b_t.
std::vector<int> border_counts(int energy, const StateVector& j, const StateVector& b) {
  std::vector<int> borders(j.size());
  int c = energy;
  for (std::size_t t = 0; t < j.size(); ++t) {
    c = c - j[t] + b[t];
    borders[t] = c;
  }
  return borders;
}

}  // namespace

CombR comb_r(const CrystalVector& i, const CrystalVector& j, DotOrder order) {
  if (!(i.sig == j.sig)) throw SignatureMismatch("comb_r: operands carry different signatures");
  const Signature& sig = i.sig;
  const int n = sig.size();
  const bool descending = i.level() >= j.level();

  // The selecting column supplies the dots d; the other column is searched for partners.
  const StateVector& selecting = descending ? j.occ : i.occ;
  StateVector unpaired = descending ? i.occ : j.occ;

  PairingTrace trace;
  for (int r : dot_rows(selecting, order)) {
    const bool fermionic = sig.fermionic(r);
    int target = -1;
    if (descending) {
      // lowest dot strictly higher (bosonic) / not strictly lower (fermionic)
      for (int t = fermionic ? r : r - 1; t >= 0; --t) {
        if (unpaired[t] > 0) {
          target = t;
          break;
        }
      }
    } else {
      // highest dot strictly lower (bosonic) / not strictly higher (fermionic)
      for (int t = fermionic ? r : r + 1; t < n; ++t) {
        if (unpaired[t] > 0) {
          target = t;
          break;
        }
      }
    }
    bool winding = false;
    if (target < 0) {
      winding = true;
      if (descending) {
        for (int t = n - 1; t >= 0 && target < 0; --t) {
          if (unpaired[t] > 0) target = t;
        }
      } else {
        for (int t = 0; t < n && target < 0; ++t) {
          if (unpaired[t] > 0) target = t;
        }
      }
    }
    --unpaired[target];
    trace.pairs.push_back({r + 1, target + 1, winding});
  }

  CombR out;
  out.b.sig = sig;
  out.a.sig = sig;
  out.b.occ.resize(n);
  out.a.occ.resize(n);
  for (int t = 0; t < n; ++t) {
    if (descending) {
      // unpaired dots of i move across to j
      out.b.occ[t] = i.occ[t] - unpaired[t];
      out.a.occ[t] = j.occ[t] + unpaired[t];
    } else {
      // unpaired dots of j move across to i
      out.b.occ[t] = i.occ[t] + unpaired[t];
      out.a.occ[t] = j.occ[t] - unpaired[t];
    }
  }
  out.energy = trace.winding_count();
  trace.borders = border_counts(out.energy, j.occ, out.b.occ);
  out.trace = std::move(trace);
  return out;
}

PiecewiseLinearResult pl_oracle(const CrystalVector& i, const CrystalVector& j) {
  if (!(i.sig == j.sig)) throw SignatureMismatch("pl_oracle: operands carry different signatures");
  if (i.level() < j.level()) throw PreconditionError("pl_oracle requires level(i) >= level(j)");
  const Signature& sig = i.sig;
  const int n = sig.size();

  // c_{t-1} from c_t, running t = n down to 1.
  auto run = [&](int c_n, std::vector<int>& borders) {
    borders.assign(static_cast<std::size_t>(n), 0);
    int c = c_n;
    for (int t = n - 1; t >= 0; --t) {
      borders[t] = c;
      c = sig.fermionic(t) ? std::max(j.occ[t] + c - i.occ[t], 0) : j.occ[t] + std::max(c - i.occ[t], 0);
    }
    return c;
  };

  PiecewiseLinearResult out;
  std::vector<int> borders;
  out.energy = run(0, borders);
  const int closed = run(out.energy, borders);
  if (closed != out.energy) {
    throw FixedPointViolation("c_0(H) = " + std::to_string(closed) + " differs from H = " + std::to_string(out.energy));
  }
  out.borders = borders;
  out.a.resize(n);
  out.b.resize(n);
  for (int t = 0; t < n; ++t) {
    const int c = borders[t];
    const int it = i.occ[t], jt = j.occ[t];
    if (sig.fermionic(t)) {
      out.a[t] = jt + std::max(it - jt - c, 0);
      out.b[t] = std::min(it, c + jt);
    } else {
      out.a[t] = jt + std::max(it - c, 0);
      out.b[t] = std::min(it, c);
    }
  }
  return out;
}

std::string AffineElement::to_string() const {
  std::string mode;
  if (label != 0) {
    mode = std::string(1, label);
    if (d > 0) mode += "+" + std::to_string(d);
    if (d < 0) mode += std::to_string(d);
  } else {
    mode = std::to_string(d);
  }
  return v.to_string() + "[" + mode + "]";
}

std::pair<AffineElement, AffineElement> affine_r(const AffineElement& u, const AffineElement& v) {
  CombR r = comb_r(u.v, v.v);
  return {AffineElement{std::move(r.b), v.d - r.energy, v.label}, AffineElement{std::move(r.a), u.d + r.energy, u.label}};
}

int comb_r_indicator(const CrystalVector& a, const CrystalVector& b, const CrystalVector& i, const CrystalVector& j) {
  if (i.level() != a.level() || j.level() != b.level()) return 0;
  CombR r = comb_r(i, j);
  return (r.b == b && r.a == a) ? 1 : 0;
}

Report verify_inverse(const Signature& sig, int l, int m) {
  Report rep;
  rep.check = "inverse";
  rep.identity = "R_{m,l} R_{l,m} = id with H_{l,m}(i(x)j) = H_{m,l}(b(x)a)";
  for (const auto& i : enumerate_crystal(sig, l)) {
    for (const auto& j : enumerate_crystal(sig, m)) {
      ++rep.cases;
      CombR fwd = comb_r(i, j);
      CombR back = comb_r(fwd.b, fwd.a);
      if (!(back.b == i && back.a == j)) {
        rep.fail("R_{m,l}(R_{l,m}(" + i.to_string() + "x" + j.to_string() + ")) = " + back.b.to_string() + "x" +
                 back.a.to_string());
      } else if (back.energy != fwd.energy) {
        rep.fail("energy mismatch at " + i.to_string() + "x" + j.to_string() + ": " + std::to_string(fwd.energy) +
                 " vs " + std::to_string(back.energy));
      }
    }
  }
  rep.detail = {{"eps", sig.to_string()}, {"l", l}, {"m", m}};
  return rep;
}

BraidImages braid_images(const AffineElement& x, const AffineElement& y, const AffineElement& z) {
  BraidImages out;
  {
    // (R (x) 1)(1 (x) R)(R (x) 1): rightmost factor acts first
    auto [y1, x1] = affine_r(x, y);
    auto [z2, x2] = affine_r(x1, z);
    auto [z3, y3] = affine_r(y1, z2);
    out.lhs = {z3, y3, x2};
  }
  {
    // (1 (x) R)(R (x) 1)(1 (x) R)
    auto [z1, y1] = affine_r(y, z);
    auto [z2, x2] = affine_r(x, z1);
    auto [y3, x3] = affine_r(x2, y1);
    out.rhs = {z2, y3, x3};
  }
  return out;
}

Report verify_ybe_comb(const Signature& sig, int k, int l, int m) {
  Report rep;
  rep.check = "ybe-comb";
  rep.identity = "braid relation of the affine combinatorial R on Aff(B_k) x Aff(B_l) x Aff(B_m)";
  for (const auto& x : enumerate_crystal(sig, k)) {
    for (const auto& y : enumerate_crystal(sig, l)) {
      for (const auto& z : enumerate_crystal(sig, m)) {
        ++rep.cases;
        BraidImages img = braid_images({x, 0, 'd'}, {y, 0, 'e'}, {z, 0, 'f'});
        if (img.lhs != img.rhs) {
          auto show = [](const std::vector<AffineElement>& v) {
            return v[0].to_string() + " " + v[1].to_string() + " " + v[2].to_string();
          };
          rep.fail(x.to_string() + " " + y.to_string() + " " + z.to_string() + ": " + show(img.lhs) + " vs " +
                   show(img.rhs));
        }
      }
    }
  }
  rep.detail = {{"eps", sig.to_string()}, {"levels", {k, l, m}}};
  return rep;
}

}  // namespace ybx::crystal
