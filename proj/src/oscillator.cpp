#include "ybx/oscillator.hpp"

#include <stdexcept>

namespace ybx::osc {

FockMatrix::FockMatrix(int cutoff) : n_(cutoff), cells_(static_cast<std::size_t>(cutoff) * cutoff) {
  if (cutoff < 1) throw std::invalid_argument("Fock cutoff must be positive");
}

FockMatrix FockMatrix::identity(int cutoff) {
  FockMatrix m(cutoff);
  for (int r = 0; r < cutoff; ++r) m.at(r, r) = LaurentPoly::constant(1);
  return m;
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("cutoff mismatch");
  for (std::size_t t = 0; t < cells_.size(); ++t) cells_[t] += o.cells_[t];
  return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("cutoff mismatch");
  for (std::size_t t = 0; t < cells_.size(); ++t) cells_[t] -= o.cells_[t];
  return *this;
}

FockMatrix& FockMatrix::operator*=(const LaurentPoly& s) {
  for (auto& c : cells_) c *= s;
  return *this;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("cutoff mismatch");
  FockMatrix out(a.n_);
  for (int r = 0; r < a.n_; ++r) {
    for (int t = 0; t < a.n_; ++t) {
      const LaurentPoly& x = a.at(r, t);
      if (x.is_zero()) continue;
      for (int c = 0; c < a.n_; ++c) {
        const LaurentPoly& y = b.at(t, c);
        if (!y.is_zero()) out.at(r, c) += x * y;
      }
    }
  }
  return out;
}

bool FockMatrix::is_zero() const {
  for (const auto& c : cells_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string FockMatrix::first_difference(const FockMatrix& other, int max_col) const {
  for (int c = 0; c <= max_col && c < n_; ++c) {
    for (int r = 0; r < n_; ++r) {
      if (at(r, c) != other.at(r, c)) {
        return "(" + std::to_string(r) + "," + std::to_string(c) + "): " + to_string(at(r, c)) + " vs " +
               to_string(other.at(r, c));
      }
    }
  }
  return {};
}

FockMatrix power(const FockMatrix& m, int e) {
  FockMatrix out = FockMatrix::identity(m.cutoff());
  for (int t = 0; t < e; ++t) out = out * m;
  return out;
}

FockMatrix generator_matrix(Generator g, int cutoff) {
  FockMatrix m(cutoff);
  for (int s = 0; s < cutoff; ++s) {
    switch (g) {
      case Generator::APlus:
        if (s + 1 < cutoff) m.at(s + 1, s) = LaurentPoly::constant(1);
        break;
      case Generator::AMinus:
        if (s >= 1) m.at(s - 1, s) = LaurentPoly::constant(1) - qpow(2 * s);
        break;
      case Generator::K:
        m.at(s, s) = qpow(s);
        break;
      case Generator::H:
        if (s != 0) m.at(s, s) = LaurentPoly::constant(s);
        break;
    }
  }
  return m;
}

OscGenerators standard_generators(int cutoff) {
  return {generator_matrix(Generator::APlus, cutoff), generator_matrix(Generator::AMinus, cutoff),
          generator_matrix(Generator::K, cutoff)};
}

Report check_osc_relations(int cutoff) {
  if (cutoff < 3) throw std::invalid_argument("oscillator relations need cutoff >= 3");
  return check_osc_relations(standard_generators(cutoff));
}

Report check_osc_relations(const OscGenerators& g) {
  const int n = g.k.cutoff();
  const int window = n - 2;
  const FockMatrix one = FockMatrix::identity(n);
  const FockMatrix k2 = g.k * g.k;

  struct Relation {
    const char* name;
    FockMatrix lhs, rhs;
  };
  const Relation relations[] = {
      {"k a+ = q a+ k", g.k * g.aplus, qpow(1) * (g.aplus * g.k)},
      {"k a- = q^-1 a- k", g.k * g.aminus, qpow(-1) * (g.aminus * g.k)},
      {"a+ a- = 1 - k^2", g.aplus * g.aminus, one - k2},
      {"a- a+ = 1 - q^2 k^2", g.aminus * g.aplus, one - qpow(2) * k2},
  };

  Report rep;
  rep.check = "osc-relations";
  rep.identity = "q-oscillator relations on the truncated Fock space";
  nlohmann::json per = nlohmann::json::object();
  for (const auto& rel : relations) {
    ++rep.cases;
    std::string diff = rel.lhs.first_difference(rel.rhs, window);
    per[rel.name] = diff.empty();
    if (!diff.empty()) rep.fail(std::string(rel.name) + " at " + diff);
  }
  rep.detail = {{"cutoff", n}, {"window_max_state", window}, {"relations", per}};
  return rep;
}

FockMatrix ropp_operator(int a, int b, int i, int j, int cutoff) {
  FockMatrix out(cutoff);
  if (a + b != i + j || a < 0 || b < 0 || i < 0 || j < 0) return out;
  const FockMatrix ap = generator_matrix(Generator::APlus, cutoff);
  const FockMatrix am = generator_matrix(Generator::AMinus, cutoff);
  const FockMatrix k = generator_matrix(Generator::K, cutoff);
  for (int lambda = 0; lambda <= std::min(b, j); ++lambda) {
    const int mu = b - lambda;
    if (mu > i) continue;
    LaurentPoly coeff = qpow(lambda + mu * mu - i * b, lambda % 2 == 0 ? 1 : -1) * q_binomial(i, mu) *
                        q_binomial(j, lambda);
    out += coeff * (power(am, mu) * power(ap, j - lambda) * power(k, i + lambda - mu));
  }
  return out;
}

}  // namespace ybx::osc
