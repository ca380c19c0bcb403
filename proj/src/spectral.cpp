#include "ybx/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "ybx/errors.hpp"

namespace ybx {

void SpectralSum::add(int d, int k, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({d, k}, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpectralSum& SpectralSum::operator+=(const SpectralSum& other) {
  for (const auto& [key, p] : other.terms_) add(key.first, key.second, p);
  return *this;
}

std::vector<SpectralTerm> SpectralSum::terms() const {
  std::vector<SpectralTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, p] : terms_) out.push_back({key.first, key.second, p});
  return out;
}

std::vector<int> SpectralSum::slopes() const {
  std::vector<int> ks;
  for (const auto& [key, p] : terms_) ks.push_back(key.second);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

namespace {

BiPoly one_minus_zqk(int k) {
  BiPoly f = BiPoly::constant(1);
  f.add_term(Exp2{k, 1}, -1);
  return f;
}

BiPoly lift(const LaurentPoly& p, int z_shift) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(Exp2{e, z_shift}, c);
  return out;
}

}  // namespace

BiPoly denominator_poly(const std::vector<int>& slopes) {
  BiPoly out = BiPoly::constant(1);
  for (int k : slopes) out *= one_minus_zqk(k);
  return out;
}

RationalFunction spectral_to_fraction(const SpectralSum& s) {
  RationalFunction f;
  f.slopes = s.slopes();
  for (const auto& t : s.terms()) {
    BiPoly term = lift(t.p, t.d);
    for (int k : f.slopes) {
      if (k != t.k) term *= one_minus_zqk(k);
    }
    f.numerator += term;
  }
  return f;
}

bool RationalFunction::equivalent(const RationalFunction& other) const {
  return numerator * denominator_poly(other.slopes) == other.numerator * denominator_poly(slopes);
}

std::string RationalFunction::to_string() const {
  if (numerator.is_zero()) return "0";
  std::ostringstream os;
  os << '(' << ybx::to_string(numerator) << ')';
  if (!slopes.empty()) {
    os << "/(";
    for (int k : slopes) {
      os << "(1-";
      if (k != 0) os << (k == 1 ? std::string("q") : "q^" + std::to_string(k));
      os << "z)";
    }
    os << ')';
  }
  return os.str();
}

ExactRational evaluate(const SpectralSum& s, const ExactRational& q, const ExactRational& z) {
  ExactRational acc = 0;
  for (const auto& t : s.terms()) {
    ExactRational den = 1 - z * rational_pow(q, t.k);
    if (den == 0) throw PoleAtPoint("spectral sum has a pole at the requested point");
    acc += rational_pow(z, t.d) * evaluate(t.p, q) / den;
  }
  return acc;
}

ExactRational evaluate(const RationalFunction& f, const ExactRational& q, const ExactRational& z) {
  ExactRational den = 1;
  for (int k : f.slopes) den *= 1 - z * rational_pow(q, k);
  if (den == 0) throw PoleAtPoint("rational function has a pole at the requested point");
  return evaluate(f.numerator, q, z) / den;
}

std::string LimitValue::to_string() const {
  if (zero) return "0";
  const std::string prefix = sign < 0 ? "-" : "";
  if (power == 0) return prefix + "1";
  if (power == 1) return prefix + "z";
  return prefix + "z^" + std::to_string(power);
}

LimitValue scaled_q0_limit(const SpectralSum& s, int scale, int delta) {
  RationalFunction f = spectral_to_fraction(s);
  BiPoly num = f.numerator;
  std::vector<int> slopes = f.slopes;

  if (delta == 1) {
    auto it = std::find(slopes.begin(), slopes.end(), 0);
    if (it != slopes.end()) {
      slopes.erase(it);
    } else {
      num *= one_minus_zqk(0);
    }
  }
  if (num.is_zero()) return LimitValue::Zero();

  // Lowest q-power of the numerator and its coefficient as a polynomial in z
  // (stored in a LaurentPoly whose variable plays the role of z).
  int num_val = num.terms().begin()->first.q;
  for (const auto& [e, c] : num.terms()) num_val = std::min(num_val, e.q);
  LaurentPoly num_lead;
  for (const auto& [e, c] : num.terms()) {
    if (e.q == num_val) num_lead.add_term(e.v, c);
  }

  // 1 - z q^k has q-valuation min(k, 0); its leading coefficient is 1, 1 - z or -z.
  int den_val = 0;
  LaurentPoly den_lead = LaurentPoly::constant(1);
  for (int k : slopes) {
    if (k < 0) {
      den_val += k;
      den_lead *= LaurentPoly::monomial(1, -1);
    } else if (k == 0) {
      den_lead *= LaurentPoly::constant(1) - LaurentPoly::monomial(1);
    }
  }

  const int total = num_val - den_val;
  if (total > scale) return LimitValue::Zero();
  if (total < scale) {
    throw LimitUndefined("q-valuation " + std::to_string(total) + " is below the scale " + std::to_string(scale));
  }
  auto ratio = divide_exact(num_lead, den_lead);
  if (!ratio || ratio->size() != 1 || abs(ratio->terms().begin()->second) != 1 || ratio->terms().begin()->first < 0) {
    throw LimitUndefined("leading coefficient is not a unit monomial in z: (" + to_string(num_lead, "z") + ")/(" +
                         to_string(den_lead, "z") + ")");
  }
  const auto& [power, coeff] = *ratio->terms().begin();
  return LimitValue::Monomial(power, coeff > 0 ? 1 : -1);
}

std::string to_string(const SpectralSum& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : s.terms()) {
    if (!first) os << " + ";
    os << "z^" << t.d << "*(" << to_string(t.p) << ")/(1-q^" << t.k << "z)";
    first = false;
  }
  return os.str();
}

}  // namespace ybx
