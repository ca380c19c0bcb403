#include "ybx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ybx {

int min_degree(const LaurentPoly& p) { return p.terms().begin()->first; }
int max_degree(const LaurentPoly& p) { return p.terms().rbegin()->first; }

LaurentPoly substitute_power(const LaurentPoly& p, int k) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e * k, c);
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  LaurentPoly quotient;
  if (num.is_zero()) return quotient;

  // Long division from the low end; the divisor's lowest term drives each step.
  const int den_lo = min_degree(den);
  const int den_hi = max_degree(den);
  const BigInt& den_lead = den.terms().begin()->second;
  const int quot_hi = max_degree(num) - den_hi;

  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    const int qe = e - den_lo;
    if (qe > quot_hi) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), den_lead.get_mpz_t())) return std::nullopt;
    BigInt t = c / den_lead;
    quotient.add_term(qe, t);
    rem -= den.shifted(qe, t);
  }
  return quotient;
}

LaurentPoly q_binomial(int m, int k, int base_exp) {
  if (m < 0 || k < 0 || k > m) return {};
  // row[k'] holds [m' choose k'] while m' runs 0..m.
  std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = LaurentPoly::constant(1);
  for (int mm = 1; mm <= m; ++mm) {
    const int top = std::min(mm, k);
    for (int kk = top; kk >= 1; --kk) {
      // [mm, kk] = [mm-1, kk-1] + Q^kk [mm-1, kk]
      row[kk] = row[kk - 1] + row[kk].shifted(base_exp * kk);
    }
  }
  return row[k];
}

LaurentPoly q_pochhammer(int m, int base_exp) {
  LaurentPoly out = LaurentPoly::constant(1);
  for (int s = 1; s <= m; ++s) out *= LaurentPoly::constant(1) - qpow(base_exp * s);
  return out;
}

QxPoly lift_to_qx(const LaurentPoly& p, int x_exp) {
  QxPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(Exp2{e, x_exp}, c);
  return out;
}

ExactRational rational_pow(const ExactRational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero to a negative power");
    ExactRational inv = 1 / base;
    return rational_pow(inv, -e);
  }
  ExactRational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

ExactRational evaluate(const LaurentPoly& p, const ExactRational& q) {
  ExactRational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += ExactRational(c) * rational_pow(q, e);
  return acc;
}

ExactRational evaluate(const BiPoly& p, const ExactRational& q, const ExactRational& z) {
  ExactRational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += ExactRational(c) * rational_pow(q, e.q) * rational_pow(z, e.v);
  return acc;
}

namespace {

void append_monomial(std::ostringstream& os, bool first, const BigInt& c, const std::string& vars) {
  const bool neg = c < 0;
  BigInt mag = neg ? BigInt(-c) : c;
  if (neg) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  if (vars.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag;
    os << vars;
  }
}

std::string power_str(std::string_view var, int e) {
  if (e == 0) return {};
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_string(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_monomial(os, first, c, power_str(var, e));
    first = false;
  }
  return os.str();
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  // Group by z-power so the output reads as a polynomial in z with q-coefficients.
  std::map<int, LaurentPoly> by_z;
  for (const auto& [e, c] : p.terms()) by_z[e.v].add_term(e.q, c);
  std::ostringstream os;
  bool first = true;
  for (const auto& [zp, coeff] : by_z) {
    std::string zs = power_str("z", zp);
    if (coeff.size() == 1) {
      const auto& [qe, c] = *coeff.terms().begin();
      std::string vars = power_str("q", qe) + zs;
      append_monomial(os, first, c, vars);
    } else {
      if (!first) os << '+';
      os << '(' << to_string(coeff) << ')' << zs;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const QxPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_monomial(os, first, c, power_str("q", e.q) + power_str("X", e.v));
    first = false;
  }
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text, char var) {
  LaurentPoly out;
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument("parse_laurent: " + std::string(why) + " in '" + std::string(text) + "'");
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected sign");
    }
    skip_ws();
    BigInt coeff = 1;
    bool have_digits = false;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) {
      coeff = BigInt(std::string(text.substr(start, pos - start)));
      have_digits = true;
    }
    if (pos < text.size() && text[pos] == '*') {
      if (!have_digits) fail("'*' without a coefficient");
      ++pos;
    }
    int exponent = 0;
    if (pos < text.size() && text[pos] == var) {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::string digits = read_int();
        if (digits.empty() || digits == "-" || digits == "+") fail("bad exponent");
        exponent = std::stoi(digits);
      }
    } else if (!have_digits) {
      fail("expected coefficient or variable");
    }
    out.add_term(exponent, coeff * sign);
    first = false;
  }
  if (first) fail("empty input");
  return out;
}

}  // namespace ybx
