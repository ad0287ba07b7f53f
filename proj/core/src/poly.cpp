#include "oneone/poly.hpp"

#include <algorithm>

#include "oneone/error.hpp"

namespace oneone {

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  IntPoly p;
  p.coeffs.assign(k + 1, Integer(0));
  p.coeffs[k] = c;
  return p;
}

bool IntPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

long IntPoly::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<long>(i);
  return -1;
}

IntPoly IntPoly::trimmed() const {
  IntPoly p = *this;
  p.coeffs.resize(static_cast<std::size_t>(degree() + 1));
  return p;
}

Integer IntPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  IntPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

bool operator==(const IntPoly& a, const IntPoly& b) {
  return a.trimmed().coeffs == b.trimmed().coeffs;
}

PolyDivision divide(const IntPoly& dividend, const IntPoly& divisor) {
  const IntPoly d = divisor.trimmed();
  if (d.coeffs.empty()) throw DomainError("division by the zero polynomial");
  const Integer& lead = d.coeffs.back();
  if (lead != 1 && lead != -1) throw DomainError("divisor must be monic up to sign");
  IntPoly rem = dividend.trimmed();
  const long dd = d.degree();
  IntPoly quo;
  if (rem.degree() >= dd) quo.coeffs.assign(static_cast<std::size_t>(rem.degree() - dd + 1), Integer(0));
  for (long k = rem.degree(); k >= dd; --k) {
    const Integer c = rem.coeffs[static_cast<std::size_t>(k)] * lead;  // lead^-1 == lead
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(k - dd);
    quo.coeffs[shift] = c;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) rem.coeffs[shift + i] -= c * d.coeffs[i];
  }
  return {quo.trimmed(), rem.trimmed()};
}

namespace {

// Strips leading zero coefficients (the t^j unit) and trailing zeros.
std::vector<Integer> laurent_core(const IntPoly& p) {
  auto c = p.trimmed().coeffs;
  auto first = std::find_if(c.begin(), c.end(), [](const Integer& v) { return v != 0; });
  c.erase(c.begin(), first);
  return c;
}

std::vector<Integer> negated(std::vector<Integer> v) {
  for (auto& c : v) c = -c;
  return v;
}

}  // namespace

bool equal_up_to_units(const IntPoly& f, const IntPoly& g) {
  const auto a = laurent_core(f);
  const auto b = laurent_core(g);
  return a == b || a == negated(b);
}

bool equal_up_to_cyclic_units(const IntPoly& f, const IntPoly& g) {
  const std::size_t n = f.coeffs.size();
  if (n == 0) return g.is_zero();
  std::vector<Integer> folded(n, Integer(0));
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) folded[i % n] += g.coeffs[i];
  const auto neg = negated(folded);
  for (std::size_t s = 0; s < n; ++s) {
    bool pos_ok = true, neg_ok = true;
    for (std::size_t i = 0; i < n && (pos_ok || neg_ok); ++i) {
      const Integer& lhs = f.coeffs[(i + s) % n];
      if (lhs != folded[i]) pos_ok = false;
      if (lhs != neg[i]) neg_ok = false;
    }
    if (pos_ok || neg_ok) return true;
  }
  return false;
}

std::string to_string(const IntPoly& p, char var) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const Integer& c = p.coeffs[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += mag.str();
    if (i > 0) {
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace oneone
