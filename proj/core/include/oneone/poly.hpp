#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oneone/integer.hpp"

namespace oneone {

/// Dense integer polynomial a_0 + a_1 t + ... . Trailing zeros are allowed so
/// that presentation polynomials keep length n; comparisons that care about
/// degree go through trimmed().
struct IntPoly {
  std::vector<Integer> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> c) : coeffs(std::move(c)) {}
  IntPoly(std::initializer_list<Integer> c) : coeffs(c) {}

  /// c * t^k
  static IntPoly monomial(const Integer& c, std::size_t k);

  bool is_zero() const;
  /// Degree after dropping trailing zeros; -1 for the zero polynomial.
  long degree() const;
  IntPoly trimmed() const;

  Integer coefficient_sum() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;

  /// Same polynomial; trailing zeros ignored.
  friend bool operator==(const IntPoly& a, const IntPoly& b);
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a divisor with leading coefficient +-1, exact over Z.
/// Throws DomainError otherwise.
PolyDivision divide(const IntPoly& dividend, const IntPoly& divisor);

/// True iff f = +-t^j g in Z[t, t^-1] for some integer j.
bool equal_up_to_units(const IntPoly& f, const IntPoly& g);

/// True iff f = +-t^j g in Z[t]/(t^n - 1), where n = f.coeffs.size().
/// g is folded modulo t^n - 1 first. This is the natural comparison for
/// presentation polynomials, whose coefficient vector depends on the
/// chosen theta-shift of the word.
bool equal_up_to_cyclic_units(const IntPoly& f, const IntPoly& g);

/// "1 - t + t^2"; the zero polynomial renders as "0".
std::string to_string(const IntPoly& p, char var = 't');

}  // namespace oneone
