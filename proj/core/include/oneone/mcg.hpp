#pragma once

#include <cstdint>

#include "oneone/integer.hpp"
#include "oneone/words.hpp"

namespace oneone {

/// Right-hand Dehn twists generating the pure mapping class group of the
/// twice-punctured torus.
enum class Twist : std::uint8_t { Alpha, Beta, Gamma };

/// A word in the twists. Read left to right; the rightmost factor acts first.
using MCGWord = FreeWord<Twist>;

char symbol(Twist t) noexcept;

struct SL2Matrix {
  Integer m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static SL2Matrix identity() { return {}; }
  Integer determinant() const { return m11 * m22 - m12 * m21; }
  SL2Matrix inverse() const { return {m22, -m12, -m21, m11}; }

  friend SL2Matrix operator*(const SL2Matrix& a, const SL2Matrix& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
  bool operator==(const SL2Matrix&) const = default;
};

/// Substitution performed by t^e on the loops alpha-bar, beta-bar,
/// gamma-bar. Closed form for every integer e:
///   d_a^e : b -> a^e b, g -> a^e g
///   d_b^e : a -> b^-e a
///   d_g^e : a -> a g^-e
/// All other loops are fixed.
GeneratorMap<Loop, Loop> twist_action(Twist t, const Integer& e);

/// Image of w under a single twist (sign = +1 or -1). Throws DomainError if w
/// contains alpha-hat.
Pi1Word apply_twist(Twist t, int sign, const Pi1Word& w);

/// Image of w under psi, rightmost factor first.
Pi1Word apply_mcg(const MCGWord& psi, const Pi1Word& w);

/// Image in SL(2,Z) with respect to the ordered basis (beta, alpha).
SL2Matrix omega(const MCGWord& psi);

enum class TwistSign : std::int8_t { Minus = -1, Plus = +1 };

/// d_a^(+-h) d_g^-k d_b^(1+k) d_a, the torus knot t(k, hk -+ 1).
/// Throws DomainError unless h, k >= 1.
MCGWord torus_knot_mcg(const Integer& k, const Integer& h, TwistSign sign);

}  // namespace oneone
