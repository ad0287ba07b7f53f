#pragma once

// Closed-form constructions used as fixtures and oracles: torus-knot words,
// torus-knot Alexander polynomials and the classical named cyclic
// presentations.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oneone/cyclicpres.hpp"
#include "oneone/mcg.hpp"
#include "oneone/poly.hpp"

namespace oneone {

enum class KnotSign : std::int8_t { Minus = -1, Plus = +1 };

/// Selects the torus knot t(k, hk + sign).
struct TorusParams {
  std::int64_t k = 1;
  std::int64_t h = 1;
  KnotSign sign = KnotSign::Plus;

  /// hk + sign
  std::int64_t second() const { return h * k + static_cast<std::int64_t>(sign); }
};

/// Throws DomainError unless h, k >= 1.
void validate(const TorusParams& tp);

/// The mapping class realizing t(k, hk + sign): the twist d_a^(-sign h)
/// leads the four-factor word.
MCGWord torus_mcg(const TorusParams& tp);

/// Closed-form cyclic word for the n-fold covering of t(k, hk + sign).
///
/// Product ranges follow the summation convention prod_{j=a}^{b} =
/// (prod_{j=b+1}^{a-1})^-1 when b < a - 1, so prod_{j=1}^{-1} f(j) = f(0)^-1.
/// The only range affected is the leading product of the minus formula at
/// k = 1, where it produces x_1 (the trivial group of the unknot).
/// Throws DomainError if n < 2.
CyclicPresentation torus_word_formula(const TorusParams& tp, std::int64_t n);

/// Alexander polynomial of t(a, b):
/// (t^(ab) - 1)(t - 1) / ((t^a - 1)(t^b - 1)).
/// Throws DomainError unless a, b >= 2 and gcd(a, b) == 1.
IntPoly torus_alexander(std::int64_t a, std::int64_t b);

/// Fibonacci-type word x_1^-1 x_2^2 x_3^-1 x_2.
CyclicPresentation fibonacci(std::int64_t n);
/// Sieradski word x_1 x_3 x_2^-1.
CyclicPresentation sieradski(std::int64_t n);
/// (x_1^-l x_2^l)^k x_2 (x_3^-l x_2^l)^k.
CyclicPresentation fractional_fibonacci(std::int64_t n, std::int64_t l, std::int64_t k);

struct NamedPresentation {
  std::string name;
  std::int64_t min_n;
  /// Builds G_n(w); extra parameters (l, k) are fixed by the entry.
  std::function<CyclicPresentation(std::int64_t n)> build;
};

/// Fibonacci, Sieradski and fractional Fibonacci (l = k = 1).
const std::vector<NamedPresentation>& named_presentations();

}  // namespace oneone
