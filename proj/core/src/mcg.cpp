#include "oneone/mcg.hpp"

#include "oneone/error.hpp"

namespace oneone {

char symbol(Twist t) noexcept {
  switch (t) {
    case Twist::Alpha: return 'a';
    case Twist::Beta: return 'b';
    case Twist::Gamma: return 'g';
  }
  return '?';
}

GeneratorMap<Loop, Loop> twist_action(Twist t, const Integer& e) {
  using W = Pi1Word;
  const W a = W::letter(Loop::AlphaBar);
  const W b = W::letter(Loop::BetaBar);
  const W g = W::letter(Loop::GammaBar);
  GeneratorMap<Loop, Loop> m{{Loop::AlphaBar, a}, {Loop::BetaBar, b}, {Loop::GammaBar, g}};
  switch (t) {
    case Twist::Alpha:
      m.set(Loop::BetaBar, W::letter(Loop::AlphaBar, e) * b);
      m.set(Loop::GammaBar, W::letter(Loop::AlphaBar, e) * g);
      break;
    case Twist::Beta:
      m.set(Loop::AlphaBar, W::letter(Loop::BetaBar, -e) * a);
      break;
    case Twist::Gamma:
      m.set(Loop::AlphaBar, a * W::letter(Loop::GammaBar, -e));
      break;
  }
  return m;
}

namespace {

void require_loop_alphabet(const Pi1Word& w) {
  for (const auto& s : w.syllables())
    if (s.gen == Loop::AlphaHat)
      throw DomainError("mapping classes act only on words in a, b, g");
}

}  // namespace

Pi1Word apply_twist(Twist t, int sign, const Pi1Word& w) {
  if (sign != 1 && sign != -1) throw DomainError("twist sign must be +1 or -1");
  require_loop_alphabet(w);
  return substitute(w, twist_action(t, sign));
}

Pi1Word apply_mcg(const MCGWord& psi, const Pi1Word& w) {
  require_loop_alphabet(w);
  Pi1Word out = w;
  const auto& f = psi.syllables();
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    out = substitute(out, twist_action(it->gen, it->exp));
  return out;
}

namespace {

SL2Matrix generator_power(Twist t, const Integer& e) {
  // d_a -> [[1,0],[1,1]], d_b and d_g -> [[1,-1],[0,1]]; both unipotent, so
  // the e-th power just scales the off-diagonal entry.
  if (t == Twist::Alpha) return {1, 0, e, 1};
  return {1, -e, 0, 1};
}

}  // namespace

SL2Matrix omega(const MCGWord& psi) {
  SL2Matrix m;
  for (const auto& s : psi.syllables()) m = m * generator_power(s.gen, s.exp);
  return m;
}

MCGWord torus_knot_mcg(const Integer& k, const Integer& h, TwistSign sign) {
  if (k < 1 || h < 1) throw DomainError("torus knot parameters require h, k >= 1");
  const Integer sh = sign == TwistSign::Plus ? Integer(h) : Integer(-h);
  return MCGWord{{Twist::Alpha, sh}, {Twist::Gamma, -k}, {Twist::Beta, 1 + k}, {Twist::Alpha, 1}};
}

}  // namespace oneone
