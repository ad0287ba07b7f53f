#include "oneone/knot.hpp"

#include "oneone/error.hpp"

namespace oneone {

std::optional<Integer> OneOneKnot::lens_q_normalized() const {
  if (p == 0) return std::nullopt;
  return floor_mod(lens_q(), lens_p());
}

OneOneKnot analyze(const MCGWord& psi) {
  OneOneKnot k;
  k.psi = psi;
  k.psi_beta = apply_mcg(psi, Pi1Word::letter(Loop::BetaBar));
  k.relator = erase(k.psi_beta, Loop::BetaBar);
  k.p = exponent_sum(k.psi_beta, Loop::AlphaBar);
  k.q_prime = exponent_sum(k.psi_beta, Loop::BetaBar);
  k.q_dblprime = exponent_sum(k.psi_beta, Loop::GammaBar);

  // beta and gamma are homologous on the unpunctured torus, so the first
  // column of omega(psi) in the basis (beta, alpha) is (q' + q'', p).
  const SL2Matrix m = omega(psi);
  if (m.m21 != k.p || m.m11 != k.q_prime + k.q_dblprime)
    throw ConsistencyError("twist action on pi_1 disagrees with omega(psi)");
  return k;
}

OneRelatorPresentation knot_group(const OneOneKnot& k) {
  OneRelatorPresentation g;
  g.relator = k.relator;
  return g;
}

AbelianGroup complement_homology(const OneOneKnot& k) {
  return cokernel(IntMatrix{{k.p, k.q_dblprime}});
}

}  // namespace oneone
