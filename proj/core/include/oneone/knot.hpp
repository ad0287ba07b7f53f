#pragma once

#include <array>
#include <optional>

#include "oneone/integer.hpp"
#include "oneone/intlinalg.hpp"
#include "oneone/mcg.hpp"
#include "oneone/words.hpp"

namespace oneone {

/// The (1,1)-knot K_psi with the invariants read off psi(beta-bar).
///
/// p, q_prime and q_dblprime are the coefficients of the homology relation
/// psi(beta) = p alpha + q' beta + q'' gamma. p keeps its sign; the ambient
/// lens space is L(|p|, q) with q = q' + q''.
struct OneOneKnot {
  MCGWord psi;
  Pi1Word psi_beta;
  Pi1Word relator;  ///< psi_beta with every beta-bar syllable erased.
  Integer p;
  Integer q_prime;
  Integer q_dblprime;

  Integer lens_p() const { return abs(p); }
  Integer lens_q() const { return q_prime + q_dblprime; }
  /// q reduced into [0, |p|); empty when p == 0.
  std::optional<Integer> lens_q_normalized() const;

  /// |p| == 1
  bool in_three_sphere() const { return lens_p() == 1; }
  /// p == 0
  bool in_s1_x_s2() const { return p == 0; }
};

/// Runs psi on beta-bar and extracts the invariants. Cross-checks them
/// against omega(psi) and throws ConsistencyError on disagreement.
OneOneKnot analyze(const MCGWord& psi);

/// <a-bar, g-bar | relator>
struct OneRelatorPresentation {
  std::array<Loop, 2> generators{Loop::AlphaBar, Loop::GammaBar};
  Pi1Word relator;
};

OneRelatorPresentation knot_group(const OneOneKnot& k);

/// H_1 of the complement: <alpha, gamma | p alpha + q'' gamma>.
AbelianGroup complement_homology(const OneOneKnot& k);

}  // namespace oneone
