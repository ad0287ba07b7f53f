#pragma once

#include <cstdint>
#include <vector>

#include "oneone/cyclicpres.hpp"
#include "oneone/integer.hpp"
#include "oneone/knot.hpp"
#include "oneone/words.hpp"

namespace oneone {

/// Monodromy of an n-fold strongly-cyclic branched covering, normalized so
/// that gamma maps to 1. `x` is the image of alpha, in [0, n).
struct Monodromy {
  std::int64_t n = 2;
  std::int64_t x = 0;

  bool operator==(const Monodromy&) const = default;
};

/// True iff p x + q'' == 0 (mod n).
bool is_valid(const OneOneKnot& k, const Monodromy& m);

/// All x in [0, n) with p x + q'' == 0 (mod n), ascending. Either empty or
/// of length gcd(p, n), with gcd(0, n) = n. Throws DomainError if n < 2.
std::vector<Monodromy> covering_monodromies(const OneOneKnot& k, std::int64_t n);

/// Relator rewritten in (alpha-hat, gamma-bar): every alpha-bar replaced by
/// alpha-hat gamma-bar^x. Throws ConsistencyError if m is not a monodromy of k.
Pi1Word rbar(const OneOneKnot& k, const Monodromy& m);

struct SyllablePair {
  Integer epsilon;  ///< alpha-hat exponent, nonzero
  Integer delta;    ///< following gamma-bar exponent, zero only in last place

  bool operator==(const SyllablePair&) const = default;
};

using SyllableDecomposition = std::vector<SyllablePair>;

enum class DegenerateKind { EmptyRelator, GammaOnly };

/// Raised by decompose when the relator has no alpha-hat syllable.
class DegenerateRelator : public DomainError {
 public:
  explicit DegenerateRelator(DegenerateKind kind);
  DegenerateKind kind() const noexcept { return kind_; }

 private:
  DegenerateKind kind_;
};

/// Rotates r (a word in alpha-hat, gamma-bar) to start with an alpha-hat
/// syllable, then reads off pairs (epsilon_k, delta_k). Throws
/// DegenerateRelator for an empty relator or one without alpha-hat, and
/// DomainError if r contains other loops.
SyllableDecomposition decompose(const Pi1Word& r);

/// w = x_(i_1)^eps_1 ... x_(i_s)^eps_s with i_k = 1 + sum_(j<k) delta_j (mod n).
CyclicWord lift_word(const SyllableDecomposition& d, std::int64_t n);

/// Cyclic presentation of the fundamental group of the covering defined by m.
/// A relator without alpha-hat lifts to the empty word (free group of rank n).
CyclicPresentation cyclic_word(const OneOneKnot& k, const Monodromy& m);

}  // namespace oneone
