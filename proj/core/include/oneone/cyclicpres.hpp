#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "oneone/intlinalg.hpp"
#include "oneone/poly.hpp"
#include "oneone/words.hpp"

namespace oneone {

/// Word in x_1 ... x_n; the generator is stored as its subscript.
using CyclicWord = FreeWord<std::int64_t>;

/// G_n(w) = < x_1..x_n | w, theta(w), ..., theta^(n-1)(w) > with
/// theta(x_i) = x_(i+1), subscripts mod n.
class CyclicPresentation {
 public:
  /// Subscripts of `w` may be any integers; they are normalized into [1, n]
  /// and the word is re-reduced. Throws DomainError if n < 1.
  CyclicPresentation(std::int64_t n, const CyclicWord& w);

  std::int64_t n() const noexcept { return n_; }
  const CyclicWord& word() const noexcept { return w_; }

  bool operator==(const CyclicPresentation&) const = default;

 private:
  std::int64_t n_;
  CyclicWord w_;
};

/// theta^s applied to the word: x_i -> x_((i - 1 + s) mod n + 1).
CyclicPresentation theta_shift(const CyclicPresentation& p, std::int64_t s);

/// f_w(t) = sum a_i t^(i-1), a_i the exponent sum of x_i. Always n
/// coefficients.
IntPoly polynomial(const CyclicPresentation& p);

/// Row k is the exponent-sum vector of theta^k(w), k = 0..n-1. Circulant.
IntMatrix relation_matrix(const CyclicPresentation& p);

AbelianGroup abelianization(const CyclicPresentation& p);

struct ShiftOptions {
  /// Also accept cyclic permutations (conjugates) of the relator, compared
  /// after cyclic reduction.
  bool conjugation = true;
  /// Also accept the inverse relator.
  bool inversion = false;
};

struct ShiftWitness {
  std::int64_t shift = 0;        ///< theta^shift(p1) matches p2
  std::size_t rotation = 0;      ///< syllable rotation of p2's cyclic core
  bool inverted = false;
};

/// Witness if theta^s(p1.w) equals p2.w for some s in [0, n), up to the
/// relaxations enabled in `opts`; nullopt otherwise. Throws DomainError if
/// the two presentations have different n.
std::optional<ShiftWitness> equivalent_up_to_shift(const CyclicPresentation& p1,
                                                   const CyclicPresentation& p2,
                                                   ShiftOptions opts = {});

}  // namespace oneone
