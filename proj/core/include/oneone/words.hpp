#pragma once

// Free-group words in reduced syllable form.
//
// A word is stored as a sequence of syllables g^e with e != 0 and no two
// neighbouring syllables on the same generator. Every constructor and every
// operation returns a reduced word; the empty word is the identity.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "oneone/error.hpp"
#include "oneone/integer.hpp"

namespace oneone {

template <class Gen>
struct Syllable {
  Gen gen;
  Integer exp;

  bool operator==(const Syllable&) const = default;
};

template <class Gen>
class FreeWord {
 public:
  using generator_type = Gen;
  using syllable_type = Syllable<Gen>;

  FreeWord() = default;

  /// Freely reduces an arbitrary sequence of (generator, exponent) pairs.
  /// Zero exponents and repeated generators are allowed in the input.
  explicit FreeWord(std::span<const syllable_type> raw) {
    for (const auto& s : raw) push(s.gen, s.exp);
  }

  FreeWord(std::initializer_list<syllable_type> raw) {
    for (const auto& s : raw) push(s.gen, s.exp);
  }

  static FreeWord letter(Gen g, Integer e = 1) {
    FreeWord w;
    w.push(g, std::move(e));
    return w;
  }

  const std::vector<syllable_type>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }
  std::size_t size() const noexcept { return syl_.size(); }
  const syllable_type& operator[](std::size_t i) const { return syl_[i]; }

  /// Number of letters, i.e. the sum of |exponent| over syllables.
  Integer letter_length() const {
    Integer n = 0;
    for (const auto& s : syl_) n += abs(s.exp);
    return n;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
      w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  FreeWord& operator*=(const FreeWord& rhs) {
    if (this == &rhs) {
      FreeWord copy = rhs;
      return *this *= copy;
    }
    syl_.reserve(syl_.size() + rhs.syl_.size());
    for (const auto& s : rhs.syl_) push(s.gen, s.exp);
    return *this;
  }

  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  FreeWord pow(const Integer& e) const;

  bool operator==(const FreeWord&) const = default;

 private:
  // Stack-based free reduction: the stored prefix is always reduced, so a
  // cancellation can only expose one new seam at a time.
  void push(Gen g, Integer e) {
    if (e == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += e;
      if (syl_.back().exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back({g, std::move(e)});
  }

  template <class G>
  friend struct CyclicSplit;

  std::vector<syllable_type> syl_;
};

/// w = conjugator * core * conjugator^-1 with core cyclically reduced: its
/// first and last syllables are on different generators, or it has at most
/// one syllable.
template <class Gen>
struct CyclicSplit {
  FreeWord<Gen> conjugator;
  FreeWord<Gen> core;

  static CyclicSplit of(const FreeWord<Gen>& w) {
    const auto& s = w.syllables();
    std::size_t lo = 0;
    std::size_t hi = s.size();
    while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen &&
           s[lo].exp + s[hi - 1].exp == 0) {
      ++lo;
      --hi;
    }
    CyclicSplit out;
    for (std::size_t i = 0; i < lo; ++i) out.conjugator.push(s[i].gen, s[i].exp);
    if (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
      // g^a M g^b = g^-b (g^(a+b) M) g^b
      const Gen g = s[lo].gen;
      out.conjugator.push(g, -s[hi - 1].exp);
      out.core.push(g, s[lo].exp + s[hi - 1].exp);
      for (std::size_t i = lo + 1; i + 1 < hi; ++i)
        out.core.push(s[i].gen, s[i].exp);
    } else {
      for (std::size_t i = lo; i < hi; ++i) out.core.push(s[i].gen, s[i].exp);
    }
    return out;
  }
};

template <class Gen>
FreeWord<Gen> FreeWord<Gen>::pow(const Integer& e) const {
  if (e == 0 || empty()) return {};
  if (e < 0) return inverse().pow(-e);
  const auto split = CyclicSplit<Gen>::of(*this);
  FreeWord body;
  if (split.core.size() == 1) {
    body = FreeWord::letter(split.core[0].gen, split.core[0].exp * e);
  } else {
    // A cyclically reduced word of two or more syllables has no cancellation
    // between copies, so the output genuinely has e * |core| syllables.
    const auto reps = to_int64(e);
    if (!reps) throw DomainError("word power exponent too large to expand");
    body.syl_.reserve(split.core.size() * static_cast<std::size_t>(*reps));
    for (std::int64_t i = 0; i < *reps; ++i) body *= split.core;
  }
  return split.conjugator * body * split.conjugator.inverse();
}

/// Free reduction of a raw letter list. Idempotent.
template <class Gen>
FreeWord<Gen> reduce(std::span<const Syllable<Gen>> raw) {
  return FreeWord<Gen>(raw);
}

/// Homomorphism of free groups given by one image word per source generator.
template <class From, class To>
class GeneratorMap {
 public:
  GeneratorMap() = default;
  GeneratorMap(std::initializer_list<std::pair<const From, FreeWord<To>>> init)
      : images_(init) {}

  GeneratorMap& set(From g, FreeWord<To> image) {
    images_.insert_or_assign(g, std::move(image));
    return *this;
  }

  bool contains(From g) const { return images_.contains(g); }

  const FreeWord<To>& image(From g) const {
    auto it = images_.find(g);
    if (it == images_.end())
      throw MalformedMapError("generator map has no image for a letter of the word");
    return it->second;
  }

  const std::map<From, FreeWord<To>>& images() const noexcept { return images_; }

 private:
  std::map<From, FreeWord<To>> images_;
};

template <class From, class To>
FreeWord<To> substitute(const FreeWord<From>& w, const GeneratorMap<From, To>& m) {
  FreeWord<To> out;
  for (const auto& s : w.syllables()) out *= m.image(s.gen).pow(s.exp);
  return out;
}

/// Deletes every syllable on `g` and re-reduces.
template <class Gen>
FreeWord<Gen> erase(const FreeWord<Gen>& w, Gen g) {
  std::vector<Syllable<Gen>> kept;
  kept.reserve(w.size());
  for (const auto& s : w.syllables())
    if (!(s.gen == g)) kept.push_back(s);
  return FreeWord<Gen>(std::span<const Syllable<Gen>>(kept));
}

template <class Gen>
Integer exponent_sum(const FreeWord<Gen>& w, Gen g) {
  Integer total = 0;
  for (const auto& s : w.syllables())
    if (s.gen == g) total += s.exp;
  return total;
}

/// Cyclic permutation starting at syllable k, re-reduced at the seam.
/// The result is a conjugate of w.
template <class Gen>
FreeWord<Gen> cyclic_rotate(const FreeWord<Gen>& w, std::size_t k) {
  if (w.empty() && k == 0) return w;
  if (k >= w.size()) throw DomainError("rotation index out of range");
  const auto& s = w.syllables();
  std::vector<Syllable<Gen>> raw;
  raw.reserve(s.size());
  raw.insert(raw.end(), s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
  raw.insert(raw.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
  return FreeWord<Gen>(std::span<const Syllable<Gen>>(raw));
}

/// The cyclically reduced conjugate of w (see CyclicSplit).
template <class Gen>
FreeWord<Gen> cyclically_reduce(const FreeWord<Gen>& w) {
  return CyclicSplit<Gen>::of(w).core;
}

// Loops of the twice-punctured torus, plus the monodromy-adapted generator
// that replaces alpha-bar when building covering presentations.
enum class Loop : std::uint8_t { AlphaBar, BetaBar, GammaBar, AlphaHat };

using Pi1Word = FreeWord<Loop>;

/// Text symbol used by the word syntax: a, b, g, A.
char symbol(Loop g) noexcept;

}  // namespace oneone
