#include "oneone/cyclicpres.hpp"

#include <vector>

#include "oneone/error.hpp"

namespace oneone {

namespace {

CyclicWord reindex(const CyclicWord& w, std::int64_t n, std::int64_t shift) {
  std::vector<Syllable<std::int64_t>> raw;
  raw.reserve(w.size());
  for (const auto& s : w.syllables())
    raw.push_back({floor_mod(s.gen - 1 + shift, n) + 1, s.exp});
  return CyclicWord(std::span<const Syllable<std::int64_t>>(raw));
}

}  // namespace

CyclicPresentation::CyclicPresentation(std::int64_t n, const CyclicWord& w) : n_(n) {
  if (n < 1) throw DomainError("cyclic presentation needs n >= 1");
  w_ = reindex(w, n, 0);
}

CyclicPresentation theta_shift(const CyclicPresentation& p, std::int64_t s) {
  return CyclicPresentation(p.n(), reindex(p.word(), p.n(), floor_mod(s, p.n())));
}

IntPoly polynomial(const CyclicPresentation& p) {
  IntPoly f;
  f.coeffs.assign(static_cast<std::size_t>(p.n()), Integer(0));
  for (const auto& s : p.word().syllables()) f.coeffs[static_cast<std::size_t>(s.gen - 1)] += s.exp;
  return f;
}

IntMatrix relation_matrix(const CyclicPresentation& p) {
  const auto n = static_cast<std::size_t>(p.n());
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto shifted = theta_shift(p, static_cast<std::int64_t>(k));
    for (const auto& s : shifted.word().syllables()) m(k, static_cast<std::size_t>(s.gen - 1)) += s.exp;
  }
  return m;
}

AbelianGroup abelianization(const CyclicPresentation& p) { return cokernel(relation_matrix(p)); }

namespace {

// Syllable offset r with rotate(b, r) == a, both cyclically reduced cores.
std::optional<std::size_t> rotation_between(const CyclicWord& a, const CyclicWord& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t len = a.size();
  if (len == 0) return 0;
  for (std::size_t r = 0; r < len; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) ok = a[i] == b[(i + r) % len];
    if (ok) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ShiftWitness> equivalent_up_to_shift(const CyclicPresentation& p1,
                                                   const CyclicPresentation& p2,
                                                   ShiftOptions opts) {
  if (p1.n() != p2.n()) throw DomainError("presentations have different n");
  std::vector<std::pair<CyclicWord, bool>> targets{{p2.word(), false}};
  if (opts.inversion) targets.emplace_back(p2.word().inverse(), true);

  for (std::int64_t s = 0; s < p1.n(); ++s) {
    const CyclicWord shifted = theta_shift(p1, s).word();
    for (const auto& [target, inverted] : targets) {
      if (!opts.conjugation) {
        if (shifted == target) return ShiftWitness{s, 0, inverted};
        continue;
      }
      if (auto r = rotation_between(cyclically_reduce(shifted), cyclically_reduce(target)))
        return ShiftWitness{s, *r, inverted};
    }
  }
  return std::nullopt;
}

}  // namespace oneone
