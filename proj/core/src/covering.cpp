#include "oneone/covering.hpp"

#include "oneone/error.hpp"

namespace oneone {

bool is_valid(const OneOneKnot& k, const Monodromy& m) {
  if (m.n < 2 || m.x < 0 || m.x >= m.n) return false;
  return floor_mod(k.p * m.x + k.q_dblprime, Integer(m.n)) == 0;
}

namespace {

// Inverse of a modulo m for gcd(a, m) == 1, m >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return floor_mod(old_s, m);
}

}  // namespace

std::vector<Monodromy> covering_monodromies(const OneOneKnot& k, std::int64_t n) {
  if (n < 2) throw DomainError("covering degree must be at least 2");
  const std::int64_t p = floor_mod(k.p, n);
  const std::int64_t q = floor_mod(k.q_dblprime, n);
  const std::int64_t d = static_cast<std::int64_t>(gcd(Integer(p), Integer(n)));  // gcd(0, n) = n
  std::vector<Monodromy> out;
  if (q % d != 0) return out;
  // p x == -q (mod n)  <=>  (p/d) x == -q/d (mod n/d)
  const std::int64_t step = n / d;
  const std::int64_t base =
      step == 1 ? 0
                : static_cast<std::int64_t>(
                      floor_mod(Integer(-(q / d)) * inverse_mod(p / d % step, step), Integer(step)));
  out.reserve(static_cast<std::size_t>(d));
  for (std::int64_t j = 0; j < d; ++j) out.push_back({n, base + j * step});
  return out;
}

Pi1Word rbar(const OneOneKnot& k, const Monodromy& m) {
  if (!is_valid(k, m)) throw ConsistencyError("monodromy does not satisfy p x + q'' = 0 (mod n)");
  GeneratorMap<Loop, Loop> sub{
      {Loop::AlphaBar, Pi1Word{{Loop::AlphaHat, 1}, {Loop::GammaBar, m.x}}},
      {Loop::GammaBar, Pi1Word::letter(Loop::GammaBar)}};
  return substitute(k.relator, sub);
}

DegenerateRelator::DegenerateRelator(DegenerateKind kind)
    : DomainError(kind == DegenerateKind::EmptyRelator
                      ? "empty relator: the presentation is free"
                      : "relator contains no alpha-hat syllable"),
      kind_(kind) {}

SyllableDecomposition decompose(const Pi1Word& r) {
  if (r.empty()) throw DegenerateRelator(DegenerateKind::EmptyRelator);
  std::size_t first = r.size();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Loop g = r[i].gen;
    if (g != Loop::AlphaHat && g != Loop::GammaBar)
      throw DomainError("decompose expects a word in alpha-hat and gamma-bar");
    if (g == Loop::AlphaHat && first == r.size()) first = i;
  }
  if (first == r.size()) throw DegenerateRelator(DegenerateKind::GammaOnly);

  const Pi1Word rotated = cyclic_rotate(r, first);
  SyllableDecomposition d;
  for (const auto& s : rotated.syllables()) {
    if (s.gen == Loop::AlphaHat)
      d.push_back({s.exp, 0});
    else
      d.back().delta = s.exp;
  }
  return d;
}

CyclicWord lift_word(const SyllableDecomposition& d, std::int64_t n) {
  if (n < 1) throw DomainError("lift needs n >= 1");
  std::vector<Syllable<std::int64_t>> raw;
  raw.reserve(d.size());
  std::int64_t index = 0;  // i_k - 1
  for (const auto& pair : d) {
    raw.push_back({index + 1, pair.epsilon});
    index = floor_mod(Integer(index) + pair.delta, n);
  }
  return CyclicWord(std::span<const Syllable<std::int64_t>>(raw));
}

CyclicPresentation cyclic_word(const OneOneKnot& k, const Monodromy& m) {
  const Pi1Word r = rbar(k, m);
  if (floor_mod(exponent_sum(r, Loop::GammaBar), Integer(m.n)) != 0)
    throw ConsistencyError("gamma-bar exponent of the rewritten relator is not 0 mod n");
  try {
    return CyclicPresentation(m.n, lift_word(decompose(r), m.n));
  } catch (const DegenerateRelator&) {
    return CyclicPresentation(m.n, CyclicWord{});
  }
}

}  // namespace oneone
