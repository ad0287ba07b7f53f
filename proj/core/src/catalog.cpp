#include "oneone/catalog.hpp"

#include "oneone/error.hpp"

namespace oneone {

void validate(const TorusParams& tp) {
  if (tp.k < 1 || tp.h < 1) throw DomainError("torus parameters require h, k >= 1");
}

MCGWord torus_mcg(const TorusParams& tp) {
  validate(tp);
  const TwistSign twist = tp.sign == KnotSign::Plus ? TwistSign::Minus : TwistSign::Plus;
  return torus_knot_mcg(tp.k, tp.h, twist);
}

namespace {

using Term = std::function<CyclicWord(std::int64_t)>;

CyclicWord product(std::int64_t lo, std::int64_t hi, const Term& f) {
  if (hi < lo - 1) return product(hi + 1, lo - 1, f).inverse();
  CyclicWord w;
  for (std::int64_t j = lo; j <= hi; ++j) w *= f(j);
  return w;
}

CyclicWord x(std::int64_t i, std::int64_t e = 1) { return CyclicWord::letter(i, e); }

}  // namespace

CyclicPresentation torus_word_formula(const TorusParams& tp, std::int64_t n) {
  validate(tp);
  if (n < 2) throw DomainError("covering degree must be at least 2");
  const std::int64_t h = tp.h, k = tp.k;
  CyclicWord w;
  if (tp.sign == KnotSign::Plus) {
    w = product(0, h * (k - 1), [&](std::int64_t j) { return x(1 - j * k); });
    w *= product(0, k - 2, [&](std::int64_t i) {
      return product(1, h, [&](std::int64_t l) {
        return x(2 + i - (h * (k - 1 - i) + 1 - l) * k, -1);
      });
    });
  } else {
    w = product(1, h * (k - 1) - 1, [&](std::int64_t j) { return x(1 + j * k, -1); });
    w *= product(0, k - 2, [&](std::int64_t i) {
      return product(0, h - 1, [&](std::int64_t l) {
        return x(2 + i + (h * (k - 1 - i) - 1 - l) * k);
      });
    });
  }
  return CyclicPresentation(n, w);
}

IntPoly torus_alexander(std::int64_t a, std::int64_t b) {
  if (a < 2 || b < 2) throw DomainError("torus knot Alexander polynomial needs a, b >= 2");
  if (gcd(Integer(a), Integer(b)) != 1) throw DomainError("torus knot parameters must be coprime");
  auto t_pow_minus_one = [](std::int64_t e) {
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(e));
    p.coeffs[0] -= 1;
    return p;
  };
  const IntPoly num = t_pow_minus_one(a * b) * t_pow_minus_one(1);
  const IntPoly den = t_pow_minus_one(a) * t_pow_minus_one(b);
  auto [q, r] = divide(num, den);
  if (!r.is_zero()) throw ConsistencyError("torus knot Alexander quotient is not exact");
  return q;
}

CyclicPresentation fibonacci(std::int64_t n) {
  return CyclicPresentation(n, CyclicWord{{1, -1}, {2, 2}, {3, -1}, {2, 1}});
}

CyclicPresentation sieradski(std::int64_t n) {
  return CyclicPresentation(n, CyclicWord{{1, 1}, {3, 1}, {2, -1}});
}

CyclicPresentation fractional_fibonacci(std::int64_t n, std::int64_t l, std::int64_t k) {
  if (l < 1 || k < 1) throw DomainError("fractional Fibonacci needs l, k >= 1");
  const CyclicWord head = CyclicWord{{1, -l}, {2, l}}.pow(k);
  const CyclicWord tail = CyclicWord{{3, -l}, {2, l}}.pow(k);
  return CyclicPresentation(n, head * x(2) * tail);
}

const std::vector<NamedPresentation>& named_presentations() {
  static const std::vector<NamedPresentation> table{
      {"fibonacci", 2, [](std::int64_t n) { return fibonacci(n); }},
      {"sieradski", 2, [](std::int64_t n) { return sieradski(n); }},
      {"fractional_fibonacci", 2, [](std::int64_t n) { return fractional_fibonacci(n, 1, 1); }},
  };
  return table;
}

}  // namespace oneone
