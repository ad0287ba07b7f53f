#pragma once

// Test-only reference implementations. Each one follows a different route
// from the library code it checks: letter-by-letter stacks instead of
// syllable merging, cofactor expansion instead of Bareiss, determinantal
// divisors instead of Smith reduction, exhaustive scans instead of modular
// inversion.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "oneone/covering.hpp"
#include "oneone/intlinalg.hpp"
#include "oneone/knot.hpp"
#include "oneone/mcg.hpp"
#include "oneone/words.hpp"

namespace oneone::oracle {

template <class Gen>
using Letters = std::vector<std::pair<Gen, int>>;  // (generator, +-1)

template <class Gen>
Letters<Gen> expand(const FreeWord<Gen>& w) {
  Letters<Gen> out;
  for (const auto& s : w.syllables()) {
    const int sign = s.exp > 0 ? 1 : -1;
    const auto count = static_cast<long>(abs(s.exp));
    for (long i = 0; i < count; ++i) out.emplace_back(s.gen, sign);
  }
  return out;
}

template <class Gen>
Letters<Gen> letter_reduce(const Letters<Gen>& raw) {
  Letters<Gen> st;
  for (const auto& l : raw) {
    if (!st.empty() && st.back().first == l.first && st.back().second == -l.second)
      st.pop_back();
    else
      st.push_back(l);
  }
  return st;
}

template <class Gen>
Letters<Gen> substitute_letterwise(const FreeWord<Gen>& w,
                                   const std::map<Gen, Letters<Gen>>& images) {
  Letters<Gen> raw;
  for (const auto& [g, sign] : expand(w)) {
    const auto& img = images.at(g);
    if (sign > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.emplace_back(it->first, -it->second);
    }
  }
  return letter_reduce(raw);
}

inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, k++) = m(r, cc);
      }
    const Integer term = m(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Invariant factors from determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_(k-1). Exponential; keep matrices small.
inline std::vector<Integer> determinantal_invariants(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> out(n, Integer(0));
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    detail::subsets(m.rows(), k, 0, cur, rs);
    detail::subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        g = gcd(g, cofactor_det(sub));
      }
    if (g == 0) break;
    out[k - 1] = g / prev;
    prev = g;
  }
  return out;
}

/// Every x in [0, n) with p x + q'' == 0 (mod n), by direct scan.
inline std::vector<std::int64_t> brute_force_monodromies(const OneOneKnot& k, std::int64_t n) {
  std::vector<std::int64_t> xs;
  for (std::int64_t x = 0; x < n; ++x) {
    Integer v = (k.p * x + k.q_dblprime) % n;
    if (v == 0) xs.push_back(x);
  }
  return xs;
}

// Random generators with a caller-owned engine so failures reproduce from the
// seed.

inline MCGWord random_mcg(std::mt19937_64& rng, int max_len, int max_exp = 3) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> twist(0, 2);
  std::uniform_int_distribution<int> mag(1, max_exp);
  std::bernoulli_distribution neg(0.5);
  std::vector<Syllable<Twist>> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    raw.push_back({static_cast<Twist>(twist(rng)), neg(rng) ? -mag(rng) : mag(rng)});
  return MCGWord(std::span<const Syllable<Twist>>(raw));
}

inline Pi1Word random_loop_word(std::mt19937_64& rng, int max_len, int max_exp = 3,
                                int alphabet = 3) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, alphabet - 1);
  std::uniform_int_distribution<int> mag(1, max_exp);
  std::bernoulli_distribution neg(0.5);
  std::vector<Syllable<Loop>> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    raw.push_back({static_cast<Loop>(gen(rng)), neg(rng) ? -mag(rng) : mag(rng)});
  return Pi1Word(std::span<const Syllable<Loop>>(raw));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> v(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v(rng);
  return m;
}

/// Product of random elementary integer operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  std::bernoulli_distribution swap(0.2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (i + 1) % n;
    IntMatrix e = IntMatrix::identity(n);
    if (swap(rng)) {
      e(i, i) = 0;
      e(j, j) = 0;
      e(i, j) = 1;
      e(j, i) = 1;
    } else {
      e(i, j) = mult(rng);
    }
    u = e * u;
  }
  return u;
}

}  // namespace oneone::oracle
