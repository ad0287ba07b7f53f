#include "oneone/intlinalg.hpp"

#include <algorithm>
#include <utility>

#include "oneone/error.hpp"

namespace oneone {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_)
    throw DomainError("matrix entry count does not match dimensions");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimensions do not agree");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::size_t SNFResult::zero_count() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d == 0; }));
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// Moves the entry of least nonzero absolute value in the trailing block
// starting at (t, t) onto the diagonal. Returns false if the block is zero.
bool place_min_pivot(IntMatrix& m, std::size_t t) {
  std::size_t br = t, bc = t;
  Integer best = 0;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Integer& v = m(r, c);
      if (v == 0) continue;
      if (best == 0 || abs(v) < best) {
        best = abs(v);
        br = r;
        bc = c;
      }
    }
  if (best == 0) return false;
  swap_rows(m, t, br);
  swap_cols(m, t, bc);
  return true;
}

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  SNFResult out;
  out.diagonal.assign(n, Integer(0));

  for (std::size_t t = 0; t < n; ++t) {
    if (!place_min_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      const Integer pivot = m(t, t);
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        const Integer q = m(r, t) / pivot;
        for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        const Integer q = m(t, c) / pivot;
        for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; restart with it.
        place_min_pivot(m, t);
        continue;
      }
      // Row and column are clear. Enforce pivot | every remaining entry by
      // folding an offending row into row t.
      std::size_t bad = m.rows();
      for (std::size_t r = t + 1; r < m.rows() && bad == m.rows(); ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % pivot != 0) {
            bad = r;
            break;
          }
      if (bad == m.rows()) break;
      for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(bad, c);
    }
    out.diagonal[t] = abs(m(t, t));
  }
  return out;
}

IntMatrix circulant(std::span<const Integer> first_row) {
  const std::size_t n = first_row.size();
  if (n == 0) throw DomainError("circulant needs a nonempty first row");
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = first_row[(c + n - r) % n];
  return m;
}

namespace {

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation applied.
std::pair<std::size_t, int> bareiss(IntMatrix& m) {
  std::size_t rank = 0;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != rank) {
      swap_rows(m, p, rank);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(r, j) = (m(r, j) * m(rank, c) - m(r, c) * m(rank, j)) / prev;
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return {rank, sign};
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix w = m;
  const auto [r, sign] = bareiss(w);
  if (r < m.rows()) return 0;
  const Integer& d = w(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? d : Integer(-d);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix w = m;
  return bareiss(w).first;
}

AbelianGroup cokernel(const IntMatrix& relations) {
  const auto snf = smith_normal_form(relations);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.rank = relations.cols() - nonzero;
  return g;
}

std::string to_string(const AbelianGroup& g) {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (g.rank == 1) append("Z");
  else if (g.rank > 1) append("Z^" + std::to_string(g.rank));
  for (const auto& t : g.torsion) append("Z_" + t.str());
  return s.empty() ? "0" : s;
}

}  // namespace oneone
