#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "oneone/integer.hpp"

namespace oneone {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// Invariant factors d_1 | d_2 | ... (non-negative, zeros at the tail),
/// min(rows, cols) of them.
struct SNFResult {
  std::vector<Integer> diagonal;

  std::size_t zero_count() const;
};

SNFResult smith_normal_form(IntMatrix m);

/// Row k is first_row cyclically right-shifted k times. Throws DomainError
/// on an empty row.
IntMatrix circulant(std::span<const Integer> first_row);

/// Exact determinant by Bareiss fraction-free elimination. Throws
/// DomainError for non-square input.
Integer determinant(const IntMatrix& m);

/// Rank over Q via fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Finitely generated abelian group Z^rank + Z_t1 + ... + Z_tk with
/// 2 <= t1 | t2 | ... | tk.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

/// Group presented by the rows of `relations` as relators on `cols`
/// generators: Z^cols / rowspace.
AbelianGroup cokernel(const IntMatrix& relations);

/// "Z + Z_4", "Z_8 + Z_8", "Z^2", "0".
std::string to_string(const AbelianGroup& g);

}  // namespace oneone
