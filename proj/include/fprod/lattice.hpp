#pragma once

#include <cstddef>
#include <vector>

#include "fprod/arith.hpp"

namespace fprod {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Column Hermite normal form H = M * U with U unimodular.
//
// H is lower-triangular in echelon sense: its first `rank` columns are
// nonzero, column j has its first nonzero entry (the pivot, positive) in row
// pivot_rows[j], pivot rows strictly increase, and every entry left of a
// pivot in the pivot row lies in [0, pivot). The remaining columns are zero,
// so the trailing columns of U span the integer kernel of M.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hnf(const IntMatrix& m);

// Determinant by fraction-free elimination (square matrices only).
Integer determinant(const IntMatrix& m);

}  // namespace fprod
