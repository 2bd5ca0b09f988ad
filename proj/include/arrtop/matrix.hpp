#pragma once

// Dense matrices over Q and exact Gaussian elimination.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Rat>& entries() const { return data_; }

  void append_row(std::span<const Rat> row);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank = 0;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// of the input is preserved.
RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Determinant by fraction-exact elimination. Throws on non-square input.
Rat determinant(QMatrix m);

QMatrix operator*(const QMatrix& a, const QMatrix& b);

std::string to_string(const QMatrix& m);

}  // namespace arrtop
