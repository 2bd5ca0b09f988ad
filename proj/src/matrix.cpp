#include "arrtop/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace arrtop {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("QMatrix: entry count does not match dimensions");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void QMatrix::append_row(std::span<const Rat> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("QMatrix: row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

RrefResult rref(QMatrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, lead_row);
    Rat inv = 1 / m.at(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m.at(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, c) == 0) continue;
      Rat factor = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m.at(r, k) -= factor * m.at(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

Rat determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      Rat factor = m.at(r, c) / m.at(c, c);
      for (std::size_t k = c; k < n; ++k) m.at(r, k) -= factor * m.at(c, k);
    }
  }
  return det;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("QMatrix product: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

std::string to_string(const QMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += to_string(m.at(r, c));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace arrtop
