#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactdual/rational.hpp"

namespace exactdual {

/// Thrown when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Row-list construction; all rows must have equal length. An empty list
  /// gives a 0x0 matrix.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionError("ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw DimensionError("ragged matrix: row " + std::to_string(i));
      }
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  [[nodiscard]] std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      out.push_back((*this)(i, j));
    }
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  [[nodiscard]] Matrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
      throw DimensionError("submatrix out of range");
    }
    Matrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        s(i, j) = (*this)(r0 + i, c0 + j);
      }
    }
    return s;
  }

  /// Keeps only the listed rows and columns, in the given order.
  [[nodiscard]] Matrix select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    Matrix s(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
      for (std::size_t j = 0; j < col_ids.size(); ++j) {
        s(i, j) = (*this)(row_ids[i], col_ids[j]);
      }
    }
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QVec = std::vector<Rat>;
using QMat = Matrix<Rat>;

Rat dot_product(std::span<const Rat> v, std::span<const Rat> w);
QVec mat_vec_mul(const QMat& m, std::span<const Rat> v);
QMat mat_mul(const QMat& a, const QMat& b);
QMat transpose(const QMat& m);
QMat identity(std::size_t n);
QMat negate(const QMat& m);
QVec negate(std::span<const Rat> v);

/// Assembles [[a11, a12], [a21, a22]].
QMat from_blocks(const QMat& a11, const QMat& a12, const QMat& a21, const QMat& a22);

/// Stacks matrices with equal column counts.
QMat from_rows(std::span<const QMat> blocks);

/// Juxtaposes matrices with equal row counts.
QMat from_cols(std::span<const QMat> blocks);

/// Determinant via fraction-free (Bareiss) elimination.
Rat det(const QMat& m);

bool all_nonneg(std::span<const Rat> v);
/// Componentwise v <= w.
bool vec_le(std::span<const Rat> v, std::span<const Rat> w);
bool is_zero(std::span<const Rat> v);

}  // namespace exactdual
