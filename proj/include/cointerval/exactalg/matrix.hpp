#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cointerval/exactalg/ring.hpp"

namespace cointerval::exactalg {

/// Dense matrix over an exact ring, row-major. Matrices act on column vectors,
/// so the composite "g after f" is the product g * f. Zero-sized shapes
/// (0 x k, k x 0) are legal and behave as maps to/from the zero module.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Matrix(ring, rows, cols);
  }
  static Matrix identity(const Ring& ring, std::size_t n);
  /// Builds from integer rows; every row must have the same length.
  static Matrix from_rows(const Ring& ring, std::size_t cols,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const Ring& ring, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores the canonical representative of `v`.
  void set(std::size_t r, std::size_t c, const Scalar& v);
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  /// [a; b] (same column count) and [a | b] (same row count).
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix kronecker(const Matrix& a, const Matrix& b);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  // Elementary operations used by normal-form algorithms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& k);
  void scale_row(std::size_t r, const Scalar& k);
  void scale_col(std::size_t c, const Scalar& k);

  std::vector<std::vector<std::string>> to_strings() const;
  std::string str() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace cointerval::exactalg
