#include "cointerval/exactalg/matrix.hpp"

#include <sstream>

#include "cointerval/error.hpp"

namespace cointerval::exactalg {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring()))
    throw RingMismatch("matrix rings differ: " + a.ring().tag() + " vs " + b.ring().tag());
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionMismatch("matrix entries do not match shape " + shape(*this));
  for (auto& e : data_) e = ring_.canonical(e);
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, std::size_t cols,
                         std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Scalar> data;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged matrix row");
    for (long v : r) data.emplace_back(v);
  }
  return Matrix(ring, rows.size(), cols, std::move(data));
}

Matrix Matrix::from_rows(const Ring& ring, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Scalar> data;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged matrix row");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(ring, rows.size(), cols, std::move(data));
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  data_[r * cols_ + c] = ring_.canonical(v);
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_)
    throw DimensionMismatch("block out of range of " + shape(*this));
  Matrix b(ring_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b.data_[r * ncols + c] = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_ring(*this, m);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
    throw DimensionMismatch("set_block " + shape(m) + " out of range of " + shape(*this));
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = m(r, c);
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack " + shape(a) + " / " + shape(b));
  Matrix m(a.ring_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack " + shape(a) + " | " + shape(b));
  Matrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  Matrix m(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          m.set(i * b.rows_ + k, j * b.cols_ + l, a(i, j) * b(k, l));
    }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_ring(*this, o);
  if (cols_ != o.rows_) throw DimensionMismatch("product " + shape(*this) + " * " + shape(o));
  Matrix m(ring_, rows_, o.cols_);
  Scalar acc;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& x = (*this)(r, k);
        if (x == 0) continue;
        acc += x * o(k, c);
      }
      m.data_[r * o.cols_ + c] = ring_.canonical(acc);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_ring(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("sum " + shape(*this) + " + " + shape(o));
  Matrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.add(data_[i], o.data_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.mul(data_[i], s);
  return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + a], data_[r * cols_ + b]);
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Scalar& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    data_[dst * cols_ + c] = ring_.canonical(data_[dst * cols_ + c] + k * data_[src * cols_ + c]);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Scalar& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    data_[r * cols_ + dst] = ring_.canonical(data_[r * cols_ + dst] + k * data_[r * cols_ + src]);
}

void Matrix::scale_row(std::size_t r, const Scalar& k) {
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = ring_.mul(data_[r * cols_ + c], k);
}

void Matrix::scale_col(std::size_t c, const Scalar& k) {
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = ring_.mul(data_[r * cols_ + c], k);
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).get_str());
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace cointerval::exactalg
