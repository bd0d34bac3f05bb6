#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtp/errors.hpp"
#include "qtp/gaussian_rational.hpp"

namespace qtp {

/// Row-major dense matrix over an exact ring (GaussianRational or BiPoly).
///
/// Value semantics throughout; shape checks throw ShapeError.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }
  /// Column vector from entries.
  static DenseMatrix column(std::span<const T> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> entries() const { return data_; }

  bool is_zero() const;

  /// Copy of the rows x cols window starting at (r0, c0).
  DenseMatrix slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  /// Writes `src` with its top-left corner at (r0, c0).
  void paste(std::size_t r0, std::size_t c0, const DenseMatrix& src);

  /// n x n block (bi, bj) for a matrix partitioned into n x n blocks.
  DenseMatrix block(std::size_t bi, std::size_t bj, std::size_t n) const { return slice(bi * n, bj * n, n, n); }
  void set_block(std::size_t bi, std::size_t bj, const DenseMatrix& b) { paste(bi * b.rows(), bj * b.cols(), b); }

  DenseMatrix transpose() const;

  template <class F>
  auto map(F&& f) const -> DenseMatrix<std::invoke_result_t<F, const T&>>;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix operator-() const;

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return multiply(a, b); }
  friend DenseMatrix operator*(const T& s, DenseMatrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

  static DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<GaussianRational>;

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <class T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b);

/// Vertical concatenation of equally wide matrices.
template <class T>
DenseMatrix<T> vstack(std::initializer_list<DenseMatrix<T>> parts);
/// Horizontal concatenation of equally tall matrices.
template <class T>
DenseMatrix<T> hstack(std::initializer_list<DenseMatrix<T>> parts);

/// Largest |entry| as a double; 0 for the empty/zero matrix.
double max_abs(const Matrix& m);

std::string to_string(const Matrix& m);

// ---------------------------------------------------------------------------

template <class T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ShapeError("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
  return m;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::column(std::span<const T> entries) {
  DenseMatrix m(entries.size(), 1);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, 0) = entries[k];
  return m;
}

template <class T>
bool DenseMatrix<T>::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) {
    throw ShapeError("slice out of range");
  }
  DenseMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

template <class T>
void DenseMatrix<T>::paste(std::size_t r0, std::size_t c0, const DenseMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw ShapeError("paste out of range");
  }
  for (std::size_t r = 0; r < src.rows_; ++r) {
    for (std::size_t c = 0; c < src.cols_; ++c) (*this)(r0 + r, c0 + c) = src(r, c);
  }
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

template <class T>
template <class F>
auto DenseMatrix<T>::map(F&& f) const -> DenseMatrix<std::invoke_result_t<F, const T&>> {
  DenseMatrix<std::invoke_result_t<F, const T&>> out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
  }
  return out;
}

template <class T>
DenseMatrix<T>& DenseMatrix<T>::operator+=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeError("matrix addition shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

template <class T>
DenseMatrix<T>& DenseMatrix<T>::operator-=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeError("matrix subtraction shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::operator-() const {
  DenseMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

template <class T>
DenseMatrix<T> DenseMatrix<T>::multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const T& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <class T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
      }
    }
  }
  return out;
}

template <class T>
DenseMatrix<T> vstack(std::initializer_list<DenseMatrix<T>> parts) {
  std::size_t rows = 0;
  std::size_t cols = parts.size() == 0 ? 0 : parts.begin()->cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ShapeError("vstack width mismatch");
    rows += p.rows();
  }
  DenseMatrix<T> out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.paste(r, 0, p);
    r += p.rows();
  }
  return out;
}

template <class T>
DenseMatrix<T> hstack(std::initializer_list<DenseMatrix<T>> parts) {
  std::size_t cols = 0;
  std::size_t rows = parts.size() == 0 ? 0 : parts.begin()->rows();
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ShapeError("hstack height mismatch");
    cols += p.cols();
  }
  DenseMatrix<T> out(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.paste(0, c, p);
    c += p.cols();
  }
  return out;
}

}  // namespace qtp
