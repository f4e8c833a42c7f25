#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "qs/error.hpp"
#include "qs/gaussq.hpp"

namespace qs {

namespace detail {

inline bool is_zero(const GaussQ& x) { return x.is_zero(); }
inline bool is_zero(std::int64_t x) { return x == 0; }

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::InvalidValue, "integer overflow");
  return out;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::InvalidValue, "integer overflow");
  return out;
}
inline GaussQ checked_mul(const GaussQ& a, const GaussQ& b) { return a * b; }
inline GaussQ checked_add(const GaussQ& a, const GaussQ& b) { return a + b; }

}  // namespace detail

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) out(k, k) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!detail::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    }
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r) {
      for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
    }
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = detail::checked_add(data_[k], o.data_[k]);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = detail::checked_add(data_[k], -o.data_[k]);
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x = detail::checked_mul(x, s);
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (detail::is_zero(bkj)) continue;
          out(i, j) = detail::checked_add(out(i, j), detail::checked_mul(aik, bkj));
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<GaussQ>;
using ZMatrix = Matrix<std::int64_t>;

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned exponent) {
  Matrix<T> out = Matrix<T>::identity(m.rows());
  for (unsigned k = 0; k < exponent; ++k) out = out * m;
  return out;
}

QMatrix to_q(const ZMatrix& m);
Matrix<GaussQ> hconcat(const QMatrix& a, const QMatrix& b);
Matrix<GaussQ> vconcat(const QMatrix& a, const QMatrix& b);

struct Echelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_echelon(QMatrix m);
std::size_t rank(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
// Pivot columns of the reduced echelon form: the lexicographically first maximal independent column set.
std::vector<std::size_t> independent_columns(const QMatrix& m);

}  // namespace qs
