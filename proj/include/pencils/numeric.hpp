#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pencils {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
/// Accepts "p", "p/q" and "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Dense row-major matrix. Only the operations the library needs.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  template <class S>
  Matrix scaled(const S& s) const {
    Matrix c = *this;
    for (auto& v : c.data_) v *= s;
    return c;
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// Exact linear algebra.
Integer determinant(const IntMatrix& m);   // fraction-free Bareiss
Rational determinant(const RatMatrix& m);
/// Inverse over Q; empty optional when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
/// Entrywise integrality test; returns the integer matrix when it holds.
std::optional<IntMatrix> to_integer(const RatMatrix& m);
/// Least common multiple of all entry denominators.
Integer common_denominator(const RatMatrix& m);

/// Basis (as columns) of the Z-lattice spanned by the columns of `generators`,
/// which must have full row rank. The basis is in column Hermite normal form.
RatMatrix lattice_basis(const RatMatrix& generators);
IntMatrix hermite_basis(const IntMatrix& generators);

/// Dual lattice basis: columns of (basis)^{-T}.
RatMatrix dual_basis(const RatMatrix& basis);

Integer content(const std::vector<Integer>& values);

}  // namespace pencils
