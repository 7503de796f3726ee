#ifndef BOREL_MATRIX_HPP
#define BOREL_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "borel/dual.hpp"
#include "borel/rational.hpp"

namespace borel {

/// Dense row-major matrix over an arbitrary scalar. Indices are 0-based.
template <class S>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero()) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }
  Matrix(int rows, int cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
      throw std::invalid_argument("Matrix: entry count mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw std::invalid_argument("Matrix: ragged rows");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  static Matrix unit(int n, int i, int j) {
    Matrix m(n, n);
    m(i, j) = scalar_traits<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  const std::vector<S>& entries() const { return e_; }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  S trace() const {
    S t = scalar_traits<S>::zero();
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Keeps entries where keep(i, j) holds, zeroes the rest.
  Matrix masked(const std::function<bool(int, int)>& keep) const {
    Matrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (keep(i, j)) r(i, j) = (*this)(i, j);
    return r;
  }

  /// Result of removing the first `drop_top` rows and last `drop_right` columns.
  Matrix chop(int drop_top, int drop_right) const {
    if (drop_top > rows_ || drop_right > cols_)
      throw std::invalid_argument("Matrix: chop larger than matrix");
    Matrix r(rows_ - drop_top, cols_ - drop_right);
    for (int i = 0; i < r.rows_; ++i)
      for (int j = 0; j < r.cols_; ++j) r(i, j) = (*this)(i + drop_top, j);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (int i = 0; i < m.rows_; ++i) {
      os << (i ? "\n[" : "[");
      for (int j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]";
    }
    return os;
  }

private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<S> e_;
};

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

template <class T, class S, class F>
Matrix<T> convert(const Matrix<S>& m, F f) {
  Matrix<T> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
  return r;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  return convert<double>(m, [](const Rational& r) { return r.to_double(); });
}

inline Matrix<DualRational> to_dual(const Matrix<Rational>& m) {
  return convert<DualRational>(m, [](const Rational& r) { return DualRational(r); });
}

using QMatrix = Matrix<Rational>;
using DMatrix = Matrix<double>;

}  // namespace borel

#endif
