#ifndef BOREL_LINALG_HPP
#define BOREL_LINALG_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "borel/matrix.hpp"
#include "borel/poly.hpp"

namespace borel {

namespace detail {

/// Row-wise denominator clearing: returns an integer matrix together with the
/// product of the row scale factors, so det(input) = det(output) / scale.
struct ClearedInt {
  std::vector<std::vector<mpz_class>> m;
  mpq_class scale;  // product of row multipliers
};

inline ClearedInt clear_denominators(const Matrix<Rational>& a) {
  ClearedInt out;
  out.scale = 1;
  out.m.assign(a.rows(), std::vector<mpz_class>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
    for (int j = 0; j < a.cols(); ++j) {
      mpq_class v = a(i, j).raw() * l;
      out.m[i][j] = v.get_num();  // denominator is 1 after scaling
    }
    out.scale *= l;
  }
  return out;
}

/// Bareiss fraction-free elimination on an integer matrix with full pivoting.
/// Returns the rank; if det_out is non-null (square input), stores the exact
/// determinant of the integer matrix.
inline int bareiss(std::vector<std::vector<mpz_class>>& m, mpz_class* det_out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int sign = 1;
  mpz_class prev = 1;
  int k = 0;
  const int kmax = std::min(rows, cols);
  for (; k < kmax; ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < rows && pr < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (m[i][j] != 0) { pr = i; pc = j; break; }
    if (pr < 0) break;  // remaining block is zero
    if (pr != k) { std::swap(m[pr], m[k]); sign = -sign; }
    if (pc != k) {
      for (int i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][k]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  if (det_out) {
    if (k < kmax)
      *det_out = 0;
    else
      *det_out = sign < 0 ? mpz_class(-m[kmax - 1][kmax - 1]) : m[kmax - 1][kmax - 1];
  }
  return k;
}

}  // namespace detail

/// Exact determinant over the rationals (denominator clearing + Bareiss).
inline Rational det(const Matrix<Rational>& a) {
  if (!a.square()) throw std::invalid_argument("det: matrix not square");
  if (a.rows() == 0) return Rational(1);
  auto cleared = detail::clear_denominators(a);
  mpz_class d;
  detail::bareiss(cleared.m, &d);
  mpq_class q(d);
  q /= cleared.scale;
  return Rational(q);
}

/// Determinant over doubles via LU with partial pivoting.
inline double det(const Matrix<double>& a) {
  if (!a.square()) throw std::invalid_argument("det: matrix not square");
  const int n = a.rows();
  if (n == 0) return 1.0;
  Matrix<double> m = a;
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      double f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

/// Division-free determinant (Bird's algorithm); works over any commutative
/// ring, in particular dual numbers whose value part may vanish.
template <class S>
S det_ring(const Matrix<S>& a) {
  if (!a.square()) throw std::invalid_argument("det_ring: matrix not square");
  const int n = a.rows();
  if (n == 0) return scalar_traits<S>::one();
  if (n == 1) return a(0, 0);
  Matrix<S> x = a;
  for (int step = 0; step < n - 1; ++step) {
    // mu(x): keep the strictly upper part, replace the diagonal with
    // -(sum of lower-right diagonal entries), drop the lower part.
    Matrix<S> mu(n, n);
    S tail = scalar_traits<S>::zero();
    for (int i = n - 1; i >= 0; --i) {
      mu(i, i) = -tail;
      tail += x(i, i);
      for (int j = i + 1; j < n; ++j) mu(i, j) = x(i, j);
    }
    x = mu * a;
  }
  return (n % 2 == 0) ? -x(0, 0) : x(0, 0);
}

template <class S>
S det_generic(const Matrix<S>& a) {
  if constexpr (std::is_same_v<S, Rational>) return det(a);
  else if constexpr (std::is_same_v<S, double>) return det(a);
  else return det_ring(a);
}

/// Exact rank over the rationals (denominator clearing + Bareiss, full pivot).
inline int rank(const Matrix<Rational>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  auto cleared = detail::clear_denominators(a);
  return detail::bareiss(cleared.m, nullptr);
}

/// Cofactor expansion, intended as an independent small-size oracle.
template <class S>
S det_cofactor(const Matrix<S>& a) {
  if (!a.square()) throw std::invalid_argument("det_cofactor: matrix not square");
  const int n = a.rows();
  if (n == 0) return scalar_traits<S>::one();
  if (n == 1) return a(0, 0);
  S acc = scalar_traits<S>::zero();
  for (int j = 0; j < n; ++j) {
    Matrix<S> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = a(i, c);
      }
    }
    S term = a(0, j) * det_cofactor(minor);
    if (j % 2) acc -= term; else acc += term;
  }
  return acc;
}

/// Exact adjugate via cofactors: adj(a) * a = det(a) * I.
inline Matrix<Rational> adjugate(const Matrix<Rational>& a) {
  if (!a.square()) throw std::invalid_argument("adjugate: matrix not square");
  const int n = a.rows();
  Matrix<Rational> adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<Rational> minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      Rational cof = det(minor);
      adj(j, i) = ((i + j) % 2) ? -cof : cof;
    }
  return adj;
}

/// Exact solve A X = B over the rationals; throws on a singular A.
inline Matrix<Rational> solve(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (!a.square() || a.rows() != b.rows())
    throw std::invalid_argument("solve: shape mismatch");
  const int n = a.rows(), m = b.cols();
  Matrix<Rational> w(n, n + m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
    for (int j = 0; j < m; ++j) w(i, n + j) = b(i, j);
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!w(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) throw std::domain_error("solve: singular matrix");
    if (piv != k)
      for (int j = 0; j < n + m; ++j) std::swap(w(piv, j), w(k, j));
    for (int i = 0; i < n; ++i) {
      if (i == k || w(i, k).is_zero()) continue;
      Rational f = w(i, k) / w(k, k);
      for (int j = k; j < n + m; ++j) w(i, j) -= f * w(k, j);
    }
  }
  Matrix<Rational> x(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = w(i, n + j) / w(i, i);
  return x;
}

inline Matrix<Rational> inverse(const Matrix<Rational>& a) {
  return solve(a, Matrix<Rational>::identity(a.rows()));
}

/// Exact nullspace basis of A (as rows of the result).
inline std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& a) {
  const int rows = a.rows(), cols = a.cols();
  Matrix<Rational> w = a;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!w(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(w(piv, j), w(r, j));
    Rational p = w(r, c);
    for (int j = 0; j < cols; ++j) w(r, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || w(i, c).is_zero()) continue;
      Rational f = w(i, c);
      for (int j = 0; j < cols; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = Rational(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -w(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of a list of vectors sharing one ambient dimension.
inline int rank_of(const std::vector<std::vector<Rational>>& vecs) {
  if (vecs.empty()) return 0;
  const int dim = static_cast<int>(vecs[0].size());
  Matrix<Rational> m(static_cast<int>(vecs.size()), dim);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(vecs[i].size()) != dim)
      throw std::invalid_argument("rank_of: vector dimension mismatch");
    for (int j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
  }
  return rank(m);
}

/// True iff the rational spans of A and B coincide.
inline bool span_equal(const std::vector<std::vector<Rational>>& a,
                       const std::vector<std::vector<Rational>>& b) {
  size_t dim = 0;
  for (const auto& v : a) dim = std::max(dim, v.size());
  for (const auto& v : b) dim = std::max(dim, v.size());
  for (const auto& v : a)
    if (v.size() != dim) throw std::invalid_argument("span_equal: dimension mismatch");
  for (const auto& v : b)
    if (v.size() != dim) throw std::invalid_argument("span_equal: dimension mismatch");
  std::vector<std::vector<Rational>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int ra = rank_of(a), rb = rank_of(b);
  return ra == rb && ra == rank_of(both);
}

inline bool span_contains(const std::vector<std::vector<Rational>>& basis,
                          const std::vector<Rational>& v) {
  std::vector<std::vector<Rational>> ext = basis;
  ext.push_back(v);
  return rank_of(basis) == rank_of(ext);
}

inline std::vector<Rational> flatten(const Matrix<Rational>& m) {
  return m.entries();
}

/// det(A + eta B) as an exact polynomial, computed by evaluation at the
/// nodes eta = 0, 1, ..., k and interpolation.
template <class S>
Poly<S> det_eta(const Matrix<S>& a, const Matrix<S>& b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("det_eta: shape mismatch");
  const int k = a.rows();
  if (k == 0) return Poly<S>::constant(scalar_traits<S>::one());
  std::vector<S> nodes(k + 1), values(k + 1);
  for (int t = 0; t <= k; ++t) {
    nodes[t] = scalar_traits<S>::from_int(t);
    Matrix<S> m = a;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) += nodes[t] * b(i, j);
    values[t] = det_generic(m);
  }
  return interpolate(nodes, values);
}

/// Overload for a matrix of degree-at-most-one polynomials in eta.
inline EtaPoly det_eta(const Matrix<EtaPoly>& m) {
  if (!m.square()) throw std::invalid_argument("det_eta: matrix not square");
  const int k = m.rows();
  Matrix<Rational> a(k, k), b(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (m(i, j).degree() > 1)
        throw std::invalid_argument("det_eta: entry degree exceeds 1");
      a(i, j) = m(i, j).coeff(0);
      b(i, j) = m(i, j).coeff(1);
    }
  return det_eta(a, b);
}

}  // namespace borel

#endif
