#ifndef BOREL_LIESTRUCT_HPP
#define BOREL_LIESTRUCT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "borel/matrix.hpp"

namespace borel::lie {

/// Matrix position, 0-based. External formats print them 1-based.
using IJ = std::pair<int, int>;

/// Layer decomposition of the strictly upper triangular algebra of gl(n):
/// Heisenberg layers m_r with centers z_r, the center sum s, the symplectic
/// complement v = v+ ⊕ v-, and the diagonal root data beta_r.
///
/// In 0-based coordinates a strictly upper slot (i, j) belongs to
///   v+  iff i + j < n - 1,
///   s   iff i + j = n - 1,
///   v-  iff i + j > n - 1,
/// and layer m_r (1 <= r <= R) collects row r-1 and column n-r between the
/// anti-diagonal bounds, together with the center slot (r-1, n-r).
struct Decomposition {
  int n = 0;
  int R = 0;
  std::vector<int> d;                  // d[r-1] = n - 2r
  std::vector<std::vector<IJ>> m;      // m[r-1]
  std::vector<IJ> z;                   // z[r-1] = center slot of m_r
  std::vector<std::vector<IJ>> v_r;    // v[r-1] = m_r minus its center
  std::vector<std::vector<IJ>> vp_r;   // row part of v_r (p directions)
  std::vector<std::vector<IJ>> vm_r;   // column part of v_r (q directions)
  std::vector<IJ> s;                   // all center slots
  std::vector<IJ> v_plus;              // { (i,j) : i < j, i+j < n-1 }
  std::vector<IJ> v_minus;             // { (i,j) : i < j, i+j > n-1 }

  int dim_n() const { return n * (n - 1) / 2; }
  int dim_s() const { return R; }
  int dim_v_plus() const { return static_cast<int>(v_plus.size()); }
  int dim_a_diamond() const { return n - R; }
  /// dim h for the standard polarization h = a_diamond + s + v+.
  int dim_h() const { return (n - R) + R + dim_v_plus(); }
};

inline Decomposition build_decomposition(int n) {
  if (n < 2) throw std::invalid_argument("build_decomposition: n must be >= 2");
  Decomposition dec;
  dec.n = n;
  dec.R = n / 2;
  for (int r = 1; r <= dec.R; ++r) {
    dec.d.push_back(n - 2 * r);
    IJ center{r - 1, n - r};
    std::vector<IJ> row_part, col_part, layer;
    for (int j = r; j < n - r; ++j) row_part.push_back({r - 1, j});
    for (int i = r; i < n - r; ++i) col_part.push_back({i, n - r});
    layer = row_part;
    layer.insert(layer.end(), col_part.begin(), col_part.end());
    layer.push_back(center);
    std::vector<IJ> v_layer = row_part;
    v_layer.insert(v_layer.end(), col_part.begin(), col_part.end());
    dec.m.push_back(std::move(layer));
    dec.z.push_back(center);
    dec.v_r.push_back(std::move(v_layer));
    dec.vp_r.push_back(std::move(row_part));
    dec.vm_r.push_back(std::move(col_part));
    dec.s.push_back(center);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i + j < n - 1) dec.v_plus.push_back({i, j});
      else if (i + j > n - 1) dec.v_minus.push_back({i, j});
    }
  return dec;
}

enum class Part { StrictLower, BPlus, BMinus, Diagonal, S, VPlus, VMinus, LayerM };

/// Zeroes every entry outside the selected index set. Complementary pairs
/// (b+ / strict lower) sum back to the original matrix.
template <class S>
Matrix<S> project(const Matrix<S>& x, Part part, int layer_r = 0) {
  if (!x.square()) throw std::invalid_argument("project: matrix not square");
  const int n = x.rows();
  switch (part) {
    case Part::StrictLower:
      return x.masked([](int i, int j) { return i > j; });
    case Part::BPlus:
      return x.masked([](int i, int j) { return i <= j; });
    case Part::BMinus:
      return x.masked([](int i, int j) { return i >= j; });
    case Part::Diagonal:
      return x.masked([](int i, int j) { return i == j; });
    case Part::S:
      return x.masked([n](int i, int j) { return i < j && i + j == n - 1; });
    case Part::VPlus:
      return x.masked([n](int i, int j) { return i < j && i + j < n - 1; });
    case Part::VMinus:
      return x.masked([n](int i, int j) { return i < j && i + j > n - 1; });
    case Part::LayerM: {
      if (layer_r < 1 || layer_r > n / 2)
        throw std::invalid_argument("project: layer index out of range");
      const int r = layer_r;
      return x.masked([n, r](int i, int j) {
        if (i == r - 1 && j == n - r) return true;                  // center
        if (i == r - 1 && j > r - 1 && j < n - r) return true;      // row part
        if (j == n - r && i > r - 1 && i < n - r) return true;      // column part
        return false;
      });
    }
  }
  throw std::invalid_argument("project: unknown part");
}

/// beta_r as a functional on diagonal coordinates: xi_r - xi_{n-r+1}
/// (1-based r).
template <class S>
S beta_eval(int n, int r, const std::vector<S>& diag) {
  if (r < 1 || r > n / 2) throw std::invalid_argument("beta_eval: bad root index");
  if (static_cast<int>(diag.size()) != n)
    throw std::invalid_argument("beta_eval: diagonal size mismatch");
  return diag[r - 1] - diag[n - r];
}

/// Gram matrix of the beta roots under the standard pairing of diagonal
/// coordinate functionals; the cascade roots are mutually orthogonal.
inline Matrix<Rational> beta_gram(int n) {
  const int R = n / 2;
  Matrix<Rational> g(R, R);
  for (int r = 1; r <= R; ++r)
    for (int s = 1; s <= R; ++s) {
      // coefficients of beta_r on the diagonal basis: +1 at r-1, -1 at n-r
      Rational acc(0);
      if (r == s) acc += Rational(2);
      if (r - 1 == n - s) acc -= Rational(1);
      if (n - r == s - 1) acc -= Rational(1);
      g(r - 1, s - 1) = acc;
    }
  return g;
}

/// Basis of the isotropy subalgebra a_diamond (diagonals killed by all
/// beta_r): e_{r,r} + e_{n-r+1,n-r+1} for r = 1..R, plus the middle slot
/// for odd n.
inline std::vector<Matrix<Rational>> a_diamond_basis(int n) {
  std::vector<Matrix<Rational>> basis;
  const int R = n / 2;
  for (int r = 1; r <= R; ++r) {
    Matrix<Rational> m(n, n);
    m(r - 1, r - 1) = Rational(1);
    m(n - r, n - r) = Rational(1);
    basis.push_back(std::move(m));
  }
  if (n % 2 == 1) {
    Matrix<Rational> m(n, n);
    m((n - 1) / 2, (n - 1) / 2) = Rational(1);
    basis.push_back(std::move(m));
  }
  return basis;
}

template <class S>
bool strictly_upper(const Matrix<S>& x) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j <= i && j < x.cols(); ++j)
      if (!(x(i, j) == scalar_traits<S>::zero())) return false;
  return true;
}

/// b_lambda(x, y) = sum_r lambda_r * (coefficient of the center slot z_r in
/// [x, y]); antisymmetric, kills s, nondegenerate on v when all lambda_r != 0.
inline Rational bilinear_b_lambda(const std::vector<Rational>& lambda,
                                  const Matrix<Rational>& x,
                                  const Matrix<Rational>& y) {
  if (!x.square() || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("bilinear_b_lambda: shape mismatch");
  const int n = x.rows();
  const int R = n / 2;
  if (static_cast<int>(lambda.size()) != R)
    throw std::invalid_argument("bilinear_b_lambda: lambda length must be R");
  if (!strictly_upper(x) || !strictly_upper(y))
    throw std::invalid_argument("bilinear_b_lambda: arguments must be strictly upper");
  Matrix<Rational> c = commutator(x, y);
  Rational acc(0);
  for (int r = 1; r <= R; ++r) acc += lambda[r - 1] * c(r - 1, n - r);
  return acc;
}

/// Basis matrix for one index slot.
inline Matrix<Rational> slot(int n, IJ ij) {
  return Matrix<Rational>::unit(n, ij.first, ij.second);
}

inline std::vector<Matrix<Rational>> slot_basis(int n, const std::vector<IJ>& slots) {
  std::vector<Matrix<Rational>> basis;
  basis.reserve(slots.size());
  for (auto ij : slots) basis.push_back(slot(n, ij));
  return basis;
}

}  // namespace borel::lie

#endif
