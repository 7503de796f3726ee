#ifndef BOREL_DPOP_HPP
#define BOREL_DPOP_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "borel/liestruct.hpp"
#include "borel/linalg.hpp"
#include "borel/matrix.hpp"

namespace borel::dpop {

/// Coordinates on s*: lambda_r dual to the center slot of layer r.
struct LambdaPoint {
  int n = 0;
  std::vector<Rational> lambda;

  LambdaPoint(int size, std::vector<Rational> l) : n(size), lambda(std::move(l)) {
    if (static_cast<int>(lambda.size()) != n / 2)
      throw std::invalid_argument("LambdaPoint: need R = floor(n/2) coordinates");
  }

  /// Membership in the regular set t*: every coordinate nonzero.
  bool in_t_star() const {
    for (const auto& l : lambda)
      if (l.is_zero()) return false;
    return true;
  }
};

/// Modular function of the triangular group on its diagonal part:
/// delta(a) = prod_i a_i^{2i - n - 1} (1-based i).
inline Rational modular_delta(const Matrix<Rational>& a) {
  if (!a.square()) throw std::invalid_argument("modular_delta: not square");
  const int n = a.rows();
  Rational out(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j && !a(i, j).is_zero())
        throw std::invalid_argument("modular_delta: matrix must be diagonal");
    if (a(i, i) <= Rational(0))
      throw std::domain_error("modular_delta: diagonal entries must be positive");
    out *= a(i, i).pow(2 * (i + 1) - n - 1);
  }
  return out;
}

inline double modular_delta(const Matrix<double>& a) {
  if (!a.square()) throw std::invalid_argument("modular_delta: not square");
  const int n = a.rows();
  double out = 1.0;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) <= 0.0)
      throw std::domain_error("modular_delta: diagonal entries must be positive");
    out *= std::pow(a(i, i), 2 * (i + 1) - n - 1);
  }
  return out;
}

/// Pfaffian of b_lambda on v: rho(lambda) = prod_r lambda_r^{d_r}.
inline Rational pfaffian_rho(const LambdaPoint& l) {
  Rational out(1);
  const int n = l.n;
  for (int r = 1; r <= n / 2; ++r) out *= l.lambda[r - 1].pow(n - 2 * r);
  return out;
}

/// Det_{s*}(lambda) = prod_r beta_r(lambda) under the duality that reads
/// beta_r off the coefficient of the layer-r center slot.
inline Rational det_s_star(const LambdaPoint& l) {
  Rational out(1);
  for (const auto& c : l.lambda) out *= c;
  return out;
}

/// Gram matrix of b_lambda on v in the interleaved basis
/// (p_{r,1}, q_{r,1}, p_{r,2}, q_{r,2}, ...) ordered by layer.
inline Matrix<Rational> gram_on_v(const LambdaPoint& l) {
  const int n = l.n;
  lie::Decomposition dec = lie::build_decomposition(n);
  std::vector<lie::IJ> order;
  for (int r = 0; r < dec.R; ++r)
    for (int k = 0; k < dec.d[r]; ++k) {
      order.push_back(dec.vp_r[r][k]);
      order.push_back(dec.vm_r[r][k]);
    }
  const int dim = static_cast<int>(order.size());
  Matrix<Rational> gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      gram(a, b) = lie::bilinear_b_lambda(l.lambda, lie::slot(n, order[a]),
                                          lie::slot(n, order[b]));
  return gram;
}

/// Pfaffian of the interleaved Gram matrix read off its symplectic 2x2
/// blocks. Throws if the Gram matrix is not in this block form (it always
/// is; the check is part of the verification).
inline Rational pfaffian_of_gram(const LambdaPoint& l) {
  Matrix<Rational> gram = gram_on_v(l);
  const int dim = gram.rows();
  if (dim % 2) throw std::logic_error("pfaffian_of_gram: odd dimension");
  for (int a = 0; a < dim; ++a)
    for (int c = 0; c < dim; ++c) {
      bool paired = (a / 2 == c / 2) && a != c;
      if (!paired && !gram(a, c).is_zero())
        throw std::logic_error("pfaffian_of_gram: entry outside the 2x2 blocks");
    }
  Rational pf(1);
  for (int b = 0; b < dim; b += 2) {
    if (gram(b, b + 1) != -gram(b + 1, b))
      throw std::logic_error("pfaffian_of_gram: block not antisymmetric");
    pf *= gram(b, b + 1);
  }
  return pf;
}

/// Exponent data of the Dixmier-Pukanszky symbol prod_r E_{0,r}^{alpha_r}.
struct DPSymbol {
  int n = 0;
  std::vector<long> alpha;        // alpha_r, r = 1..R
  long degree = 0;                // sum alpha_r * r
  std::vector<long> weight_beta;  // coefficients on the beta basis
};

/// Solves sum_{r >= l} alpha_r = d_l + 1 (unit-triangular Toeplitz system):
/// alpha = (2,...,2) for odd n, (2,...,2,1) for even n.
inline DPSymbol dp_exponents(int n) {
  if (n < 2) throw std::invalid_argument("dp_exponents: n must be >= 2");
  const int R = n / 2;
  DPSymbol sym;
  sym.n = n;
  std::vector<long> d1(R);
  for (int r = 1; r <= R; ++r) d1[r - 1] = n - 2 * r + 1;  // d_r + 1
  sym.alpha.resize(R);
  for (int r = 0; r < R; ++r)
    sym.alpha[r] = (r + 1 < R) ? d1[r] - d1[r + 1] : d1[R - 1];
  for (int r = 1; r <= R; ++r) sym.degree += sym.alpha[r - 1] * r;
  sym.weight_beta.resize(R);
  for (int l = 0; l < R; ++l)
    for (int r = l; r < R; ++r) sym.weight_beta[l] += sym.alpha[r];
  return sym;
}

struct DPWeightReport {
  int n = 0;
  bool toeplitz_solved = false;   // substituting alpha back recovers d_l + 1
  bool weight_identity = false;   // beta weight equals sum (d_l + 1) beta_l
  bool degree_identity = false;   // degree = (dim n + dim s) / 2
  long degree = 0;
  bool passed() const { return toeplitz_solved && weight_identity && degree_identity; }
};

inline DPWeightReport dp_weight_check(int n) {
  DPSymbol sym = dp_exponents(n);
  const int R = n / 2;
  DPWeightReport rep;
  rep.n = n;
  rep.degree = sym.degree;
  rep.toeplitz_solved = true;
  rep.weight_identity = true;
  for (int l = 1; l <= R; ++l) {
    long acc = 0;
    for (int r = l; r <= R; ++r) acc += sym.alpha[r - 1];
    if (acc != n - 2 * l + 1) rep.toeplitz_solved = false;
    if (sym.weight_beta[l - 1] != n - 2 * l + 1) rep.weight_identity = false;
  }
  rep.degree_identity = 2 * sym.degree == n * (n - 1) / 2 + R;
  return rep;
}

}  // namespace borel::dpop

#endif
