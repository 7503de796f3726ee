#ifndef BOREL_POLY_HPP
#define BOREL_POLY_HPP

#include <ostream>
#include <stdexcept>
#include <vector>

#include "borel/dual.hpp"
#include "borel/rational.hpp"

namespace borel {

/// Univariate polynomial, coeffs[k] holding the coefficient of eta^k.
/// Normal form: trailing zero coefficients trimmed, the zero polynomial
/// has an empty coefficient sequence.
template <class S>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(S v) { return Poly(std::vector<S>{std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const std::vector<S>& coeffs() const { return c_; }

  /// Coefficient of eta^k (zero beyond the stored degree).
  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return scalar_traits<S>::zero();
    return c_[k];
  }

  S leading() const {
    if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
    return c_.back();
  }

  S eval(const S& x) const {
    S acc = scalar_traits<S>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
      d[k - 1] = c_[k] * scalar_traits<S>::from_int(static_cast<long>(k));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<S> d(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> d(std::max(a.c_.size(), b.c_.size()), scalar_traits<S>::zero());
    for (size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) d[k] += b.c_[k];
    return Poly(std::move(d));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> d(a.c_.size() + b.c_.size() - 1, scalar_traits<S>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
  }

  friend Poly operator*(const Poly& a, const S& s) {
    std::vector<S> d(a.c_.size());
    for (size_t k = 0; k < a.c_.size(); ++k) d[k] = a.c_[k] * s;
    return Poly(std::move(d));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    for (int k = p.degree(); k >= 0; --k) {
      os << p.c_[k];
      if (k > 0) os << "*eta^" << k << " + ";
    }
    return os;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == scalar_traits<S>::zero()) c_.pop_back();
  }

  std::vector<S> c_;
};

using EtaPoly = Poly<Rational>;

/// Polynomials form a commutative ring scalar (used by ring-generic matrix
/// code, e.g. the cofactor determinant oracle).
template <class S>
struct scalar_traits<Poly<S>> {
  static Poly<S> zero() { return Poly<S>(); }
  static Poly<S> one() { return Poly<S>::constant(scalar_traits<S>::one()); }
  static Poly<S> from_int(long k) {
    return Poly<S>::constant(scalar_traits<S>::from_int(k));
  }
  static bool is_invertible(const Poly<S>& p) {
    return p.degree() == 0 && scalar_traits<S>::is_invertible(p.coeff(0));
  }
  static double abs_estimate(const Poly<S>& p) {
    return p.is_zero() ? 0.0 : scalar_traits<S>::abs_estimate(p.leading());
  }
};

/// Unique interpolating polynomial through (nodes[i], values[i]), solved by
/// Gaussian elimination on the Vandermonde system. Nodes must be distinct.
template <class S>
Poly<S> interpolate(const std::vector<S>& nodes, const std::vector<S>& values) {
  const int m = static_cast<int>(nodes.size());
  if (values.size() != nodes.size())
    throw std::invalid_argument("interpolate: size mismatch");
  if (m == 0) return Poly<S>();
  // Augmented Vandermonde system V c = values.
  std::vector<std::vector<S>> a(m, std::vector<S>(m + 1, scalar_traits<S>::zero()));
  for (int i = 0; i < m; ++i) {
    S p = scalar_traits<S>::one();
    for (int j = 0; j < m; ++j) {
      a[i][j] = p;
      p *= nodes[i];
    }
    a[i][m] = values[i];
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (scalar_traits<S>::is_invertible(a[r][col])) { piv = r; break; }
    if (piv < 0) throw std::domain_error("interpolate: nodes not distinct");
    std::swap(a[col], a[piv]);
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col] == scalar_traits<S>::zero()) continue;
      S f = a[r][col] / a[col][col];
      for (int j = col; j <= m; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<S> coeffs(m);
  for (int i = 0; i < m; ++i) coeffs[i] = a[i][m] / a[i][i];
  return Poly<S>(std::move(coeffs));
}

}  // namespace borel

#endif
