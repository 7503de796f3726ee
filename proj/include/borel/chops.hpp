#ifndef BOREL_CHOPS_HPP
#define BOREL_CHOPS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "borel/linalg.hpp"
#include "borel/liestruct.hpp"
#include "borel/matrix.hpp"
#include "borel/poly.hpp"
#include "borel/rng.hpp"

namespace borel::chops {

/// Thrown when a ratio invariant is requested at a point where the relevant
/// leading chop coefficient vanishes.
class NongenericError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Point of the Hessenberg affine space: superdiagonal identically 1,
/// zero above it, free entries on and below the diagonal.
struct HessenbergPoint {
  Matrix<Rational> X;

  explicit HessenbergPoint(Matrix<Rational> m) : X(std::move(m)) {
    if (!X.square() || X.rows() < 2)
      throw std::invalid_argument("HessenbergPoint: need a square matrix, n >= 2");
    for (int i = 0; i < X.rows(); ++i)
      for (int j = i + 1; j < X.cols(); ++j) {
        const Rational want = (j == i + 1) ? Rational(1) : Rational(0);
        if (X(i, j) != want)
          throw std::invalid_argument("HessenbergPoint: bad superdiagonal structure");
      }
  }

  int n() const { return X.rows(); }
};

/// tau_r: the sum of superdiagonal slots e_{i,i+1} for i in the first r and
/// last r positions (as a set; tau_R equals the full superdiagonal).
template <class S>
Matrix<S> tau(int n, int r) {
  Matrix<S> t(n, n);
  for (int i = 0; i < n - 1; ++i)
    if (i < r || i >= n - r - 1) t(i, i + 1) = scalar_traits<S>::one();
  return t;
}

/// Strictly upper "frame" removed from gl to form p_{r-}: rows 1..r and
/// columns n-r+1..n of the strictly upper triangle (1-based description).
inline bool in_upper_frame(int n, int r, int i, int j) {
  return i < j && (i <= r - 1 || j >= n - r);
}

/// Membership pattern of the dual parabolic p_{r-} = gl minus the frame.
inline bool in_p_r_minus(int n, int r, int i, int j) {
  return !in_upper_frame(n, r, i, j);
}

/// Zero pattern of the parabolic group P_r: entries below the diagonal in the
/// first r columns and left of the diagonal in the last r rows vanish.
inline bool parabolic_allows(int n, int r, int i, int j) {
  if (j < r && i > j) return false;
  if (i >= n - r && j < i) return false;
  return true;
}

struct ParabolicElement {
  int r;
  Matrix<Rational> p;

  ParabolicElement(int level, Matrix<Rational> mat) : r(level), p(std::move(mat)) {
    if (!p.square()) throw std::invalid_argument("ParabolicElement: not square");
    const int n = p.rows();
    if (r < 0 || r > n / 2) throw std::invalid_argument("ParabolicElement: bad level");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!parabolic_allows(n, r, i, j) && !p(i, j).is_zero())
          throw std::invalid_argument("ParabolicElement: entry outside P_r pattern");
    if (det(p).is_zero())
      throw std::invalid_argument("ParabolicElement: singular matrix");
  }

  int n() const { return p.rows(); }
};

/// det of (X - eta I) with the first r rows and last r columns removed,
/// as an exact polynomial in eta of degree at most n - 2r.
template <class S>
Poly<S> chop_coeffs_t(const Matrix<S>& x, int r) {
  if (!x.square()) throw std::invalid_argument("chop_coeffs: matrix not square");
  const int n = x.rows();
  if (r < 0 || r > n / 2) throw std::invalid_argument("chop_coeffs: level out of range");
  Matrix<S> a = x.chop(r, r);
  Matrix<S> b = (-Matrix<S>::identity(n)).chop(r, r);
  return det_eta(a, b);
}

inline EtaPoly chop_coeffs(const Matrix<Rational>& x, int r) {
  return chop_coeffs_t(x, r);
}

inline EtaPoly chop_coeffs(const HessenbergPoint& x, int r) {
  return chop_coeffs_t(x.X, r);
}

/// E_{m,r}(X): the coefficient of eta^{n-2r-m} in the r-chop polynomial.
template <class S>
S chop_E_t(const Matrix<S>& x, int m, int r) {
  const int n = x.rows();
  if (m < 0 || m > n - 2 * r) throw std::invalid_argument("chop_E: index out of range");
  return chop_coeffs_t(x, r).coeff(n - 2 * r - m);
}

inline Rational chop_E(const Matrix<Rational>& x, int m, int r) {
  return chop_E_t(x, m, r);
}

/// All chops of one point with genericity flags E_{0,r} != 0.
struct ChopFamily {
  int n = 0;
  std::vector<EtaPoly> polys;   // index r = 0..R
  std::vector<bool> generic;    // E_{0,r} != 0
};

inline ChopFamily chop_family(const Matrix<Rational>& x) {
  ChopFamily fam;
  fam.n = x.rows();
  const int R = fam.n / 2;
  for (int r = 0; r <= R; ++r) {
    EtaPoly p = chop_coeffs(x, r);
    fam.generic.push_back(!p.coeff(fam.n - 2 * r).is_zero());
    fam.polys.push_back(std::move(p));
  }
  return fam;
}

/// Genericity of the ratio-invariant levels r = 1..floor((n-1)/2).
inline bool is_generic(const Matrix<Rational>& x) {
  const int n = x.rows();
  for (int r = 1; r <= (n - 1) / 2; ++r)
    if (chop_E(x, 0, r).is_zero()) return false;
  return true;
}

/// Semi-invariance weight chi_r(p) = p_11...p_rr / (p_{n-r+1,n-r+1}...p_nn).
inline Rational weight_chi(int r, const ParabolicElement& pe) {
  const int n = pe.n();
  Rational num(1), den(1);
  for (int i = 0; i < r; ++i) {
    if (pe.p(i, i).is_zero() || pe.p(n - 1 - i, n - 1 - i).is_zero())
      throw std::domain_error("weight_chi: zero diagonal entry");
    num *= pe.p(i, i);
    den *= pe.p(n - 1 - i, n - 1 - i);
  }
  return num / den;
}

/// Coadjoint action of P_r on the affine slice tau_r + p_{r-}:
/// X -> tau_r + proj_{p_{r-}}(p^{-1} (X - tau_r) p).
inline Matrix<Rational> coadjoint_P(int r, const ParabolicElement& pe,
                                    const Matrix<Rational>& x) {
  const int n = pe.n();
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("coadjoint_P: size mismatch");
  Matrix<Rational> base = x - tau<Rational>(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (in_upper_frame(n, r, i, j) && !base(i, j).is_zero())
        throw std::invalid_argument("coadjoint_P: X not in tau_r + p_{r-}");
  Matrix<Rational> conj = solve(pe.p, base * pe.p);  // p^{-1} (X - tau) p
  Matrix<Rational> result = tau<Rational>(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (in_p_r_minus(n, r, i, j)) result(i, j) += conj(i, j);
  return result;
}

/// Restricted coadjoint action of the unipotent group on strictly lower
/// matrices: Y -> proj_{n_-}(u^{-1} Y u). Leading coefficients E_{0,r} are
/// invariant under this action.
inline Matrix<Rational> coadjoint_N_restricted(const Matrix<Rational>& u,
                                               const Matrix<Rational>& y) {
  const int n = u.rows();
  if (!u.square() || y.rows() != n || y.cols() != n)
    throw std::invalid_argument("coadjoint_N_restricted: size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const Rational want = (i == j) ? Rational(1) : Rational(0);
      if (u(i, j) != want)
        throw std::invalid_argument("coadjoint_N_restricted: not unipotent upper");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!y(i, j).is_zero())
        throw std::invalid_argument("coadjoint_N_restricted: Y not strictly lower");
  return lie::project(solve(u, y * u), lie::Part::StrictLower);
}

/// Casimir ratio I_{m,r} = E_{m,r}/E_{0,r}; requires E_{0,r}(X) != 0.
inline Rational casimir_I(const HessenbergPoint& x, int m, int r) {
  Rational e0 = chop_E(x.X, 0, r);
  if (e0.is_zero())
    throw NongenericError("casimir_I: E_{0," + std::to_string(r) + "} vanishes");
  return chop_E(x.X, m, r) / e0;
}

// ---------------------------------------------------------------------------
// Random sampling (small-height rationals; see rng.hpp for the stream rule)

inline Matrix<Rational> random_hessenberg(int n, SplitMix64& g) {
  Matrix<Rational> x(n, n);
  for (int i = 0; i < n - 1; ++i) x(i, i + 1) = Rational(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) x(i, j) = g.rational();
  return x;
}

inline HessenbergPoint random_generic_hessenberg(int n, SplitMix64& g,
                                                 int max_retries = 64) {
  for (int t = 0; t < max_retries; ++t) {
    Matrix<Rational> x = random_hessenberg(n, g);
    if (is_generic(x)) return HessenbergPoint(std::move(x));
  }
  throw std::runtime_error("random_generic_hessenberg: retries exhausted");
}

inline Matrix<Rational> random_tau_affine(int n, int r, SplitMix64& g) {
  Matrix<Rational> x = tau<Rational>(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (in_p_r_minus(n, r, i, j)) x(i, j) += g.rational();
  return x;
}

inline ParabolicElement random_parabolic(int n, int r, SplitMix64& g,
                                         int max_retries = 64) {
  for (int t = 0; t < max_retries; ++t) {
    Matrix<Rational> p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (parabolic_allows(n, r, i, j)) p(i, j) = g.rational();
    if (!det(p).is_zero()) return ParabolicElement(r, std::move(p));
  }
  throw std::runtime_error("random_parabolic: retries exhausted");
}

inline Matrix<Rational> random_unipotent_upper(int n, SplitMix64& g) {
  Matrix<Rational> u = Matrix<Rational>::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) u(i, j) = g.rational();
  return u;
}

inline Matrix<Rational> random_strict_lower(int n, SplitMix64& g) {
  Matrix<Rational> y(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) y(i, j) = g.rational();
  return y;
}

// ---------------------------------------------------------------------------
// Randomized exact verification suites

struct SemiInvarianceReport {
  int n = 0, r = 0, m = 0, trials = 0;
  std::vector<int> failures;
  bool passed() const { return failures.empty(); }
};

/// Exact check E_{m,r}(Ad*_p X) = chi_r(p) E_{m,r}(X) on random rational
/// points of tau_r + p_{r-} and random parabolic elements.
inline SemiInvarianceReport semi_invariance_check(int n, int r, int m, int trials,
                                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("semi_invariance_check: trials >= 1");
  SemiInvarianceReport rep;
  rep.n = n; rep.r = r; rep.m = m; rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    Matrix<Rational> x = random_tau_affine(n, r, g);
    ParabolicElement p = random_parabolic(n, r, g);
    Rational lhs = chop_E(coadjoint_P(r, p, x), m, r);
    Rational rhs = weight_chi(r, p) * chop_E(x, m, r);
    if (lhs != rhs) rep.failures.push_back(t);
  }
  return rep;
}

struct InvarianceReport {
  int n = 0, trials = 0;
  std::vector<int> failures;
  bool passed() const { return failures.empty(); }
};

/// E_{0,r} invariance under the restricted N-coadjoint action plus
/// homogeneity E_{0,r}(tY) = t^r E_{0,r}(Y), all exact.
inline InvarianceReport n_invariance_check(int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("n_invariance_check: trials >= 1");
  InvarianceReport rep;
  rep.n = n; rep.trials = trials;
  const int R = n / 2;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    Matrix<Rational> y = random_strict_lower(n, g);
    Matrix<Rational> u = random_unipotent_upper(n, g);
    Matrix<Rational> moved = coadjoint_N_restricted(u, y);
    Rational scale = g.nonzero_rational();
    bool ok = true;
    for (int r = 1; r <= R; ++r) {
      if (chop_E(moved, 0, r) != chop_E(y, 0, r)) ok = false;
      if (chop_E(y * scale, 0, r) != scale.pow(r) * chop_E(y, 0, r)) ok = false;
    }
    if (!ok) rep.failures.push_back(t);
  }
  return rep;
}

}  // namespace borel::chops

#endif
