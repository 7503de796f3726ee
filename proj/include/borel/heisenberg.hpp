#ifndef BOREL_HEISENBERG_HPP
#define BOREL_HEISENBERG_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "borel/matrix.hpp"

namespace borel::heis {

/// Element of the layer-r Heisenberg group M_r inside n x n matrices, in
/// exponential coordinates: q along the column slots, p along the row slots,
/// c on the center slot.
struct HeisenbergElement {
  int n = 0;
  int r = 1;
  std::vector<double> q, p;
  double c = 0.0;

  HeisenbergElement(int size, int layer, std::vector<double> qq, std::vector<double> pp,
                    double cc)
      : n(size), r(layer), q(std::move(qq)), p(std::move(pp)), c(cc) {
    if (r < 1 || r > n / 2) throw std::invalid_argument("HeisenbergElement: bad layer");
    const size_t d = static_cast<size_t>(n - 2 * r);
    if (q.size() != d || p.size() != d)
      throw std::invalid_argument("HeisenbergElement: coordinate dimension mismatch");
  }

  int d() const { return n - 2 * r; }

  static HeisenbergElement identity(int n, int r) {
    return HeisenbergElement(n, r, std::vector<double>(n - 2 * r, 0.0),
                             std::vector<double>(n - 2 * r, 0.0), 0.0);
  }

  static HeisenbergElement central(int n, int r, double c) {
    HeisenbergElement e = identity(n, r);
    e.c = c;
    return e;
  }

  HeisenbergElement inverse() const {
    HeisenbergElement e = *this;
    for (auto& v : e.q) v = -v;
    for (auto& v : e.p) v = -v;
    e.c = -e.c;
    return e;
  }
};

/// Product in exponential coordinates, matching matrix multiplication of the
/// n x n exponentials: central part picks up (p.q' - q.p')/2.
inline HeisenbergElement group_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
  if (x.n != y.n || x.r != y.r)
    throw std::invalid_argument("group_mul: layer mismatch");
  HeisenbergElement out = x;
  double cross = 0.0;
  for (int k = 0; k < x.d(); ++k) {
    out.q[k] += y.q[k];
    out.p[k] += y.p[k];
    cross += x.p[k] * y.q[k] - x.q[k] * y.p[k];
  }
  out.c = x.c + y.c + cross / 2;
  return out;
}

/// Group commutator x y x^{-1} y^{-1}; central, with c = p.q' - q.p'.
inline HeisenbergElement group_commutator(const HeisenbergElement& x,
                                          const HeisenbergElement& y) {
  return group_mul(group_mul(x, y), group_mul(x.inverse(), y.inverse()));
}

/// exp of q.Q + p.P + c.C in the defining n x n representation; the layer is
/// two-step nilpotent, so the series terminates at the quadratic term.
template <class S>
Matrix<S> heis_matrix(int n, int r, const std::vector<S>& q, const std::vector<S>& p,
                      const S& c) {
  const int d = n - 2 * r;
  if (static_cast<int>(q.size()) != d || static_cast<int>(p.size()) != d)
    throw std::invalid_argument("heis_matrix: dimension mismatch");
  Matrix<S> m = Matrix<S>::identity(n);
  S pq = scalar_traits<S>::zero();
  for (int k = 0; k < d; ++k) {
    m(r - 1, r + k) = p[k];        // row slots e_{r, r+k}
    m(r + k, n - r) = q[k];        // column slots e_{r+k, n-r+1}
    pq += p[k] * q[k];
  }
  m(r - 1, n - r) = c + pq / scalar_traits<S>::from_int(2);
  return m;
}

/// Exponential coordinates of a unipotent element of the layer group.
template <class S>
void heis_coords(const Matrix<S>& m, int n, int r, std::vector<S>& q,
                 std::vector<S>& p, S& c) {
  const int d = n - 2 * r;
  q.assign(d, scalar_traits<S>::zero());
  p.assign(d, scalar_traits<S>::zero());
  S pq = scalar_traits<S>::zero();
  for (int k = 0; k < d; ++k) {
    p[k] = m(r - 1, r + k);
    q[k] = m(r + k, n - r);
    pq += p[k] * q[k];
  }
  c = m(r - 1, n - r) - pq / scalar_traits<S>::from_int(2);
}

// ---------------------------------------------------------------------------
// Grid functions and the Schroedinger representation (d_r = 1)

/// Complex function sampled at xi_a = -L + a h, h = 2L/N (left endpoint
/// included, right endpoint implicit zero; samples decay before the edge).
struct GridFunction {
  double L = 0.0;
  std::vector<std::complex<double>> v;

  GridFunction(double halfwidth, std::vector<std::complex<double>> samples)
      : L(halfwidth), v(std::move(samples)) {
    if (L <= 0.0 || v.empty())
      throw std::invalid_argument("GridFunction: degenerate grid");
  }

  int size() const { return static_cast<int>(v.size()); }
  double h() const { return 2.0 * L / size(); }
  double point(int a) const { return -L + a * h(); }

  static GridFunction gaussian(int nsamples, double L, double sigma,
                               double center = 0.0, double amplitude = 1.0) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian: sigma must be positive");
    std::vector<std::complex<double>> s(nsamples);
    const double h = 2.0 * L / nsamples;
    for (int a = 0; a < nsamples; ++a) {
      double x = -L + a * h;
      s[a] = amplitude * std::exp(-(x - center) * (x - center) / (2 * sigma * sigma));
    }
    return GridFunction(L, std::move(s));
  }

  /// Gaussian times an affine factor: (x - center + mu) exp(-(x-center)^2 /
  /// (2 sigma^2)). With mu = 0 the mean vanishes, which pushes the spectral
  /// mass of the demo away from lambda = 0 where a finite grid cannot hold
  /// the operator kernel.
  static GridFunction hermite_gaussian(int nsamples, double L, double sigma,
                                       double mu = 0.0, double center = 0.0) {
    if (sigma <= 0.0) throw std::invalid_argument("hermite_gaussian: sigma must be positive");
    std::vector<std::complex<double>> s(nsamples);
    const double h = 2.0 * L / nsamples;
    for (int a = 0; a < nsamples; ++a) {
      double x = -L + a * h;
      s[a] = (x - center + mu) *
             std::exp(-(x - center) * (x - center) / (2 * sigma * sigma));
    }
    return GridFunction(L, std::move(s));
  }

  static GridFunction zero(int nsamples, double L) {
    return GridFunction(L, std::vector<std::complex<double>>(nsamples, 0.0));
  }

  /// Trapezoid L2 norm squared (implicit zero sample at the right endpoint).
  double norm_sq() const {
    double acc = 0.0;
    for (int a = 0; a < size(); ++a) {
      double w = (a == 0) ? 0.5 : 1.0;
      acc += w * std::norm(v[a]);
    }
    return acc * h();
  }

  double norm() const { return std::sqrt(norm_sq()); }
};

/// Linear interpolation with zero extension outside [-L, L).
inline std::complex<double> sample(const GridFunction& f, double x) {
  double t = (x + f.L) / f.h();
  if (t < 0.0 || t > f.size() - 1) {
    // one cell of slack at the right edge, where the implicit sample is 0
    if (t > f.size() - 1 && t <= f.size()) {
      int a = f.size() - 1;
      double w = t - a;
      return (1.0 - w) * f.v[a];
    }
    return 0.0;
  }
  int a = static_cast<int>(t);
  if (a == f.size() - 1) return f.v[a];
  double w = t - a;
  return (1.0 - w) * f.v[a] + w * f.v[a + 1];
}

/// Schroedinger representation of the d_r = 1 layer on grid functions:
/// [pi_lambda(q,p,c) f](xi) = exp(i lambda (p xi - p q / 2 + c)) f(xi - q).
/// The phase/shift pair is the homomorphism convention for the exponential-
/// coordinate matrix product implemented by group_mul.
inline GridFunction schrodinger_apply(double lambda, const HeisenbergElement& g,
                                      const GridFunction& f) {
  if (lambda == 0.0) throw std::invalid_argument("schrodinger_apply: lambda must be nonzero");
  if (g.d() != 1)
    throw std::invalid_argument("schrodinger_apply: grid representation needs d_r = 1");
  const double q = g.q[0], p = g.p[0];
  std::vector<std::complex<double>> out(f.size());
  for (int a = 0; a < f.size(); ++a) {
    double xi = f.point(a);
    std::complex<double> phase =
        std::exp(std::complex<double>(0.0, lambda * (p * xi - 0.5 * p * q + g.c)));
    out[a] = phase * sample(f, xi - q);
  }
  return GridFunction(f.L, std::move(out));
}

// ---------------------------------------------------------------------------
// Plancherel isometry demo

struct PlancherelReport {
  int grid = 0;
  double L = 0.0;
  double lmax = 0.0;
  int nlambda = 0;
  double lhs = 0.0;   // ||f||^2 on the group
  double rhs = 0.0;   // spectral side
  double ratio = 1.0;
  double cfit = 2.0;  // fitted constant against the |lambda|^d density
};

/// Group-side vs spectral-side comparison for a separable f = g1 x g2 x g3
/// on the d_r = 1 layer. The spectral parameter carries the normalized
/// Plancherel density: with the weight written as 2^d d! |lambda|^d, the
/// measure is d lambda / (2^d d! (2 pi)^{d+1}), so the two sides agree at 1.
inline PlancherelReport plancherel_isometry_demo(const GridFunction& g1,
                                                 const GridFunction& g2,
                                                 const GridFunction& g3, double lmax,
                                                 int nlambda) {
  const int N = g1.size();
  if (g2.size() != N || g3.size() != N || g2.L != g1.L || g3.L != g1.L)
    throw std::invalid_argument("plancherel demo: grids must match");
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("plancherel demo: need an even grid size");
  if (lmax <= 0.0 || nlambda < 2)
    throw std::invalid_argument("plancherel demo: bad spectral quadrature");
  const double L = g1.L;
  const double h = g1.h();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const int d = 1;
  const double cdim = 2.0;  // 2^d d! for d = 1

  PlancherelReport rep;
  rep.grid = N;
  rep.L = L;
  rep.lmax = lmax;
  rep.nlambda = nlambda;
  rep.lhs = g1.norm_sq() * g2.norm_sq() * g3.norm_sq();

  // |g1|^2 on the difference lattice (a-b)h = point(a-b+N/2)
  std::vector<double> diff_sq(2 * N - 1, 0.0);
  for (int k = -(N - 1); k <= N - 1; ++k) {
    int idx = k + N / 2;
    if (idx >= 0 && idx < N) diff_sq[k + N - 1] = std::norm(g1.v[idx]);
  }

  const double hl = 2.0 * lmax / nlambda;
  double spectral = 0.0;  // integral of 2^d d! |lambda|^d ||fhat||_HS^2
  for (int j = 0; j <= nlambda; ++j) {
    const double lambda = -lmax + j * hl;
    const double wq = (j == 0 || j == nlambda) ? 0.5 : 1.0;
    // hat g3(-lambda) = h sum g3(x) e^{i lambda x}
    std::complex<double> ghat3 = 0.0;
    for (int b = 0; b < N; ++b)
      ghat3 += g3.v[b] * std::exp(std::complex<double>(0.0, lambda * g3.point(b)));
    ghat3 *= h;
    // |hat g2(-lambda u_s)|^2 at the half-lattice u_s = -L + s h/2
    std::vector<double> tab2(2 * N - 1);
    for (int s = 0; s <= 2 * N - 2; ++s) {
      const double u = -L + s * h / 2.0;
      std::complex<double> acc = 0.0;
      for (int b = 0; b < N; ++b)
        acc += g2.v[b] * std::exp(std::complex<double>(0.0, lambda * u * g2.point(b)));
      tab2[s] = std::norm(acc * h);
    }
    double hs = 0.0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        hs += diff_sq[a - b + N - 1] * tab2[a + b];
    hs *= h * h * std::norm(ghat3);
    spectral += wq * hl * cdim * std::pow(std::fabs(lambda), d) * hs;
  }
  rep.rhs = spectral / (cdim * std::pow(two_pi, d + 1));
  if (rep.lhs > 0.0) {
    rep.ratio = rep.rhs / rep.lhs;
    rep.cfit = cdim * rep.ratio;
  } else {
    rep.ratio = (rep.rhs == 0.0) ? 1.0 : 0.0;
    rep.cfit = cdim * rep.ratio;
  }
  return rep;
}

}  // namespace borel::heis

#endif
