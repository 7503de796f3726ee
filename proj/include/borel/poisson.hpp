#ifndef BOREL_POISSON_HPP
#define BOREL_POISSON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "borel/observable.hpp"
#include "borel/rng.hpp"

namespace borel::poisson {

/// Hamiltonian vector field of F with the convention dG/dt = {G, F}:
/// Xdot = proj_{b-}([A_F, X]).
inline Matrix<Rational> hamiltonian_vf(const Observable& f, const HessenbergPoint& x) {
  Matrix<Rational> af = grad_repr(f, x);
  return lie::project(commutator(af, x.X), lie::Part::BMinus);
}

/// The maximal involutive family {Tr X^m} u {I_{m,r}}.
inline std::vector<ObsPtr> involutive_family(int n) {
  std::vector<ObsPtr> fam;
  for (int m = 1; m <= n; ++m) fam.push_back(trace_power(m));
  for (int r = 1; r <= (n - 1) / 2; ++r)
    for (int m = 1; m <= n - 2 * r; ++m) fam.push_back(chop_I_obs(m, r));
  return fam;
}

/// The complete Casimir family {Tr X} u {I_{1,r}}.
inline std::vector<ObsPtr> casimir_family(int n) {
  std::vector<ObsPtr> fam;
  fam.push_back(trace_power(1));
  for (int r = 1; r <= (n - 1) / 2; ++r) fam.push_back(chop_I_obs(1, r));
  return fam;
}

struct SuiteReport {
  int n = 0, trials = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// All pairwise brackets of the involutive family vanish exactly at random
/// generic rational points.
inline SuiteReport involutivity_suite(int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("involutivity_suite: trials >= 1");
  SuiteReport rep;
  rep.n = n;
  rep.trials = trials;
  std::vector<ObsPtr> fam = involutive_family(n);
  for (int t = 0; t < trials; ++t) {
    SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    HessenbergPoint x = chops::random_generic_hessenberg(n, g);
    std::vector<Matrix<Rational>> grads;
    grads.reserve(fam.size());
    for (const auto& f : fam) grads.push_back(grad_repr(*f, x));
    for (size_t i = 0; i < fam.size(); ++i)
      for (size_t j = i + 1; j < fam.size(); ++j) {
        Rational b = (x.X * commutator(grads[i], grads[j])).trace();
        if (!b.is_zero())
          rep.failures.push_back("trial " + std::to_string(t) + ": {" +
                                 fam[i]->name() + ", " + fam[j]->name() + "} != 0");
      }
  }
  return rep;
}

/// The Casimirs bracket to zero against every coordinate observable.
inline SuiteReport casimir_suite(int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("casimir_suite: trials >= 1");
  SuiteReport rep;
  rep.n = n;
  rep.trials = trials;
  std::vector<ObsPtr> cas = casimir_family(n);
  std::vector<ObsPtr> coords;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) coords.push_back(coordinate(i, j));
  for (int t = 0; t < trials; ++t) {
    SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    HessenbergPoint x = chops::random_generic_hessenberg(n, g);
    for (const auto& c : cas) {
      Matrix<Rational> ac = grad_repr(*c, x);
      for (const auto& co : coords) {
        Rational b = (x.X * commutator(ac, grad_repr(*co, x))).trace();
        if (!b.is_zero())
          rep.failures.push_back("trial " + std::to_string(t) + ": {" + c->name() +
                                 ", " + co->name() + "} != 0");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Full Kostant-Toda flow (float mode)

inline void check_hessenberg_shape(const Matrix<double>& x) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = i + 1; j < x.cols(); ++j) {
      const double want = (j == i + 1) ? 1.0 : 0.0;
      if (x(i, j) != want)
        throw std::invalid_argument("toda: X0 must be Hessenberg with unit superdiagonal");
    }
}

/// Toda vector field Xdot = proj_{b-}([proj_{b+} X, X]); the result lies in
/// b-, so the superdiagonal is never integrated.
inline Matrix<double> toda_vf(const Matrix<double>& x) {
  return lie::project(commutator(lie::project(x, lie::Part::BPlus), x),
                      lie::Part::BMinus);
}

struct TodaSeries {
  std::vector<double> times;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // values[k][step]
  std::vector<std::vector<double>> drifts;  // |v - v0| / max(1, |v0|)
  Matrix<double> final_x;
  double max_drift = 0.0;
  /// False once the flow loses genericity or leaves the bounded regime
  /// (the full flow blows up in finite time off the regular strata);
  /// failure_time records when.
  bool regular_throughout = true;
  double failure_time = -1.0;
};

/// Observables whose drift the integrator reports by default.
inline std::vector<ObsPtr> standard_invariants(int n) { return involutive_family(n); }

/// Classical fixed-step RK4 on the Toda field, tracking the given
/// observables and their relative drift from t = 0.
inline TodaSeries toda_integrate(Matrix<double> x, double T, double dt,
                                 const std::vector<ObsPtr>& obs) {
  if (dt <= 0) throw std::invalid_argument("toda_integrate: dt must be positive");
  check_hessenberg_shape(x);
  const int n = x.rows();
  TodaSeries out;
  for (const auto& o : obs) out.names.push_back(o->name());
  out.values.assign(obs.size(), {});
  out.drifts.assign(obs.size(), {});

  // Along a sorting trajectory E_{0,r} decays like the (positive) character
  // of the acting group element; only a catastrophic relative collapse or an
  // entry blow-up signals the boundary of the regular stratum.
  std::vector<double> e_base((n - 1) / 2 + 1, 0.0);
  for (int r = 1; r <= (n - 1) / 2; ++r) {
    e_base[r] = std::fabs(chops::chop_E_t(x, 0, r));
    if (e_base[r] < 1e-12) throw NongenericError("toda_integrate: X0 not generic");
  }
  for (const double& e : x.entries())
    if (!std::isfinite(e)) throw NongenericError("toda_integrate: X0 not finite");
  auto regular_now = [&](const Matrix<double>& m) {
    for (const double& e : m.entries())
      if (!std::isfinite(e) || std::fabs(e) > 1e8) return false;
    for (int r = 1; r <= (n - 1) / 2; ++r)
      if (std::fabs(chops::chop_E_t(m, 0, r)) < 1e-30 * e_base[r]) return false;
    return true;
  };

  std::vector<double> base(obs.size());
  const long steps = static_cast<long>(std::ceil(T / dt - 1e-9));
  double t = 0.0;
  for (long s = 0; s <= steps; ++s) {
    if (!regular_now(x)) {
      out.regular_throughout = false;
      out.failure_time = t;
      break;
    }
    out.times.push_back(t);
    for (size_t k = 0; k < obs.size(); ++k) {
      double v = obs[k]->eval(x);
      if (s == 0) base[k] = v;
      double drift = std::fabs(v - base[k]) / std::max(1.0, std::fabs(base[k]));
      out.values[k].push_back(v);
      out.drifts[k].push_back(drift);
      out.max_drift = std::max(out.max_drift, drift);
    }
    if (s == steps) break;
    Matrix<double> k1 = toda_vf(x);
    Matrix<double> k2 = toda_vf(x + k1 * (dt / 2));
    Matrix<double> k3 = toda_vf(x + k2 * (dt / 2));
    Matrix<double> k4 = toda_vf(x + k3 * dt);
    x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    t += dt;
  }
  out.final_x = std::move(x);
  return out;
}

/// Random float Hessenberg point with entries in [-scale, scale],
/// resampled until the genericity flags hold.
inline Matrix<double> random_hessenberg_f(int n, SplitMix64& g, double scale = 0.5,
                                          int max_retries = 64) {
  for (int t = 0; t < max_retries; ++t) {
    Matrix<double> x(n, n);
    for (int i = 0; i < n - 1; ++i) x(i, i + 1) = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) x(i, j) = g.uniform(-scale, scale);
    bool ok = true;
    for (int r = 1; r <= (n - 1) / 2; ++r)
      if (std::fabs(chops::chop_E_t(x, 0, r)) < 1e-3) ok = false;
    if (ok) return x;
  }
  throw std::runtime_error("random_hessenberg_f: retries exhausted");
}

/// Random generic starting point whose trajectory stays regular on [0, T].
/// Uniform Hessenberg draws almost surely blow up in finite time (the tau
/// functions of the factorization solution vanish), so points are sampled
/// near the tridiagonal locus, where the forward flow is complete, with a
/// full lower perturbation restoring genericity; a coarse probe integration
/// rejects the rare irregular draw.
inline Matrix<double> random_regular_hessenberg_f(int n, std::uint64_t seed, double T,
                                                  double perturbation = 0.2,
                                                  int max_tries = 64) {
  for (int t = 0; t < max_tries; ++t) {
    SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    Matrix<double> x(n, n);
    for (int i = 0; i < n - 1; ++i) x(i, i + 1) = 1.0;
    for (int i = 0; i < n; ++i) x(i, i) = g.uniform(-1.0, 1.0);
    for (int i = 0; i + 1 < n; ++i) x(i + 1, i) = g.uniform(0.2, 1.0);
    for (int i = 2; i < n; ++i)
      for (int j = 0; j <= i - 2; ++j) x(i, j) = g.uniform(-perturbation, perturbation);
    bool generic = true;
    for (int r = 1; r <= (n - 1) / 2; ++r)
      if (std::fabs(chops::chop_E_t(x, 0, r)) < 1e-6) generic = false;
    if (!generic) continue;
    if (toda_integrate(x, T, 0.02, {}).regular_throughout) return x;
  }
  throw std::runtime_error("random_regular_hessenberg_f: retries exhausted");
}

}  // namespace borel::poisson

#endif
