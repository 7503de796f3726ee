// Acceptance suite: one line per criterion, exact tolerances pinned in code.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "borel/chops.hpp"
#include "borel/dpop.hpp"
#include "borel/heisenberg.hpp"
#include "borel/orbits.hpp"
#include "borel/poisson.hpp"

using namespace borel;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] %-28s %s (%.1fs)\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

template <class F>
void criterion(const std::string& name, F f) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = f(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(name, pass, detail, dt);
}

// Semi-invariance of every chop coefficient under the parabolic coadjoint
// action: exact, 20 trials per (n, r, m), n = 2..7.
bool semi_invariance(std::string& detail) {
  long cases = 0, failures = 0;
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= n / 2; ++r)
      for (int m = 0; m <= n - 2 * r; ++m) {
        auto rep = chops::semi_invariance_check(n, r, m, 20, 42);
        failures += static_cast<long>(rep.failures.size());
        ++cases;
      }
  detail = std::to_string(cases) + " (n,r,m) cases x 20 exact trials, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

// Invariance of the leading coefficients under the restricted unipotent
// action, plus homogeneity of degree r: exact, n = 2..7.
bool n_invariance(std::string& detail) {
  long failures = 0;
  for (int n = 2; n <= 7; ++n)
    failures += static_cast<long>(chops::n_invariance_check(n, 20, 42).failures.size());
  detail = "n = 2..7, 20 exact trials each, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// All pairwise brackets of {Tr X^m} u {I_{m,r}} vanish exactly, n = 2..5,
// plus the larger n = 6 family.
bool involutivity(std::string& detail) {
  long failures = 0;
  for (int n = 2; n <= 5; ++n)
    failures += static_cast<long>(poisson::involutivity_suite(n, 10, 7).failures.size());
  failures += static_cast<long>(poisson::involutivity_suite(6, 10, 7).failures.size());
  detail = "n = 2..6, 10 generic points each, all pairs, " +
           std::to_string(failures) + " nonzero brackets";
  return failures == 0;
}

// {Tr X, x_ij} = {I_{1,r}, x_ij} = 0 exactly for every coordinate, n = 2..5.
bool casimir_property(std::string& detail) {
  long failures = 0;
  for (int n = 2; n <= 5; ++n)
    failures += static_cast<long>(poisson::casimir_suite(n, 5, 3).failures.size());
  detail = "n = 2..5, 5 generic points each, " + std::to_string(failures) +
           " nonzero brackets";
  return failures == 0;
}

// Real-polarization conditions (1)-(4) at f(kappa), 5 random kappa per n,
// n = 2..7; dimension identity as integer arithmetic for n = 2..12.
bool pukanszky(std::string& detail) {
  long failures = 0;
  for (int n = 2; n <= 7; ++n)
    for (int t = 0; t < 5; ++t) {
      SplitMix64 g = SplitMix64::stream(11, static_cast<std::uint64_t>(100 * n + t));
      std::vector<Rational> kappa;
      for (int i = 0; i < n - n / 2; ++i) kappa.push_back(g.rational());
      if (!orbits::pukanszky_check(n, kappa).passed()) ++failures;
    }
  bool dims = true;
  for (int n = 2; n <= 12; ++n) {
    orbits::PolarizationData pd = orbits::polarization_data(n);
    if (2 * static_cast<int>(pd.h.size()) - (n - n / 2) != n * (n + 1) / 2) dims = false;
  }
  detail = "conditions 1-4 for n = 2..7 (5 kappa each), dimension identity n = 2..12";
  return failures == 0 && dims;
}

// Orbit parameters from Casimirs: exact round trips, n = 2..6.
bool kappa_round_trip(std::string& detail) {
  long failures = 0;
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      SplitMix64 g = SplitMix64::stream(17, static_cast<std::uint64_t>(100 * n + t));
      chops::HessenbergPoint x = chops::random_generic_hessenberg(n, g);
      std::vector<Rational> kappa = orbits::kappa_from_casimirs(x);
      orbits::CrossSectionPoint cs = orbits::build_cross_section(n, kappa);
      if (cs.f.trace() != x.X.trace()) ++failures;
      for (int r = 1; r <= (n - 1) / 2; ++r)
        if (chops::casimir_I(chops::HessenbergPoint(cs.f), 1, r) !=
            chops::casimir_I(x, 1, r))
          ++failures;
      // the recovery fixes the cross-section slice pointwise
      if (orbits::kappa_from_casimirs(chops::HessenbergPoint(cs.f)) != kappa)
        ++failures;
    }
  detail = "n = 2..6, 10 generic points each, Tr and I_{1,r} matched exactly, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

// Symbol exponents, degree and beta-weight identities, n = 2..16.
bool dp_symbol(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 16; ++n) {
    dpop::DPSymbol s = dpop::dp_exponents(n);
    const long R = n / 2;
    for (int r = 0; r + 1 < R; ++r) ok = ok && s.alpha[r] == 2;
    ok = ok && s.alpha[R - 1] == (n % 2 ? 2 : 1);
    ok = ok && s.degree == (n % 2 ? R * (R + 1) : R * R);
    ok = ok && dpop::dp_weight_check(n).passed();
  }
  detail = "exponents, degree and beta-weight identities, n = 2..16";
  return ok;
}

// rho(lambda)^2 = |det Gram(b_lambda on v)| exactly, n = 3..6.
bool pfaffian(std::string& detail) {
  long failures = 0;
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      SplitMix64 g = SplitMix64::stream(23, static_cast<std::uint64_t>(100 * n + t));
      std::vector<Rational> lam;
      for (int r = 0; r < n / 2; ++r) lam.push_back(g.nonzero_rational());
      dpop::LambdaPoint l(n, lam);
      Rational rho = dpop::pfaffian_rho(l);
      if (rho * rho != det(dpop::gram_on_v(l)).abs()) ++failures;
      if (dpop::pfaffian_of_gram(l) != rho) ++failures;
    }
  detail = "n = 3..6, 10 nonzero lambda each, exact, " + std::to_string(failures) +
           " failures";
  return failures == 0;
}

// RK4 conservation: drift of every invariant <= 1e-8 at dt = 1e-3 over
// T = 10 for n = 4, 5; halving the step shows fourth-order convergence.
bool toda_conservation(std::string& detail) {
  bool ok = true;
  char buf[160];
  std::string notes;
  for (int n : {4, 5}) {
    Matrix<double> x0 = poisson::random_regular_hessenberg_f(n, 1, 10.0);
    std::vector<poisson::ObsPtr> obs = poisson::standard_invariants(n);
    poisson::TodaSeries fine = poisson::toda_integrate(x0, 10.0, 1e-3, obs);
    ok = ok && fine.regular_throughout && fine.max_drift <= 1e-8;
    // convergence order measured above the roundoff floor
    double d1 = poisson::toda_integrate(x0, 10.0, 0.05, obs).max_drift;
    double d2 = poisson::toda_integrate(x0, 10.0, 0.025, obs).max_drift;
    ok = ok && d1 / d2 >= 12.0;
    std::snprintf(buf, sizeof buf, "n=%d drift %.2e, halving ratio %.1f; ", n,
                  fine.max_drift, d1 / d2);
    notes += buf;
  }
  detail = notes + "bounds: 1e-8 and >= 12";
  return ok;
}

// Plancherel isometry for three Gaussian-type test functions; ratio within
// 1 percent at (grid 256, L 10, lmax 8, nlambda 160) and closer to 1 after
// refining grid and quadrature 2x.
bool heisenberg_plancherel(std::string& detail) {
  struct Family {
    double s1, c1, s2, s3, mu;
  };
  const std::vector<Family> families = {{1.0, 0.0, 2.5, 0.50, 0.12},
                                        {0.8, 0.6, 2.2, 0.45, 0.10},
                                        {1.2, -0.4, 2.8, 0.55, 0.15}};
  bool ok = true;
  char buf[64];
  std::string notes;
  for (const Family& fam : families) {
    auto run = [&fam](int grid, int nl) {
      return heis::plancherel_isometry_demo(
          heis::GridFunction::gaussian(grid, 10.0, fam.s1, fam.c1),
          heis::GridFunction::gaussian(grid, 10.0, fam.s2),
          heis::GridFunction::hermite_gaussian(grid, 10.0, fam.s3, fam.mu), 8.0, nl);
    };
    heis::PlancherelReport base = run(256, 160);
    heis::PlancherelReport refined = run(512, 320);
    ok = ok && base.ratio >= 0.99 && base.ratio <= 1.01;
    ok = ok && std::fabs(refined.ratio - 1.0) <= std::fabs(base.ratio - 1.0);
    std::snprintf(buf, sizeof buf, "%.4f->%.4f ", base.ratio, refined.ratio);
    notes += buf;
  }
  detail = "ratios (base->refined): " + notes + "bound [0.99, 1.01]";
  return ok;
}

// Jacobi identity of the bracket on coordinate observables: exact, n = 2..4.
bool jacobi(std::string& detail) {
  long checked = 0, failures = 0;
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 2; ++t) {
      SplitMix64 g = SplitMix64::stream(29, static_cast<std::uint64_t>(10 * n + t));
      chops::HessenbergPoint x = chops::random_generic_hessenberg(n, g);
      std::vector<poisson::ObsPtr> coords;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) coords.push_back(poisson::coordinate(i, j));
      auto lin = [&](const poisson::ObsPtr& a, const poisson::ObsPtr& b) {
        return poisson::linear(
            commutator(poisson::grad_repr(*a, x), poisson::grad_repr(*b, x)), "inner");
      };
      for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j)
          for (size_t k = j + 1; k < coords.size(); ++k) {
            Rational sum = poisson::bracket(*coords[i], *lin(coords[j], coords[k]), x) +
                           poisson::bracket(*coords[j], *lin(coords[k], coords[i]), x) +
                           poisson::bracket(*coords[k], *lin(coords[i], coords[j]), x);
            ++checked;
            if (!sum.is_zero()) ++failures;
          }
    }
  detail = std::to_string(checked) + " coordinate triples, n = 2..4, exact, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion("semi-invariance", semi_invariance);
  criterion("N-invariance+homogeneity", n_invariance);
  criterion("involutivity", involutivity);
  criterion("casimir-property", casimir_property);
  criterion("pukanszky-polarization", pukanszky);
  criterion("kappa-round-trip", kappa_round_trip);
  criterion("dp-symbol", dp_symbol);
  criterion("pfaffian-consistency", pfaffian);
  criterion("toda-conservation", toda_conservation);
  criterion("heisenberg-plancherel", heisenberg_plancherel);
  criterion("jacobi-identity", jacobi);
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 11 criteria failed (total %.1fs)\n", g_failures, total);
  return g_failures == 0 ? 0 : 1;
}
