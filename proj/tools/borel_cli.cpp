// Batch front-end: verification suites, the Toda flow, cross-section and
// symbol queries, and the Plancherel demo. All structured output is JSON
// (CSV for time series); identical invocations produce byte-identical
// reports. Exit codes: 0 all checks pass, 1 mathematical failure, 2
// usage/input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "borel/chops.hpp"
#include "borel/dpop.hpp"
#include "borel/heisenberg.hpp"
#include "borel/json_io.hpp"
#include "borel/liestruct.hpp"
#include "borel/orbits.hpp"
#include "borel/poisson.hpp"

using nlohmann::json;
using namespace borel;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
    out << report.dump(2) << "\n";
  }
}

int cmd_describe(int n, const std::string& out) {
  emit(io::decomposition_to_json(lie::build_decomposition(n)), out);
  return kExitPass;
}

json pukanszky_case_json(const orbits::PukanszkyReport& rep,
                         const std::vector<Rational>& kappa) {
  json kap = json::array();
  for (const auto& k : kappa) kap.push_back(k.str());
  auto pf = [](bool b) { return b ? "pass" : "fail"; };
  return json{{"kappa", std::move(kap)},
              {"conditions",
               json{{"c1_stability", pf(rep.stability)},
                    {"c2_isotropic", pf(rep.isotropic)},
                    {"c3_dimension", pf(rep.dimension)},
                    {"c4_pukanszky", pf(rep.fiber_spanned)}}}};
}

json dp_report_json(int n) {
  dpop::DPSymbol sym = dpop::dp_exponents(n);
  dpop::DPWeightReport rep = dpop::dp_weight_check(n);
  auto pf = [](bool b) { return b ? "pass" : "fail"; };
  return json{{"n", n},
              {"alpha", sym.alpha},
              {"degree", sym.degree},
              {"weight_beta", sym.weight_beta},
              {"identity_checks",
               json{{"toeplitz", pf(rep.toeplitz_solved)},
                    {"weight", pf(rep.weight_identity)},
                    {"degree", pf(rep.degree_identity)}}}};
}

int cmd_verify(const std::string& suite, int n, int trials, std::uint64_t seed,
               const std::string& out) {
  json report{{"suite", suite}, {"n", n}, {"seed", seed}};
  long failures = 0;
  if (suite == "semiinv") {
    json cases = json::array();
    for (int r = 1; r <= n / 2; ++r)
      for (int m = 0; m <= n - 2 * r; ++m) {
        auto rep = chops::semi_invariance_check(n, r, m, trials, seed);
        failures += static_cast<long>(rep.failures.size());
        cases.push_back(json{{"r", r}, {"m", m}, {"trials", trials},
                             {"failures", rep.failures}});
      }
    report["trials"] = trials;
    report["cases"] = std::move(cases);
  } else if (suite == "ninv") {
    auto rep = chops::n_invariance_check(n, trials, seed);
    failures = static_cast<long>(rep.failures.size());
    report["trials"] = trials;
    report["failures"] = rep.failures;
  } else if (suite == "involutivity") {
    auto rep = poisson::involutivity_suite(n, trials, seed);
    failures = static_cast<long>(rep.failures.size());
    report["trials"] = trials;
    report["failures"] = rep.failures;
  } else if (suite == "casimir") {
    auto rep = poisson::casimir_suite(n, trials, seed);
    failures = static_cast<long>(rep.failures.size());
    report["trials"] = trials;
    report["failures"] = rep.failures;
  } else if (suite == "pukanszky") {
    json cases = json::array();
    for (int t = 0; t < trials; ++t) {
      SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
      std::vector<Rational> kappa;
      for (int i = 0; i < n - n / 2; ++i) kappa.push_back(g.rational());
      auto rep = orbits::pukanszky_check(n, kappa);
      if (!rep.passed()) ++failures;
      cases.push_back(pukanszky_case_json(rep, kappa));
    }
    report["trials"] = trials;
    report["cases"] = std::move(cases);
  } else if (suite == "dp") {
    report = dp_report_json(n);
    report["suite"] = suite;
    report["seed"] = seed;
    if (!dpop::dp_weight_check(n).passed()) ++failures;
  } else {
    throw CLI::ValidationError("verify", "unknown suite: " + suite);
  }
  report["total_failures"] = failures;
  emit(report, out);
  return failures == 0 ? kExitPass : kExitMathFailure;
}

int cmd_toda(int n, double T, double dt, const std::string& x0_path, bool random,
             std::uint64_t seed, const std::string& out) {
  Matrix<double> x0(0, 0);
  if (random) {
    x0 = poisson::random_regular_hessenberg_f(n, seed, T);
  } else {
    Matrix<Rational> xq = io::read_matrix_file(x0_path);
    if (xq.rows() != n || xq.cols() != n)
      throw std::invalid_argument("toda: matrix size does not match --n");
    x0 = to_double(xq);
  }
  std::vector<poisson::ObsPtr> obs = poisson::standard_invariants(n);
  poisson::TodaSeries ts = poisson::toda_integrate(x0, T, dt, obs);

  std::ostream* csv = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::invalid_argument("cannot open output path: " + out);
    csv = &file;
  }
  *csv << "t";
  for (const auto& name : ts.names) *csv << "," << name;
  for (const auto& name : ts.names) *csv << ",drift_" << name;
  *csv << "\n";
  csv->precision(17);
  for (size_t s = 0; s < ts.times.size(); ++s) {
    *csv << ts.times[s];
    for (size_t k = 0; k < ts.names.size(); ++k) *csv << "," << ts.values[k][s];
    for (size_t k = 0; k < ts.names.size(); ++k) *csv << "," << ts.drifts[k][s];
    *csv << "\n";
  }

  json summary{{"n", n},        {"t", T},
               {"dt", dt},      {"steps", ts.times.size()},
               {"max_relative_drift", ts.max_drift},
               {"regular", ts.regular_throughout}};
  if (!ts.regular_throughout) summary["failure_time"] = ts.failure_time;
  (out.empty() ? std::cerr : std::cout) << summary.dump(2) << "\n";
  return ts.regular_throughout ? kExitPass : kExitMathFailure;
}

int cmd_cross_section(const std::string& x_path, const std::string& out) {
  chops::HessenbergPoint x(io::read_matrix_file(x_path));
  std::vector<Rational> kappa = orbits::kappa_from_casimirs(x);
  orbits::CrossSectionPoint cs = orbits::build_cross_section(x.n(), kappa);
  json kap = json::array();
  for (const auto& k : kappa) kap.push_back(k.str());
  emit(json{{"n", x.n()}, {"kappa", std::move(kap)}, {"f", io::matrix_to_json(cs.f)}},
       out);
  return kExitPass;
}

int cmd_heisenberg(int grid, double L, double lmax, int nlambda,
                   const std::string& function, const std::string& out) {
  heis::PlancherelReport rep;
  if (function == "zero") {
    heis::GridFunction z = heis::GridFunction::zero(grid, L);
    rep = heis::plancherel_isometry_demo(z, z, z, lmax, nlambda);
  } else if (function == "gaussian") {
    rep = heis::plancherel_isometry_demo(
        heis::GridFunction::gaussian(grid, L, 1.0),
        heis::GridFunction::gaussian(grid, L, 2.5),
        heis::GridFunction::hermite_gaussian(grid, L, 0.5, 0.12), lmax, nlambda);
  } else {
    throw CLI::ValidationError("heisenberg", "unknown function: " + function);
  }
  emit(json{{"grid", rep.grid}, {"L", rep.L}, {"lmax", rep.lmax},
            {"nlambda", rep.nlambda}, {"lhs", rep.lhs}, {"rhs", rep.rhs},
            {"ratio", rep.ratio}, {"cfit", rep.cfit}},
       out);
  bool ok = function == "zero" || std::fabs(rep.ratio - 1.0) <= 0.01;
  return ok ? kExitPass : kExitMathFailure;
}

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical toolkit for coadjoint-orbit geometry of "
               "triangular matrix groups"};
  app.require_subcommand(1);

  int n = 4, trials = 20, grid = 256, nlambda = 160;
  std::uint64_t seed = 0;
  double T = 10.0, dt = 1e-3, L = 10.0, lmax = 8.0;
  std::string out, suite, x0_path, x_path, function = "gaussian";
  bool random_x0 = false;

  auto* describe = app.add_subcommand("describe", "dump the layer decomposition");
  describe->add_option("--n", n, "matrix size")->required()->check(CLI::Range(2, 64));
  describe->add_option("--out", out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run an exact verification suite");
  verify->add_option("suite", suite,
                     "one of: semiinv, ninv, involutivity, casimir, pukanszky, dp")
      ->required();
  verify->add_option("--n", n, "matrix size")->capture_default_str()->check(CLI::Range(2, 64));
  verify->add_option("--trials", trials, "random trials per case")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "PRNG seed (default 0)")->capture_default_str();
  verify->add_option("--out", out, "output path (default stdout)");

  auto* toda = app.add_subcommand("toda", "integrate the full Toda flow (RK4)");
  toda->add_option("--n", n, "matrix size")->capture_default_str()->check(CLI::Range(2, 64));
  toda->add_option("--t", T, "integration time")
      ->capture_default_str()->check(CLI::PositiveNumber);
  toda->add_option("--dt", dt, "step size")
      ->capture_default_str()->check(CLI::PositiveNumber);
  auto* x0_opt = toda->add_option("--x0", x0_path, "initial matrix (JSON file)");
  toda->add_flag("--random", random_x0, "sample a random regular start point")
      ->excludes(x0_opt);
  toda->add_option("--seed", seed, "PRNG seed (default 0)")->capture_default_str();
  toda->add_option("--out", out, "CSV output path (default stdout)");

  auto* cross = app.add_subcommand("cross-section",
                                   "orbit parameters and normal form of a point");
  cross->add_option("xfile", x_path, "Hessenberg matrix (JSON file)")->required();
  cross->add_option("--out", out, "output path (default stdout)");

  auto* dp = app.add_subcommand("dp-symbol", "Dixmier-Pukanszky symbol data");
  dp->add_option("--n", n, "matrix size")->required()->check(CLI::Range(2, 10000));
  dp->add_option("--out", out, "output path (default stdout)");

  auto* heisenberg = app.add_subcommand("heisenberg", "Plancherel isometry demo");
  heisenberg->add_option("--grid", grid, "grid size (power of two, >= 64)")
      ->capture_default_str();
  heisenberg->add_option("--L", L, "half-width of the grid")
      ->capture_default_str()->check(CLI::PositiveNumber);
  heisenberg->add_option("--lmax", lmax, "spectral cutoff")
      ->capture_default_str()->check(CLI::PositiveNumber);
  heisenberg->add_option("--nlambda", nlambda, "spectral quadrature intervals")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  heisenberg->add_option("--function", function, "test function: gaussian or zero")
      ->capture_default_str();
  heisenberg->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (describe->parsed()) return cmd_describe(n, out);
    if (verify->parsed()) return cmd_verify(suite, n, trials, seed, out);
    if (toda->parsed()) {
      if (!random_x0 && x0_path.empty())
        throw CLI::ValidationError("toda", "need --x0 or --random");
      return cmd_toda(n, T, dt, x0_path, random_x0, seed, out);
    }
    if (cross->parsed()) return cmd_cross_section(x_path, out);
    if (dp->parsed()) {
      emit(dp_report_json(n), out);
      return dpop::dp_weight_check(n).passed() ? kExitPass : kExitMathFailure;
    }
    if (heisenberg->parsed()) {
      if (!power_of_two(grid) || grid < 64)
        throw CLI::ValidationError("heisenberg", "--grid must be a power of two >= 64");
      return cmd_heisenberg(grid, L, lmax, nlambda, function, out);
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const chops::NongenericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;  // precondition on the input data
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
