#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "borel/poisson.hpp"
#include "borel/rng.hpp"

using namespace borel;
using namespace borel::poisson;
using chops::HessenbergPoint;

namespace {

HessenbergPoint random_point(int n, std::uint64_t seed) {
  SplitMix64 g(seed);
  return chops::random_generic_hessenberg(n, g);
}

}  // namespace

TEST_CASE("gradient representatives of the basic observables") {
  HessenbergPoint x = random_point(3, 101);
  SECTION("coordinate x_11") {
    CHECK(grad_repr(*coordinate(0, 0), x) == Matrix<Rational>::unit(3, 0, 0));
  }
  SECTION("trace") {
    CHECK(grad_repr(*trace_power(1), x) == Matrix<Rational>::identity(3));
  }
  SECTION("half trace of the square gives the upper part of X") {
    ObsPtr h = scaled(Rational(1, 2), trace_power(2));
    CHECK(grad_repr(*h, x) == lie::project(x.X, lie::Part::BPlus));
  }
}

TEST_CASE("gradients match central finite differences in float mode") {
  HessenbergPoint x = random_point(4, 7);
  Matrix<double> xd = to_double(x.X);
  for (const ObsPtr& f : {trace_power(3), chop_I_obs(1, 1), chop_E_obs(2, 1)}) {
    Matrix<Rational> a = grad_repr(*f, x);
    const double h = 1e-5;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= i; ++j) {
        Matrix<double> up = xd, dn = xd;
        up(i, j) += h;
        dn(i, j) -= h;
        double fd = (f->eval(up) - f->eval(dn)) / (2 * h);
        double exact = a(j, i).to_double();
        double scale = std::max({1.0, std::fabs(exact), std::fabs(fd)});
        CHECK(std::fabs(fd - exact) / scale < 1e-7);
      }
  }
}

TEST_CASE("bracket identities") {
  SECTION("n = 2 coordinate bracket closes on x_21") {
    HessenbergPoint x = random_point(2, 5);
    CHECK(bracket(*coordinate(0, 0), *coordinate(1, 0), x) == x.X(1, 0));
  }
  SECTION("trace brackets to zero with everything") {
    HessenbergPoint x = random_point(3, 9);
    for (const ObsPtr& g : {trace_power(2), chop_I_obs(1, 1), coordinate(2, 0)})
      CHECK(bracket(*trace_power(1), *g, x).is_zero());
  }
  SECTION("antisymmetry") {
    HessenbergPoint x = random_point(3, 13);
    ObsPtr f = trace_power(2), g = chop_E_obs(1, 1);
    CHECK(bracket(*f, *f, x).is_zero());
    CHECK(bracket(*f, *g, x) == -bracket(*g, *f, x));
  }
  SECTION("Leibniz rule on products") {
    HessenbergPoint x = random_point(3, 17);
    ObsPtr f = chop_E_obs(1, 1), g = trace_power(2), h = coordinate(1, 1);
    Rational lhs = bracket(*f, *product(g, h), x);
    Rational rhs = g->eval(x.X) * bracket(*f, *h, x) + h->eval(x.X) * bracket(*f, *g, x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Jacobi identity for coordinate observables") {
  for (int n = 2; n <= 4; ++n) {
    HessenbergPoint x = random_point(n, 1000 + n);
    std::vector<ObsPtr> coords;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) coords.push_back(coordinate(i, j));
    SplitMix64 pick(77);
    for (int t = 0; t < 12; ++t) {
      const ObsPtr& f = coords[pick.below(coords.size())];
      const ObsPtr& g = coords[pick.below(coords.size())];
      const ObsPtr& h = coords[pick.below(coords.size())];
      auto inner = [&](const ObsPtr& a, const ObsPtr& b) {
        return linear(commutator(grad_repr(*a, x), grad_repr(*b, x)),
                      "{" + a->name() + "," + b->name() + "}");
      };
      Rational sum = bracket(*f, *inner(g, h), x) + bracket(*g, *inner(h, f), x) +
                     bracket(*h, *inner(f, g), x);
      REQUIRE(sum.is_zero());
    }
  }
}

TEST_CASE("hamiltonian vector field") {
  SECTION("a Casimir generates no motion") {
    HessenbergPoint x = random_point(3, 21);
    CHECK(hamiltonian_vf(*trace_power(1), x) == Matrix<Rational>(3, 3));
  }
  SECTION("n = 2 Toda field by hand") {
    Matrix<Rational> m{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    HessenbergPoint x(m);
    ObsPtr h = scaled(Rational(1, 2), trace_power(2));
    Matrix<Rational> want(2, 2);
    want(0, 0) = Rational(1);
    want(1, 1) = Rational(-1);
    CHECK(hamiltonian_vf(*h, x) == want);
  }
  SECTION("Toda field equals [X, pi_<(X)]") {
    for (int n : {3, 4, 5}) {
      HessenbergPoint x = random_point(n, 400 + n);
      ObsPtr h = scaled(Rational(1, 2), trace_power(2));
      Matrix<Rational> lhs = hamiltonian_vf(*h, x);
      Matrix<Rational> rhs = commutator(x.X, lie::project(x.X, lie::Part::StrictLower));
      CHECK(lhs == rhs);
    }
  }
  SECTION("pairing consistency with the bracket") {
    HessenbergPoint x = random_point(4, 29);
    for (const ObsPtr& f : {trace_power(2), chop_I_obs(1, 1)})
      for (const ObsPtr& g : {coordinate(2, 1), chop_E_obs(1, 1), trace_power(3)}) {
        Rational lhs = bracket(*g, *f, x);
        Rational rhs = (hamiltonian_vf(*f, x) * grad_repr(*g, x)).trace();
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("involutivity of the chop family") {
  SECTION("n = 3, ten trials") {
    SuiteReport rep = involutivity_suite(3, 10, 1);
    CHECK(rep.passed());
  }
  SECTION("n = 4") {
    CHECK(involutivity_suite(4, 5, 2).passed());
  }
}

TEST_CASE("casimir suite") {
  for (int n = 2; n <= 4; ++n) CHECK(casimir_suite(n, 3, 5).passed());
}

TEST_CASE("toda integration") {
  SECTION("n = 2 exchange example conserves the spectrum and sorts") {
    Matrix<double> x0{{0.0, 1.0}, {1.0, 0.0}};
    std::vector<ObsPtr> obs = {trace_power(1), trace_power(2)};
    TodaSeries ts = toda_integrate(x0, 10.0, 1e-3, obs);
    CHECK(ts.regular_throughout);
    CHECK(ts.max_drift <= 1e-10);
    CHECK(std::fabs(ts.values[0][0]) < 1e-15);           // Tr X = 0
    CHECK(std::fabs(ts.values[1][0] - 2.0) < 1e-15);     // Tr X^2 = 2
  }
  SECTION("diagonal points with zero lower part are fixed") {
    Matrix<double> x0{{1.0, 1.0}, {0.0, -1.0}};
    TodaSeries ts = toda_integrate(x0, 1.0, 1e-2, {trace_power(2)});
    CHECK(ts.max_drift == 0.0);
  }
  SECTION("vector field is structurally in b-") {
    SplitMix64 g(3);
    for (int n : {3, 5}) {
      Matrix<double> x = random_hessenberg_f(n, g);
      Matrix<double> v = toda_vf(x);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) CHECK(v(i, j) == 0.0);
    }
  }
  SECTION("the affine slice is preserved bitwise") {
    Matrix<double> x0 = random_regular_hessenberg_f(4, 3, 5.0);
    TodaSeries ts = toda_integrate(x0, 5.0, 0.01, {});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(ts.final_x(i, j) == (j == i + 1 ? 1.0 : 0.0));
  }
  SECTION("dt must be positive") {
    Matrix<double> x0{{0.0, 1.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(toda_integrate(x0, 1.0, 0.0, {}), std::invalid_argument);
  }
  SECTION("order-4 convergence of the invariant drift") {
    Matrix<double> x0 = random_regular_hessenberg_f(4, 11, 4.0);
    std::vector<ObsPtr> obs = standard_invariants(4);
    double d1 = toda_integrate(x0, 4.0, 0.05, obs).max_drift;
    double d2 = toda_integrate(x0, 4.0, 0.025, obs).max_drift;
    CHECK(d1 / d2 >= 12.0);
    CHECK(d1 / d2 <= 20.0);
  }
  SECTION("blown-up trajectories are reported, not silently continued") {
    SplitMix64 g(11);
    Matrix<double> bad = random_hessenberg_f(4, g);
    TodaSeries ts = toda_integrate(bad, 4.0, 0.05, {trace_power(2)});
    CHECK_FALSE(ts.regular_throughout);
    CHECK(ts.failure_time >= 0.0);
  }
}

TEST_CASE("sorting convention of the flow") {
  // The sign convention makes the n = 2 flow move the top-left entry toward
  // the larger eigenvalue (+1 for the exchange matrix).
  Matrix<double> x0{{0.0, 1.0}, {1.0, 0.0}};
  TodaSeries ts = toda_integrate(x0, 10.0, 1e-3, {coordinate(0, 0)});
  CHECK(ts.values[0].back() > 0.99);
}
