#include <catch2/catch_amalgamated.hpp>

#include "borel/dual.hpp"
#include "borel/linalg.hpp"
#include "borel/matrix.hpp"
#include "borel/poly.hpp"
#include "borel/rational.hpp"
#include "borel/rng.hpp"

using namespace borel;

namespace {

Matrix<Rational> random_square(int n, SplitMix64& g) {
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.rational();
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  CHECK(a.str() == "3/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(0, 7).str() == "0");

  SplitMix64 g(11);
  for (int t = 0; t < 200; ++t) {
    Rational x = g.rational(), y = g.rational();
    Rational sum = x + y;
    // round trip through the canonical string form
    CHECK(Rational::parse(sum.str()) == sum);
    CHECK(sum - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
    CHECK(sum.denominator() > 0);
  }
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("dual numbers differentiate polynomials exactly") {
  SplitMix64 g(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> coeffs;
    int deg = static_cast<int>(g.below(6));
    for (int k = 0; k <= deg; ++k) coeffs.push_back(g.rational());
    Poly<Rational> p(coeffs);
    Rational x0 = g.rational();
    // evaluate over duals at (x0, 1)
    Poly<DualRational> pd(std::vector<DualRational>(p.coeffs().begin(), p.coeffs().end()));
    DualRational r = pd.eval(DualRational::variable(x0));
    CHECK(r.val == p.eval(x0));
    CHECK(r.der == p.derivative().eval(x0));
  }
}

TEST_CASE("dual quotient rule and zero-divisor guard") {
  DualRational a(Rational(3), Rational(1));
  DualRational b(Rational(2), Rational(5));
  DualRational q = a / b;
  CHECK(q.val == Rational(3, 2));
  CHECK(q.der == (Rational(1) * Rational(2) - Rational(3) * Rational(5)) / Rational(4));
  DualRational zero_val(Rational(0), Rational(1));
  CHECK_THROWS_AS(a / zero_val, std::domain_error);
}

TEST_CASE("determinant of eta-affine matrices") {
  SECTION("empty matrix gives the constant 1") {
    Matrix<Rational> e(0, 0);
    CHECK(det_eta(e, e) == EtaPoly::constant(Rational(1)));
  }
  SECTION("(1-eta)^2") {
    Matrix<EtaPoly> m(2, 2);
    m(0, 0) = EtaPoly({Rational(1), Rational(-1)});
    m(1, 1) = EtaPoly({Rational(1), Rational(-1)});
    m(0, 1) = EtaPoly();
    m(1, 0) = EtaPoly();
    CHECK(det_eta(m) == EtaPoly({Rational(1), Rational(-2), Rational(1)}));
  }
  SECTION("2x2 chop oracle") {
    // rows 2,3 / cols 1,2 of ([[1,1,0],[0,2,1],[1,0,1]] - eta I) = [[0, 2-eta],[1, 0]]
    Matrix<EtaPoly> m(2, 2);
    m(0, 0) = EtaPoly();
    m(0, 1) = EtaPoly({Rational(2), Rational(-1)});
    m(1, 0) = EtaPoly::constant(Rational(1));
    m(1, 1) = EtaPoly();
    CHECK(det_eta(m) == EtaPoly({Rational(-2), Rational(1)}));
  }
}

TEST_CASE("det_eta agrees with cofactor expansion over the polynomial ring") {
  SplitMix64 g(3);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      Matrix<Rational> a = random_square(n, g), b = random_square(n, g);
      Matrix<EtaPoly> m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m(i, j) = EtaPoly({a(i, j), b(i, j)});
      CHECK(det_eta(a, b) == det_cofactor(m));
    }
  }
}

TEST_CASE("rank over the rationals") {
  CHECK(rank(Matrix<Rational>(3, 3)) == 0);
  CHECK(rank(Matrix<Rational>::identity(3)) == 3);
  CHECK(rank(Matrix<Rational>{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);

  SplitMix64 g(5);
  for (int t = 0; t < 30; ++t) {
    Matrix<Rational> m = random_square(4, g);
    // rank is invariant under row scaling by a nonzero rational
    Matrix<Rational> scaled = m;
    Rational c = g.nonzero_rational();
    for (int j = 0; j < 4; ++j) scaled(1, j) *= c;
    CHECK(rank(m) == rank(scaled));
    CHECK((rank(m) == 4) == !det(m).is_zero());
  }
}

TEST_CASE("span comparison") {
  auto e = [](int dim, int k) {
    std::vector<Rational> v(dim, Rational(0));
    v[k] = Rational(1);
    return v;
  };
  std::vector<Rational> e1 = e(3, 0), e2 = e(3, 1);
  std::vector<Rational> two_e1 = e1;
  two_e1[0] = Rational(2);
  CHECK(span_equal({e1}, {two_e1}));
  CHECK_FALSE(span_equal({e1}, {e2}));
  std::vector<Rational> sum = {Rational(1), Rational(1), Rational(0)};
  std::vector<Rational> diff = {Rational(1), Rational(-1), Rational(0)};
  CHECK(span_equal({e1, e2}, {sum, diff}));
  std::vector<Rational> bad = {Rational(1), Rational(1)};
  CHECK_THROWS_AS(span_equal({e1}, {bad}), std::invalid_argument);
}

TEST_CASE("bird determinant matches bareiss on rational matrices") {
  SplitMix64 g(9);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      Matrix<Rational> m = random_square(n, g);
      CHECK(det_ring(m) == det(m));
    }
}

TEST_CASE("dual determinant derivative equals the adjugate pairing") {
  // Two independent exact routes for d/dt det(A + t B) at t = 0:
  // the dual-number route (Bird, division-free) and Tr(adj(A) B).
  SplitMix64 g(13);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      Matrix<Rational> a = random_square(n, g), b = random_square(n, g);
      Matrix<DualRational> m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = DualRational(a(i, j), b(i, j));
      DualRational d = det_ring(m);
      CHECK(d.val == det(a));
      CHECK(d.der == (adjugate(a) * b).trace());
    }
}

TEST_CASE("solve and inverse are exact") {
  SplitMix64 g(17);
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> a = random_square(4, g);
    if (det(a).is_zero()) continue;
    Matrix<Rational> inv = inverse(a);
    CHECK(a * inv == Matrix<Rational>::identity(4));
    CHECK(inv * a == Matrix<Rational>::identity(4));
  }
  Matrix<Rational> sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  SplitMix64 g(21);
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> m(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = g.rational();
    auto basis = nullspace(m);
    CHECK(static_cast<int>(basis.size()) == 5 - rank(m));
    for (const auto& v : basis)
      for (int i = 0; i < 3; ++i) {
        Rational acc(0);
        for (int j = 0; j < 5; ++j) acc += m(i, j) * v[j];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("interpolation reproduces polynomial coefficients") {
  SplitMix64 g(23);
  for (int t = 0; t < 30; ++t) {
    int deg = static_cast<int>(g.below(5));
    std::vector<Rational> coeffs;
    for (int k = 0; k <= deg; ++k) coeffs.push_back(g.rational());
    Poly<Rational> p(coeffs);
    std::vector<Rational> nodes, values;
    for (int k = 0; k <= deg; ++k) {
      nodes.push_back(Rational(k));
      values.push_back(p.eval(Rational(k)));
    }
    CHECK(interpolate(nodes, values) == p);
  }
}

TEST_CASE("splitmix streams are deterministic") {
  SplitMix64 a = SplitMix64::stream(42, 3);
  SplitMix64 b = SplitMix64::stream(42, 3);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  SplitMix64 c = SplitMix64::stream(42, 4);
  CHECK(SplitMix64::stream(42, 3).next() != c.next());
}
