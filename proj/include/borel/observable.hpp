#ifndef BOREL_OBSERVABLE_HPP
#define BOREL_OBSERVABLE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "borel/chops.hpp"
#include "borel/liestruct.hpp"
#include "borel/matrix.hpp"

namespace borel::poisson {

using chops::HessenbergPoint;
using chops::NongenericError;

enum class ObsTag { TracePower, ChopE, ChopI, Coordinate, User };

template <class S>
S scalar_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>) return r;
  else if constexpr (std::is_same_v<S, double>) return r.to_double();
  else return S(r);  // Dual<Rational>
}

/// A differentiable scalar function of a Hessenberg point, evaluable over
/// exact rationals, dual rationals (for exact gradients) and doubles (for
/// the flow integrator).
class Observable {
public:
  Observable(std::string name, ObsTag tag) : name_(std::move(name)), tag_(tag) {}
  virtual ~Observable() = default;

  const std::string& name() const { return name_; }
  ObsTag tag() const { return tag_; }

  virtual Rational eval(const Matrix<Rational>& x) const = 0;
  virtual DualRational eval(const Matrix<DualRational>& x) const = 0;
  virtual double eval(const Matrix<double>& x) const = 0;

private:
  std::string name_;
  ObsTag tag_;
};

using ObsPtr = std::shared_ptr<const Observable>;

namespace detail {

template <class F>
class FnObservable final : public Observable {
public:
  FnObservable(std::string name, ObsTag tag, F f)
      : Observable(std::move(name), tag), f_(std::move(f)) {}
  Rational eval(const Matrix<Rational>& x) const override { return f_(x); }
  DualRational eval(const Matrix<DualRational>& x) const override { return f_(x); }
  double eval(const Matrix<double>& x) const override { return f_(x); }

private:
  F f_;
};

}  // namespace detail

template <class F>
ObsPtr make_observable(std::string name, ObsTag tag, F f) {
  return std::make_shared<detail::FnObservable<F>>(std::move(name), tag, std::move(f));
}

/// Tr X^m.
inline ObsPtr trace_power(int m) {
  return make_observable(
      "trX" + std::to_string(m), ObsTag::TracePower, [m](const auto& x) {
        auto p = x;
        for (int k = 1; k < m; ++k) p = p * x;
        return p.trace();
      });
}

/// Chop coefficient E_{m,r}.
inline ObsPtr chop_E_obs(int m, int r) {
  return make_observable("E_" + std::to_string(m) + "_" + std::to_string(r),
                         ObsTag::ChopE,
                         [m, r](const auto& x) { return chops::chop_E_t(x, m, r); });
}

/// Casimir ratio I_{m,r} = E_{m,r} / E_{0,r}; throws NongenericError where
/// the denominator vanishes.
inline ObsPtr chop_I_obs(int m, int r) {
  return make_observable(
      "I_" + std::to_string(m) + "_" + std::to_string(r), ObsTag::ChopI,
      [m, r](const auto& x) {
        using S = std::decay_t<decltype(x(0, 0))>;
        S e0 = chops::chop_E_t(x, 0, r);
        if (!scalar_traits<S>::is_invertible(e0))
          throw NongenericError("I_{m,r}: E_{0," + std::to_string(r) + "} vanishes");
        return chops::chop_E_t(x, m, r) / e0;
      });
}

/// Coordinate x_{ij} (0-based, on or below the diagonal).
inline ObsPtr coordinate(int i, int j) {
  return make_observable(
      "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), ObsTag::Coordinate,
      [i, j](const auto& x) { return x(i, j); });
}

/// Linear observable X -> Tr(X M) for a fixed rational matrix M.
inline ObsPtr linear(const Matrix<Rational>& m, std::string name = "linear") {
  return make_observable(std::move(name), ObsTag::User, [m](const auto& x) {
    using S = std::decay_t<decltype(x(0, 0))>;
    S acc = scalar_traits<S>::zero();
    for (int a = 0; a < x.rows(); ++a)
      for (int b = 0; b < x.cols(); ++b)
        acc += x(a, b) * scalar_from_rational<S>(m(b, a));
    return acc;
  });
}

inline ObsPtr product(ObsPtr f, ObsPtr g) {
  std::string n = f->name() + "*" + g->name();
  return make_observable(std::move(n), ObsTag::User,
                         [f, g](const auto& x) { return f->eval(x) * g->eval(x); });
}

inline ObsPtr scaled(Rational c, ObsPtr f) {
  std::string n = c.str() + "*" + f->name();
  return make_observable(std::move(n), ObsTag::User, [c, f](const auto& x) {
    using S = std::decay_t<decltype(x(0, 0))>;
    return scalar_from_rational<S>(c) * f->eval(x);
  });
}

/// Exact gradient representative A_G in b+: the unique upper-triangular
/// matrix with Tr(A_G d) = dG_X(d) for every d in b-. Computed by seeding a
/// dual-number unit in each free slot.
inline Matrix<Rational> grad_repr(const Observable& g, const HessenbergPoint& x) {
  const int n = x.n();
  Matrix<DualRational> base = to_dual(x.X);
  Matrix<Rational> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      Matrix<DualRational> seeded = base;
      seeded(i, j).der = Rational(1);
      a(j, i) = g.eval(seeded).der;
    }
  return a;
}

/// Lie-Poisson bracket on the Hessenberg slice:
/// {F, G}(X) = (X, [A_F, A_G]) = Tr(X [A_F, A_G]).
inline Rational bracket(const Observable& f, const Observable& g,
                        const HessenbergPoint& x) {
  Matrix<Rational> af = grad_repr(f, x);
  Matrix<Rational> ag = grad_repr(g, x);
  return (x.X * commutator(af, ag)).trace();
}

}  // namespace borel::poisson

#endif
