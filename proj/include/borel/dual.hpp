#ifndef BOREL_DUAL_HPP
#define BOREL_DUAL_HPP

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "borel/rational.hpp"

namespace borel {

/// First-order forward-mode dual number a + b*eps with eps^2 = 0.
/// Product and quotient rules are exact over an exact base scalar.
template <class S>
struct Dual {
  S val{};
  S der{};

  Dual() = default;
  Dual(S v) : val(std::move(v)), der() {}
  Dual(S v, S d) : val(std::move(v)), der(std::move(d)) {}

  static Dual constant(S v) { return Dual(std::move(v)); }
  static Dual variable(S v) { return Dual(std::move(v), S(1)); }

  Dual operator-() const { return Dual(-val, -der); }

  Dual& operator+=(const Dual& o) { val += o.val; der += o.der; return *this; }
  Dual& operator-=(const Dual& o) { val -= o.val; der -= o.der; return *this; }
  Dual& operator*=(const Dual& o) {
    der = der * o.val + val * o.der;
    val = val * o.val;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (is_zero_scalar(o.val))
      throw std::domain_error("Dual: division by zero value part");
    // (a/c)' = (b c - a d) / c^2
    der = (der * o.val - val * o.der) / (o.val * o.val);
    val = val / o.val;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }

  friend bool operator==(const Dual& a, const Dual& b) {
    return a.val == b.val && a.der == b.der;
  }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << "(" << d.val << " + " << d.der << "e)";
  }

private:
  static bool is_zero_scalar(const Rational& r) { return r.is_zero(); }
  static bool is_zero_scalar(double x) { return x == 0.0; }
};

using DualRational = Dual<Rational>;

/// Minimal scalar trait bundle used by the generic linear algebra.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long k) { return Rational(k); }
  static bool is_invertible(const Rational& r) { return !r.is_zero(); }
  static double abs_estimate(const Rational& r) { return std::fabs(r.to_double()); }
};

template <>
struct scalar_traits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long k) { return static_cast<double>(k); }
  static bool is_invertible(double x) { return x != 0.0; }
  static double abs_estimate(double x) { return std::fabs(x); }
};

template <class S>
struct scalar_traits<Dual<S>> {
  static Dual<S> zero() { return Dual<S>(scalar_traits<S>::zero()); }
  static Dual<S> one() { return Dual<S>(scalar_traits<S>::one()); }
  static Dual<S> from_int(long k) { return Dual<S>(scalar_traits<S>::from_int(k)); }
  static bool is_invertible(const Dual<S>& d) {
    return scalar_traits<S>::is_invertible(d.val);
  }
  static double abs_estimate(const Dual<S>& d) {
    return scalar_traits<S>::abs_estimate(d.val);
  }
};

}  // namespace borel

#endif
