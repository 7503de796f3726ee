#ifndef BOREL_RATIONAL_HPP
#define BOREL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>

namespace borel {

/// Exact rational scalar backed by GMP. Always canonical: lowest terms,
/// positive denominator. Arithmetic never rounds.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "p/q" or "p". The result is reduced to lowest terms.
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(q, NoCanon{});
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  /// "p/q" in lowest terms, "p" alone when q = 1.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) throw std::domain_error("Rational: 0 to negative power");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(n, d);
    r.canonicalize();
    if (inv) r = 1 / r;
    return Rational(r, NoCanon{});
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace borel

#endif
