#pragma once

// Exact arithmetic shared by every other layer: GMP-backed rationals,
// Gaussian rationals, and scalars of the form  q * sqrt(r) * pi^k.

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cst {

using BigInt = mpz_class;

/// Raised when two exact scalars with different pi powers (or different
/// surds) are added.
struct ExactMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& v) : q_(v) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n" or "n/d".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;
  Rational pow(int e) const;
  /// Exact square root when both numerator and denominator are perfect squares.
  bool is_perfect_square() const;
  Rational sqrt_exact() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(int re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

/// value * sqrt(radicand) * pi^pi_power.
///
/// The radicand is kept as a positive integer with small square factors
/// pulled into `value`; for the factorial-built surds that occur in Wigner
/// functions this is canonical. Equality compares signs and squares, so it
/// is exact regardless of canonical form. Addition only combines terms with
/// the same pi power and the same radicand; a mismatch throws ExactMismatch.
/// Exact zero is the additive identity for every pi power.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational value, int pi_power = 0);  // NOLINT
  ExactScalar(Rational value, Rational radicand, int pi_power);

  /// sqrt(x) for x >= 0.
  static ExactScalar sqrt(const Rational& x);
  static ExactScalar pi(int power = 1) { return {Rational(1), power}; }

  const Rational& value() const { return value_; }
  const BigInt& radicand() const { return radicand_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return radicand_ == 1 && pi_power_ == 0; }
  int sign() const { return value_.sign(); }
  /// value^2 * radicand, the exact square of the coefficient of pi^k.
  Rational coefficient_squared() const;
  double to_double() const;
  /// Coefficient of pi^k as a double, i.e. value * sqrt(radicand).
  double coefficient_to_double() const;
  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator-(ExactScalar a) {
    a.value_ = -a.value_;
    return a;
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

 private:
  void normalize();

  Rational value_;
  BigInt radicand_{1};
  int pi_power_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

Rational factorial(long n);
/// n!! with (-1)!! = 0!! = 1.
Rational double_factorial(long n);
Rational binomial(long n, long k);
/// top! / ((top - sum(parts))! * prod(parts_i!)); throws if sum(parts) > top.
Rational multinomial(long top, const std::vector<long>& parts);
/// x (x+1) ... (x+n-1)
Rational rising_factorial(const Rational& x, long n);
/// x (x-1) ... (x-n+1)
Rational falling_factorial(const Rational& x, long n);
/// Generalized binomial coefficient a choose k for rational a.
Rational binomial(const Rational& a, long k);

/// Integral of sin^p(t) cos^q(t) over [0, pi/2], exactly.
ExactScalar half_angle_integral(long p, long q);

}  // namespace cst
