#include "cst/exact.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace cst {

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  }
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(q_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt_exact() const {
  if (!is_perfect_square()) throw std::domain_error("Rational: not a perfect square: " + to_string());
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// --------------------------------------------------------- GaussianRational

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm_squared();
  if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + "i";
  return re_.to_string() + (im_.sign() < 0 ? "" : "+") + im_.to_string() + "i";
}

// ------------------------------------------------------------- ExactScalar

namespace {

// Squares of these primes are pulled out of radicands. Factorial radicands
// only contain primes up to the largest factorial argument.
constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

ExactScalar::ExactScalar(Rational value, int pi_power) : value_(std::move(value)), pi_power_(pi_power) {}

ExactScalar::ExactScalar(Rational value, Rational radicand, int pi_power)
    : value_(std::move(value)), pi_power_(pi_power) {
  if (radicand.sign() < 0) throw std::domain_error("ExactScalar: negative radicand");
  if (radicand.is_zero()) {
    value_ = Rational(0);
    return;
  }
  // sqrt(n/d) = sqrt(n d) / d
  const BigInt d = radicand.denominator();
  radicand_ = radicand.numerator() * d;
  value_ /= Rational(d);
  normalize();
}

ExactScalar ExactScalar::sqrt(const Rational& x) { return {Rational(1), x, 0}; }

void ExactScalar::normalize() {
  if (value_.is_zero()) {
    radicand_ = 1;
    return;
  }
  if (radicand_ == 1) return;
  if (mpz_perfect_square_p(radicand_.get_mpz_t()) != 0) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), radicand_.get_mpz_t());
    value_ *= Rational(r);
    radicand_ = 1;
    return;
  }
  BigInt pulled = 1;
  for (const unsigned long p : kSmallPrimes) {
    const BigInt sq = BigInt(p * p);
    while (mpz_divisible_p(radicand_.get_mpz_t(), sq.get_mpz_t()) != 0) {
      radicand_ /= sq;
      pulled *= p;
    }
  }
  value_ *= Rational(pulled);
}

Rational ExactScalar::coefficient_squared() const { return value_ * value_ * Rational(radicand_); }

double ExactScalar::coefficient_to_double() const {
  return value_.to_double() * std::sqrt(radicand_.get_d());
}

double ExactScalar::to_double() const {
  return coefficient_to_double() * std::pow(std::numbers::pi, pi_power_);
}

std::string ExactScalar::to_string() const {
  std::string out = value_.to_string();
  if (value_.is_zero()) return out;
  if (radicand_ != 1) out += "*sqrt(" + radicand_.get_str() + ")";
  if (pi_power_ == 1) out += "*pi";
  else if (pi_power_ != 0) out += "*pi^" + std::to_string(pi_power_);
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (pi_power_ != o.pi_power_) {
    throw ExactMismatch("ExactScalar: adding pi^" + std::to_string(pi_power_) + " to pi^" +
                        std::to_string(o.pi_power_));
  }
  if (radicand_ != o.radicand_) {
    throw ExactMismatch("ExactScalar: adding sqrt(" + radicand_.get_str() + ") to sqrt(" +
                        o.radicand_.get_str() + ")");
  }
  value_ += o.value_;
  if (value_.is_zero()) radicand_ = 1;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  value_ *= o.value_;
  radicand_ *= o.radicand_;
  pi_power_ += o.pi_power_;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  // 1/sqrt(r) = sqrt(r)/r
  value_ /= o.value_;
  value_ /= Rational(o.radicand_);
  radicand_ *= o.radicand_;
  pi_power_ -= o.pi_power_;
  normalize();
  return *this;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.pi_power_ == b.pi_power_ && a.sign() == b.sign() &&
         a.coefficient_squared() == b.coefficient_squared();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

// ------------------------------------------------------------ combinatorics

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  if (n <= 0) return Rational(1);
  BigInt f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (n < 0) return binomial(Rational(n), k);
  if (k < 0 || k > n) return Rational(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational multinomial(long top, const std::vector<long>& parts) {
  long sum = 0;
  for (const long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum > top) throw std::invalid_argument("multinomial: parts exceed top");
  Rational r = factorial(top) / factorial(top - sum);
  for (const long p : parts) r /= factorial(p);
  return r;
}

Rational rising_factorial(const Rational& x, long n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: negative length");
  Rational r(1);
  for (long k = 0; k < n; ++k) r *= x + Rational(k);
  return r;
}

Rational falling_factorial(const Rational& x, long n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rational r(1);
  for (long k = 0; k < n; ++k) r *= x - Rational(k);
  return r;
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  return falling_factorial(a, k) / factorial(k);
}

ExactScalar half_angle_integral(long p, long q) {
  if (p < 0 || q < 0) throw std::invalid_argument("half_angle_integral: negative exponent");
  // Reduce with I(p,q) = (p-1)/(p+q) I(p-2,q) and the symmetric rule in q.
  Rational factor(1);
  while (p >= 2) {
    factor *= Rational(p - 1) / Rational(p + q);
    p -= 2;
  }
  while (q >= 2) {
    factor *= Rational(q - 1) / Rational(p + q);
    q -= 2;
  }
  if (p == 0 && q == 0) return {factor / Rational(2), 1};
  if (p == 1 && q == 1) return {factor / Rational(2), 0};
  return {factor, 0};  // (1,0) and (0,1) both integrate to 1
}

}  // namespace cst
