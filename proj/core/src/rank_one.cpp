#include "cst/rank_one.hpp"

#include <cmath>
#include <stdexcept>

namespace cst {

namespace {

// Polynomial in z with Laurent coefficients in (c, s); index = power of z.
using ZSeries = std::vector<LaurentPolynomial>;

ZSeries multiply(const ZSeries& a, const ZSeries& b, int max_degree) {
  ZSeries out(static_cast<std::size_t>(max_degree) + 1);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= max_degree; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_degree; ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// (alpha + beta z)^power through z^max_degree, where alpha and beta are
// signed monomials c^i s^j. Negative powers expand as a Taylor series.
ZSeries linear_power(int alpha_c, int alpha_s, int alpha_sign, int beta_c, int beta_s, int beta_sign, long power,
                     int max_degree) {
  ZSeries out(static_cast<std::size_t>(max_degree) + 1);
  const long top = power >= 0 ? std::min<long>(power, max_degree) : max_degree;
  for (long k = 0; k <= top; ++k) {
    const long rest = power - k;
    Rational coef = binomial(Rational(power), k);
    if (alpha_sign < 0 && rest % 2 != 0) coef = -coef;
    if (beta_sign < 0 && k % 2 != 0) coef = -coef;
    out[k].add_term(static_cast<int>(alpha_c * rest + beta_c * k), static_cast<int>(alpha_s * rest + beta_s * k),
                    coef);
  }
  return out;
}

void check_su2_indices(int two_j, int two_m, int two_n) {
  if (two_j < 0) throw std::invalid_argument("su2: negative 2j");
  const auto bad = [two_j](int two_x) { return std::abs(two_x) > two_j || (two_j - two_x) % 2 != 0; };
  if (bad(two_m) || bad(two_n)) {
    throw std::out_of_range("su2: index out of range for 2j = " + std::to_string(two_j));
  }
}

double fact(long n) { return factorial(n).to_double(); }

}  // namespace

double SymbolicMatrixElement::evaluate(double c, double s) const {
  if (ratio_squared.is_perfect_square()) return (poly * ratio_squared.sqrt_exact()).evaluate(c, s);
  return std::sqrt(ratio_squared.to_double()) * poly.evaluate(c, s);
}

// ------------------------------------------------------------------- SU(2)

SymbolicMatrixElement su2_wigner_d_symbolic(int two_j, int two_m, int two_n) {
  check_su2_indices(two_j, two_m, two_n);
  const int mu = (two_j - two_m) / 2;
  const int nu = (two_j - two_n) / 2;
  const int j_plus_n = (two_j + two_n) / 2;
  // Gamma(g) phi_nu = (c + s z)^{j+n} (-s + c z)^nu for g = ((c,-s),(s,c)).
  const ZSeries a = linear_power(1, 0, 1, 0, 1, 1, j_plus_n, mu);
  const ZSeries b = linear_power(0, 1, -1, 1, 0, 1, nu, mu);
  const ZSeries prod = multiply(a, b, mu);
  // <phi_mu | z^mu> = mu!/sqrt(mu!); with K factors the prefactor squares to
  // K_nu^2 mu! / (K_mu^2 nu!).
  const Rational two_j_r(two_j);
  SymbolicMatrixElement out;
  out.ratio_squared = falling_factorial(two_j_r, nu) * factorial(mu) / (falling_factorial(two_j_r, mu) * factorial(nu));
  out.poly = prod[mu];
  return out;
}

double su2_wigner_d(int two_j, int two_m, int two_n, double beta) {
  return su2_wigner_d_symbolic(two_j, two_m, two_n).evaluate(std::cos(beta / 2), std::sin(beta / 2));
}

double su2_wigner_d_reference(int two_j, int two_m, int two_n, double beta) {
  check_su2_indices(two_j, two_m, two_n);
  // d^j_{m'm} with m' = two_m/2, m = two_n/2.
  const long jpm = (two_j + two_n) / 2, jmm = (two_j - two_n) / 2;
  const long jpmp = (two_j + two_m) / 2, jmmp = (two_j - two_m) / 2;
  const long shift = (two_m - two_n) / 2;  // m' - m
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  const double root = std::sqrt(fact(jpm) * fact(jmm) * fact(jpmp) * fact(jmmp));
  double sum = 0;
  for (long k = std::max(0L, -shift); k <= std::min(jpm, jmmp); ++k) {
    const double den = fact(jpm - k) * fact(k) * fact(jmmp - k) * fact(k + shift);
    const double sign = (k + shift) % 2 == 0 ? 1.0 : -1.0;
    sum += sign / den * std::pow(c, two_j - 2 * k - shift) * std::pow(s, 2 * k + shift);
  }
  return root * sum;
}

// ----------------------------------------------------------------- SU(1,1)

SymbolicMatrixElement su11_wigner_sum_symbolic(int lambda, int mu, int nu) {
  if (lambda < 1 || mu < 0 || nu < 0) throw std::invalid_argument("su11_wigner: need lambda >= 1, mu, nu >= 0");
  SymbolicMatrixElement out;
  out.ratio_squared = factorial(mu) * factorial(nu) / (factorial(lambda + mu - 1) * factorial(lambda + nu - 1));
  for (int n = 0; n <= mu; ++n) {
    if (nu - mu + n < 0) continue;
    Rational coef = factorial(lambda + nu + n - 1) / (factorial(nu - mu + n) * factorial(mu - n) * factorial(n));
    if (n % 2 != 0) coef = -coef;
    out.poly.add_term(mu - nu - lambda - 2 * n, nu - mu + 2 * n, coef);
  }
  return out;
}

double su11_wigner(int lambda, int mu, int nu, double beta) {
  return su11_wigner_sum_symbolic(lambda, mu, nu).evaluate(std::cosh(beta / 2), std::sinh(beta / 2));
}

SymbolicMatrixElement su11_wigner_pairing_symbolic(int lambda, int mu, int nu) {
  if (lambda < 1 || mu < 0 || nu < 0) throw std::invalid_argument("su11_wigner: need lambda >= 1, mu, nu >= 0");
  // Gamma(g) phi_nu = (c + s z)^{-lambda} ((s + c z)/(c + s z))^nu.
  const ZSeries a = linear_power(0, 1, 1, 1, 0, 1, nu, mu);
  const ZSeries b = linear_power(1, 0, 1, 0, 1, 1, -static_cast<long>(lambda + nu), mu);
  const ZSeries prod = multiply(a, b, mu);
  const Rational lam(lambda);
  SymbolicMatrixElement out;
  out.ratio_squared = rising_factorial(lam, nu) * factorial(mu) / (rising_factorial(lam, mu) * factorial(nu));
  out.poly = prod[mu];
  return out;
}

double su11_wigner_pairing(int lambda, int mu, int nu, double beta) {
  return su11_wigner_pairing_symbolic(lambda, mu, nu).evaluate(std::cosh(beta / 2), std::sinh(beta / 2));
}

// --------------------------------------------------------------- algebras

Generator parse_generator(const std::string& name) {
  if (name == "J0") return Generator::J0;
  if (name == "J+" || name == "Jplus") return Generator::Jplus;
  if (name == "J-" || name == "Jminus") return Generator::Jminus;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::J0:
      return "J0";
    case Generator::Jplus:
      return "J+";
    case Generator::Jminus:
      return "J-";
  }
  return "?";
}

DifferentialOperator su2_generator(int two_j, Generator g) {
  const Shape s{1, 1};
  const Rational j(two_j, 2);
  DifferentialOperator op(s);
  switch (g) {
    case Generator::Jplus:  // d/dz
      op.differentiate(BargmannPolynomial::constant(s, 1), {1, 1});
      break;
    case Generator::Jminus:  // 2j z - z^2 d/dz
      op.multiply_by(BargmannPolynomial::power(1, Rational(two_j)));
      op.differentiate(BargmannPolynomial::power(2, -1), {1, 1});
      break;
    case Generator::J0:  // j - z d/dz
      op.multiply_by(BargmannPolynomial::constant(s, j));
      op.differentiate(BargmannPolynomial::power(1, -1), {1, 1});
      break;
  }
  return op;
}

DifferentialOperator su11_generator(const Rational& lambda, Generator g) {
  const Shape s{1, 1};
  DifferentialOperator op(s);
  switch (g) {
    case Generator::Jplus:  // lambda z + z^2 d/dz
      op.multiply_by(BargmannPolynomial::power(1, lambda));
      op.differentiate(BargmannPolynomial::power(2), {1, 1});
      break;
    case Generator::Jminus:  // d/dz
      op.differentiate(BargmannPolynomial::constant(s, 1), {1, 1});
      break;
    case Generator::J0:  // lambda/2 + z d/dz
      op.multiply_by(BargmannPolynomial::constant(s, lambda / Rational(2)));
      op.differentiate(BargmannPolynomial::power(1), {1, 1});
      break;
  }
  return op;
}

namespace {

template <typename KSquared>
AlgebraMatrix algebra_matrix(const DifferentialOperator& op, int size, KSquared k_squared) {
  AlgebraMatrix out;
  out.entries.assign(size, std::vector<ExactScalar>(size));
  for (int nu = 0; nu < size; ++nu) {
    const BargmannPolynomial image = op.apply(BargmannPolynomial::power(nu));
    for (const auto& [m, c] : image.terms()) {
      const int mu = m.degree();
      if (mu >= size) {
        out.truncated_column = nu;
        continue;
      }
      // Psi_nu = K_nu z^nu / sqrt(nu!)  =>  entry = c * sqrt(K_nu^2 mu! / (K_mu^2 nu!)).
      const Rational radicand = k_squared(nu) * factorial(mu) / (k_squared(mu) * factorial(nu));
      out.entries[mu][nu] = ExactScalar(c.re(), radicand, 0);
    }
  }
  return out;
}

}  // namespace

CMatrix AlgebraMatrix::to_float() const {
  const int n = size();
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = entries[r][c].to_double();
  return m;
}

AlgebraMatrix su2_algebra_matrix(int two_j, Generator g) {
  if (two_j < 0) throw std::invalid_argument("su2_algebra_matrix: negative 2j");
  const Rational tj(two_j);
  return algebra_matrix(su2_generator(two_j, g), two_j + 1, [&](int nu) { return falling_factorial(tj, nu); });
}

AlgebraMatrix su11_algebra_matrix(const Rational& lambda, int cutoff, Generator g) {
  if (lambda.sign() <= 0) throw std::invalid_argument("su11_algebra_matrix: need lambda > 0");
  if (cutoff < 0) throw std::invalid_argument("su11_algebra_matrix: negative cutoff");
  return algebra_matrix(su11_generator(lambda, g), cutoff + 1, [&](int nu) { return rising_factorial(lambda, nu); });
}

GaussianRational su2_measure_inner_product(int two_j, const BargmannPolynomial& bra, const BargmannPolynomial& ket) {
  if (bra.shape() != Shape{1, 1} || ket.shape() != Shape{1, 1}) {
    throw std::invalid_argument("su2_measure_inner_product: expected single-variable polynomials");
  }
  if (bra.degree() > two_j || ket.degree() > two_j) {
    throw DegreeOverflow("su2_measure_inner_product: degree exceeds 2j = " + std::to_string(two_j));
  }
  // Moment: ((2j+1)/pi) int |z|^{2nu} (1+|z|^2)^{-2j-2} d^2z = nu!(2j-nu)!/(2j)!
  GaussianRational sum;
  for (const auto& [m, c] : bra.terms()) {
    const GaussianRational k = ket.coefficient(m);
    if (k.is_zero()) continue;
    const int nu = m.degree();
    sum += c.conj() * k * GaussianRational(factorial(nu) * factorial(two_j - nu) / factorial(two_j));
  }
  return sum;
}

}  // namespace cst
