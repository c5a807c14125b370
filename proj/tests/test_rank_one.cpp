#include "cst/kernel.hpp"
#include "cst/rank_one.hpp"

#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace cst;

namespace {

std::vector<double> beta_samples(int n, double top) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(top * (i + 0.37) / n);
  return out;
}

// Rows and columns ordered m = j, j-1, ..., -j.
Eigen::MatrixXd d_matrix(int two_j, double beta) {
  Eigen::MatrixXd d(two_j + 1, two_j + 1);
  for (int a = 0; a <= two_j; ++a)
    for (int b = 0; b <= two_j; ++b) d(a, b) = su2_wigner_d(two_j, two_j - 2 * a, two_j - 2 * b, beta);
  return d;
}

}  // namespace

TEST_CASE("SU(2) Wigner d through the pairing matches the reference") {
  for (int two_j = 0; two_j <= 6; ++two_j)
    for (double beta : beta_samples(10, std::numbers::pi))
      for (int m = -two_j; m <= two_j; m += 2)
        for (int n = -two_j; n <= two_j; n += 2)
          CHECK(std::abs(su2_wigner_d(two_j, m, n, beta) - su2_wigner_d_reference(two_j, m, n, beta)) < 1e-12);
}

TEST_CASE("integer-spin d agrees with the floating textbook sum") {
  for (int L = 0; L <= 4; ++L)
    for (double beta : beta_samples(4, std::numbers::pi))
      for (int m = -L; m <= L; ++m)
        for (int n = -L; n <= L; ++n)
          CHECK(std::abs(su2_wigner_d(2 * L, 2 * m, 2 * n, beta) - oracle::wigner_d(L, m, n, beta)) < 1e-12);
}

TEST_CASE("d matrices are orthogonal") {
  for (int two_j = 0; two_j <= 6; ++two_j)
    for (double beta : beta_samples(10, std::numbers::pi)) {
      const auto d = d_matrix(two_j, beta);
      CHECK((d * d.transpose() - Eigen::MatrixXd::Identity(two_j + 1, two_j + 1)).norm() < 1e-10);
    }
}

TEST_CASE("spin-1/2 at beta = pi is antidiagonal") {
  const auto d = d_matrix(1, std::numbers::pi);
  CHECK(std::abs(d(0, 0)) < 1e-15);
  CHECK(std::abs(d(1, 1)) < 1e-15);
  CHECK(std::abs(std::abs(d(0, 1)) - 1) < 1e-15);
  CHECK(d(0, 1) == doctest::Approx(-d(1, 0)));
}

TEST_CASE("d is the exponential of the algebra matrices") {
  for (int two_j = 1; two_j <= 6; ++two_j) {
    const CMatrix jp = su2_algebra_matrix(two_j, Generator::Jplus).to_float();
    const CMatrix jm = su2_algebra_matrix(two_j, Generator::Jminus).to_float();
    const CMatrix jy = (jp - jm) / Complex(0, 2);
    for (double beta : beta_samples(3, std::numbers::pi)) {
      const CMatrix u = (Complex(0, -beta) * jy).exp();
      CHECK((u.real() - d_matrix(two_j, beta)).norm() < 1e-12);
    }
  }
}

TEST_CASE("algebra matrices satisfy the su(2) relations") {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const CMatrix j0 = su2_algebra_matrix(two_j, Generator::J0).to_float();
    const CMatrix jp = su2_algebra_matrix(two_j, Generator::Jplus).to_float();
    const CMatrix jm = su2_algebra_matrix(two_j, Generator::Jminus).to_float();
    CHECK((jp * jm - jm * jp - 2.0 * j0).norm() < 1e-12);
    CHECK((j0 * jp - jp * j0 - jp).norm() < 1e-12);
    CHECK((jp.adjoint() - jm).norm() < 1e-12);
    const double j = two_j / 2.0;
    const CMatrix casimir = j0 * j0 + 0.5 * (jp * jm + jm * jp);
    CHECK((casimir - j * (j + 1) * CMatrix::Identity(two_j + 1, two_j + 1)).norm() < 1e-12);
  }
}

TEST_CASE("su(1,1) algebra matrices close away from the truncation edge") {
  for (const auto& lam : {Rational(1), Rational(2), Rational(3, 2)}) {
    const int n = 6;
    const CMatrix k0 = su11_algebra_matrix(lam, n, Generator::J0).to_float();
    const CMatrix kp = su11_algebra_matrix(lam, n, Generator::Jplus).to_float();
    const CMatrix km = su11_algebra_matrix(lam, n, Generator::Jminus).to_float();
    const CMatrix comm = kp * km - km * kp;
    // [K+, K-] = -2 K0 on every column whose image stays inside the truncation
    for (int c = 0; c < n; ++c)
      CHECK((comm.col(c) + 2.0 * k0.col(c)).norm() < 1e-12);
    CHECK(k0(0, 0).real() == doctest::Approx(lam.to_double() / 2));
  }
}

TEST_CASE("SU(1,1) matrix elements: finite sum equals the pairing") {
  for (int lam = 1; lam <= 4; ++lam)
    for (int mu = 0; mu <= 4; ++mu)
      for (int nu = 0; nu <= 4; ++nu) {
        for (double beta : beta_samples(5, 2.0)) {
          const double a = su11_wigner(lam, mu, nu, beta), b = su11_wigner_pairing(lam, mu, nu, beta);
          CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
        }
        CHECK(su11_wigner(lam, mu, nu, 0.0) == (mu == nu ? 1.0 : 0.0));
        CHECK(su11_wigner_pairing(lam, mu, nu, 0.0) == (mu == nu ? 1.0 : 0.0));
        // swapping mu and nu costs a sign (-1)^(mu - nu)
        const double sign = (mu - nu) % 2 == 0 ? 1 : -1;
        CHECK(su11_wigner(lam, mu, nu, 0.8) == doctest::Approx(sign * su11_wigner(lam, nu, mu, 0.8)));
      }
}

TEST_CASE("the measure inner product equals the kernel pairing") {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const auto S = expand_kernel({Family::SU2, Rational(two_j), {1, 1}, two_j});
    for (int a = 0; a <= two_j; ++a)
      for (int b = 0; b <= two_j; ++b) {
        const auto za = BargmannPolynomial::power(a), zb = BargmannPolynomial::power(b);
        CHECK(su2_measure_inner_product(two_j, apply_kernel(S, za), apply_kernel(S, zb)) ==
              pair_through_kernel(za, S, zb));
      }
  }
}

TEST_CASE("measure moments agree with quadrature") {
  for (int two_j = 0; two_j <= 6; ++two_j)
    for (int nu = 0; nu <= two_j; ++nu) {
      const auto z = BargmannPolynomial::power(nu);
      const double exact = su2_measure_inner_product(two_j, z, z).re().to_double();
      CHECK(exact == doctest::Approx(oracle::su2_measure_moment(two_j, nu)).epsilon(1e-13));
    }
  CHECK_THROWS_AS(su2_measure_inner_product(2, BargmannPolynomial::power(3), BargmannPolynomial::power(0)),
                  DegreeOverflow);
}

TEST_CASE("generator names") {
  for (auto g : {Generator::J0, Generator::Jplus, Generator::Jminus}) CHECK(parse_generator(to_string(g)) == g);
  CHECK_THROWS(parse_generator("J7"));
}
