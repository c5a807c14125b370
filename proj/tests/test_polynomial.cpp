#include "cst/polynomial.hpp"

#include "doctest.h"

#include <random>

using namespace cst;

namespace {

const Shape k11{1, 1};
const Shape k22{2, 2};

BargmannPolynomial random_poly(Shape shape, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_degree);
  BargmannPolynomial p(shape);
  for (int t = 0; t < 5; ++t) {
    MultiIndex m;
    for (int r = 1; r <= shape.rows; ++r)
      for (int c = 1; c <= shape.cols; ++c)
        if (const int e = deg(rng) / 2; e > 0) m = m * MultiIndex::single({r, c}, e);
    p.add_term(m, GaussianRational(Rational(coef(rng)), Rational(coef(rng), 2)));
  }
  return p;
}

}  // namespace

TEST_CASE("Bargmann pairing of monomials") {
  const auto z = BargmannPolynomial::power(1);
  CHECK(bargmann_pair(z, z) == GaussianRational(1));
  CHECK(bargmann_pair(BargmannPolynomial::power(2), BargmannPolynomial::power(3)) == GaussianRational(0));
  CHECK(bargmann_pair(BargmannPolynomial::power(2), BargmannPolynomial::power(2)) == GaussianRational(2));

  const MultiIndex m{{{1, 1}, 2}, {{2, 1}, 1}, {{2, 2}, 3}};
  const auto p = BargmannPolynomial::monomial(k22, m);
  CHECK(bargmann_pair(p, p) == GaussianRational(Rational(m.factorial())));
  CHECK(m.factorial() == 12);
}

TEST_CASE("pairing is sesquilinear and Hermitian") {
  std::mt19937_64 rng(3);
  const GaussianRational a(Rational(2), Rational(-1, 3));
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(k22, 4, rng), g = random_poly(k22, 4, rng), h = random_poly(k22, 4, rng);
    CHECK(bargmann_pair(f, g) == bargmann_pair(g, f).conj());
    CHECK(bargmann_pair(f, a * g + h) == a * bargmann_pair(f, g) + bargmann_pair(f, h));
    CHECK(bargmann_pair(a * f, g) == a.conj() * bargmann_pair(f, g));
    CHECK(bargmann_pair(f, f).im().is_zero());
    CHECK(bargmann_pair(f, f).re().sign() >= 0);
  }
}

TEST_CASE("multiplication by z_v is adjoint to d/dz_v") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(k22, 4, rng), g = random_poly(k22, 4, rng);
    for (VariableIndex v : {VariableIndex{1, 1}, VariableIndex{2, 1}, VariableIndex{1, 2}}) {
      const auto zf = BargmannPolynomial::variable(k22, v) * f;
      CHECK(bargmann_pair(zf, g) == bargmann_pair(f, g.derivative(v)));
    }
  }
}

TEST_CASE("polynomial algebra") {
  const auto z = BargmannPolynomial::power(1);
  const auto one = BargmannPolynomial::constant(k11, 1);
  const auto p = (one + z).pow(3);
  CHECK(p.coefficient(MultiIndex::single({1, 1}, 2)) == GaussianRational(3));
  CHECK(p.degree() == 3);
  CHECK(p.derivative({1, 1}) == GaussianRational(3) * (one + z).pow(2));
  CHECK((p - p).is_zero());
  CHECK(BargmannPolynomial(k11).degree() == -1);
  CHECK_THROWS(BargmannPolynomial::variable(k11, {2, 1}));
  CHECK(p.evaluate([](VariableIndex) { return std::complex<double>(1.0, 0.0); }) == std::complex<double>(8.0, 0.0));
}

TEST_CASE("kernel pairing with the identity kernel reduces to the Bargmann pairing") {
  std::mt19937_64 rng(9);
  // identity operator: sum_m z^m x*^m / m!
  BilinearKernelPolynomial identity(k22, 4);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        for (int d = 0; a + b + c + d <= 4; ++d) {
          MultiIndex m;
          if (a) m = m * MultiIndex::single({1, 1}, a);
          if (b) m = m * MultiIndex::single({1, 2}, b);
          if (c) m = m * MultiIndex::single({2, 1}, c);
          if (d) m = m * MultiIndex::single({2, 2}, d);
          identity.add_term(m, m, GaussianRational(Rational(1) / Rational(m.factorial())));
        }
  CHECK(identity.is_hermitian());
  for (int i = 0; i < 30; ++i) {
    const auto f = random_poly(k22, 2, rng), g = random_poly(k22, 2, rng);
    CHECK(pair_through_kernel(f, identity, g) == bargmann_pair(f, g));
    CHECK(apply_kernel(identity, g) == g);
  }
  CHECK_THROWS_AS(pair_through_kernel(BargmannPolynomial::monomial(k22, MultiIndex::single({1, 1}, 5)), identity,
                                      BargmannPolynomial::constant(k22, 1)),
                  DegreeOverflow);
}

TEST_CASE("kernel products truncate at the smaller cutoff") {
  BilinearKernelPolynomial a(k11, 3), b(k11, 2);
  a.add_term({}, {}, 1);
  a.add_term(MultiIndex::single({1, 1}), MultiIndex::single({1, 1}), 2);
  b.add_term({}, {}, 1);
  b.add_term(MultiIndex::single({1, 1}), MultiIndex::single({1, 1}), 1);
  const auto c = a * b;
  CHECK(c.degree_cutoff() == 2);
  CHECK(c.coefficient(MultiIndex::single({1, 1}), MultiIndex::single({1, 1})) == GaussianRational(3));
  CHECK(c.coefficient(MultiIndex::single({1, 1}, 2), MultiIndex::single({1, 1}, 2)) == GaussianRational(2));
  a.add_term(MultiIndex::single({1, 1}, 4), {}, 1);
  CHECK(a.coefficient(MultiIndex::single({1, 1}, 4), {}).is_zero());
}

TEST_CASE("differential operators") {
  // z^2 d/dz on z^3 gives 3 z^4
  DifferentialOperator op(k11);
  op.differentiate(BargmannPolynomial::power(2), {1, 1});
  CHECK(op.apply(BargmannPolynomial::power(3)) == BargmannPolynomial::power(4, 3));
  op.multiply_by(BargmannPolynomial::constant(k11, 2));
  CHECK(differential_operator_apply(op, BargmannPolynomial::power(1)) == BargmannPolynomial::power(2) +
                                                                            BargmannPolynomial::power(1, 2));
}

TEST_CASE("Laurent polynomials in the half-angle pair") {
  const auto c = LaurentPolynomial::monomial(1, 0), s = LaurentPolynomial::monomial(0, 1);
  const auto p = (c + s * Rational(-1)).pow(2);
  CHECK(p.coefficient(1, 1) == Rational(-2));
  CHECK(p.evaluate(0.6, 0.8) == doctest::Approx(0.04));
  const auto inv = LaurentPolynomial::monomial(-2, 1);
  CHECK((inv * LaurentPolynomial::monomial(2, 0)) == s);
  CHECK((p + p * Rational(-1)).is_zero());
}
