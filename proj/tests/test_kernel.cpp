#include "cst/kernel.hpp"
#include "cst/verify.hpp"

#include "doctest.h"

#include "oracles.hpp"

using namespace cst;

namespace {

MultiIndex zpow(int e) { return e ? MultiIndex::single({1, 1}, e) : MultiIndex(); }

std::vector<BasisVector> powers(int max_degree) {
  return monomial_basis({1, 1}, {{1, 1}}, max_degree);
}

}  // namespace

TEST_CASE("kernel specs validate") {
  CHECK_NOTHROW(KernelSpec{Family::SU2, Rational(2), {1, 1}, 3}.validate());
  CHECK_NOTHROW(KernelSpec{Family::SU11, Rational(-1, 2), {1, 1}, 3}.validate());
  CHECK_NOTHROW(KernelSpec{Family::SU2, Rational(0), {1, 1}, 3}.validate());
  CHECK_THROWS(KernelSpec{Family::SU2, Rational(-2), {1, 1}, 3}.validate());
  CHECK_THROWS(KernelSpec{Family::SU2, Rational(3, 2), {1, 1}, 3}.validate());
  CHECK_THROWS(KernelSpec{Family::Sp, Rational(2), {2, 2}, 3}.validate());
}

TEST_CASE("rank-one kernel expansions") {
  const auto su2 = expand_kernel({Family::SU2, Rational(2), {1, 1}, 3});
  CHECK(su2.terms().size() == 3);
  CHECK(su2.coefficient({}, {}) == GaussianRational(1));
  CHECK(su2.coefficient(zpow(1), zpow(1)) == GaussianRational(2));
  CHECK(su2.coefficient(zpow(2), zpow(2)) == GaussianRational(1));

  const auto su11 = expand_kernel({Family::SU11, Rational(-2), {1, 1}, 2});
  CHECK(su11.coefficient(zpow(1), zpow(1)) == GaussianRational(2));
  CHECK(su11.coefficient(zpow(2), zpow(2)) == GaussianRational(3));

  const auto flat = expand_kernel({Family::SU11, Rational(-3), {1, 1}, 0});
  CHECK(flat.terms().size() == 1);
  CHECK(flat.coefficient({}, {}) == GaussianRational(1));
}

TEST_CASE("rank-one coefficients match the binomial series") {
  for (const auto& lam : {Rational(1), Rational(3), Rational(5, 2), Rational(1, 3)}) {
    const auto k = expand_kernel({Family::SU11, -lam, {1, 1}, 6});
    for (int n = 0; n <= 6; ++n)
      CHECK(k.coefficient(zpow(n), zpow(n)) == GaussianRational(oracle::series_coefficient(-lam, -1, n)));
  }
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const auto k = expand_kernel({Family::SU2, Rational(two_j), {1, 1}, 8});
    for (int n = 0; n <= 8; ++n)
      CHECK(k.coefficient(zpow(n), zpow(n)) == GaussianRational(oracle::series_coefficient(Rational(two_j), 1, n)));
  }
}

TEST_CASE("expanded kernels are Hermitian") {
  const std::vector<KernelSpec> specs = {
      {Family::SUn, Rational(2), {2, 2}, 3},      {Family::SUpq, Rational(-3, 2), {2, 1}, 3},
      {Family::Sp, Rational(-2), {2, 2}, 3},      {Family::SpR, Rational(1), {2, 2}, 3},
      {Family::SO2n, Rational(-2), {3, 3}, 3},    {Family::SOstar, Rational(2), {3, 3}, 3},
      {Family::SOp2, Rational(-1), {3, 1}, 3},    {Family::SOpplus2, Rational(3), {3, 1}, 3}};
  for (const auto& s : specs) {
    CAPTURE(to_string(s.family));
    CHECK(expand_kernel(s).is_hermitian());
  }
}

TEST_CASE("Gram blocks of rank-one kernels") {
  const auto su2 = gram_block({Family::SU2, Rational(2), {1, 1}, 3}, powers(3));
  CHECK(su2.diagonal);
  CHECK(su2.exact_diagonal == std::vector<Rational>{1, 2, 2, 0});
  CHECK(su2.null_labels == std::vector<std::string>{"z11^3"});
  CHECK(su2.factor.rank == 3);
  CHECK_THROWS_AS(orthonormal_triplet_basis(su2), std::domain_error);

  const auto su11 = gram_block({Family::SU11, Rational(-1), {1, 1}, 2}, powers(2));
  CHECK(su11.exact_diagonal == std::vector<Rational>{1, 1, 2});
  CHECK(su11.null_labels.empty());
  const auto t = orthonormal_triplet_basis(su11);
  CHECK(t.psi_scale_squared[2] == Rational(1, 2));
  CHECK(t.Psi_scale_squared[2] == Rational(2));

  CHECK_THROWS_AS(gram_block({Family::SU2, Rational(2), {1, 1}, 2}, powers(3)), DegreeOverflow);
}

TEST_CASE("rank-one K^2 closed forms equal the kernel pairing") {
  for (int two_j = 0; two_j <= 8; ++two_j) {
    const KernelSpec spec{Family::SU2, Rational(two_j), {1, 1}, two_j + 2};
    const auto block = gram_block(spec, powers(two_j + 2));
    for (int nu = 0; nu <= two_j + 2; ++nu) {
      CHECK(block.exact_diagonal[nu] == k_squared_closed_form(spec, nu));
      if (nu > two_j) CHECK(block.exact_diagonal[nu].is_zero());
    }
  }
  for (int lam = 1; lam <= 5; ++lam) {
    const KernelSpec spec{Family::SU11, Rational(-lam), {1, 1}, 8};
    const auto block = gram_block(spec, powers(8));
    for (int nu = 0; nu <= 8; ++nu)
      CHECK(block.exact_diagonal[nu] == cst::factorial(lam + nu - 1) / cst::factorial(lam - 1));
  }
}

TEST_CASE("partitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6, 3, 3).size() == 3);
  CHECK(PartitionLabel({2, 1, 0}).length() == 2);
  CHECK_THROWS(PartitionLabel({1, 2}));
  CHECK_THROWS(PartitionLabel({-1}));
}

TEST_CASE("Capelli factors") {
  CHECK(capelli_norm_squared(PartitionLabel({1, 1})) == Rational(1, 2));
  CHECK(capelli_norm_squared(PartitionLabel({2, 1})) == Rational(1, 3));
  const auto hw = highest_weight_polynomial(PartitionLabel({1, 1}), {2, 2});
  auto expected = BargmannPolynomial(Shape{2, 2});
  expected.add_term(MultiIndex{{{1, 1}, 1}, {{2, 2}, 1}}, 1);
  expected.add_term(MultiIndex{{{1, 2}, 1}, {{2, 1}, 1}}, -1);
  CHECK(hw.polynomial == expected);
  CHECK_THROWS(highest_weight_polynomial(PartitionLabel({1, 1, 1}), {2, 3}));

  for (int n = 0; n <= 6; ++n)
    for (const auto& kappa : partitions_of(n, 3)) {
      CAPTURE(kappa.to_string());
      const auto h = highest_weight_polynomial(kappa, {3, 3});
      CHECK(h.norm_squared * bargmann_pair(h.polynomial, h.polynomial) == GaussianRational(1));
      CHECK(hook_length_dimension(kappa) == oracle::standard_tableaux(kappa.kappa));
    }
}

TEST_CASE("K^2 closed form equals the oracle for SU(p+q) and SU(p,q)") {
  for (const GroupShape shape : {GroupShape{1, 1}, GroupShape{2, 1}, GroupShape{2, 2}})
    for (int lam = 1; lam <= 3; ++lam)
      for (int n = 0; n <= 3; ++n)
        for (const auto& kappa : partitions_of(n, std::min(shape.p, shape.q))) {
          for (const auto& spec : {KernelSpec{Family::SUn, Rational(lam), shape, n},
                                   KernelSpec{Family::SUpq, Rational(-lam), shape, n}}) {
            CAPTURE(kappa.to_string());
            CHECK(k_squared_oracle(spec, kappa) == k_squared_closed_form(spec, kappa));
          }
        }
  const auto report = adjudicate_k_squared({{1, 1}, {2, 1}, {2, 2}}, 3, 3);
  CHECK(report.passed());
  CHECK(report.printed_mismatches + report.printed_undefined > 0);
  CHECK(report.render().find("kappa") != std::string::npos);
}

TEST_CASE("every supported kernel has a positive semidefinite Gram block") {
  VerifyOptions opt;
  opt.cutoff = 3;
  for (const auto& r : kernel_suite(opt)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("PSD factorization") {
  CMatrix S(3, 3);
  S << 2, 1, 0, 1, 2, 0, 0, 0, 0;
  const auto f = factorize_psd(S);
  CHECK(f.rank == 2);
  CHECK(f.positive_semidefinite);
  CHECK((f.K * f.K.adjoint() - S).norm() < 1e-12);
  CHECK((f.K_bar.adjoint() * S * f.K_bar - CMatrix::Identity(2, 2)).norm() < 1e-12);
  S(2, 2) = -1e-3;
  CHECK_FALSE(factorize_psd(S).positive_semidefinite);
}
