#include "cst/verify.hpp"

#include "cst/group.hpp"
#include "cst/polynomial.hpp"
#include "cst/rank_one.hpp"
#include "cst/so3.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace cst {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& what, bool ok, const std::string& detail = {}) {
    out_.push_back({name_, what, ok, ok ? std::string() : detail});
  }

  // Runs body, turning an escaped exception into a failed check.
  template <typename F>
  void run(const std::string& what, F&& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    check(what, ok, detail);
  }

  std::vector<CheckResult> results() && { return std::move(out_); }

 private:
  std::string name_;
  std::vector<CheckResult> out_;
};

struct FamilyCase {
  Family family;
  GroupShape shape;
};

const std::vector<FamilyCase>& group_cases() {
  static const std::vector<FamilyCase> cases = {
      {Family::SU2, {1, 1}},    {Family::SU11, {1, 1}},   {Family::SUn, {2, 1}},     {Family::SUpq, {2, 1}},
      {Family::SUpq, {2, 2}},   {Family::Sp, {2, 2}},     {Family::SpR, {1, 1}},     {Family::SpR, {2, 2}},
      {Family::SO2n, {2, 2}},   {Family::SOstar, {2, 2}}, {Family::SOstar, {3, 3}}, {Family::SOp2, {3, 1}},
      {Family::SOpplus2, {3, 1}}};
  return cases;
}

// Small kernel specs covering every family and both sign conventions.
std::vector<KernelSpec> kernel_cases(int cutoff) {
  std::vector<KernelSpec> out;
  for (int lam = 1; lam <= 3; ++lam) {
    out.push_back({Family::SU2, Rational(lam), {1, 1}, cutoff});
    out.push_back({Family::SU11, Rational(-lam), {1, 1}, cutoff});
    out.push_back({Family::SUn, Rational(lam), {2, 1}, cutoff});
    out.push_back({Family::SUpq, Rational(-lam), {2, 1}, cutoff});
    out.push_back({Family::SUn, Rational(lam), {2, 2}, std::min(cutoff, 3)});
    out.push_back({Family::SUpq, Rational(-lam), {2, 2}, std::min(cutoff, 3)});
    out.push_back({Family::Sp, Rational(-lam), {2, 2}, cutoff});
    out.push_back({Family::SpR, Rational(lam), {2, 2}, cutoff});
    out.push_back({Family::SO2n, Rational(-lam), {3, 3}, cutoff});
    out.push_back({Family::SOstar, Rational(lam), {3, 3}, cutoff});
    out.push_back({Family::SOpplus2, Rational(lam), {3, 1}, cutoff});
    out.push_back({Family::SOp2, Rational(-lam), {3, 1}, cutoff});
  }
  out.push_back({Family::SU11, Rational(-3, 2), {1, 1}, cutoff});
  out.push_back({Family::SpR, Rational(1, 2), {1, 1}, cutoff});
  return out;
}

std::string describe(const KernelSpec& s) {
  return to_string(s.family) + "(" + std::to_string(s.shape.p) + "," + std::to_string(s.shape.q) +
         ") sigma=" + s.sigma.to_string() + " cutoff=" + std::to_string(s.degree_cutoff);
}

BargmannPolynomial random_polynomial(Shape shape, const std::vector<VariableIndex>& vars, int degree,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  BargmannPolynomial p(shape);
  for (const auto& b : monomial_basis(shape, vars, degree)) {
    const MultiIndex& m = b.poly.terms().begin()->first;
    p.add_term(m, GaussianRational(Rational(coef(rng), 1 + std::abs(coef(rng))), Rational(coef(rng))));
  }
  return p;
}

}  // namespace

// -------------------------------------------------------------- exact core

std::vector<CheckResult> exact_core_suite(const VerifyOptions&) {
  Suite s("exact-core");
  s.run("multinomial(n,[k]) = binomial(n,k), n <= 30", [](std::string& d) {
    for (long n = 0; n <= 30; ++n)
      for (long k = 0; k <= n; ++k)
        if (multinomial(n, {k}) != binomial(n, k) || binomial(n, k) != factorial(n) / (factorial(k) * factorial(n - k))) {
          d = "n=" + std::to_string(n) + " k=" + std::to_string(k);
          return false;
        }
    return true;
  });
  s.run("half_angle_integral(p,q) = half_angle_integral(q,p)", [](std::string& d) {
    for (long p = 0; p <= 12; ++p)
      for (long q = 0; q <= 12; ++q)
        if (!(half_angle_integral(p, q) == half_angle_integral(q, p))) {
          d = "p=" + std::to_string(p) + " q=" + std::to_string(q);
          return false;
        }
    return true;
  });
  s.run("n!! (n-1)!! = n!, n <= 30", [](std::string& d) {
    for (long n = 1; n <= 30; ++n)
      if (double_factorial(n) * double_factorial(n - 1) != factorial(n)) {
        d = "n=" + std::to_string(n);
        return false;
      }
    return true;
  });
  s.run("mixed pi powers are rejected", [](std::string& d) {
    try {
      (void)(ExactScalar(Rational(1), 1) + ExactScalar(Rational(1), 2));
    } catch (const ExactMismatch&) {
      return true;
    }
    d = "pi + pi^2 was accepted";
    return false;
  });
  return std::move(s).results();
}

// ------------------------------------------------------------- polynomials

std::vector<CheckResult> polynomial_suite(const VerifyOptions& opt) {
  Suite s("polynomial-bargmann");
  std::mt19937_64 rng(opt.seed);

  s.run("pairing is conjugate-symmetric", [&](std::string& d) {
    const Shape sh{2, 2};
    const auto vars = chart_variables(Family::SUpq, {2, 2});
    for (int t = 0; t < 20; ++t) {
      const auto a = random_polynomial(sh, vars, 3, rng), b = random_polynomial(sh, vars, 3, rng);
      if (bargmann_pair(a, b) != bargmann_pair(b, a).conj()) {
        d = "trial " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  s.run("normalized monomials are orthonormal", [&](std::string& d) {
    const std::vector<std::pair<GroupShape, int>> shapes = {{{1, 1}, 8}, {{1, 2}, 8}, {{2, 2}, 6}};
    for (const auto& [gs, deg] : shapes) {
      const Shape sh{gs.p, gs.q};
      const auto basis = monomial_basis(sh, chart_variables(Family::SUpq, gs), deg);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const GaussianRational v = bargmann_pair(basis[i].poly, basis[j].poly) *
                                     GaussianRational(basis[i].scale_squared);  // off-diagonal pairs vanish regardless
          if (v != GaussianRational(i == j ? 1 : 0)) {
            d = basis[i].label + " vs " + basis[j].label;
            return false;
          }
        }
    }
    return true;
  });

  s.run("apply_kernel then pair equals pair_through_kernel", [&](std::string& d) {
    for (const KernelSpec& spec : {KernelSpec{Family::SU2, Rational(3), {1, 1}, 4},
                                   KernelSpec{Family::SU11, Rational(-2), {1, 1}, 4},
                                   KernelSpec{Family::SUpq, Rational(-2), {2, 2}, 3},
                                   KernelSpec{Family::SpR, Rational(1), {2, 2}, 3}}) {
      const auto S = expand_kernel(spec);
      const auto vars = chart_variables(spec.family, spec.shape);
      for (int t = 0; t < 5; ++t) {
        const auto a = random_polynomial(spec.variable_shape(), vars, spec.degree_cutoff, rng);
        const auto b = random_polynomial(spec.variable_shape(), vars, spec.degree_cutoff, rng);
        if (bargmann_pair(a, apply_kernel(S, b)) != pair_through_kernel(a, S, b)) {
          d = describe(spec);
          return false;
        }
        if (pair_through_kernel(a, S, b) != pair_through_kernel(b, S, a).conj()) {
          d = describe(spec) + " not Hermitian";
          return false;
        }
      }
    }
    return true;
  });

  const auto commutator_check = [](const DifferentialOperator& x, const DifferentialOperator& y,
                                   const DifferentialOperator& z, std::string& d) {
    for (int n = 0; n <= 8; ++n) {
      const auto f = BargmannPolynomial::power(n);
      const auto lhs = x.apply(y.apply(f)) - y.apply(x.apply(f));
      if (lhs != z.apply(f) * GaussianRational(2)) {
        d = "degree " + std::to_string(n);
        return false;
      }
    }
    return true;
  };
  s.run("su(2): [J+, J-] = 2 J0 on degree <= 8", [&](std::string& d) {
    for (int tj : {1, 4, 7})
      if (!commutator_check(su2_generator(tj, Generator::Jplus), su2_generator(tj, Generator::Jminus),
                            su2_generator(tj, Generator::J0), d))
        return false;
    return true;
  });
  s.run("su(1,1): [J-, J+] = 2 J0 on degree <= 8", [&](std::string& d) {
    for (const Rational& lam : {Rational(1), Rational(3), Rational(5, 2)})
      if (!commutator_check(su11_generator(lam, Generator::Jminus), su11_generator(lam, Generator::Jplus),
                            su11_generator(lam, Generator::J0), d))
        return false;
    return true;
  });
  return std::move(s).results();
}

// ------------------------------------------------------- matrix factorization

std::vector<CheckResult> matrix_suite(const VerifyOptions& opt) {
  Suite s("matrix-factorize");
  std::mt19937_64 rng(opt.seed + 1);

  for (const auto& c : group_cases()) {
    const std::string tag = to_string(c.family) + "(" + std::to_string(c.shape.p) + "," + std::to_string(c.shape.q) + ")";
    s.run("cocycle identity, 200 pairs: " + tag, [&](std::string& d) {
      int tried = 0;
      double worst = 0;
      while (tried < 200) {
        const auto g1 = GroupElement::random(c.family, c.shape, rng);
        const auto g2 = GroupElement::random(c.family, c.shape, rng);
        const CMatrix z = random_chart_point(c.family, c.shape, rng);
        try {
          const auto whole = action_factorize(g1 * g2, z);
          const auto first = action_factorize(g1, z);
          const auto second = action_factorize(g2, first.moved);
          const double e1 = std::abs(whole.base - first.base * second.base) / std::max(1.0, std::abs(whole.base));
          const double e2 = (whole.moved - second.moved).norm() / std::max(1.0, whole.moved.norm());
          worst = std::max({worst, e1, e2});
          ++tried;
        } catch (const ChartSingularity&) {
        }
      }
      d = "worst residual " + std::to_string(worst);
      return worst < 1e-8;
    });

    s.run("membership: identity accepted, 1e-6 perturbation rejected: " + tag, [&](std::string& d) {
      const int n = matrix_dimension(c.family, c.shape);
      if (!is_member(c.family, c.shape, CMatrix::Identity(n, n))) {
        d = "identity rejected";
        return false;
      }
      const auto g = GroupElement::random(c.family, c.shape, rng);
      CMatrix bad = g.matrix();
      bad(0, 0) += 1e-6;
      if (is_member(c.family, c.shape, bad)) {
        d = "perturbed element accepted";
        return false;
      }
      return true;
    });

    s.run("sampled elements satisfy the defining relations: " + tag, [&](std::string& d) {
      for (int t = 0; t < 10; ++t) {
        CMatrix m = GroupElement::random(c.family, c.shape, rng).matrix();
        if (opt.inject != 0) m(0, m.cols() - 1) += opt.inject;
        const double r = membership_residual(c.family, c.shape, m);
        if (!is_member(c.family, c.shape, m)) {
          d = "residual " + std::to_string(r) + " (sample " + std::to_string(t) + ")";
          return false;
        }
      }
      return true;
    });
  }

  s.run("gauss_block reassembly < 1e-10", [&](std::string& d) {
    std::normal_distribution<double> nd;
    for (int t = 0; t < 50; ++t) {
      CMatrix m(3, 3);
      for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = {nd(rng), nd(rng)};
      const auto f = gauss_block(m, 1, 2);
      const double r = (f.reassemble() - m).norm();
      if (r >= 1e-10 * std::max(1.0, m.norm())) {
        d = "residual " + std::to_string(r);
        return false;
      }
    }
    return true;
  });

  s.run("SU(2) action equals explicit Moebius formula", [&](std::string& d) {
    for (int t = 0; t < 100; ++t) {
      const auto g = GroupElement::random(Family::SU2, {1, 1}, rng);
      const CMatrix z = random_chart_point(Family::SU2, {1, 1}, rng);
      const Complex a = g.matrix()(0, 0), b = g.matrix()(0, 1), w = z(0, 0);
      const auto r = action_factorize(g, z);
      const Complex moved = (b + std::conj(a) * w) / (a - std::conj(b) * w);
      if (std::abs(r.moved(0, 0) - moved) > 1e-12 || std::abs(r.base - (a - std::conj(b) * w)) > 1e-12) {
        d = "sample " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  s.run("Iwasawa SU(3): omega orthogonal, Z omega = g", [&](std::string& d) {
    for (int t = 0; t < 50; ++t) {
      const CMatrix g = GroupElement::random(Family::SUn, {2, 1}, rng).matrix();
      const auto f = iwasawa_su3(g);
      const double r1 = (f.omega * f.omega.transpose() - CMatrix::Identity(3, 3)).norm();
      const double r2 = (f.Z * f.omega - g).norm();
      const bool lower = std::abs(f.Z(0, 1)) + std::abs(f.Z(0, 2)) + std::abs(f.Z(1, 2)) < 1e-14;
      if (r1 > 1e-10 || r2 > 1e-10 || !lower) {
        d = "residuals " + std::to_string(r1) + ", " + std::to_string(r2);
        return false;
      }
    }
    return true;
  });
  return std::move(s).results();
}

// ------------------------------------------------------------------ kernels

Rational k_squared_oracle(const KernelSpec& spec, const PartitionLabel& kappa) {
  KernelSpec local = spec;
  local.degree_cutoff = kappa.size();
  const auto hw = highest_weight_polynomial(kappa, local.variable_shape());
  const GaussianRational v = pair_through_kernel(hw.polynomial, expand_kernel(local), hw.polynomial);
  if (!v.is_real()) throw std::logic_error("k_squared_oracle: complex norm");
  return v.re() * hw.norm_squared;
}

std::vector<CheckResult> kernel_suite(const VerifyOptions& opt) {
  Suite s("kernel-engine");

  s.run("closed-form K^2 equals the expansion oracle", [](std::string& d) {
    for (int lam = 1; lam <= 4; ++lam) {
      for (int nu = 0; nu <= lam + 2; ++nu) {
        for (const KernelSpec& spec : {KernelSpec{Family::SU2, Rational(lam), {1, 1}, nu},
                                       KernelSpec{Family::SU11, Rational(-lam), {1, 1}, nu}}) {
          const PartitionLabel k(nu ? std::vector<int>{nu} : std::vector<int>{});
          if (k_squared_oracle(spec, k) != k_squared_closed_form(spec, nu)) {
            d = describe(spec) + " nu=" + std::to_string(nu);
            return false;
          }
        }
      }
      for (GroupShape gs : {GroupShape{2, 1}, GroupShape{2, 2}})
        for (int n = 0; n <= 4; ++n)
          for (const auto& k : partitions_of(n, std::min(gs.p, gs.q)))
            for (const KernelSpec& spec : {KernelSpec{Family::SUn, Rational(lam), gs, n},
                                           KernelSpec{Family::SUpq, Rational(-lam), gs, n}}) {
              if (k_squared_oracle(spec, k) != k_squared_closed_form(spec, k)) {
                d = describe(spec) + " kappa=" + k.to_string();
                return false;
              }
            }
    }
    return true;
  });

  s.run("reproducing property S z^nu = K_nu^2 z^nu", [](std::string& d) {
    for (int lam = 1; lam <= 4; ++lam)
      for (const KernelSpec& spec : {KernelSpec{Family::SU2, Rational(lam), {1, 1}, 6},
                                     KernelSpec{Family::SU11, Rational(-lam), {1, 1}, 6}}) {
        const auto S = expand_kernel(spec);
        for (int nu = 0; nu <= 6; ++nu) {
          const auto image = apply_kernel(S, BargmannPolynomial::power(nu));
          if (image != BargmannPolynomial::power(nu, k_squared_closed_form(spec, nu))) {
            d = describe(spec) + " nu=" + std::to_string(nu);
            return false;
          }
        }
      }
    return true;
  });

  s.run("Gram blocks are positive semidefinite", [&](std::string& d) {
    for (const KernelSpec& spec : kernel_cases(opt.cutoff)) {
      const auto basis = monomial_basis(spec.variable_shape(), chart_variables(spec.family, spec.shape),
                                        std::min(spec.degree_cutoff, 3));
      const auto block = gram_block(spec, basis);
      if (!block.factor.positive_semidefinite) {
        d = describe(spec) + " min relative eigenvalue " + std::to_string(block.factor.min_relative_eigenvalue);
        return false;
      }
    }
    return true;
  });

  s.run("rank-one reductions of SU(p+q) and SU(p,q) at p=q=1", [](std::string& d) {
    for (int lam = 0; lam <= 5; ++lam) {
      if (!(expand_kernel({Family::SU2, Rational(lam), {1, 1}, 6}) ==
            expand_kernel({Family::SUn, Rational(lam), {1, 1}, 6}))) {
        d = "SU2 vs SUn at lambda " + std::to_string(lam);
        return false;
      }
      if (!(expand_kernel({Family::SU11, Rational(-lam), {1, 1}, 6}) ==
            expand_kernel({Family::SUpq, Rational(-lam), {1, 1}, 6}))) {
        d = "SU11 vs SUpq at lambda " + std::to_string(lam);
        return false;
      }
    }
    return true;
  });

  s.run("dim kappa = N! N_kappa^2 = hook length, N <= 6", [](std::string& d) {
    for (int n = 0; n <= 6; ++n)
      for (const auto& k : partitions_of(n)) {
        const Rational dim = factorial(n) * capelli_norm_squared(k);
        if (dim != Rational(hook_length_dimension(k))) {
          d = "kappa " + k.to_string();
          return false;
        }
      }
    return true;
  });
  return std::move(s).results();
}

// ---------------------------------------------------------------- rank one

std::vector<CheckResult> rank_one_suite(const VerifyOptions& opt) {
  Suite s("rank-one-triplets");
  const std::vector<double> betas = {0.0, 0.3, 0.9, 1.4, 2.0, 2.7, 3.1};

  s.run("su(2): J+ dagger = J-, exactly", [](std::string& d) {
    for (int tj = 0; tj <= 8; ++tj) {
      const auto jp = su2_algebra_matrix(tj, Generator::Jplus), jm = su2_algebra_matrix(tj, Generator::Jminus);
      for (int r = 0; r < jp.size(); ++r)
        for (int c = 0; c < jp.size(); ++c)
          if (!(jp.entries[r][c] == jm.entries[c][r])) {
            d = "2j=" + std::to_string(tj);
            return false;
          }
    }
    return true;
  });

  s.run("d^j rows orthonormal", [&](std::string& d) {
    for (int tj = 0; tj <= 6; ++tj)
      for (double beta : betas)
        for (int m = -tj; m <= tj; m += 2)
          for (int mp = -tj; mp <= tj; mp += 2) {
            double sum = 0;
            for (int n = -tj; n <= tj; n += 2) sum += su2_wigner_d(tj, m, n, beta) * su2_wigner_d(tj, mp, n, beta);
            if (std::abs(sum - (m == mp ? 1.0 : 0.0)) > opt.tolerance) {
              d = "2j=" + std::to_string(tj);
              return false;
            }
          }
    return true;
  });

  s.run("d^j pairing route equals reference sum", [&](std::string& d) {
    for (int tj = 0; tj <= 6; ++tj)
      for (double beta : betas)
        for (int m = -tj; m <= tj; m += 2)
          for (int n = -tj; n <= tj; n += 2)
            if (std::abs(su2_wigner_d(tj, m, n, beta) - su2_wigner_d_reference(tj, m, n, beta)) > 1e-12) {
              d = "2j=" + std::to_string(tj);
              return false;
            }
    return true;
  });

  s.run("SU(1,1) Wigner function: mu <-> nu up to (-1)^(mu-nu)", [&](std::string& d) {
    for (int lam = 1; lam <= 4; ++lam)
      for (int mu = 0; mu <= 4; ++mu)
        for (int nu = 0; nu <= 4; ++nu)
          for (double beta : betas) {
            const double sign = (mu - nu) % 2 == 0 ? 1.0 : -1.0;
            const double a = su11_wigner(lam, mu, nu, beta), b = su11_wigner(lam, nu, mu, beta);
            if (std::abs(a - sign * b) > opt.tolerance * std::max(1.0, std::abs(a))) {
              d = "lambda=" + std::to_string(lam);
              return false;
            }
          }
    return true;
  });

  s.run("measure inner product equals kernel pairing", [](std::string& d) {
    for (int tj = 0; tj <= 6; ++tj) {
      const auto S = expand_kernel({Family::SU2, Rational(tj), {1, 1}, tj});
      for (int a = 0; a <= tj; ++a)
        for (int b = 0; b <= tj; ++b) {
          const auto za = BargmannPolynomial::power(a), zb = BargmannPolynomial::power(b);
          if (su2_measure_inner_product(tj, apply_kernel(S, za), apply_kernel(S, zb)) !=
              pair_through_kernel(za, S, zb)) {
            d = "2j=" + std::to_string(tj);
            return false;
          }
        }
    }
    return true;
  });
  return std::move(s).results();
}

// -------------------------------------------------------------------- SO(3)

std::vector<CheckResult> so3_suite(const VerifyOptions&) {
  Suite s("so3-induced");

  s.run("S^L symmetries, pi homogeneity, lambda+mu <= 4, L <= 4", [](std::string& d) {
    for (int lam = 0; lam <= 4; ++lam)
      for (int mu = 0; lam + mu <= 4; ++mu)
        for (int L = 0; L <= 4; ++L) {
          std::set<int> pi_powers;
          for (int kp = -L; kp <= L; ++kp)
            for (int k = -L; k <= L; ++k) {
              const ExactScalar v = su3_kernel_exact(lam, mu, L, kp, k);
              const std::string where = "(" + std::to_string(lam) + "," + std::to_string(mu) + ") L=" +
                                        std::to_string(L) + " K'=" + std::to_string(kp) + " K=" + std::to_string(k);
              if (v.is_zero()) continue;
              pi_powers.insert(v.pi_power());
              const bool parity_ok = (k - mu) % 2 == 0 && (kp - mu) % 2 == 0;
              const int s1 = (lam + L + kp) % 2 == 0 ? 1 : -1;
              const int s2 = (lam + L + k) % 2 == 0 ? 1 : -1;
              if (!parity_ok || !(su3_kernel_exact(lam, mu, L, -kp, k) == v * ExactScalar(Rational(s1))) ||
                  !(su3_kernel_exact(lam, mu, L, kp, -k) == v * ExactScalar(Rational(s2))) ||
                  !(su3_kernel_exact(lam, mu, L, k, kp) == v)) {
                d = where;
                return false;
              }
            }
          if (pi_powers.size() > 1) {
            d = "mixed pi powers at L=" + std::to_string(L);
            return false;
          }
        }
    return true;
  });

  s.run("S^L positive semidefinite with K K^dagger residual < 1e-12", [](std::string& d) {
    for (int lam = 0; lam <= 4; ++lam)
      for (int mu = 0; lam + mu <= 4; ++mu)
        for (int L = 0; L <= 4; ++L) {
          const auto m = su3_k_matrix(lam, mu, L);
          if (!m.factor.positive_semidefinite || m.factor_residual >= 1e-12) {
            d = "(" + std::to_string(lam) + "," + std::to_string(mu) + ") L=" + std::to_string(L);
            return false;
          }
        }
    return true;
  });

  s.run("(lambda,0) closed form, lambda <= 6", [](std::string& d) {
    const ExactScalar four_pi2(Rational(4), 2);
    for (int lam = 0; lam <= 6; ++lam)
      for (int L = 0; L <= lam; ++L)
        if (!(su3_kernel_exact(lam, 0, L, 0, 0) == ExactScalar(su3_lambda0_closed_form(lam, L)) * four_pi2)) {
          d = "lambda=" + std::to_string(lam) + " L=" + std::to_string(L);
          return false;
        }
    return true;
  });

  s.run("rotor triplet duality and norms, L <= 6", [](std::string& d) {
    for (const auto& chi : D2Character::all())
      for (int L = 0; L <= 6; ++L)
        for (int K = 0; K <= L; ++K)
          for (int Lp = 0; Lp <= 6; ++Lp)
            for (int Kp = 0; Kp <= Lp; ++Kp) {
              if (!rotor_allowed(K, L, chi) || !rotor_allowed(Kp, Lp, chi)) continue;
              for (int M = -std::min({L, Lp, 1}); M <= std::min({L, Lp, 1}); ++M) {
                const RotorLabel a{K, L, M}, b{Kp, Lp, M};
                const ExactScalar expect(Rational(a.K == b.K && a.L == b.L ? 1 : 0));
                if (!(d_inner_product(rotor_psi(a), rotor_Psi(b, chi)) == expect) ||
                    !(d_inner_product(rotor_Psi(a, chi), rotor_Psi(b, chi)) == expect)) {
                  d = "K=" + std::to_string(K) + " L=" + std::to_string(L);
                  return false;
                }
              }
            }
    return true;
  });
  return std::move(s).results();
}

std::vector<CheckResult> run_all_suites(const VerifyOptions& opt) {
  std::vector<CheckResult> all;
  for (auto suite : {exact_core_suite, polynomial_suite, matrix_suite, kernel_suite, rank_one_suite, so3_suite}) {
    auto part = suite(opt);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

// ------------------------------------------------------------ adjudication

AdjudicationReport adjudicate_k_squared(const std::vector<GroupShape>& shapes, int max_lambda, int max_size) {
  AdjudicationReport rep;
  bool single_row_seen = false;
  bool single_row_ok = true;
  for (Family f : {Family::SUn, Family::SUpq})
    for (GroupShape gs : shapes)
      for (int lam = 1; lam <= max_lambda; ++lam)
        for (int n = 0; n <= max_size; ++n)
          for (const auto& k : partitions_of(n, std::min(gs.p, gs.q))) {
            const KernelSpec spec{f, Rational(f == Family::SUn ? lam : -lam), gs, n};
            AdjudicationRow row{f, gs, lam, k, k_squared_oracle(spec, k), k_squared_closed_form(spec, k), {}};
            try {
              row.printed = k_squared_printed_form(spec, k);
            } catch (const std::domain_error&) {
              ++rep.printed_undefined;
            }
            if (row.oracle != row.closed_form) ++rep.closed_form_mismatches;
            if (row.printed && *row.printed != row.oracle) ++rep.printed_mismatches;
            if (f == Family::SUpq && k.length() == 1) {
              single_row_seen = true;
              const int nu = k.kappa[0];
              single_row_ok = single_row_ok && row.oracle == factorial(lam + nu - 1) / factorial(lam - 1);
            }
            rep.rows.push_back(std::move(row));
          }
  rep.oracle_supports_lambda_minus_one = single_row_seen && single_row_ok;
  return rep;
}

std::string AdjudicationReport::render() const {
  std::ostringstream os;
  os << "K_kappa^2 adjudication (oracle = N_kappa^2 <phi|S|phi> on the expanded kernel)\n";
  os << "family  shape  lambda  kappa      oracle     closed     printed\n";
  for (const auto& r : rows) {
    os << to_string(r.family) << "  (" << r.shape.p << "," << r.shape.q << ")  " << r.lambda << "  " << r.kappa.to_string()
       << "  " << r.oracle << "  " << r.closed_form << "  " << (r.printed ? r.printed->to_string() : "undefined")
       << (r.printed && *r.printed != r.oracle ? "  <- printed differs" : "") << "\n";
  }
  os << "rows: " << rows.size() << ", closed-form mismatches: " << closed_form_mismatches
     << ", printed-form mismatches: " << printed_mismatches << ", printed undefined: " << printed_undefined << "\n";
  os << "SU(p,q) single-row denominator: oracle supports "
     << (oracle_supports_lambda_minus_one ? "(lambda+nu-1)!/(lambda-1)!" : "NEITHER candidate")
     << "; printed (lambda-kappa_1)! denominator "
     << (printed_mismatches > 0 ? "rejected" : "not contradicted") << "\n";
  return os.str();
}

}  // namespace cst
