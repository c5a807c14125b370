// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cst/group.hpp"
#include "cst/kernel.hpp"
#include "cst/rank_one.hpp"
#include "cst/so3.hpp"
#include "cst/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace cst;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, double time_limit, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && secs >= time_limit) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!ok) ++failures;
  std::printf("%s  [%2d] %s  (%.3fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

std::string where(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << "=" << v << " ";
  return os.str();
}

std::vector<double> betas(int n, double top) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(top * (i + 0.5) / n);
  return out;
}

std::vector<BasisVector> powers(int max_degree) { return monomial_basis({1, 1}, {{1, 1}}, max_degree); }

struct GroupCase {
  Family family;
  GroupShape shape;
};

}  // namespace

int main() {
  criterion(1, "SU(2) K^2 exact for 2j <= 8, nu <= 2j+2, zero past 2j", 1.0, [](std::string& d) {
    for (int two_j = 0; two_j <= 8; ++two_j) {
      const KernelSpec spec{Family::SU2, Rational(two_j), {1, 1}, two_j + 2};
      const auto block = gram_block(spec, powers(two_j + 2));
      for (int nu = 0; nu <= two_j + 2; ++nu) {
        const Rational expect = nu > two_j ? Rational(0) : factorial(two_j) / factorial(two_j - nu);
        if (block.exact_diagonal[nu] != expect || k_squared_closed_form(spec, nu) != expect) {
          d = where({{"2j", two_j}, {"nu", nu}});
          return false;
        }
      }
    }
    return true;
  });

  criterion(2, "SU(1,1) K^2 = (lambda+nu-1)!/(lambda-1)! for lambda <= 5, nu <= 8", 0, [](std::string& d) {
    for (int lam = 1; lam <= 5; ++lam) {
      const KernelSpec spec{Family::SU11, Rational(-lam), {1, 1}, 8};
      const auto block = gram_block(spec, powers(8));
      for (int nu = 0; nu <= 8; ++nu) {
        const Rational expect = factorial(lam + nu - 1) / factorial(lam - 1);
        if (block.exact_diagonal[nu] != expect || k_squared_closed_form(spec, nu) != expect) {
          d = where({{"lambda", lam}, {"nu", nu}});
          return false;
        }
      }
    }
    return true;
  });

  criterion(3, "Wigner d via pairing = reference to 1e-12, rows orthonormal to 1e-10, 2j <= 6", 0, [](std::string& d) {
    double worst = 0, worst_orth = 0;
    for (int two_j = 0; two_j <= 6; ++two_j)
      for (double beta : betas(10, std::numbers::pi)) {
        Eigen::MatrixXd m(two_j + 1, two_j + 1);
        for (int a = 0; a <= two_j; ++a)
          for (int b = 0; b <= two_j; ++b) {
            const int tm = two_j - 2 * a, tn = two_j - 2 * b;
            m(a, b) = su2_wigner_d(two_j, tm, tn, beta);
            worst = std::max(worst, std::abs(m(a, b) - su2_wigner_d_reference(two_j, tm, tn, beta)));
          }
        worst_orth = std::max(worst_orth, (m * m.transpose() - Eigen::MatrixXd::Identity(two_j + 1, two_j + 1))
                                              .cwiseAbs()
                                              .maxCoeff());
      }
    std::ostringstream os;
    os << "max |diff| " << worst << ", orthogonality " << worst_orth;
    d = os.str();
    return worst <= 1e-12 && worst_orth <= 1e-10;
  });

  criterion(4, "SU(1,1) sum route = pairing route to 1e-12, beta = 0 gives delta", 0, [](std::string& d) {
    double worst = 0;
    for (int lam = 1; lam <= 4; ++lam)
      for (int mu = 0; mu <= 4; ++mu)
        for (int nu = 0; nu <= 4; ++nu) {
          for (double beta : betas(5, 2.0))
            worst = std::max(worst, std::abs(su11_wigner(lam, mu, nu, beta) - su11_wigner_pairing(lam, mu, nu, beta)));
          const double delta = mu == nu ? 1.0 : 0.0;
          if (su11_wigner(lam, mu, nu, 0.0) != delta || su11_wigner_pairing(lam, mu, nu, 0.0) != delta) {
            d = "beta = 0 " + where({{"lambda", lam}, {"mu", mu}, {"nu", nu}});
            return false;
          }
        }
    std::ostringstream os;
    os << "max |diff| " << worst;
    d = os.str();
    return worst <= 1e-12;
  });

  criterion(5, "SU(2) measure inner product = kernel pairing, all monomial pairs, 2j <= 6", 0, [](std::string& d) {
    for (int two_j = 0; two_j <= 6; ++two_j) {
      const auto S = expand_kernel({Family::SU2, Rational(two_j), {1, 1}, two_j});
      for (int a = 0; a <= two_j; ++a)
        for (int b = 0; b <= two_j; ++b) {
          const auto za = BargmannPolynomial::power(a), zb = BargmannPolynomial::power(b);
          if (su2_measure_inner_product(two_j, apply_kernel(S, za), apply_kernel(S, zb)) !=
              pair_through_kernel(za, S, zb)) {
            d = where({{"2j", two_j}, {"a", a}, {"b", b}});
            return false;
          }
        }
    }
    return true;
  });

  criterion(6, "rotor norms and both orthonormality relations, 4 characters, L <= 6", 0, [](std::string& d) {
    for (const auto& chi : D2Character::all()) {
      for (const auto& n : rotor_norms(chi, 6))
        if (n.norm_squared != (n.K == 0 ? Rational(1) : Rational(1, 2))) {
          d = "norm " + where({{"K", n.K}, {"L", n.L}});
          return false;
        }
      std::vector<RotorLabel> states;
      for (int L = 0; L <= 6; ++L)
        for (int K = 0; K <= L; ++K)
          for (int M = -L; M <= L; ++M)
            if (rotor_allowed(K, L, chi)) states.push_back({K, L, M});
      for (const auto& a : states)
        for (const auto& b : states) {
          const bool same = a.K == b.K && a.L == b.L && a.M == b.M;
          const ExactScalar delta(Rational(same ? 1 : 0));
          if (!(d_inner_product(rotor_psi(a), rotor_Psi(b, chi)) == delta) ||
              !(d_inner_product(rotor_Psi(a, chi), rotor_Psi(b, chi)) == delta)) {
            d = "overlap " + where({{"eps2", chi.eps2}, {"eps3", chi.eps3}, {"K", a.K}, {"L", a.L}, {"K'", b.K},
                                    {"L'", b.L}});
            return false;
          }
        }
    }
    return true;
  });

  criterion(7, "SU(3) > SO(3): (lambda,0) closed form and ratio, symmetries, PSD, residual < 1e-12", 30.0,
            [](std::string& d) {
              const ExactScalar four_pi2(Rational(4), 2);
              for (int lam = 0; lam <= 6; ++lam)
                for (int L = 0; L <= lam; ++L) {
                  const Rational c = su3_lambda0_closed_form(lam, L);
                  if (!(su3_kernel_exact(lam, 0, L, 0, 0) == ExactScalar(c) * four_pi2)) {
                    d = "closed form " + where({{"lambda", lam}, {"L", L}});
                    return false;
                  }
                  if (L >= 2 && !c.is_zero() && c / su3_lambda0_closed_form(lam, L - 2) != Rational(lam - L + 2, lam + L + 1)) {
                    d = "ratio " + where({{"lambda", lam}, {"L", L}});
                    return false;
                  }
                }
              double worst_residual = 0;
              for (int lam = 0; lam <= 4; ++lam)
                for (int mu = 0; lam + mu <= 4; ++mu)
                  for (int L = 0; L <= 4; ++L) {
                    for (int kp = -L; kp <= L; ++kp)
                      for (int k = -L; k <= L; ++k) {
                        const ExactScalar v = su3_kernel_exact(lam, mu, L, kp, k);
                        const bool parity = (k - mu) % 2 == 0 && (kp - mu) % 2 == 0;
                        const ExactScalar s1(Rational((lam + L + kp) % 2 == 0 ? 1 : -1));
                        const ExactScalar s2(Rational((lam + L + k) % 2 == 0 ? 1 : -1));
                        const bool ok = (parity || v.is_zero()) && su3_kernel_exact(lam, mu, L, k, kp) == v &&
                                        su3_kernel_exact(lam, mu, L, -kp, k) == v * s1 &&
                                        su3_kernel_exact(lam, mu, L, kp, -k) == v * s2;
                        if (!ok) {
                          d = "symmetry " + where({{"lambda", lam}, {"mu", mu}, {"L", L}, {"K'", kp}, {"K", k}});
                          return false;
                        }
                      }
                    const auto m = su3_k_matrix(lam, mu, L);
                    worst_residual = std::max(worst_residual, m.factor_residual);
                    if (!m.factor.positive_semidefinite || m.factor_residual >= 1e-12) {
                      d = "factor " + where({{"lambda", lam}, {"mu", mu}, {"L", L}});
                      return false;
                    }
                  }
              std::ostringstream os;
              os << "max residual " << worst_residual;
              d = os.str();
              return true;
            });

  criterion(8, "Capelli N^2 = pairing oracle and N! N^2 = hook length, |kappa| <= 6 in shape (3,3)", 10.0,
            [](std::string& d) {
              for (int n = 0; n <= 6; ++n)
                for (const auto& kappa : partitions_of(n, 3)) {
                  const auto hw = highest_weight_polynomial(kappa, {3, 3});
                  const Rational oracle = bargmann_pair(hw.polynomial, hw.polynomial).re().inverse();
                  const Rational dim = factorial(n) * capelli_norm_squared(kappa);
                  if (oracle != hw.norm_squared || dim != Rational(hook_length_dimension(kappa)) ||
                      dim != Rational(oracle::standard_tableaux(kappa.kappa))) {
                    d = "kappa=" + kappa.to_string();
                    return false;
                  }
                }
              return true;
            });

  criterion(9, "SU(p+q), SU(p,q) K^2 closed form = oracle, (p,q) in {(1,1),(2,1),(2,2)}, adjudication", 0,
            [](std::string& d) {
              const auto report = adjudicate_k_squared({{1, 1}, {2, 1}, {2, 2}}, 3, 3);
              std::printf("%s", report.render().c_str());
              std::ostringstream os;
              os << report.rows.size() << " rows, closed-form mismatches " << report.closed_form_mismatches
                 << ", printed mismatches " << report.printed_mismatches << ", printed undefined "
                 << report.printed_undefined;
              d = os.str();
              return report.passed() && !report.rows.empty();
            });

  criterion(10, "cocycle to 1e-8 on 200 random pairs per family, membership validators", 0, [](std::string& d) {
    const GroupCase cases[] = {{Family::SU2, {1, 1}},    {Family::SU11, {1, 1}},   {Family::SUn, {2, 1}},
                               {Family::SUpq, {2, 1}},   {Family::SUpq, {2, 2}},   {Family::Sp, {2, 2}},
                               {Family::SpR, {1, 1}},    {Family::SpR, {2, 2}},    {Family::SO2n, {2, 2}},
                               {Family::SOstar, {2, 2}}, {Family::SOstar, {3, 3}}, {Family::SOp2, {3, 1}},
                               {Family::SOpplus2, {3, 1}}};
    std::mt19937_64 rng(20240611);
    double worst = 0;
    for (const auto& c : cases) {
      const std::string tag = to_string(c.family) + "(" + std::to_string(c.shape.p) + "," + std::to_string(c.shape.q) + ")";
      int done = 0;
      while (done < 200) {
        const auto g1 = GroupElement::random(c.family, c.shape, rng);
        const auto g2 = GroupElement::random(c.family, c.shape, rng);
        const CMatrix z = random_chart_point(c.family, c.shape, rng);
        try {
          const auto whole = action_factorize(g1 * g2, z);
          const auto first = action_factorize(g1, z);
          const auto second = action_factorize(g2, first.moved);
          worst = std::max(worst, std::abs(whole.base - first.base * second.base) / std::max(1.0, std::abs(whole.base)));
          worst = std::max(worst, (whole.moved - second.moved).norm() / std::max(1.0, whole.moved.norm()));
          ++done;
        } catch (const ChartSingularity&) {
        }
      }
      const int n = matrix_dimension(c.family, c.shape);
      CMatrix bad = GroupElement::random(c.family, c.shape, rng).matrix();
      bad(0, n - 1) += 1e-6;
      if (!is_member(c.family, c.shape, CMatrix::Identity(n, n)) || is_member(c.family, c.shape, bad) ||
          !is_member(c.family, c.shape, GroupElement::random(c.family, c.shape, rng).matrix())) {
        d = "membership " + tag;
        return false;
      }
    }
    std::ostringstream os;
    os << "worst residual " << worst;
    d = os.str();
    return worst <= 1e-8;
  });

  criterion(11, "every supported kernel at cutoff <= 4 has a PSD Gram block (min eig >= -1e-12 max)", 0,
            [](std::string& d) {
              std::vector<KernelSpec> specs;
              for (const auto& lam : {Rational(1), Rational(2), Rational(3)}) {
                specs.push_back({Family::SU2, lam, {1, 1}, 4});
                specs.push_back({Family::SU11, -lam, {1, 1}, 4});
                specs.push_back({Family::SUn, lam, {2, 1}, 4});
                specs.push_back({Family::SUpq, -lam, {2, 1}, 4});
                specs.push_back({Family::SUn, lam, {2, 2}, 3});
                specs.push_back({Family::SUpq, -lam, {2, 2}, 3});
                specs.push_back({Family::Sp, -lam, {2, 2}, 4});
                specs.push_back({Family::SpR, lam, {2, 2}, 4});
                specs.push_back({Family::SO2n, -lam, {3, 3}, 4});
                specs.push_back({Family::SOstar, lam, {3, 3}, 4});
                specs.push_back({Family::SOpplus2, lam, {3, 1}, 4});
                specs.push_back({Family::SOp2, -lam, {3, 1}, 4});
              }
              specs.push_back({Family::SU11, Rational(-1, 2), {1, 1}, 4});
              specs.push_back({Family::SpR, Rational(1, 2), {2, 2}, 3});
              double worst = 0;
              for (const auto& spec : specs) {
                const auto vars = chart_variables(spec.family, spec.shape);
                const auto block = gram_block(spec, monomial_basis(spec.variable_shape(), vars, spec.degree_cutoff));
                const auto& ev = block.factor.eigenvalues;
                const double rel = ev.minCoeff() / ev.cwiseAbs().maxCoeff();
                worst = std::min(worst, rel);
                if (rel < -1e-12) {
                  d = to_string(spec.family) + " sigma=" + spec.sigma.to_string();
                  return false;
                }
              }
              std::ostringstream os;
              os << specs.size() << " kernels, min eigenvalue / max " << worst;
              d = os.str();
              return true;
            });

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return failures == 0 ? 0 : 1;
}
