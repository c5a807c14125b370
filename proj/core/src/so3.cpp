#include "cst/so3.hpp"

#include <cmath>
#include <stdexcept>

namespace cst {

namespace {

int parity(int n) { return n % 2 == 0 ? 1 : -1; }

// (1/2pi) int_0^{2pi} e^{i k t} cos^a t sin^b t dt, exactly.
GaussianRational fourier_coefficient(int a, int b, int k) {
  Rational sum(0);
  for (int p = 0; p <= a; ++p) {
    const int q2 = -k - (2 * p - a) + b;  // 2q
    if (q2 % 2 != 0) continue;
    const int q = q2 / 2;
    if (q < 0 || q > b) continue;
    Rational term = binomial(a, p) * binomial(b, q);
    if ((b - q) % 2 != 0) term = -term;
    sum += term;
  }
  // divide by 2^a (2i)^b = 2^{a+b} i^b
  GaussianRational out(sum / Rational(2).pow(a + b));
  const GaussianRational i_inv = GaussianRational(0, -1);  // 1/i
  for (int n = 0; n < b % 4; ++n) out *= i_inv;
  return out;
}

}  // namespace

D2Character::D2Character(int e2, int e3) : eps2(e2), eps3(e3) {
  if (std::abs(e2) != 1 || std::abs(e3) != 1) throw std::invalid_argument("D2Character: entries must be +-1");
}

std::vector<D2Character> D2Character::all() { return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}; }

// ------------------------------------------------------------------ Wigner

double WignerPolynomial::evaluate(double beta) const {
  return std::sqrt(radicand.to_double()) * poly.evaluate(std::cos(beta / 2), std::sin(beta / 2));
}

WignerPolynomial wigner_big_d_coefficients(int L, int Kp, int K) {
  if (L < 0 || std::abs(Kp) > L || std::abs(K) > L) {
    throw std::out_of_range("wigner_big_d_coefficients: index out of range");
  }
  const int m = K, mp = Kp;
  WignerPolynomial w;
  w.radicand = factorial(L + m) * factorial(L - m) * factorial(L + mp) * factorial(L - mp);
  for (int k = std::max(0, m - mp); k <= std::min(L + m, L - mp); ++k) {
    Rational coef = Rational(1) / (factorial(L + m - k) * factorial(k) * factorial(L - k - mp) * factorial(k - m + mp));
    if (parity(k - m + mp) < 0) coef = -coef;
    w.poly.add_term(2 * L - 2 * k + m - mp, 2 * k - m + mp, coef);
  }
  // pull square factors out of the surd
  const ExactScalar root = ExactScalar::sqrt(w.radicand);
  w.radicand = Rational(root.radicand());
  w.poly *= root.value();
  return w;
}

ExactScalar d_inner_product(const DExpansion& f, const DExpansion& g) {
  ExactScalar sum;
  for (const auto& [key, cf] : f) {
    const auto it = g.find(key);
    if (it == g.end()) continue;
    const int L = std::get<0>(key);
    sum += cf * it->second * ExactScalar(Rational(8, 2 * L + 1), 2);
  }
  return sum;
}

// ------------------------------------------------------------------- rotor

bool rotor_allowed(int K, int L, const D2Character& chi) {
  if (K < 0 || K > L) return false;
  if (parity(K) * chi.eps3 != 1) return false;
  return K != 0 || parity(L) * chi.eps2 == 1;
}

RotorCoefficients rotor_wavefunction(const RotorLabel& label, const D2Character& chi) {
  const auto [K, L, M] = label;
  if (L < 0 || K < 0 || K > L || std::abs(M) > L) throw std::invalid_argument("rotor_wavefunction: label out of range");
  RotorCoefficients c;
  if (parity(K) * chi.eps3 != 1) return c;
  if (K == 0 && parity(L) * chi.eps2 != 1) return c;
  // sqrt((2L+1)/8pi^2) (1 + (-1)^K eps3)/4
  c.on_K = ExactScalar(Rational(1, 2), Rational(2 * L + 1, 8), -1);
  c.on_minus_K = c.on_K * ExactScalar(Rational(parity(L + K) * chi.eps2));
  return c;
}

DExpansion rotor_phi(const RotorLabel& label) {
  return {{{label.L, label.K, label.M}, ExactScalar(Rational(1), Rational(2 * label.L + 1, 8), -1)}};
}

DExpansion rotor_Phi(const RotorLabel& label, const D2Character& chi) {
  const RotorCoefficients c = rotor_wavefunction(label, chi);
  DExpansion out;
  if (c.vanishes()) return out;
  out[{label.L, label.K, label.M}] += c.on_K;
  out[{label.L, -label.K, label.M}] += c.on_minus_K;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

namespace {

DExpansion scaled(DExpansion f, const ExactScalar& s) {
  for (auto& [key, v] : f) v *= s;
  return f;
}

ExactScalar triplet_scale(int K) { return ExactScalar::sqrt(Rational(2, K == 0 ? 2 : 1)); }

}  // namespace

DExpansion rotor_psi(const RotorLabel& label) { return scaled(rotor_phi(label), triplet_scale(label.K)); }

DExpansion rotor_Psi(const RotorLabel& label, const D2Character& chi) {
  return scaled(rotor_Phi(label, chi), triplet_scale(label.K));
}

std::vector<RotorNorm> rotor_norms(const D2Character& chi, int L_max) {
  std::vector<RotorNorm> out;
  for (int L = 0; L <= L_max; ++L)
    for (int K = 0; K <= L; ++K) {
      if (!rotor_allowed(K, L, chi)) continue;
      const RotorLabel label{K, L, 0};
      const ExactScalar n = d_inner_product(rotor_phi(label), rotor_Phi(label, chi));
      if (!n.is_rational()) throw std::logic_error("rotor_norms: non-rational norm");
      out.push_back({K, L, n.value()});
    }
  return out;
}

// --------------------------------------------------------------------- SU(3)

ExactScalar su3_kernel_exact(int lam, int mu, int L, int Kp, int K) {
  if (lam < 0 || mu < 0) throw std::invalid_argument("su3_kernel_exact: negative highest weight");
  if (L < 0 || std::abs(Kp) > L || std::abs(K) > L) throw std::out_of_range("su3_kernel_exact: index out of range");
  const WignerPolynomial d = wigner_big_d_coefficients(L, Kp, K);

  // S = sum_a binom(mu,a) (-1)^{mu-a} cos^a(al) sin^{mu-a}(al) cos^a(ga) sin^{mu-a}(ga) cos^{lam+mu-a}(be)
  ExactScalar re, im;
  for (int a = 0; a <= mu; ++a) {
    const int b = mu - a;
    const GaussianRational angular = fourier_coefficient(a, b, Kp) * fourier_coefficient(a, b, K) *
                                     GaussianRational(binomial(mu, a) * Rational(parity(b)));
    if (angular.is_zero()) continue;
    // int_0^pi d(be) cos^n(be) sin(be) with be = 2t: 4 int_0^{pi/2} d(2t) (c^2-s^2)^n s c dt
    const int n = lam + b;
    ExactScalar beta_part;
    for (const auto& [e, coef] : d.poly.terms()) {
      for (int r = 0; r <= n; ++r) {
        Rational w = coef * binomial(n, r) * Rational(4);
        if (r % 2 != 0) w = -w;
        const int sin_power = e.second + 2 * r + 1;
        const int cos_power = e.first + 2 * (n - r) + 1;
        beta_part += ExactScalar(w) * half_angle_integral(sin_power, cos_power);
      }
    }
    re += ExactScalar(angular.re()) * beta_part;
    im += ExactScalar(angular.im()) * beta_part;
  }
  if (!im.is_zero()) throw std::logic_error("su3_kernel_exact: imaginary overlap");
  // (2 pi)^2 from the alpha and gamma integrals, sqrt(P) from d^L.
  return re * ExactScalar(Rational(4), d.radicand, 2);
}

std::vector<int> su3_allowed_K(int lam, int mu, int L) {
  std::vector<int> out;
  for (int K = 0; K <= L; ++K) {
    if (parity(K) != parity(mu)) continue;
    if (K == 0 && parity(lam + L) != 1) continue;
    out.push_back(K);
  }
  return out;
}

CMatrix SLMatrix::S_float() const {
  const int n = static_cast<int>(allowed_K.size());
  CMatrix s(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s(r, c) = entries[r][c].to_double();
  return s;
}

SLMatrix su3_k_matrix(int lam, int mu, int L) {
  SLMatrix m;
  m.lam = lam;
  m.mu = mu;
  m.L = L;
  m.allowed_K = su3_allowed_K(lam, mu, L);
  const int n = static_cast<int>(m.allowed_K.size());
  m.entries.assign(n, std::vector<ExactScalar>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.entries[r][c] = su3_kernel_exact(lam, mu, L, m.allowed_K[r], m.allowed_K[c]);

  const CMatrix s = m.S_float();
  m.factor = factorize_psd(s);
  m.rank = m.factor.rank;
  if (n > 0) {
    const double norm = std::max(1.0, s.norm());
    m.factor_residual = (m.factor.K * m.factor.K.adjoint() - s).norm() / norm;
  }

  std::vector<int> chosen;
  int current_rank = 0;
  for (int i = 0; i < n; ++i) {
    chosen.push_back(i);
    CMatrix sub(chosen.size(), chosen.size());
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (std::size_t c = 0; c < chosen.size(); ++c) sub(r, c) = s(chosen[r], chosen[c]);
    const int rk = factorize_psd(sub).rank;
    if (rk > current_rank) {
      current_rank = rk;
      m.independent_K.push_back(m.allowed_K[i]);
    } else {
      chosen.pop_back();
    }
  }
  return m;
}

Rational su3_lambda0_closed_form(int lam, int L) {
  if (lam < 0 || L < 0) throw std::invalid_argument("su3_lambda0_closed_form: negative argument");
  if (L > lam || parity(lam + L) != 1) return Rational(0);
  return Rational(2) * factorial(lam) / (double_factorial(lam - L) * double_factorial(lam + L + 1));
}

}  // namespace cst
