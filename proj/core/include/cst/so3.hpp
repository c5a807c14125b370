#pragma once

// SO(3)-based constructions: the rotor triplet with its D2 projection, and
// the SU(3) > SO(3) overlap matrices S^L with K-matrix orthonormalization.

#include "cst/exact.hpp"
#include "cst/kernel.hpp"
#include "cst/polynomial.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace cst {

struct D2Character {
  int eps2 = 1;
  int eps3 = 1;

  D2Character() = default;
  D2Character(int e2, int e3);  // throws unless both are +-1
  int eps4() const { return eps2 * eps3; }
  static std::vector<D2Character> all();
};

struct RotorLabel {
  int K = 0;
  int L = 0;
  int M = 0;
};

/// Wigner d^L_{K'K}(beta) = sqrt(radicand) * poly(cos(beta/2), sin(beta/2)),
/// poly with rational coefficients.
struct WignerPolynomial {
  Rational radicand{1};
  LaurentPolynomial poly;

  double evaluate(double beta) const;
};

WignerPolynomial wigner_big_d_coefficients(int L, int Kp, int K);

/// Function on SO(3) expanded in D^L_{KM}; keys (L, K, M).
using DExpansion = std::map<std::tuple<int, int, int>, ExactScalar>;

/// int f^* g dOmega using int D^{L*}_{K'M'} D^L_{KM} = 8 pi^2/(2L+1) delta delta delta.
/// Coefficients must be real.
ExactScalar d_inner_product(const DExpansion& f, const DExpansion& g);

/// Coefficients of Phi_KLM on D^L_{KM} and D^L_{-K,M}.
struct RotorCoefficients {
  ExactScalar on_K;
  ExactScalar on_minus_K;
  bool vanishes() const { return on_K.is_zero() && on_minus_K.is_zero(); }
};

/// Throws std::invalid_argument for K < 0, K > L or |M| > L.
RotorCoefficients rotor_wavefunction(const RotorLabel& label, const D2Character& chi);
bool rotor_allowed(int K, int L, const D2Character& chi);

DExpansion rotor_phi(const RotorLabel& label);                           // sqrt((2L+1)/8pi^2) D_KM
DExpansion rotor_Phi(const RotorLabel& label, const D2Character& chi);  // coherent-state function
DExpansion rotor_psi(const RotorLabel& label);                           // orthonormal dual basis
DExpansion rotor_Psi(const RotorLabel& label, const D2Character& chi);  // orthonormal coherent basis

struct RotorNorm {
  int K;
  int L;
  Rational norm_squared;
};

/// <KLM|KLM> for every allowed K >= 0, L <= L_max.
std::vector<RotorNorm> rotor_norms(const D2Character& chi, int L_max);

/// S^L_{K'K} = int D^{L*}_{K'K} (cos b)^lam (cos a cos g - sin a cos b sin g)^mu dOmega.
/// Throws ExactMismatch if terms with different pi powers meet.
ExactScalar su3_kernel_exact(int lam, int mu, int L, int Kp, int K);

/// K >= 0 values surviving the parity rules: K = mu (mod 2), K <= L, and K = 0
/// only when lam + L is even.
std::vector<int> su3_allowed_K(int lam, int mu, int L);

struct SLMatrix {
  int lam = 0;
  int mu = 0;
  int L = 0;
  std::vector<int> allowed_K;
  std::vector<std::vector<ExactScalar>> entries;  // over allowed_K, ascending
  PsdFactorization factor;
  int rank = 0;
  /// Greedy ascending-K selection of a linearly independent subset.
  std::vector<int> independent_K;
  double factor_residual = 0;  // |K K^dagger - S| / max(1, |S|)

  CMatrix S_float() const;
};

SLMatrix su3_k_matrix(int lam, int mu, int L);

/// Closed form for (lam, 0): |K(L)|^2 / 4pi^2 = lam!/((lam-L)!!(lam+L+1)!!) [1 + (-1)^{lam+L}].
Rational su3_lambda0_closed_form(int lam, int L);

}  // namespace cst
