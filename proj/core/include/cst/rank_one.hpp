#pragma once

// Worked SU(2) and SU(1,1) triplets: Wigner functions through the Bargmann
// pairing, Lie algebra matrices in the orthonormal coherent-state basis, and
// the measure-based SU(2) inner product.
//
// Half-integers are passed doubled: two_j = 2j, two_m = 2m.

#include "cst/exact.hpp"
#include "cst/group.hpp"
#include "cst/polynomial.hpp"

#include <string>
#include <vector>

namespace cst {

/// sqrt(ratio_squared) * poly(c, s). c, s are cos/sin (SU(2)) or
/// cosh/sinh (SU(1,1)) of beta/2.
struct SymbolicMatrixElement {
  Rational ratio_squared{1};
  LaurentPolynomial poly;

  /// Perfect-square ratios are folded in exactly before evaluation.
  double evaluate(double c, double s) const;
};

/// d^j_{mn}(beta) from the pairing
/// (K_{j-n}/K_{j-m}) <phi_{j-m} | (c+sz)^{j+n} phi_{j-n}(-s+cz)>.
SymbolicMatrixElement su2_wigner_d_symbolic(int two_j, int two_m, int two_n);
double su2_wigner_d(int two_j, int two_m, int two_n, double beta);
/// Textbook factorial sum, used as the independent reference.
double su2_wigner_d_reference(int two_j, int two_m, int two_n, double beta);

/// <lambda mu| T(g) |lambda nu> for g = ((c,s),(s,c)), c = cosh(beta/2),
/// through the finite factorial sum (terms with negative factorials dropped).
double su11_wigner(int lambda, int mu, int nu, double beta);
SymbolicMatrixElement su11_wigner_sum_symbolic(int lambda, int mu, int nu);
/// Same element through the action Gamma(g) and the Bargmann pairing.
SymbolicMatrixElement su11_wigner_pairing_symbolic(int lambda, int mu, int nu);
double su11_wigner_pairing(int lambda, int mu, int nu, double beta);

enum class Generator { J0, Jplus, Jminus };

Generator parse_generator(const std::string& name);
std::string to_string(Generator g);

/// Bargmann-space realization of the generator.
DifferentialOperator su2_generator(int two_j, Generator g);
DifferentialOperator su11_generator(const Rational& lambda, Generator g);

/// Matrix of a generator in the orthonormal basis Psi_nu = K_nu z^nu / sqrt(nu!),
/// entries signed square roots. Rows and columns are indexed by nu
/// (for SU(2), nu = j - m, so the order is m = j, j-1, ..., -j).
struct AlgebraMatrix {
  std::vector<std::vector<ExactScalar>> entries;
  /// Column whose image leaves the truncated space (-1 if none).
  int truncated_column = -1;

  int size() const { return static_cast<int>(entries.size()); }
  CMatrix to_float() const;
};

AlgebraMatrix su2_algebra_matrix(int two_j, Generator g);
AlgebraMatrix su11_algebra_matrix(const Rational& lambda, int cutoff, Generator g);

/// ((2j+1)/pi) * integral of conj(bra) ket (1+|z|^2)^{-2j-2} d^2z, exactly:
/// sum_nu conj(bra_nu) ket_nu nu!(2j-nu)!/(2j)!. Throws DegreeOverflow past 2j.
GaussianRational su2_measure_inner_product(int two_j, const BargmannPolynomial& bra, const BargmannPolynomial& ket);

}  // namespace cst
