#pragma once

// Overlap kernels S(z,x) for every family, closed-form K^2 and Capelli norm
// factors, highest-weight polynomials, and Gram blocks with their K-matrix
// factorization S = K K^dagger.

#include "cst/group.hpp"
#include "cst/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cst {

/// Kernel of family `family` with weight sigma, expanded through z-degree
/// `degree_cutoff`.
///
/// Sign conventions (lambda >= 0):
///   SU2: sigma = 2j          SU11: sigma = -lambda
///   SUn: sigma = lambda      SUpq: sigma = -lambda
///   Sp:  sigma = -lambda     SpR:  sigma = lambda
///   SO2n: sigma = -lambda    SOstar: sigma = lambda
///   SOpplus2: sigma = lambda SOp2: sigma = -lambda
/// sigma = 0 is the trivial representation. Compact families need integer
/// lambda; noncompact ones accept any rational lambda.
struct KernelSpec {
  Family family = Family::SU2;
  Rational sigma;
  GroupShape shape{};
  int degree_cutoff = 6;

  /// Throws std::invalid_argument for an unsupported (family, sigma) pair.
  void validate() const;
  /// The positive weight lambda (or 2j).
  Rational lambda() const;
  /// Exponent e with S = D^e, D = det(I +- z x^dagger) or the vector form.
  Rational kernel_exponent() const;
  Shape variable_shape() const { return chart_shape(family, shape); }
};

/// Independent chart variables: all entries, the upper triangle (symmetric
/// charts) or the strict upper triangle (antisymmetric charts).
std::vector<VariableIndex> chart_variables(Family f, GroupShape s);

BilinearKernelPolynomial expand_kernel(const KernelSpec& spec);

struct PartitionLabel {
  std::vector<int> kappa;

  PartitionLabel() = default;
  explicit PartitionLabel(std::vector<int> parts);  // validates, strips trailing zeros
  int size() const;  // sum of parts
  int length() const { return static_cast<int>(kappa.size()); }
  std::string to_string() const;
  friend bool operator==(const PartitionLabel&, const PartitionLabel&) = default;
};

/// All partitions of n, in reverse lexicographic order.
std::vector<PartitionLabel> partitions_of(int n, int max_parts = -1, int max_part = -1);

/// K^2 for SU2/SU11 (single index nu) and SUn/SUpq (partition kappa).
/// Throws for families without a closed form here.
Rational k_squared_closed_form(const KernelSpec& spec, int nu);
Rational k_squared_closed_form(const KernelSpec& spec, const PartitionLabel& kappa);

/// K^2 for SU(p+q)/SU(p,q) in the multinomial-style form: a factorial
/// ratio times N_kappa^{-2}. Kept for the adjudication report;
/// it disagrees with the expansion for multi-row kappa and for the
/// noncompact denominator.
Rational k_squared_printed_form(const KernelSpec& spec, const PartitionLabel& kappa);

Rational capelli_norm_squared(const PartitionLabel& kappa);
/// Hook-length count of standard tableaux of shape kappa.
BigInt hook_length_dimension(const PartitionLabel& kappa);

struct HighestWeight {
  BargmannPolynomial polynomial;  // Z_1^{k1-k2} Z_2^{k2-k3} ... unnormalized
  Rational norm_squared;          // N_kappa^2
};

HighestWeight highest_weight_polynomial(const PartitionLabel& kappa, Shape shape);

/// phi = sqrt(scale_squared) * poly.
struct BasisVector {
  BargmannPolynomial poly;
  Rational scale_squared{1};
  std::string label;

  /// z^m / sqrt(m!).
  static BasisVector normalized_monomial(Shape shape, const MultiIndex& m);
};

std::string monomial_label(const MultiIndex& m);
/// All normalized monomials in `vars` of total degree <= max_degree, by degree.
std::vector<BasisVector> monomial_basis(Shape shape, const std::vector<VariableIndex>& vars, int max_degree);

inline constexpr double kNullThreshold = 1e-12;

struct PsdFactorization {
  Eigen::VectorXd eigenvalues;  // descending, unclipped
  CMatrix U;                    // eigenvectors, columns in the same order
  CMatrix K;                    // n x rank, S = K K^dagger
  CMatrix K_bar;                // n x rank, K_bar^dagger S K_bar = I
  int rank = 0;
  /// false if an eigenvalue lies below -threshold * max.
  bool positive_semidefinite = true;
  double min_relative_eigenvalue = 0;  // min eigenvalue / max |eigenvalue|
};

/// Hermitian eigendecomposition with eigenvalues in (-t*max, t*max) set to zero.
PsdFactorization factorize_psd(const CMatrix& S, double threshold = kNullThreshold);

struct GramBlock {
  KernelSpec spec;
  std::vector<std::string> labels;
  std::vector<Rational> scale_squared;
  /// raw[a][b] = pair_through_kernel(poly_a, S, poly_b), exact.
  std::vector<std::vector<GaussianRational>> raw;
  bool diagonal = true;
  /// S_aa = scale_a * raw_aa, exact; filled when diagonal.
  std::vector<Rational> exact_diagonal;
  CMatrix S;
  PsdFactorization factor;
  std::vector<std::string> null_labels;

  int size() const { return static_cast<int>(labels.size()); }
};

/// Throws DegreeOverflow when a basis vector exceeds the cutoff.
GramBlock gram_block(const KernelSpec& spec, const std::vector<BasisVector>& basis);

struct TripletBasis {
  bool diagonal = true;
  /// Diagonal blocks: psi_a = phi_a / K_a and Psi_a = K_a phi_a, stored as
  /// squared scale factors 1/K_a^2 and K_a^2.
  std::vector<Rational> psi_scale_squared;
  std::vector<Rational> Psi_scale_squared;
  /// Coefficients on the phi basis, one column per orthonormal vector.
  CMatrix psi_coefficients;  // K_bar
  CMatrix Psi_coefficients;  // K
};

/// Throws std::domain_error when the block has null directions.
TripletBasis orthonormal_triplet_basis(const GramBlock& block);

}  // namespace cst
