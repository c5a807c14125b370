#pragma once

// Group elements of the supported real forms, their block Gauss factorizations,
// the coherent-state action z -> z.g with its multiplier, and the complex
// Iwasawa factorization of SU(3).
//
// Everything here is complex double; exactness lives in kernel.hpp.

#include "cst/polynomial.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cst {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

enum class Family { SU2, SU11, SUpq, SUn, Sp, SpR, SO2n, SOstar, SOp2, SOpplus2 };

std::string to_string(Family f);
Family parse_family(std::string_view name);
/// True for the families whose kernel carries a negative power (Taylor series).
bool is_noncompact(Family f);

/// Group rank parameters. SUpq/SUn use (p,q); the symplectic and
/// orthogonal-star families use n = p; SO(p+2) and SO(p,2) use p.
struct GroupShape {
  int p = 1;
  int q = 1;
};

int matrix_dimension(Family f, GroupShape s);
/// Shape of the chart variable z.
Shape chart_shape(Family f, GroupShape s);

/// Raised when a point falls outside the dense chart of a factorization.
struct ChartSingularity : std::domain_error {
  using std::domain_error::domain_error;
};

struct GroupMembershipError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kPivotThreshold = 1e-12;
inline constexpr double kMembershipTolerance = 1e-10;

/// Residual of the defining relations (block form, metric preservation,
/// det = 1). Zero for exact members.
double membership_residual(Family f, GroupShape s, const CMatrix& m);
bool is_member(Family f, GroupShape s, const CMatrix& m, double tol = kMembershipTolerance);

class GroupElement {
 public:
  /// Throws GroupMembershipError unless m satisfies the relations of f.
  GroupElement(Family f, GroupShape s, CMatrix m, double tol = kMembershipTolerance);

  static GroupElement identity(Family f, GroupShape s);
  /// exp of a random Lie algebra element with entries ~ N(0, scale^2).
  static GroupElement random(Family f, GroupShape s, std::mt19937_64& rng, double scale = 0.5);

  Family family() const { return family_; }
  GroupShape shape() const { return shape_; }
  const CMatrix& matrix() const { return m_; }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

 private:
  Family family_;
  GroupShape shape_;
  CMatrix m_;
};

/// m = [[1,0],[x,1]] diag(a,d) [[1,z],[0,1]] (upper-first) or
/// m = [[1,x],[0,1]] diag(a,d) [[1,0],[z,1]] (lower-first), blockwise.
struct GaussFactors {
  CMatrix lower;  // x
  CMatrix a;
  CMatrix d;
  CMatrix upper;  // z
  bool lower_first = false;
  double condition_number = 1.0;

  CMatrix reassemble() const;
};

GaussFactors gauss_2x2(const CMatrix& m, bool lower_first = false);
/// z = a^{-1} b, x = c a^{-1}, diagonal blocks (a, d - c z) for the leading p x p block a.
GaussFactors gauss_block(const CMatrix& m, int p, int q);

/// [Gamma(g) Psi](z) = base^exponent * Psi(moved).
struct ActionResult {
  Complex base;
  double exponent = 0;
  CMatrix moved;

  Complex multiplier() const { return std::pow(base, exponent); }
};

/// Coherent-state action of g at chart point z with kernel weight sigma.
/// Throws ChartSingularity when the pivot vanishes (|pivot| <= 1e-12).
ActionResult action_factorize(const GroupElement& g, const CMatrix& z, double sigma = 1.0);

/// Random chart point respecting the chart's symmetry (symmetric for the
/// symplectic families, antisymmetric for the orthogonal-star ones).
CMatrix random_chart_point(Family f, GroupShape s, std::mt19937_64& rng, double scale = 0.3);

struct IwasawaFactors {
  CMatrix Z;      // lower triangular
  CMatrix omega;  // complex orthogonal, det 1
};

/// g = Z omega for g in SU(3) (or any 3x3 with a non-isotropic leading flag).
IwasawaFactors iwasawa_su3(const CMatrix& g);

}  // namespace cst
