#pragma once

// Polynomials in matrix-indexed variables z_{i nu} with Gaussian-rational
// coefficients, the Bargmann pairing, and bilinear kernel polynomials.
//
// Monomials are never normalised by 1/sqrt(m!): callers carry normalisation
// squared alongside the polynomial (see kernel.hpp, BasisVector).

#include "cst/exact.hpp"

#include <complex>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cst {

/// Raised when a polynomial exceeds a kernel's degree cutoff.
struct DegreeOverflow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct Shape {
  int rows = 1;
  int cols = 1;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// 1-based (row, col) label of a variable z_{row col}.
struct VariableIndex {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const VariableIndex&, const VariableIndex&) = default;
};

/// Finitely supported exponent map, kept sorted by variable.
class MultiIndex {
 public:
  using Entry = std::pair<VariableIndex, int>;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<Entry> entries);
  static MultiIndex single(VariableIndex v, int power = 1);

  int exponent(VariableIndex v) const;
  int degree() const { return degree_; }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  /// prod_v (m_v)!
  BigInt factorial() const;

  MultiIndex operator*(const MultiIndex& o) const;  // exponents add
  /// Exponent of v shifted by delta; nullopt-like failure reported via bool.
  bool shifted(VariableIndex v, int delta, MultiIndex& out) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.entries_ < b.entries_; }

 private:
  void set(VariableIndex v, int e);

  std::vector<Entry> entries_;
  int degree_ = 0;
};

class BargmannPolynomial {
 public:
  using Terms = std::map<MultiIndex, GaussianRational>;

  BargmannPolynomial() = default;
  explicit BargmannPolynomial(Shape shape) : shape_(shape) {}

  static BargmannPolynomial constant(Shape shape, const GaussianRational& c);
  static BargmannPolynomial variable(Shape shape, VariableIndex v);
  static BargmannPolynomial monomial(Shape shape, const MultiIndex& m, const GaussianRational& c = 1);
  /// z^power in the single variable of shape (1,1).
  static BargmannPolynomial power(int power, const GaussianRational& c = 1);

  Shape shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  GaussianRational coefficient(const MultiIndex& m) const;

  void add_term(const MultiIndex& m, const GaussianRational& c);
  BargmannPolynomial derivative(VariableIndex v) const;
  BargmannPolynomial conj_coefficients() const;
  std::complex<double> evaluate(const std::function<std::complex<double>(VariableIndex)>& value) const;

  BargmannPolynomial& operator+=(const BargmannPolynomial& o);
  BargmannPolynomial& operator-=(const BargmannPolynomial& o);
  BargmannPolynomial& operator*=(const GaussianRational& c);
  friend BargmannPolynomial operator+(BargmannPolynomial a, const BargmannPolynomial& b) { return a += b; }
  friend BargmannPolynomial operator-(BargmannPolynomial a, const BargmannPolynomial& b) { return a -= b; }
  friend BargmannPolynomial operator*(BargmannPolynomial a, const GaussianRational& c) { return a *= c; }
  friend BargmannPolynomial operator*(const GaussianRational& c, BargmannPolynomial a) { return a *= c; }
  friend BargmannPolynomial operator*(const BargmannPolynomial& a, const BargmannPolynomial& b);
  BargmannPolynomial pow(int e) const;

  friend bool operator==(const BargmannPolynomial& a, const BargmannPolynomial& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_variable(VariableIndex v) const;

  Shape shape_{};
  Terms terms_;
};

/// Truncated kernel S(z, x) = sum c_{mn} z^m (x^*)^n. Keys are (z exponents,
/// x^* exponents).
class BilinearKernelPolynomial {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;
  using Terms = std::map<Key, GaussianRational>;

  BilinearKernelPolynomial(Shape shape, int degree_cutoff);
  static BilinearKernelPolynomial one(Shape shape, int degree_cutoff);

  Shape shape() const { return shape_; }
  int degree_cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  GaussianRational coefficient(const MultiIndex& z, const MultiIndex& xs) const;

  /// Adds a term; terms whose z-degree exceeds the cutoff are dropped.
  void add_term(const MultiIndex& z, const MultiIndex& xs, const GaussianRational& c);
  bool is_hermitian() const;

  BilinearKernelPolynomial& operator+=(const BilinearKernelPolynomial& o);
  BilinearKernelPolynomial& operator*=(const GaussianRational& c);
  /// Product truncated at the smaller cutoff.
  friend BilinearKernelPolynomial operator*(const BilinearKernelPolynomial& a,
                                            const BilinearKernelPolynomial& b);

  friend bool operator==(const BilinearKernelPolynomial& a, const BilinearKernelPolynomial& b) {
    return a.shape_ == b.shape_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

 private:
  Shape shape_;
  int cutoff_;
  Terms terms_;
};

/// Integral of conj(bra) * ket against the Bargmann measure:
/// sum_m conj(bra_m) ket_m m!.
GaussianRational bargmann_pair(const BargmannPolynomial& bra, const BargmannPolynomial& ket);

/// <bra| S |ket> through the kernel; throws DegreeOverflow past the cutoff.
GaussianRational pair_through_kernel(const BargmannPolynomial& bra, const BilinearKernelPolynomial& kernel,
                                     const BargmannPolynomial& ket);

/// Psi = S psi, the coherent-state wave function dual to psi.
BargmannPolynomial apply_kernel(const BilinearKernelPolynomial& kernel, const BargmannPolynomial& ket);

/// multiplier(z) * f + sum_k coefficient_k(z) * d f / d z_{v_k}
class DifferentialOperator {
 public:
  explicit DifferentialOperator(Shape shape) : multiplier_(shape) {}

  DifferentialOperator& multiply_by(const BargmannPolynomial& p);
  DifferentialOperator& differentiate(const BargmannPolynomial& coefficient, VariableIndex v);

  Shape shape() const { return multiplier_.shape(); }
  BargmannPolynomial apply(const BargmannPolynomial& f) const;

 private:
  BargmannPolynomial multiplier_;
  std::vector<std::pair<BargmannPolynomial, VariableIndex>> derivative_terms_;
};

BargmannPolynomial differential_operator_apply(const DifferentialOperator& op, const BargmannPolynomial& f);

/// Laurent polynomial in two commuting symbols (the half-angle pair c, s),
/// rational coefficients, integer (possibly negative) exponents.
class LaurentPolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& constant);  // NOLINT
  static LaurentPolynomial monomial(int c_power, int s_power, const Rational& coef = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int c_power, int s_power) const;
  void add_term(int c_power, int s_power, const Rational& coef);
  double evaluate(double c, double s) const;
  LaurentPolynomial pow(int e) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& r);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& r) { return a *= r; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace cst
