#pragma once

// Canonical JSON for exact values, polynomials, kernels, Gram blocks and S^L
// tables. Rationals are "num/den" strings; objects use sorted keys, so a
// fixed input always dumps to the same bytes.

#include "cst/exact.hpp"
#include "cst/kernel.hpp"
#include "cst/polynomial.hpp"
#include "cst/so3.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cst {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);
/// [re_num, re_den, im_num, im_den], all strings.
void to_json(Json& j, const GaussianRational& g);
void from_json(const Json& j, GaussianRational& g);
/// {"value": "n/d", "radicand": "r", "pi_power": k}
void to_json(Json& j, const ExactScalar& s);
void from_json(const Json& j, ExactScalar& s);
/// [[[row, col], exponent], ...]
void to_json(Json& j, const MultiIndex& m);
void from_json(const Json& j, MultiIndex& m);
void to_json(Json& j, const PartitionLabel& k);
void from_json(const Json& j, PartitionLabel& k);

Json polynomial_to_json(const BargmannPolynomial& p);
BargmannPolynomial polynomial_from_json(const Json& j);

Json kernel_to_json(const BilinearKernelPolynomial& k);
BilinearKernelPolynomial kernel_from_json(const Json& j);

Json spec_to_json(const KernelSpec& spec);
KernelSpec spec_from_json(const Json& j);

/// Row-major rows of [re, im] pairs.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json gram_block_to_json(const GramBlock& block);

/// {lam, mu, L, allowed_K, S_over_pi2, K_matrix, rank, independent_K, eigenvalues}
Json sl_matrix_to_json(const SLMatrix& m);
/// Restores the exact entries and the float factor; eigenvectors are not stored.
SLMatrix sl_matrix_from_json(const Json& j);

/// Flat table used for CSV output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
Table table_from_csv(const std::string& text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace cst
