#pragma once

// Invariant suites for every module, the SU(p,q) K^2 adjudication report,
// and a fault-injection switch that perturbs sampled group elements.

#include "cst/exact.hpp"
#include "cst/kernel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cst {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  double tolerance = 1e-10;
  /// Size of the perturbation added to sampled group elements before the
  /// membership check. Nonzero values make that check fail on purpose.
  double inject = 0;
  int cutoff = 4;
  std::uint64_t seed = 0x5eed;
};

std::vector<CheckResult> exact_core_suite(const VerifyOptions& opt);
std::vector<CheckResult> polynomial_suite(const VerifyOptions& opt);
std::vector<CheckResult> matrix_suite(const VerifyOptions& opt);
std::vector<CheckResult> kernel_suite(const VerifyOptions& opt);
std::vector<CheckResult> rank_one_suite(const VerifyOptions& opt);
std::vector<CheckResult> so3_suite(const VerifyOptions& opt);
std::vector<CheckResult> run_all_suites(const VerifyOptions& opt);

struct AdjudicationRow {
  Family family;
  GroupShape shape;
  int lambda;
  PartitionLabel kappa;
  Rational oracle;                 // N^2 <phi|S|phi> from the expanded kernel
  Rational closed_form;            // generalized Pochhammer product
  std::optional<Rational> printed;  // empty where the printed factorials are undefined
};

struct AdjudicationReport {
  std::vector<AdjudicationRow> rows;
  int closed_form_mismatches = 0;
  int printed_mismatches = 0;
  int printed_undefined = 0;
  /// True when the single-row noncompact oracle values equal (lambda+nu-1)!/(lambda-1)!.
  bool oracle_supports_lambda_minus_one = false;

  bool passed() const { return closed_form_mismatches == 0 && oracle_supports_lambda_minus_one; }
  std::string render() const;
};

/// Compares oracle, closed form and printed form for SU(p+q) and SU(p,q)
/// over the given shapes, 1 <= lambda <= max_lambda and |kappa| <= max_size.
AdjudicationReport adjudicate_k_squared(const std::vector<GroupShape>& shapes, int max_lambda, int max_size);

/// N_kappa^2 * <phi|S|phi> for the unnormalized highest-weight polynomial.
Rational k_squared_oracle(const KernelSpec& spec, const PartitionLabel& kappa);

}  // namespace cst
