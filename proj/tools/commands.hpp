#pragma once

// Table and report generators behind the cstriplet subcommands. Each returns
// canonical JSON plus a flat table for CSV output.

#include "cst/serialize.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cst::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int two_j = 2;
  int lambda = 1;                      // su11-wigner
  int lam = 2, mu = 0, L = -1;         // su3-smatrix; L < 0 means all L <= lam + mu
  std::string family = "SU2";          // kernel-expand
  std::string sigma = "2";
  int p = 1, q = 1;
  int eps2 = 1, eps3 = 1, L_max = 6;   // rotor-basis
  int n_max = 6, rows = 3, cols = 3;   // capelli
  int cutoff = 6;
  int gram_cutoff = 4;                 // verify
  std::vector<double> betas;           // empty: default grid
  std::string format = "json";
  std::string out;
  double tol = 1e-10;
  double inject = 0;
  std::uint64_t seed = 0x5eed;
};

struct CommandOutput {
  Json json;
  Table table;
  std::string text;  // human-readable report (verify only)
  int exit_code = 0;
};

/// 0, pi/6, ..., pi.
std::vector<double> default_beta_grid();

CommandOutput cmd_su2_dmatrix(const RunConfig& cfg);
CommandOutput cmd_su11_wigner(const RunConfig& cfg);
CommandOutput cmd_su3_smatrix(const RunConfig& cfg);
CommandOutput cmd_rotor_basis(const RunConfig& cfg);
CommandOutput cmd_kernel_expand(const RunConfig& cfg);
CommandOutput cmd_capelli(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);

/// Dispatches on cfg.command. Throws UsageError for bad parameters.
CommandOutput run(const RunConfig& cfg);

/// Serialized form according to cfg.format, newline-terminated.
std::string render(const CommandOutput& out, const std::string& format);

}  // namespace cst::cli
