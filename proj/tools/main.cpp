// cstriplet: tables and verification reports for coherent-state triplets.

#include "commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsageError = 2;

void add_output_flags(CLI::App& sub, cst::cli::RunConfig& cfg) {
  sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub.add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using cst::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Coherent-state triplet tables and checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* d = app.add_subcommand("su2-dmatrix", "Wigner d^j matrices on a beta grid");
  d->add_option("--two-j", cfg.two_j, "2j")->required();
  d->add_option("--beta", cfg.betas, "Angles (default 0, pi/6, ..., pi)");
  add_output_flags(*d, cfg);

  auto* w = app.add_subcommand("su11-wigner", "SU(1,1) discrete-series matrix elements");
  w->add_option("--lambda", cfg.lambda, "Lowest weight lambda >= 1")->required();
  w->add_option("--cutoff", cfg.cutoff, "Largest mu, nu");
  w->add_option("--beta", cfg.betas, "Angles (default 0, pi/6, ..., pi)");
  add_output_flags(*w, cfg);

  auto* s = app.add_subcommand("su3-smatrix", "Exact SU(3) > SO(3) overlap matrices S^L and K factors");
  s->add_option("--lam", cfg.lam, "lambda")->required();
  s->add_option("--mu", cfg.mu, "mu")->required();
  s->add_option("--L", cfg.L, "Single L (default: every L <= lam + mu)");
  add_output_flags(*s, cfg);

  auto* r = app.add_subcommand("rotor-basis", "Rotor triplet coefficients and norms");
  r->add_option("--eps2", cfg.eps2, "D2 character value on omega_2 (+1 or -1)");
  r->add_option("--eps3", cfg.eps3, "D2 character value on omega_3 (+1 or -1)");
  r->add_option("--L-max", cfg.L_max, "Largest L");
  add_output_flags(*r, cfg);

  auto* k = app.add_subcommand("kernel-expand", "Truncated Taylor expansion of an overlap kernel");
  k->add_option("--family", cfg.family, "SU2, SU11, SUn, SUpq, Sp, SpR, SO2n, SOstar, SOp2, SOpplus2")->required();
  k->add_option("--sigma", cfg.sigma, "Weight sigma (integer or n/d)")->required();
  k->add_option("--p", cfg.p, "p (or n)");
  k->add_option("--q", cfg.q, "q");
  k->add_option("--cutoff", cfg.cutoff, "Degree cutoff");
  add_output_flags(*k, cfg);

  auto* c = app.add_subcommand("capelli", "Capelli norm factors and hook-length dimensions");
  c->add_option("--n-max", cfg.n_max, "Largest |kappa|");
  c->add_option("--rows", cfg.rows, "p");
  c->add_option("--cols", cfg.cols, "q");
  add_output_flags(*c, cfg);

  auto* v = app.add_subcommand("verify", "Run every invariant suite and the K^2 adjudication");
  v->add_option("--tol", cfg.tol, "Floating tolerance")->check(CLI::PositiveNumber);
  v->add_option("--cutoff", cfg.gram_cutoff, "Gram-block degree cutoff");
  v->add_option("--inject", cfg.inject, "Perturb sampled group elements by this amount");
  v->add_option("--seed", cfg.seed, "Random seed");
  add_output_flags(*v, cfg);
  cfg.format.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.format.empty()) cfg.format = cfg.command == "verify" ? "text" : "json";

  cst::cli::CommandOutput out;
  try {
    out = cst::cli::run(cfg);
  } catch (const cst::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string body = cst::cli::render(out, cfg.format);
  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!(f << body)) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 1;
    }
  }
  return out.exit_code;
}
