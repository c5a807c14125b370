#include "commands.hpp"

#include "cst/rank_one.hpp"
#include "cst/so3.hpp"
#include "cst/verify.hpp"

#include <cmath>
#include <numbers>

namespace cst::cli {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::vector<double> betas_of(const RunConfig& cfg) { return cfg.betas.empty() ? default_beta_grid() : cfg.betas; }

Json check_json(const CheckResult& r) {
  return {{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace

std::vector<double> default_beta_grid() {
  std::vector<double> out;
  for (int k = 0; k <= 6; ++k) out.push_back(k * std::numbers::pi / 6);
  return out;
}

CommandOutput cmd_su2_dmatrix(const RunConfig& cfg) {
  require(cfg.two_j >= 0 && cfg.two_j <= 40, "su2-dmatrix: need 0 <= two_j <= 40");
  const auto betas = betas_of(cfg);
  CommandOutput out;
  out.table.columns = {"beta", "two_m", "two_n", "value"};
  std::vector<SymbolicMatrixElement> elements;
  for (int tm = cfg.two_j; tm >= -cfg.two_j; tm -= 2)
    for (int tn = cfg.two_j; tn >= -cfg.two_j; tn -= 2) elements.push_back(su2_wigner_d_symbolic(cfg.two_j, tm, tn));
  Json mats = Json::array();
  for (double beta : betas) {
    Json rows = Json::array();
    auto it = elements.begin();
    for (int tm = cfg.two_j; tm >= -cfg.two_j; tm -= 2) {
      Json row = Json::array();
      for (int tn = cfg.two_j; tn >= -cfg.two_j; tn -= 2) {
        const double v = (it++)->evaluate(std::cos(beta / 2), std::sin(beta / 2));
        row.push_back(v);
        out.table.rows.push_back({format_double(beta), std::to_string(tm), std::to_string(tn), format_double(v)});
      }
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  out.json = {{"command", "su2-dmatrix"}, {"two_j", cfg.two_j}, {"betas", betas}, {"order", "m = j, j-1, ..., -j"},
              {"d", mats}};
  return out;
}

CommandOutput cmd_su11_wigner(const RunConfig& cfg) {
  require(cfg.lambda >= 1, "su11-wigner: need lambda >= 1");
  require(cfg.cutoff >= 0 && cfg.cutoff <= 40, "su11-wigner: need 0 <= cutoff <= 40");
  const auto betas = betas_of(cfg);
  CommandOutput out;
  out.table.columns = {"beta", "mu", "nu", "value"};
  std::vector<SymbolicMatrixElement> elements;
  for (int mu = 0; mu <= cfg.cutoff; ++mu)
    for (int nu = 0; nu <= cfg.cutoff; ++nu) elements.push_back(su11_wigner_sum_symbolic(cfg.lambda, mu, nu));
  Json mats = Json::array();
  for (double beta : betas) {
    Json rows = Json::array();
    auto it = elements.begin();
    for (int mu = 0; mu <= cfg.cutoff; ++mu) {
      Json row = Json::array();
      for (int nu = 0; nu <= cfg.cutoff; ++nu) {
        const double v = (it++)->evaluate(std::cosh(beta / 2), std::sinh(beta / 2));
        row.push_back(v);
        out.table.rows.push_back({format_double(beta), std::to_string(mu), std::to_string(nu), format_double(v)});
      }
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  out.json = {{"command", "su11-wigner"}, {"lambda", cfg.lambda}, {"cutoff", cfg.cutoff}, {"betas", betas},
              {"elements", mats}};
  return out;
}

CommandOutput cmd_su3_smatrix(const RunConfig& cfg) {
  require(cfg.lam >= 0 && cfg.mu >= 0 && cfg.lam + cfg.mu <= 12, "su3-smatrix: need lam, mu >= 0, lam + mu <= 12");
  require(cfg.L <= 12, "su3-smatrix: need L <= 12");
  const int lo = cfg.L < 0 ? 0 : cfg.L;
  const int hi = cfg.L < 0 ? std::min(cfg.lam + cfg.mu, 12) : cfg.L;
  CommandOutput out;
  Json blocks = Json::array();
  const ExactScalar pi2 = ExactScalar::pi(2);
  if (cfg.mu == 0) {
    out.table.columns = {"lam", "L", "K2_over_4pi2"};
  } else {
    out.table.columns = {"lam", "mu", "L", "Kp", "K", "S_over_pi2"};
  }
  for (int L = lo; L <= hi; ++L) {
    const SLMatrix m = su3_k_matrix(cfg.lam, cfg.mu, L);
    blocks.push_back(sl_matrix_to_json(m));
    const int n = static_cast<int>(m.allowed_K.size());
    if (cfg.mu == 0) {
      const ExactScalar v = n ? m.entries[0][0] : ExactScalar();
      const ExactScalar scaled = v.is_zero() ? v : v / (ExactScalar(Rational(4)) * pi2);
      out.table.rows.push_back({std::to_string(cfg.lam), std::to_string(L), scaled.to_string()});
      continue;
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const ExactScalar& v = m.entries[r][c];
        out.table.rows.push_back({std::to_string(cfg.lam), std::to_string(cfg.mu), std::to_string(L),
                                  std::to_string(m.allowed_K[r]), std::to_string(m.allowed_K[c]),
                                  (v.is_zero() ? v : v / pi2).to_string()});
      }
  }
  out.json = {{"command", "su3-smatrix"}, {"lam", cfg.lam}, {"mu", cfg.mu}, {"blocks", blocks}};
  return out;
}

CommandOutput cmd_rotor_basis(const RunConfig& cfg) {
  require(cfg.L_max >= 0 && cfg.L_max <= 40, "rotor-basis: need 0 <= L_max <= 40");
  D2Character chi;
  try {
    chi = D2Character(cfg.eps2, cfg.eps3);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("rotor-basis: ") + e.what());
  }
  CommandOutput out;
  out.table.columns = {"K", "L", "norm_squared", "on_K", "on_minus_K"};
  Json states = Json::array();
  for (const auto& n : rotor_norms(chi, cfg.L_max)) {
    const auto c = rotor_wavefunction({n.K, n.L, 0}, chi);
    states.push_back({{"K", n.K}, {"L", n.L}, {"norm_squared", n.norm_squared}, {"on_K", c.on_K},
                      {"on_minus_K", c.on_minus_K}});
    out.table.rows.push_back({std::to_string(n.K), std::to_string(n.L), n.norm_squared.to_string(),
                              c.on_K.to_string(), c.on_minus_K.to_string()});
  }
  out.json = {{"command", "rotor-basis"}, {"eps2", chi.eps2}, {"eps3", chi.eps3}, {"L_max", cfg.L_max},
              {"states", states}};
  return out;
}

CommandOutput cmd_kernel_expand(const RunConfig& cfg) {
  KernelSpec spec;
  try {
    spec.family = parse_family(cfg.family);
    spec.sigma = Rational::parse(cfg.sigma);
  } catch (const std::exception& e) {
    throw UsageError(std::string("kernel-expand: ") + e.what());
  }
  spec.shape = {cfg.p, cfg.q};
  spec.degree_cutoff = cfg.cutoff;
  require(cfg.cutoff >= 0 && cfg.cutoff <= 8, "kernel-expand: need 0 <= cutoff <= 8");
  require(cfg.p >= 1 && cfg.q >= 0 && cfg.p <= 3 && cfg.q <= 3, "kernel-expand: need 1 <= p <= 3, 0 <= q <= 3");
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("kernel-expand: ") + e.what());
  }
  const auto kernel = expand_kernel(spec);
  CommandOutput out;
  out.table.columns = {"z", "xstar", "re", "im"};
  for (const auto& [key, c] : kernel.terms())
    out.table.rows.push_back({monomial_label(key.first), monomial_label(key.second), c.re().to_string(),
                              c.im().to_string()});
  out.json = {{"command", "kernel-expand"}, {"spec", spec_to_json(spec)}, {"kernel", kernel_to_json(kernel)}};
  return out;
}

CommandOutput cmd_capelli(const RunConfig& cfg) {
  require(cfg.n_max >= 0 && cfg.n_max <= 8, "capelli: need 0 <= n_max <= 8");
  require(cfg.rows >= 1 && cfg.cols >= 1 && cfg.rows <= 4 && cfg.cols <= 4, "capelli: need 1 <= rows, cols <= 4");
  const Shape shape{cfg.rows, cfg.cols};
  CommandOutput out;
  out.table.columns = {"kappa", "N2", "oracle_N2", "dim", "hook_length"};
  Json rows = Json::array();
  for (int n = 0; n <= cfg.n_max; ++n)
    for (const auto& k : partitions_of(n, std::min(cfg.rows, cfg.cols))) {
      const auto hw = highest_weight_polynomial(k, shape);
      const Rational oracle = bargmann_pair(hw.polynomial, hw.polynomial).re().inverse();
      const Rational n2 = capelli_norm_squared(k);
      const Rational dim = factorial(n) * n2;
      const BigInt hook = hook_length_dimension(k);
      rows.push_back({{"kappa", k}, {"N2", n2}, {"oracle_N2", oracle}, {"dim", dim}, {"hook_length", hook.get_str()}});
      out.table.rows.push_back({k.to_string(), n2.to_string(), oracle.to_string(), dim.to_string(), hook.get_str()});
    }
  out.json = {{"command", "capelli"}, {"shape", Json::array({cfg.rows, cfg.cols})}, {"n_max", cfg.n_max},
              {"partitions", rows}};
  return out;
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  require(cfg.tol > 0, "verify: tolerance must be positive");
  require(cfg.gram_cutoff >= 0 && cfg.gram_cutoff <= 4, "verify: need 0 <= cutoff <= 4");
  VerifyOptions opt;
  opt.tolerance = cfg.tol;
  opt.inject = cfg.inject;
  opt.cutoff = cfg.gram_cutoff;
  opt.seed = cfg.seed;
  const auto checks = run_all_suites(opt);
  const auto report = adjudicate_k_squared({{1, 1}, {2, 1}, {2, 2}}, 3, 3);

  CommandOutput out;
  out.table.columns = {"suite", "check", "status", "detail"};
  Json list = Json::array();
  bool ok = report.passed();
  std::string text;
  for (const auto& r : checks) {
    ok = ok && r.passed;
    list.push_back(check_json(r));
    out.table.rows.push_back({r.suite, r.name, r.passed ? "PASS" : "FAIL", r.detail});
    text += std::string(r.passed ? "PASS  " : "FAIL  ") + r.suite + ": " + r.name +
            (r.detail.empty() ? "" : "  [" + r.detail + "]") + "\n";
  }
  out.table.rows.push_back({"kernel-engine", "SU(p,q) K^2 adjudication", report.passed() ? "PASS" : "FAIL", ""});
  text += std::string(report.passed() ? "PASS  " : "FAIL  ") + "kernel-engine: SU(p,q) K^2 adjudication\n\n";
  text += report.render();

  Json adj = Json::array();
  for (const auto& r : report.rows) {
    adj.push_back({{"family", to_string(r.family)},
                   {"shape", Json::array({r.shape.p, r.shape.q})},
                   {"lambda", r.lambda},
                   {"kappa", r.kappa},
                   {"oracle", r.oracle},
                   {"closed_form", r.closed_form},
                   {"printed", r.printed ? Json(*r.printed) : Json(nullptr)}});
  }
  out.json = {{"command", "verify"},
              {"checks", list},
              {"adjudication",
               {{"rows", adj},
                {"closed_form_mismatches", report.closed_form_mismatches},
                {"printed_mismatches", report.printed_mismatches},
                {"printed_undefined", report.printed_undefined},
                {"oracle_denominator", report.oracle_supports_lambda_minus_one ? "(lambda-1)!" : "unresolved"}}},
              {"passed", ok}};
  out.text = text + (ok ? "verify: all checks passed\n" : "verify: FAILURES\n");
  out.exit_code = ok ? 0 : 1;
  return out;
}

CommandOutput run(const RunConfig& cfg) {
  if (cfg.command == "su2-dmatrix") return cmd_su2_dmatrix(cfg);
  if (cfg.command == "su11-wigner") return cmd_su11_wigner(cfg);
  if (cfg.command == "su3-smatrix") return cmd_su3_smatrix(cfg);
  if (cfg.command == "rotor-basis") return cmd_rotor_basis(cfg);
  if (cfg.command == "kernel-expand") return cmd_kernel_expand(cfg);
  if (cfg.command == "capelli") return cmd_capelli(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

std::string render(const CommandOutput& out, const std::string& format) {
  if (format == "csv") return to_csv(out.table);
  if (format == "text" && !out.text.empty()) return out.text;
  return out.json.dump(2) + "\n";
}

}  // namespace cst::cli
