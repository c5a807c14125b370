#include "cst/serialize.hpp"

#include "commands.hpp"
#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace cst;
using cli::RunConfig;

namespace {

RunConfig config(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  return cfg;
}

// dump -> parse -> dump must reproduce the same bytes
void check_stable(const Json& j) {
  const std::string text = j.dump(2);
  CHECK(Json::parse(text).dump(2) == text);
}

}  // namespace

TEST_CASE("exact values round-trip") {
  for (const auto& r : {Rational(0), Rational(-7, 3), Rational(BigInt("123456789012345678901234567890"))}) {
    const Json j = r;
    CHECK(j.get<Rational>() == r);
  }
  CHECK(Json(Rational(5)).get<std::string>() == "5/1");
  const GaussianRational g(Rational(1, 2), Rational(-3));
  CHECK(Json(g).get<GaussianRational>() == g);
  const ExactScalar s(Rational(2, 105), Rational(6), 2);
  CHECK(Json(s).get<ExactScalar>() == s);
  const MultiIndex m{{{1, 2}, 3}, {{2, 1}, 1}};
  CHECK(Json(m).get<MultiIndex>() == m);
  CHECK(Json(PartitionLabel({3, 1})).get<PartitionLabel>() == PartitionLabel({3, 1}));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(Json(3).get<Rational>(), ParseError);
  CHECK_THROWS_AS(Json("1/0").get<Rational>(), ParseError);
  CHECK_THROWS_AS(Json::array({"1", "0", "0", "1"}).get<GaussianRational>(), ParseError);
  CHECK_THROWS_AS((Json{{"value", "1/1"}, {"radicand", "-2"}, {"pi_power", 0}}).get<ExactScalar>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"([[[1,1],0]])").get<MultiIndex>(), ParseError);
  CHECK_THROWS_AS(Json::parse("[1,2]").get<PartitionLabel>(), ParseError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"family":"SU9","sigma":"1/1","shape":[1,1],"cutoff":2})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[[1,0]],[[1,0],[2,0]]]")), ParseError);
  CHECK_THROWS_AS(table_from_csv("a,b\n1\n"), ParseError);
}

TEST_CASE("polynomials, kernels and specs round-trip") {
  auto p = BargmannPolynomial(Shape{2, 2});
  p.add_term(MultiIndex{{{1, 1}, 2}}, GaussianRational(Rational(1, 3), Rational(2)));
  p.add_term(MultiIndex{}, -1);
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);

  const KernelSpec spec{Family::SUpq, Rational(-3, 2), {2, 1}, 3};
  CHECK(spec_to_json(spec_from_json(spec_to_json(spec))) == spec_to_json(spec));
  const auto k = expand_kernel(spec);
  CHECK(kernel_from_json(kernel_to_json(k)) == k);
  check_stable(kernel_to_json(k));
}

TEST_CASE("matrices and S^L tables round-trip") {
  CMatrix m(2, 2);
  m << Complex(1, -0.0), Complex(0.1, 2), Complex(-0.0, 0), Complex(1e-300, 3);
  const CMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);
  CHECK(matrix_to_json(m).dump().find("-0.0") == std::string::npos);

  const auto sl = su3_k_matrix(2, 2, 2);
  const auto j = sl_matrix_to_json(sl);
  const auto decoded = sl_matrix_from_json(j);
  CHECK(decoded.entries == sl.entries);
  CHECK(decoded.independent_K == sl.independent_K);
  CHECK(sl_matrix_to_json(decoded) == j);
}

TEST_CASE("CSV quoting round-trips") {
  const Table t{{"a", "b,c"}, {{"1", "say \"hi\""}, {"", "2/3"}}};
  const auto back = table_from_csv(to_csv(t));
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("every command emits stable JSON and CSV") {
  for (const char* name :
       {"su2-dmatrix", "su11-wigner", "su3-smatrix", "rotor-basis", "kernel-expand", "capelli", "verify"}) {
    CAPTURE(name);
    auto cfg = config(name);
    const auto a = cli::run(cfg);
    const auto b = cli::run(cfg);
    CHECK(cli::render(a, "json") == cli::render(b, "json"));
    CHECK(cli::render(a, "csv") == cli::render(b, "csv"));
    check_stable(a.json);
    const auto table = table_from_csv(cli::render(a, "csv"));
    CHECK(table.columns == a.table.columns);
    CHECK(table.rows == a.table.rows);
    CHECK(a.exit_code == 0);
  }
}

TEST_CASE("kernel-expand decodes back to the kernel") {
  auto cfg = config("kernel-expand");
  cfg.family = "SU11";
  cfg.sigma = "-2";
  cfg.cutoff = 4;
  const auto out = cli::run(cfg);
  const Json parsed = Json::parse(cli::render(out, "json"));
  const auto spec = spec_from_json(parsed.at("spec"));
  CHECK(kernel_from_json(parsed.at("kernel")) == expand_kernel(spec));

  cfg.cutoff = 0;
  const auto flat = kernel_from_json(cli::run(cfg).json.at("kernel"));
  CHECK(flat.terms().size() == 1);
  CHECK(flat.coefficient({}, {}) == GaussianRational(1));

  cfg.family = "Sp";
  cfg.sigma = "2";
  CHECK_THROWS_AS(cli::run(cfg), cli::UsageError);
}

TEST_CASE("su2-dmatrix for spin 1/2 at beta = pi") {
  auto cfg = config("su2-dmatrix");
  cfg.two_j = 1;
  cfg.betas = {std::numbers::pi};
  const auto d = cli::run(cfg).json.at("d").at(0);
  CHECK(std::abs(d[0][0].get<double>()) < 1e-15);
  CHECK(std::abs(d[1][1].get<double>()) < 1e-15);
  CHECK(std::abs(std::abs(d[0][1].get<double>()) - 1) < 1e-15);
  CHECK(d[0][1].get<double>() == doctest::Approx(-d[1][0].get<double>()));
}

TEST_CASE("su3-smatrix with mu = 1 has no even-K sector") {
  for (int lam = 0; lam <= 3; ++lam) {
    auto cfg = config("su3-smatrix");
    cfg.lam = lam;
    cfg.mu = 1;
    for (const auto& block : cli::run(cfg).json.at("blocks")) {
      for (int k : block.at("allowed_K").get<std::vector<int>>()) CHECK(k % 2 == 1);
      const auto decoded = sl_matrix_from_json(block);
      CHECK(decoded.entries == su3_k_matrix(lam, 1, decoded.L).entries);
    }
  }
}

TEST_CASE("capelli table agrees with its oracle column") {
  auto cfg = config("capelli");
  for (const auto& row : cli::run(cfg).json.at("partitions")) {
    CHECK(row.at("N2") == row.at("oracle_N2"));
    const auto dim = row.at("dim").get<Rational>();
    CHECK(dim == Rational(BigInt(row.at("hook_length").get<std::string>())));
  }
}

TEST_CASE("usage errors") {
  auto cfg = config("nope");
  CHECK_THROWS_AS(cli::run(cfg), cli::UsageError);
  cfg = config("su3-smatrix");
  cfg.lam = 13;
  CHECK_THROWS_AS(cli::run(cfg), cli::UsageError);
  cfg = config("verify");
  cfg.gram_cutoff = 5;
  CHECK_THROWS_AS(cli::run(cfg), cli::UsageError);
  cfg = config("rotor-basis");
  cfg.eps2 = 0;
  CHECK_THROWS_AS(cli::run(cfg), cli::UsageError);
}

TEST_CASE("fault injection makes verify fail") {
  auto cfg = config("verify");
  cfg.inject = 1e-6;
  const auto out = cli::run(cfg);
  CHECK(out.exit_code == 1);
  CHECK(out.json.at("passed") == false);
}
