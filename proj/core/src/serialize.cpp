#include "cst/serialize.hpp"

#include <charconv>
#include <sstream>

namespace cst {

namespace {

std::string rational_text(const Rational& r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); }

Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw ParseError("expected rational string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
}

BigInt parse_integer(const Json& j) {
  BigInt v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("expected integer string");
  return v;
}

Json shape_json(Shape s) { return Json::array({s.rows, s.cols}); }

Shape shape_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("shape must be [rows, cols]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

void to_json(Json& j, const Rational& r) { j = rational_text(r); }
void from_json(const Json& j, Rational& r) { r = parse_rational(j); }

void to_json(Json& j, const GaussianRational& g) {
  j = Json::array({g.re().numerator().get_str(), g.re().denominator().get_str(), g.im().numerator().get_str(),
                   g.im().denominator().get_str()});
}

void from_json(const Json& j, GaussianRational& g) {
  if (!j.is_array() || j.size() != 4) throw ParseError("Gaussian rational must have four entries");
  const BigInt rn = parse_integer(j[0]), rd = parse_integer(j[1]);
  const BigInt in = parse_integer(j[2]), id = parse_integer(j[3]);
  if (rd == 0 || id == 0) throw ParseError("zero denominator");
  g = GaussianRational(Rational(rn, rd), Rational(in, id));
}

void to_json(Json& j, const ExactScalar& s) {
  j = Json{{"value", rational_text(s.value())}, {"radicand", s.radicand().get_str()}, {"pi_power", s.pi_power()}};
}

void from_json(const Json& j, ExactScalar& s) {
  const Rational value = parse_rational(j.at("value"));
  const BigInt radicand = parse_integer(j.at("radicand"));
  if (radicand <= 0) throw ParseError("radicand must be positive");
  s = ExactScalar(value, Rational(radicand), j.at("pi_power").get<int>());
}

void to_json(Json& j, const MultiIndex& m) {
  j = Json::array();
  for (const auto& [v, e] : m.entries()) j.push_back(Json::array({Json::array({v.row, v.col}), e}));
}

void from_json(const Json& j, MultiIndex& m) {
  if (!j.is_array()) throw ParseError("multi-index must be an array");
  m = MultiIndex();
  for (const auto& entry : j) {
    const VariableIndex v{entry.at(0).at(0).get<int>(), entry.at(0).at(1).get<int>()};
    const int e = entry.at(1).get<int>();
    if (e <= 0) throw ParseError("multi-index exponents must be positive");
    m = m * MultiIndex::single(v, e);
  }
}

void to_json(Json& j, const PartitionLabel& k) { j = k.kappa; }
void from_json(const Json& j, PartitionLabel& k) {
  try {
    k = PartitionLabel(j.get<std::vector<int>>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// ------------------------------------------------------------ polynomials

Json polynomial_to_json(const BargmannPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m, c}));
  return {{"shape", shape_json(p.shape())}, {"terms", terms}};
}

BargmannPolynomial polynomial_from_json(const Json& j) {
  BargmannPolynomial p(shape_from(j.at("shape")));
  for (const auto& t : j.at("terms")) p.add_term(t.at(0).get<MultiIndex>(), t.at(1).get<GaussianRational>());
  return p;
}

Json kernel_to_json(const BilinearKernelPolynomial& k) {
  Json terms = Json::array();
  for (const auto& [key, c] : k.terms()) terms.push_back(Json::array({key.first, key.second, c}));
  return {{"shape", shape_json(k.shape())}, {"cutoff", k.degree_cutoff()}, {"terms", terms}};
}

BilinearKernelPolynomial kernel_from_json(const Json& j) {
  BilinearKernelPolynomial k(shape_from(j.at("shape")), j.at("cutoff").get<int>());
  for (const auto& t : j.at("terms")) {
    const auto z = t.at(0).get<MultiIndex>();
    if (z.degree() > k.degree_cutoff()) throw ParseError("kernel term above cutoff");
    k.add_term(z, t.at(1).get<MultiIndex>(), t.at(2).get<GaussianRational>());
  }
  return k;
}

Json spec_to_json(const KernelSpec& spec) {
  return {{"family", to_string(spec.family)},
          {"sigma", spec.sigma},
          {"shape", Json::array({spec.shape.p, spec.shape.q})},
          {"cutoff", spec.degree_cutoff}};
}

KernelSpec spec_from_json(const Json& j) {
  KernelSpec spec;
  try {
    spec.family = parse_family(j.at("family").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  spec.sigma = j.at("sigma").get<Rational>();
  spec.shape = {j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>()};
  spec.degree_cutoff = j.at("cutoff").get<int>();
  spec.validate();
  return spec;
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      // + 0.0 folds -0.0 into 0.0 so equal matrices dump identically
      row.push_back(Json::array({m(r, c).real() + 0.0, m(r, c).imag() + 0.0}));
    }
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) throw ParseError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = {j[r][c].at(0).get<double>(), j[r][c].at(1).get<double>()};
  }
  return m;
}

Json gram_block_to_json(const GramBlock& block) {
  Json out = spec_to_json(block.spec);
  out["labels"] = block.labels;
  out["null_labels"] = block.null_labels;
  out["diagonal"] = block.diagonal;
  out["K"] = matrix_to_json(block.factor.K);
  out["rank"] = block.factor.rank;
  if (block.diagonal) {
    out["S"] = block.exact_diagonal;
  } else {
    out["S"] = matrix_to_json(block.S);
  }
  return out;
}

// ------------------------------------------------------------------- S^L

Json sl_matrix_to_json(const SLMatrix& m) {
  Json entries = Json::array();
  const ExactScalar pi2 = ExactScalar::pi(2);
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.is_zero() ? e : e / pi2);
    entries.push_back(r);
  }
  std::vector<double> eig(m.factor.eigenvalues.data(), m.factor.eigenvalues.data() + m.factor.eigenvalues.size());
  return {{"lam", m.lam},
          {"mu", m.mu},
          {"L", m.L},
          {"allowed_K", m.allowed_K},
          {"independent_K", m.independent_K},
          {"S_over_pi2", entries},
          {"K_matrix", matrix_to_json(m.factor.K)},
          {"eigenvalues", eig},
          {"rank", m.rank},
          {"factor_residual", m.factor_residual}};
}

SLMatrix sl_matrix_from_json(const Json& j) {
  SLMatrix m;
  m.lam = j.at("lam").get<int>();
  m.mu = j.at("mu").get<int>();
  m.L = j.at("L").get<int>();
  m.allowed_K = j.at("allowed_K").get<std::vector<int>>();
  m.independent_K = j.at("independent_K").get<std::vector<int>>();
  const ExactScalar pi2 = ExactScalar::pi(2);
  for (const auto& row : j.at("S_over_pi2")) {
    std::vector<ExactScalar> r;
    for (const auto& e : row) {
      const auto v = e.get<ExactScalar>();
      r.push_back(v.is_zero() ? v : v * pi2);
    }
    m.entries.push_back(std::move(r));
  }
  if (m.entries.size() != m.allowed_K.size()) throw ParseError("S_over_pi2 size does not match allowed_K");
  m.factor.K = matrix_from_json(j.at("K_matrix"));
  const auto eig = j.at("eigenvalues").get<std::vector<double>>();
  m.factor.eigenvalues = Eigen::Map<const Eigen::VectorXd>(eig.data(), static_cast<Eigen::Index>(eig.size()));
  m.rank = j.at("rank").get<int>();
  m.factor.rank = m.rank;
  m.factor_residual = j.at("factor_residual").get<double>();
  return m;
}

// -------------------------------------------------------------------- CSV

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV");
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_csv(const Table& t) {
  std::ostringstream os;
  const auto write_row = [&os](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  };
  write_row(t.columns);
  for (const auto& r : t.rows) write_row(r);
  return os.str();
}

Table table_from_csv(const std::string& text) {
  Table t;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (header) {
      t.columns = std::move(fields);
      header = false;
    } else {
      if (fields.size() != t.columns.size()) throw ParseError("CSV row width mismatch");
      t.rows.push_back(std::move(fields));
    }
  }
  return t;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace cst
