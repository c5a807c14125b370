#include "cst/kernel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace cst {

namespace {

bool is_doubled(Family f) {
  return f == Family::Sp || f == Family::SpR || f == Family::SO2n || f == Family::SOstar;
}

bool is_vector_family(Family f) { return f == Family::SOp2 || f == Family::SOpplus2; }

bool symmetric_chart(Family f) { return f == Family::Sp || f == Family::SpR; }
bool antisymmetric_chart(Family f) { return f == Family::SO2n || f == Family::SOstar; }

struct SignedVariable {
  VariableIndex var;
  int sign;
};

// Matrix entry (i, nu) of the chart variable in terms of independent ones.
std::optional<SignedVariable> chart_entry(Family f, int i, int nu) {
  if (symmetric_chart(f)) return SignedVariable{{std::min(i, nu), std::max(i, nu)}, 1};
  if (antisymmetric_chart(f)) {
    if (i == nu) return std::nullopt;
    return SignedVariable{{std::min(i, nu), std::max(i, nu)}, i < nu ? 1 : -1};
  }
  return SignedVariable{{i, nu}, 1};
}

template <typename T>
T leibniz_determinant(const std::vector<std::vector<T>>& m, const T& one) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T det = one;
  det *= GaussianRational(0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    T term = one;
    for (int r = 0; r < n; ++r) term = term * m[r][perm[r]];
    if (inversions % 2 != 0) term *= GaussianRational(-1);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

BilinearKernelPolynomial determinant_part(const KernelSpec& spec, int sign) {
  const Shape shape = spec.variable_shape();
  const int cutoff = spec.degree_cutoff;
  const int n = shape.rows;
  const BilinearKernelPolynomial one = BilinearKernelPolynomial::one(shape, cutoff);
  std::vector<std::vector<BilinearKernelPolynomial>> m(n, std::vector<BilinearKernelPolynomial>(n, one));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // (I + sign * z x^dagger)_{ij}, (z x^dagger)_{ij} = sum_nu z_{i nu} x*_{j nu}
      BilinearKernelPolynomial entry(shape, cutoff);
      if (i == j) entry.add_term({}, {}, 1);
      for (int nu = 1; nu <= shape.cols; ++nu) {
        const auto zv = chart_entry(spec.family, i, nu);
        const auto xv = chart_entry(spec.family, j, nu);
        if (!zv || !xv) continue;
        entry.add_term(MultiIndex::single(zv->var), MultiIndex::single(xv->var), sign * zv->sign * xv->sign);
      }
      m[i - 1][j - 1] = entry;
    }
  return leibniz_determinant(m, one);
}

BilinearKernelPolynomial vector_part(const KernelSpec& spec, int sign) {
  const Shape shape = spec.variable_shape();
  const int cutoff = spec.degree_cutoff;
  BilinearKernelPolynomial zz(shape, cutoff), xx(shape, cutoff), zx(shape, cutoff);
  const BilinearKernelPolynomial one = BilinearKernelPolynomial::one(shape, cutoff);
  for (int k = 1; k <= shape.cols; ++k) {
    const VariableIndex v{1, k};
    zz.add_term(MultiIndex::single(v, 2), {}, 1);
    xx.add_term({}, MultiIndex::single(v, 2), 1);
    zx.add_term(MultiIndex::single(v), MultiIndex::single(v), 2 * sign);
  }
  // 1 + (z.z)(x*.x*) +- 2 z.x*
  BilinearKernelPolynomial d = one;
  d += zz * xx;
  d += zx;
  return d;
}

void generate_indices(const std::vector<VariableIndex>& vars, std::size_t pos, int remaining, MultiIndex current,
                      std::vector<MultiIndex>& out) {
  if (pos == vars.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    MultiIndex next;
    current.shifted(vars[pos], e, next);
    generate_indices(vars, pos + 1, remaining - e, next, out);
  }
}

}  // namespace

// --------------------------------------------------------------- KernelSpec

void KernelSpec::validate() const {
  if (degree_cutoff < 0) throw std::invalid_argument("KernelSpec: negative degree cutoff");
  if (shape.p < 1 || shape.q < 1) throw std::invalid_argument("KernelSpec: shape parameters must be positive");
  const int s = sigma.sign();
  if (s == 0) return;
  const Rational e = kernel_exponent();
  const bool compact = !is_noncompact(family);
  if (compact && e.sign() < 0) {
    throw std::invalid_argument("KernelSpec: " + to_string(family) + " does not accept sigma = " + sigma.to_string());
  }
  if (!compact && e.sign() > 0) {
    throw std::invalid_argument("KernelSpec: " + to_string(family) + " does not accept sigma = " + sigma.to_string());
  }
  if (compact && !sigma.is_integer()) {
    throw std::invalid_argument("KernelSpec: compact family " + to_string(family) + " needs an integer weight");
  }
}

Rational KernelSpec::lambda() const { return sigma.abs(); }

Rational KernelSpec::kernel_exponent() const { return is_doubled(family) ? -sigma : sigma; }

std::vector<VariableIndex> chart_variables(Family f, GroupShape s) {
  const Shape cs = chart_shape(f, s);
  std::vector<VariableIndex> vars;
  for (int i = 1; i <= cs.rows; ++i)
    for (int j = 1; j <= cs.cols; ++j) {
      if (symmetric_chart(f) && j < i) continue;
      if (antisymmetric_chart(f) && j <= i) continue;
      vars.push_back({i, j});
    }
  return vars;
}

BilinearKernelPolynomial expand_kernel(const KernelSpec& spec) {
  spec.validate();
  const Shape shape = spec.variable_shape();
  const int cutoff = spec.degree_cutoff;
  BilinearKernelPolynomial out = BilinearKernelPolynomial::one(shape, cutoff);
  const Rational e = spec.kernel_exponent();
  if (e.is_zero() || cutoff == 0) return out;

  const int sign = e.sign() > 0 ? 1 : -1;
  BilinearKernelPolynomial u = is_vector_family(spec.family) ? vector_part(spec, sign) : determinant_part(spec, sign);
  BilinearKernelPolynomial minus_one = BilinearKernelPolynomial::one(shape, cutoff);
  minus_one *= GaussianRational(-1);
  u += minus_one;

  // D^e = sum_k binom(e, k) u^k; u has no constant term so k <= cutoff.
  int k_max = cutoff;
  if (e.is_integer() && e.sign() > 0) k_max = std::min<long>(cutoff, e.numerator().get_si());
  BilinearKernelPolynomial power = BilinearKernelPolynomial::one(shape, cutoff);
  for (int k = 1; k <= k_max; ++k) {
    power = power * u;
    if (power.terms().empty()) break;
    BilinearKernelPolynomial term = power;
    term *= GaussianRational(binomial(e, k));
    out += term;
  }
  return out;
}

// ----------------------------------------------------------- PartitionLabel

PartitionLabel::PartitionLabel(std::vector<int> parts) : kappa(std::move(parts)) {
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (kappa[i] < 0) throw std::invalid_argument("PartitionLabel: negative part");
    if (i > 0 && kappa[i] > kappa[i - 1]) throw std::invalid_argument("PartitionLabel: parts must be weakly decreasing");
  }
  while (!kappa.empty() && kappa.back() == 0) kappa.pop_back();
}

int PartitionLabel::size() const { return std::accumulate(kappa.begin(), kappa.end(), 0); }

std::string PartitionLabel::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < kappa.size(); ++i) os << (i ? "," : "") << kappa[i];
  os << ")";
  return os.str();
}

std::vector<PartitionLabel> partitions_of(int n, int max_parts, int max_part) {
  std::vector<PartitionLabel> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(current.size()) >= max_parts) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part < 0 ? n : max_part);
  return out;
}

// ------------------------------------------------------------ closed forms

Rational k_squared_closed_form(const KernelSpec& spec, int nu) {
  if (nu < 0) throw std::invalid_argument("k_squared_closed_form: negative index");
  spec.validate();
  const Rational lam = spec.lambda();
  switch (spec.family) {
    case Family::SU2:
      return falling_factorial(lam, nu);  // (2j)!/(2j-nu)!, zero past 2j
    case Family::SU11:
      return rising_factorial(lam, nu);  // (lambda+nu-1)!/(lambda-1)!
    case Family::SUn:
    case Family::SUpq:
      return k_squared_closed_form(spec, PartitionLabel({nu}));
    default:
      throw std::invalid_argument("k_squared_closed_form: no closed form for " + to_string(spec.family));
  }
}

Rational k_squared_closed_form(const KernelSpec& spec, const PartitionLabel& kappa) {
  spec.validate();
  const Rational lam = spec.lambda();
  if (spec.family == Family::SU2 || spec.family == Family::SU11) {
    if (kappa.length() > 1) throw std::invalid_argument("k_squared_closed_form: rank-one family takes one part");
    return k_squared_closed_form(spec, kappa.length() ? kappa.kappa[0] : 0);
  }
  if (spec.family != Family::SUn && spec.family != Family::SUpq) {
    throw std::invalid_argument("k_squared_closed_form: no closed form for " + to_string(spec.family));
  }
  if (kappa.length() > std::min(spec.shape.p, spec.shape.q)) {
    throw std::invalid_argument("k_squared_closed_form: partition " + kappa.to_string() + " too long for shape");
  }
  // Generalized Pochhammer symbols: compact prod_i (lambda+i-1)!/(lambda+i-1-k_i)!,
  // noncompact prod_i (lambda-i+1)(lambda-i+2)...(lambda-i+k_i).
  Rational k2(1);
  for (int i = 0; i < kappa.length(); ++i) {
    if (spec.family == Family::SUn) k2 *= falling_factorial(lam + Rational(i), kappa.kappa[i]);
    else k2 *= rising_factorial(lam - Rational(i), kappa.kappa[i]);
  }
  return k2;
}

Rational k_squared_printed_form(const KernelSpec& spec, const PartitionLabel& kappa) {
  spec.validate();
  if (spec.family != Family::SUn && spec.family != Family::SUpq) {
    throw std::invalid_argument("k_squared_printed_form: only defined for SUn and SUpq");
  }
  const Rational lam = spec.lambda();
  if (!lam.is_integer()) throw std::domain_error("k_squared_printed_form: needs integer lambda");
  const long l = lam.numerator().get_si();
  const int k1 = kappa.length() ? kappa.kappa[0] : 0;
  if (l - k1 < 0) {
    if (spec.family == Family::SUn) return Rational(0);
    throw std::domain_error("k_squared_printed_form: (lambda - kappa_1)! undefined");
  }
  Rational top = spec.family == Family::SUn ? factorial(l) : factorial(l + k1 - 1);
  if (spec.family == Family::SUpq && l + k1 - 1 < 0) top = Rational(1);
  Rational den = factorial(l - k1);
  for (int i = 0; i < kappa.length(); ++i) {
    const int next = i + 1 < kappa.length() ? kappa.kappa[i + 1] : 0;
    den *= factorial(kappa.kappa[i] - next);
  }
  return top / den / capelli_norm_squared(kappa);
}

Rational capelli_norm_squared(const PartitionLabel& kappa) {
  const int m = kappa.length();
  Rational num(1), den(1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) num *= Rational(kappa.kappa[i] - kappa.kappa[j] + j - i);
    den *= factorial(kappa.kappa[i] + m - 1 - i);
  }
  return num / den;
}

BigInt hook_length_dimension(const PartitionLabel& kappa) {
  const int m = kappa.length();
  BigInt hooks = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < kappa.kappa[i]; ++j) {
      int below = 0;
      for (int r = i + 1; r < m && kappa.kappa[r] > j; ++r) ++below;
      hooks *= kappa.kappa[i] - j + below;
    }
  BigInt n_fact;
  mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(kappa.size()));
  return n_fact / hooks;
}

HighestWeight highest_weight_polynomial(const PartitionLabel& kappa, Shape shape) {
  const int m = kappa.length();
  if (m > std::min(shape.rows, shape.cols)) {
    throw std::invalid_argument("highest_weight_polynomial: partition " + kappa.to_string() + " longer than min(p,q)");
  }
  const BargmannPolynomial one = BargmannPolynomial::constant(shape, 1);
  BargmannPolynomial poly = one;
  for (int n = 1; n <= m; ++n) {
    const int next = n < m ? kappa.kappa[n] : 0;
    const int power = kappa.kappa[n - 1] - next;
    if (power == 0) continue;
    std::vector<std::vector<BargmannPolynomial>> minor(n, std::vector<BargmannPolynomial>(n, one));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) minor[i][j] = BargmannPolynomial::variable(shape, {i + 1, j + 1});
    poly = poly * leibniz_determinant(minor, one).pow(power);
  }
  return {poly, capelli_norm_squared(kappa)};
}

// ------------------------------------------------------------- Gram blocks

BasisVector BasisVector::normalized_monomial(Shape shape, const MultiIndex& m) {
  return {BargmannPolynomial::monomial(shape, m), Rational(1) / Rational(m.factorial()), monomial_label(m)};
}

std::string monomial_label(const MultiIndex& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m.entries()) {
    if (!first) os << "*";
    first = false;
    os << "z" << v.row << v.col;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<BasisVector> monomial_basis(Shape shape, const std::vector<VariableIndex>& vars, int max_degree) {
  std::vector<BasisVector> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<MultiIndex> indices;
    generate_indices(vars, 0, d, MultiIndex{}, indices);
    for (const auto& m : indices) out.push_back(BasisVector::normalized_monomial(shape, m));
  }
  return out;
}

PsdFactorization factorize_psd(const CMatrix& S, double threshold) {
  const int n = static_cast<int>(S.rows());
  PsdFactorization f;
  f.eigenvalues = Eigen::VectorXd::Zero(n);
  f.U = CMatrix::Zero(n, n);
  f.K = CMatrix::Zero(n, 0);
  f.K_bar = CMatrix::Zero(n, 0);
  if (n == 0) return f;

  const Eigen::SelfAdjointEigenSolver<CMatrix> es(S);
  if (es.info() != Eigen::Success) throw std::runtime_error("factorize_psd: eigensolver failed");
  for (int i = 0; i < n; ++i) {
    f.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    f.U.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  const double max_abs = f.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = threshold * max_abs;
  f.min_relative_eigenvalue = max_abs > 0 ? f.eigenvalues(n - 1) / max_abs : 0.0;

  for (int i = 0; i < n; ++i) {
    if (f.eigenvalues(i) < -cut) f.positive_semidefinite = false;
    if (f.eigenvalues(i) > cut) ++f.rank;
    // First nonzero component made real positive.
    for (int r = 0; r < n; ++r) {
      const Complex c = f.U(r, i);
      if (std::abs(c) > 1e-12) {
        f.U.col(i) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }
  f.K = CMatrix(n, f.rank);
  f.K_bar = CMatrix(n, f.rank);
  for (int i = 0; i < f.rank; ++i) {
    const double root = std::sqrt(f.eigenvalues(i));
    f.K.col(i) = f.U.col(i) * root;
    f.K_bar.col(i) = f.U.col(i) / root;
  }
  return f;
}

GramBlock gram_block(const KernelSpec& spec, const std::vector<BasisVector>& basis) {
  const BilinearKernelPolynomial kernel = expand_kernel(spec);
  GramBlock g;
  g.spec = spec;
  const int n = static_cast<int>(basis.size());
  g.raw.assign(n, std::vector<GaussianRational>(n));
  g.S = CMatrix::Zero(n, n);
  for (const auto& b : basis) {
    g.labels.push_back(b.label);
    g.scale_squared.push_back(b.scale_squared);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      g.raw[a][b] = pair_through_kernel(basis[a].poly, kernel, basis[b].poly);
      g.raw[b][a] = g.raw[a][b].conj();
      if (a != b && !g.raw[a][b].is_zero()) g.diagonal = false;
      const double scale = std::sqrt(basis[a].scale_squared.to_double() * basis[b].scale_squared.to_double());
      g.S(a, b) = scale * g.raw[a][b].to_complex();
      g.S(b, a) = std::conj(g.S(a, b));
    }
  g.factor = factorize_psd(g.S);
  if (g.diagonal) {
    for (int a = 0; a < n; ++a) {
      g.exact_diagonal.push_back(g.scale_squared[a] * g.raw[a][a].re());
      if (g.exact_diagonal.back().is_zero()) g.null_labels.push_back(g.labels[a]);
    }
  } else {
    const double max_abs = n ? g.S.cwiseAbs().maxCoeff() : 0.0;
    for (int a = 0; a < n; ++a)
      if (g.S.col(a).norm() <= kNullThreshold * max_abs) g.null_labels.push_back(g.labels[a]);
  }
  return g;
}

TripletBasis orthonormal_triplet_basis(const GramBlock& block) {
  const int n = block.size();
  if (block.factor.rank < n) {
    throw std::domain_error("orthonormal_triplet_basis: block has null directions; remove them first");
  }
  TripletBasis t;
  t.diagonal = block.diagonal;
  if (block.diagonal) {
    t.psi_coefficients = CMatrix::Zero(n, n);
    t.Psi_coefficients = CMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
      const Rational& k2 = block.exact_diagonal[a];
      t.psi_scale_squared.push_back(k2.inverse());
      t.Psi_scale_squared.push_back(k2);
      t.psi_coefficients(a, a) = 1.0 / std::sqrt(k2.to_double());
      t.Psi_coefficients(a, a) = std::sqrt(k2.to_double());
    }
    return t;
  }
  t.psi_coefficients = block.factor.K_bar;
  t.Psi_coefficients = block.factor.K;
  return t;
}

}  // namespace cst
