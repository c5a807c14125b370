#include "cst/group.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>

namespace cst {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames = {{
    {Family::SU2, "SU2"},
    {Family::SU11, "SU11"},
    {Family::SUpq, "SUpq"},
    {Family::SUn, "SUn"},
    {Family::Sp, "Sp"},
    {Family::SpR, "SpR"},
    {Family::SO2n, "SO2n"},
    {Family::SOstar, "SOstar"},
    {Family::SOp2, "SOp2"},
    {Family::SOpplus2, "SOpplus2"},
}};

const Complex kI{0.0, 1.0};

CMatrix metric(int plus, int minus) {
  CMatrix j = CMatrix::Identity(plus + minus, plus + minus);
  j.bottomRightCorner(minus, minus) *= -1.0;
  return j;
}

double scale_of(const CMatrix& m) { return std::max(1.0, m.squaredNorm() / static_cast<double>(m.rows())); }

// For ((alpha, s1 beta), (s2 conj(beta), conj(alpha))): distance from that
// block pattern.
double block_form_residual(const CMatrix& m, int n, double top_sign, double bottom_sign) {
  const CMatrix alpha = m.topLeftCorner(n, n);
  const CMatrix beta = top_sign * m.topRightCorner(n, n);
  return (m.bottomLeftCorner(n, n) - bottom_sign * beta.conjugate()).norm() +
         (m.bottomRightCorner(n, n) - alpha.conjugate()).norm();
}

CMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> nd(0.0, scale);
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  return m;
}

CMatrix anti_hermitian(int n, std::mt19937_64& rng, double scale) {
  const CMatrix a = random_gaussian(n, n, rng, scale);
  return 0.5 * (a - a.adjoint());
}

CMatrix traceless(CMatrix m) {
  const Complex t = m.trace() / static_cast<double>(m.rows());
  m.diagonal().array() -= t;
  return m;
}

// Lie algebra element for the symplectic/orthogonal-star families:
// ((x, Y), (s conj(Y), conj(x))) with x anti-Hermitian and Y (anti)symmetric.
CMatrix doubled_algebra(int n, double bottom_sign, bool symmetric_y, std::mt19937_64& rng, double scale) {
  const CMatrix x = anti_hermitian(n, rng, scale);
  const CMatrix r = random_gaussian(n, n, rng, scale);
  const CMatrix y = symmetric_y ? CMatrix(0.5 * (r + r.transpose())) : CMatrix(0.5 * (r - r.transpose()));
  CMatrix out(2 * n, 2 * n);
  out << x, y, bottom_sign * y.conjugate(), x.conjugate();
  return out;
}

CMatrix real_antisymmetric(int n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> nd(0.0, scale);
  CMatrix a = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = nd(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

void check_pivot(Complex pivot, const char* who) {
  if (std::abs(pivot) <= kPivotThreshold) {
    throw ChartSingularity(std::string(who) + ": pivot vanishes (point outside the chart)");
  }
}

Complex bilinear(const Eigen::RowVectorXcd& a, const Eigen::RowVectorXcd& b) { return (a.array() * b.array()).sum(); }

}  // namespace

std::string to_string(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return std::string(name);
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

bool is_noncompact(Family f) {
  switch (f) {
    case Family::SU11:
    case Family::SUpq:
    case Family::SpR:
    case Family::SOstar:
    case Family::SOp2:
      return true;
    default:
      return false;
  }
}

int matrix_dimension(Family f, GroupShape s) {
  switch (f) {
    case Family::SU2:
    case Family::SU11:
      return 2;
    case Family::SUpq:
    case Family::SUn:
      return s.p + s.q;
    case Family::Sp:
    case Family::SpR:
    case Family::SO2n:
    case Family::SOstar:
      return 2 * s.p;
    case Family::SOp2:
    case Family::SOpplus2:
      return s.p + 2;
  }
  return 0;
}

Shape chart_shape(Family f, GroupShape s) {
  switch (f) {
    case Family::SU2:
    case Family::SU11:
      return {1, 1};
    case Family::SUpq:
    case Family::SUn:
      return {s.p, s.q};
    case Family::Sp:
    case Family::SpR:
    case Family::SO2n:
    case Family::SOstar:
      return {s.p, s.p};
    case Family::SOp2:
    case Family::SOpplus2:
      return {1, s.p};
  }
  return {1, 1};
}

double membership_residual(Family f, GroupShape s, const CMatrix& m) {
  const int dim = matrix_dimension(f, s);
  if (m.rows() != dim || m.cols() != dim) return std::numeric_limits<double>::infinity();
  const double det_residual = std::abs(m.determinant() - 1.0);
  const int n = s.p;
  double r = 0;
  switch (f) {
    case Family::SU2:
    case Family::SUn:
      r = (m.adjoint() * m - CMatrix::Identity(dim, dim)).norm();
      break;
    case Family::SU11:
    case Family::SUpq: {
      const CMatrix j = f == Family::SU11 ? metric(1, 1) : metric(s.p, s.q);
      r = (m.adjoint() * j * m - j).norm();
      break;
    }
    case Family::Sp:
    case Family::SpR:
    case Family::SO2n:
    case Family::SOstar: {
      // Sp: ((a,-b),(b*,a*)); SpR, SO2n: ((a,b),(b*,a*)); SOstar: ((a,b),(-b*,a*)).
      const double top = f == Family::Sp ? -1.0 : 1.0;
      const double bottom = f == Family::SOstar ? -1.0 : 1.0;
      const double metric_sign = (f == Family::Sp || f == Family::SO2n) ? 1.0 : -1.0;
      const double transpose_sign = (f == Family::Sp || f == Family::SpR) ? -1.0 : 1.0;
      const CMatrix alpha = m.topLeftCorner(n, n);
      const CMatrix beta = top * m.topRightCorner(n, n);
      r = block_form_residual(m, n, top, bottom);
      r += (alpha * alpha.adjoint() + metric_sign * beta * beta.adjoint() - CMatrix::Identity(n, n)).norm();
      r += (alpha * beta.transpose() + transpose_sign * beta * alpha.transpose()).norm();
      break;
    }
    case Family::SOpplus2:
      r = m.imag().norm() + (m * m.transpose() - CMatrix::Identity(dim, dim)).norm();
      break;
    case Family::SOp2: {
      const CMatrix j = metric(s.p, 2).reverse().eval();  // diag(-I2, I_p)
      r = m.imag().norm() + (m * j * m.transpose() - j).norm();
      break;
    }
  }
  return r + det_residual;
}

bool is_member(Family f, GroupShape s, const CMatrix& m, double tol) {
  return membership_residual(f, s, m) <= tol * scale_of(m);
}

GroupElement::GroupElement(Family f, GroupShape s, CMatrix m, double tol)
    : family_(f), shape_(s), m_(std::move(m)) {
  if (!is_member(f, s, m_, tol)) {
    throw GroupMembershipError(to_string(f) + ": matrix violates the defining relations (residual " +
                               std::to_string(membership_residual(f, s, m_)) + ")");
  }
}

GroupElement GroupElement::identity(Family f, GroupShape s) {
  const int dim = matrix_dimension(f, s);
  return {f, s, CMatrix::Identity(dim, dim)};
}

GroupElement GroupElement::random(Family f, GroupShape s, std::mt19937_64& rng, double scale) {
  const int dim = matrix_dimension(f, s);
  const int n = s.p;
  CMatrix x;
  switch (f) {
    case Family::SU2:
    case Family::SUn:
      x = traceless(anti_hermitian(dim, rng, scale));
      break;
    case Family::SU11:
    case Family::SUpq: {
      const int p = f == Family::SU11 ? 1 : s.p;
      const int q = f == Family::SU11 ? 1 : s.q;
      x = CMatrix::Zero(dim, dim);
      const CMatrix b = random_gaussian(p, q, rng, scale);
      x.topLeftCorner(p, p) = anti_hermitian(p, rng, scale);
      x.bottomRightCorner(q, q) = anti_hermitian(q, rng, scale);
      x.topRightCorner(p, q) = b;
      x.bottomLeftCorner(q, p) = b.adjoint();
      x = traceless(x);
      break;
    }
    case Family::Sp:
      x = doubled_algebra(n, -1.0, true, rng, scale);
      break;
    case Family::SpR:
      x = doubled_algebra(n, 1.0, true, rng, scale);
      break;
    case Family::SO2n:
      x = doubled_algebra(n, 1.0, false, rng, scale);
      break;
    case Family::SOstar:
      x = doubled_algebra(n, -1.0, false, rng, scale);
      break;
    case Family::SOpplus2:
      x = real_antisymmetric(dim, rng, scale);
      break;
    case Family::SOp2:
      x = real_antisymmetric(dim, rng, scale) * metric(s.p, 2).reverse().eval();
      break;
  }
  CMatrix g = x.exp();
  if (f == Family::SOp2 || f == Family::SOpplus2) g = g.real().cast<Complex>();
  return {f, s, std::move(g)};
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.family_ != b.family_ || a.shape_.p != b.shape_.p || a.shape_.q != b.shape_.q) {
    throw std::invalid_argument("GroupElement: product across different groups");
  }
  // Product of members is a member; skip revalidation tolerance drift by
  // using a looser bound scaled with the factors.
  return {a.family_, a.shape_, a.m_ * b.m_, 1e-8};
}

// ----------------------------------------------------------- factorizations

CMatrix GaussFactors::reassemble() const {
  const int p = static_cast<int>(a.rows());
  const int q = static_cast<int>(d.rows());
  const int dim = p + q;
  CMatrix l = CMatrix::Identity(dim, dim);
  CMatrix u = CMatrix::Identity(dim, dim);
  CMatrix diag = CMatrix::Zero(dim, dim);
  diag.topLeftCorner(p, p) = a;
  diag.bottomRightCorner(q, q) = d;
  if (!lower_first) {
    l.bottomLeftCorner(q, p) = lower;
    u.topRightCorner(p, q) = upper;
    return l * diag * u;
  }
  l.topRightCorner(p, q) = lower;
  u.bottomLeftCorner(q, p) = upper;
  return l * diag * u;
}

GaussFactors gauss_2x2(const CMatrix& m, bool lower_first) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("gauss_2x2: expected a 2x2 matrix");
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  GaussFactors f;
  f.lower_first = lower_first;
  f.lower = f.upper = f.a = f.d = CMatrix(1, 1);
  if (!lower_first) {
    check_pivot(a, "gauss_2x2");
    f.upper(0, 0) = b / a;
    f.lower(0, 0) = c / a;
    f.a(0, 0) = a;
    f.d(0, 0) = d - c * b / a;
  } else {
    check_pivot(d, "gauss_2x2");
    f.lower(0, 0) = b / d;
    f.upper(0, 0) = c / d;
    f.a(0, 0) = a - b * c / d;
    f.d(0, 0) = d;
  }
  return f;
}

GaussFactors gauss_block(const CMatrix& m, int p, int q) {
  if (p < 1 || q < 1 || m.rows() != p + q || m.cols() != p + q) {
    throw std::invalid_argument("gauss_block: matrix is not (p+q) x (p+q)");
  }
  const CMatrix a = m.topLeftCorner(p, p);
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= kPivotThreshold) throw ChartSingularity("gauss_block: leading block is singular");
  const Eigen::PartialPivLU<CMatrix> lu(a);
  GaussFactors f;
  f.upper = lu.solve(m.topRightCorner(p, q));
  f.lower = m.bottomLeftCorner(q, p) * lu.inverse();
  f.a = a;
  f.d = m.bottomRightCorner(q, q) - m.bottomLeftCorner(q, p) * f.upper;
  f.condition_number = sv(0) / smin;
  return f;
}

// ------------------------------------------------------------------ actions

ActionResult action_factorize(const GroupElement& g, const CMatrix& z, double sigma) {
  const Family f = g.family();
  const GroupShape s = g.shape();
  const Shape cs = chart_shape(f, s);
  if (z.rows() != cs.rows || z.cols() != cs.cols) throw std::invalid_argument("action_factorize: wrong chart shape");
  const CMatrix& m = g.matrix();
  ActionResult out;
  switch (f) {
    case Family::SU11: {
      // g = ((a, b), (b*, a*)) acting through the conjugate chart.
      const Complex a = m(0, 0), b = m(0, 1);
      out.base = std::conj(a) + b * z(0, 0);
      check_pivot(out.base, "action_factorize");
      out.moved = CMatrix::Constant(1, 1, (std::conj(b) + a * z(0, 0)) / out.base);
      out.exponent = sigma;
      return out;
    }
    case Family::SU2:
    case Family::SUn:
    case Family::SUpq: {
      const int p = cs.rows, q = cs.cols;
      const CMatrix piv = m.topLeftCorner(p, p) + z * m.bottomLeftCorner(q, p);
      out.base = piv.determinant();
      check_pivot(out.base, "action_factorize");
      out.moved = piv.partialPivLu().solve(m.topRightCorner(p, q) + z * m.bottomRightCorner(q, q));
      out.exponent = sigma;
      return out;
    }
    case Family::Sp:
    case Family::SpR:
    case Family::SO2n:
    case Family::SOstar: {
      const int n = s.p;
      const CMatrix piv = z * m.topRightCorner(n, n) + m.bottomRightCorner(n, n);
      out.base = piv.determinant();
      check_pivot(out.base, "action_factorize");
      out.moved = piv.partialPivLu().solve(z * m.topLeftCorner(n, n) + m.bottomLeftCorner(n, n));
      out.exponent = -sigma;
      return out;
    }
    case Family::SOp2:
    case Family::SOpplus2: {
      const int p = s.p;
      CMatrix mm = m;
      if (f == Family::SOp2) {
        // Conjugate into the complex orthogonal group: M' = S M S^{-1}, S = diag(i, i, 1, ...).
        Eigen::VectorXcd sd = Eigen::VectorXcd::Ones(p + 2);
        sd(0) = sd(1) = kI;
        mm = sd.asDiagonal() * m * sd.cwiseInverse().asDiagonal();
      }
      const Complex zz = (z.array() * z.array()).sum();
      Eigen::RowVector2cd head;
      head << 0.5 * (kI + zz * kI), 0.5 * (1.0 - zz);  // (e^dag - (z.z) e~) / 2
      Eigen::Vector2cd e;
      e << -kI, 1.0;
      const CMatrix A = mm.topLeftCorner(2, 2), B = mm.topRightCorner(2, p);
      const CMatrix C = mm.bottomLeftCorner(p, 2), D = mm.bottomRightCorner(p, p);
      out.base = (head * A * e)(0, 0) + (z * C * e)(0, 0);
      check_pivot(out.base, "action_factorize");
      out.moved = (head * B + z * D) / out.base;
      out.exponent = sigma;
      return out;
    }
  }
  throw std::logic_error("action_factorize: unhandled family");
}

CMatrix random_chart_point(Family f, GroupShape s, std::mt19937_64& rng, double scale) {
  const Shape cs = chart_shape(f, s);
  CMatrix z = random_gaussian(cs.rows, cs.cols, rng, scale);
  switch (f) {
    case Family::Sp:
    case Family::SpR:
      return 0.5 * (z + z.transpose());
    case Family::SO2n:
    case Family::SOstar:
      return 0.5 * (z - z.transpose());
    default:
      return z;
  }
}

// ------------------------------------------------------------------ Iwasawa

IwasawaFactors iwasawa_su3(const CMatrix& g) {
  if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("iwasawa_su3: expected a 3x3 matrix");
  IwasawaFactors out;
  out.Z = CMatrix::Zero(3, 3);
  out.omega = CMatrix::Zero(3, 3);

  // Bilinear (unconjugated) Gram-Schmidt on the rows.
  const Complex n1 = bilinear(g.row(0), g.row(0));
  check_pivot(n1, "iwasawa_su3");
  const Complex z11 = std::sqrt(n1);
  out.Z(0, 0) = z11;
  out.omega.row(0) = g.row(0) / z11;

  const Complex z21 = bilinear(g.row(1), out.omega.row(0));
  const Eigen::RowVectorXcd v2 = g.row(1) - z21 * out.omega.row(0);
  // z22^2 = [(g1.g1)(g2.g2) - (g1.g2)^2] / (g1.g1)
  const Complex minor = n1 * bilinear(g.row(1), g.row(1)) - std::pow(bilinear(g.row(0), g.row(1)), 2);
  check_pivot(minor, "iwasawa_su3");
  Complex z22 = std::sqrt(minor / n1);
  if (z22.real() < 0 || (z22.real() == 0 && z22.imag() < 0)) z22 = -z22;
  out.Z(1, 0) = z21;
  out.Z(1, 1) = z22;
  out.omega.row(1) = v2 / z22;

  const Complex z31 = bilinear(g.row(2), out.omega.row(0));
  const Complex z32 = bilinear(g.row(2), out.omega.row(1));
  const Eigen::RowVectorXcd v3 = g.row(2) - z31 * out.omega.row(0) - z32 * out.omega.row(1);
  // det(omega) = 1 fixes the last diagonal entry, sign included.
  const Complex z33 = g.determinant() / (z11 * z22);
  check_pivot(z33, "iwasawa_su3");
  out.Z(2, 0) = z31;
  out.Z(2, 1) = z32;
  out.Z(2, 2) = z33;
  out.omega.row(2) = v3 / z33;
  return out;
}

}  // namespace cst
