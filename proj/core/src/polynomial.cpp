#include "cst/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cst {

// -------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::initializer_list<Entry> entries) {
  for (const auto& [v, e] : entries) set(v, exponent(v) + e);
}

MultiIndex MultiIndex::single(VariableIndex v, int power) {
  MultiIndex m;
  m.set(v, power);
  return m;
}

int MultiIndex::exponent(VariableIndex v) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, VariableIndex x) { return e.first < x; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

void MultiIndex::set(VariableIndex v, int e) {
  if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& x, VariableIndex y) { return x.first < y; });
  if (it != entries_.end() && it->first == v) {
    degree_ += e - it->second;
    if (e == 0) entries_.erase(it);
    else it->second = e;
    return;
  }
  if (e == 0) return;
  entries_.insert(it, {v, e});
  degree_ += e;
}

BigInt MultiIndex::factorial() const {
  BigInt out = 1;
  for (const auto& [v, e] : entries_) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
    out *= f;
  }
  return out;
}

MultiIndex MultiIndex::operator*(const MultiIndex& o) const {
  MultiIndex out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + o.degree_;
  return out;
}

bool MultiIndex::shifted(VariableIndex v, int delta, MultiIndex& out) const {
  const int e = exponent(v) + delta;
  if (e < 0) return false;
  out = *this;
  out.set(v, e);
  return true;
}

// ------------------------------------------------------ BargmannPolynomial

void BargmannPolynomial::check_variable(VariableIndex v) const {
  if (v.row < 1 || v.row > shape_.rows || v.col < 1 || v.col > shape_.cols) {
    throw std::out_of_range("BargmannPolynomial: variable (" + std::to_string(v.row) + "," +
                            std::to_string(v.col) + ") outside shape");
  }
}

BargmannPolynomial BargmannPolynomial::constant(Shape shape, const GaussianRational& c) {
  BargmannPolynomial p(shape);
  p.add_term(MultiIndex{}, c);
  return p;
}

BargmannPolynomial BargmannPolynomial::variable(Shape shape, VariableIndex v) {
  return monomial(shape, MultiIndex::single(v), 1);
}

BargmannPolynomial BargmannPolynomial::monomial(Shape shape, const MultiIndex& m, const GaussianRational& c) {
  BargmannPolynomial p(shape);
  p.add_term(m, c);
  return p;
}

BargmannPolynomial BargmannPolynomial::power(int power, const GaussianRational& c) {
  if (power < 0) throw std::invalid_argument("BargmannPolynomial::power: negative exponent");
  return monomial(Shape{1, 1}, MultiIndex::single({1, 1}, power), c);
}

int BargmannPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussianRational BargmannPolynomial::coefficient(const MultiIndex& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void BargmannPolynomial::add_term(const MultiIndex& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  for (const auto& [v, e] : m.entries()) check_variable(v);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BargmannPolynomial BargmannPolynomial::derivative(VariableIndex v) const {
  check_variable(v);
  BargmannPolynomial out(shape_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    MultiIndex lowered;
    m.shifted(v, -1, lowered);
    out.add_term(lowered, c * GaussianRational(e));
  }
  return out;
}

BargmannPolynomial BargmannPolynomial::conj_coefficients() const {
  BargmannPolynomial out(shape_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

std::complex<double> BargmannPolynomial::evaluate(
    const std::function<std::complex<double>(VariableIndex)>& value) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (const auto& [v, e] : m.entries()) t *= std::pow(value(v), e);
    sum += t;
  }
  return sum;
}

BargmannPolynomial& BargmannPolynomial::operator+=(const BargmannPolynomial& o) {
  if (shape_ != o.shape_) throw std::invalid_argument("BargmannPolynomial: shape mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BargmannPolynomial& BargmannPolynomial::operator-=(const BargmannPolynomial& o) {
  if (shape_ != o.shape_) throw std::invalid_argument("BargmannPolynomial: shape mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BargmannPolynomial& BargmannPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BargmannPolynomial operator*(const BargmannPolynomial& a, const BargmannPolynomial& b) {
  if (a.shape_ != b.shape_) throw std::invalid_argument("BargmannPolynomial: shape mismatch");
  BargmannPolynomial out(a.shape_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

BargmannPolynomial BargmannPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("BargmannPolynomial::pow: negative exponent");
  BargmannPolynomial out = constant(shape_, 1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string BargmannPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& [v, e] : m.entries()) {
      os << "*z" << v.row << v.col;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ------------------------------------------------ BilinearKernelPolynomial

BilinearKernelPolynomial::BilinearKernelPolynomial(Shape shape, int degree_cutoff)
    : shape_(shape), cutoff_(degree_cutoff) {
  if (degree_cutoff < 0) throw std::invalid_argument("BilinearKernelPolynomial: negative cutoff");
}

BilinearKernelPolynomial BilinearKernelPolynomial::one(Shape shape, int degree_cutoff) {
  BilinearKernelPolynomial k(shape, degree_cutoff);
  k.add_term({}, {}, 1);
  return k;
}

GaussianRational BilinearKernelPolynomial::coefficient(const MultiIndex& z, const MultiIndex& xs) const {
  const auto it = terms_.find({z, xs});
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void BilinearKernelPolynomial::add_term(const MultiIndex& z, const MultiIndex& xs, const GaussianRational& c) {
  if (c.is_zero() || z.degree() > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace({z, xs}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BilinearKernelPolynomial::is_hermitian() const {
  for (const auto& [key, c] : terms_) {
    if (key.second.degree() > cutoff_) continue;
    if (coefficient(key.second, key.first) != c.conj()) return false;
  }
  return true;
}

BilinearKernelPolynomial& BilinearKernelPolynomial::operator+=(const BilinearKernelPolynomial& o) {
  if (shape_ != o.shape_) throw std::invalid_argument("BilinearKernelPolynomial: shape mismatch");
  cutoff_ = std::min(cutoff_, o.cutoff_);
  std::erase_if(terms_, [this](const auto& kv) { return kv.first.first.degree() > cutoff_; });
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BilinearKernelPolynomial& BilinearKernelPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

BilinearKernelPolynomial operator*(const BilinearKernelPolynomial& a, const BilinearKernelPolynomial& b) {
  if (a.shape_ != b.shape_) throw std::invalid_argument("BilinearKernelPolynomial: shape mismatch");
  BilinearKernelPolynomial out(a.shape_, std::min(a.cutoff_, b.cutoff_));
  for (const auto& [ka, ca] : a.terms_) {
    if (ka.first.degree() > out.cutoff_) continue;
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.first.degree() + kb.first.degree() > out.cutoff_) continue;
      out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    }
  }
  return out;
}

// ------------------------------------------------------------------ pairing

GaussianRational bargmann_pair(const BargmannPolynomial& bra, const BargmannPolynomial& ket) {
  if (bra.shape() != ket.shape()) throw std::invalid_argument("bargmann_pair: shape mismatch");
  GaussianRational sum;
  const bool bra_smaller = bra.terms().size() <= ket.terms().size();
  const auto& small = bra_smaller ? bra.terms() : ket.terms();
  const auto& large = bra_smaller ? ket.terms() : bra.terms();
  for (const auto& [m, c] : small) {
    const auto it = large.find(m);
    if (it == large.end()) continue;
    const GaussianRational& b = bra_smaller ? c : it->second;
    const GaussianRational& k = bra_smaller ? it->second : c;
    sum += b.conj() * k * GaussianRational(Rational(m.factorial()));
  }
  return sum;
}

namespace {

void check_cutoff(const BargmannPolynomial& p, const BilinearKernelPolynomial& kernel, const char* who) {
  if (p.shape() != kernel.shape()) throw std::invalid_argument(std::string(who) + ": shape mismatch");
  if (p.degree() > kernel.degree_cutoff()) {
    throw DegreeOverflow(std::string(who) + ": polynomial degree " + std::to_string(p.degree()) +
                         " exceeds kernel cutoff " + std::to_string(kernel.degree_cutoff()));
  }
}

}  // namespace

GaussianRational pair_through_kernel(const BargmannPolynomial& bra, const BilinearKernelPolynomial& kernel,
                                     const BargmannPolynomial& ket) {
  check_cutoff(bra, kernel, "pair_through_kernel");
  check_cutoff(ket, kernel, "pair_through_kernel");
  GaussianRational sum;
  const auto weight = [](const MultiIndex& m) { return GaussianRational(Rational(m.factorial())); };
  if (bra.terms().size() * ket.terms().size() < kernel.terms().size()) {
    for (const auto& [mb, cb] : bra.terms())
      for (const auto& [mk, ck] : ket.terms()) {
        const GaussianRational s = kernel.coefficient(mb, mk);
        if (!s.is_zero()) sum += cb.conj() * weight(mb) * s * ck * weight(mk);
      }
    return sum;
  }
  for (const auto& [key, s] : kernel.terms()) {
    const GaussianRational cb = bra.coefficient(key.first);
    if (cb.is_zero()) continue;
    const GaussianRational ck = ket.coefficient(key.second);
    if (ck.is_zero()) continue;
    sum += cb.conj() * weight(key.first) * s * ck * weight(key.second);
  }
  return sum;
}

BargmannPolynomial apply_kernel(const BilinearKernelPolynomial& kernel, const BargmannPolynomial& ket) {
  check_cutoff(ket, kernel, "apply_kernel");
  BargmannPolynomial out(kernel.shape());
  for (const auto& [key, s] : kernel.terms()) {
    const GaussianRational ck = ket.coefficient(key.second);
    if (ck.is_zero()) continue;
    out.add_term(key.first, s * ck * GaussianRational(Rational(key.second.factorial())));
  }
  return out;
}

// ---------------------------------------------------- DifferentialOperator

DifferentialOperator& DifferentialOperator::multiply_by(const BargmannPolynomial& p) {
  multiplier_ += p;
  return *this;
}

DifferentialOperator& DifferentialOperator::differentiate(const BargmannPolynomial& coefficient, VariableIndex v) {
  if (coefficient.shape() != shape()) throw std::invalid_argument("DifferentialOperator: shape mismatch");
  derivative_terms_.emplace_back(coefficient, v);
  return *this;
}

BargmannPolynomial DifferentialOperator::apply(const BargmannPolynomial& f) const {
  if (f.shape() != shape()) throw std::invalid_argument("DifferentialOperator: shape mismatch");
  BargmannPolynomial out = multiplier_ * f;
  for (const auto& [coef, v] : derivative_terms_) out += coef * f.derivative(v);
  return out;
}

BargmannPolynomial differential_operator_apply(const DifferentialOperator& op, const BargmannPolynomial& f) {
  return op.apply(f);
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(const Rational& constant) { add_term(0, 0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(int c_power, int s_power, const Rational& coef) {
  LaurentPolynomial p;
  p.add_term(c_power, s_power, coef);
  return p;
}

Rational LaurentPolynomial::coefficient(int c_power, int s_power) const {
  const auto it = terms_.find({c_power, s_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(int c_power, int s_power, const Rational& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({c_power, s_power}, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

double LaurentPolynomial::evaluate(double c, double s) const {
  double sum = 0;
  for (const auto& [e, coef] : terms_) sum += coef.to_double() * std::pow(c, e.first) * std::pow(s, e.second);
  return sum;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("LaurentPolynomial::pow: negative exponent");
  LaurentPolynomial out(Rational(1));
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, coef] : o.terms_) add_term(e.first, e.second, coef);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= r;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coef] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coef << ")*c^" << e.first << "*s^" << e.second;
  }
  return os.str();
}

}  // namespace cst
