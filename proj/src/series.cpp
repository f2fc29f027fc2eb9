#include "cyl/series.hpp"

#include <stdexcept>

namespace cyl {

bool is_squarefree(long d) {
  if (d == 0) return false;
  long n = d < 0 ? -d : d;
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

Quadratic::Quadratic(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d == 1 || !is_squarefree(d)) throw RingMismatch("Q(sqrt " + std::to_string(d) + ") is not a quadratic field");
}

long Quadratic::join(const Quadratic& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw RingMismatch("Q(sqrt " + std::to_string(d_) + ") vs Q(sqrt " + std::to_string(o.d_) + ")");
}

Quadratic Quadratic::conjugate() const {
  Quadratic q = *this;
  q.b_ = -q.b_;
  return q;
}

Rational Quadratic::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  d_ = join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  d_ = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  d_ = join(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
  d_ = join(o);
  Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero in quadratic field");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

Quadratic Quadratic::operator-() const {
  Quadratic q = *this;
  q.a_ = -q.a_;
  q.b_ = -q.b_;
  return q;
}

bool operator==(const Quadratic& x, const Quadratic& y) {
  if (x.b_ != 0 || y.b_ != 0) x.join(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

std::string to_string(const Quadratic& v) {
  if (v.b() == 0) return v.a().get_str();
  std::string b = v.b() == 1 ? "" : v.b() == -1 ? "-" : v.b().get_str() + "*";
  std::string root = "sqrt(" + std::to_string(v.d()) + ")";
  if (v.a() == 0) return b + root;
  std::string sign = v.b() < 0 ? "" : "+";
  return v.a().get_str() + sign + b + root;
}

CoefficientRing CoefficientRing::quadratic(long d) {
  if (d == 1 || !is_squarefree(d)) throw RingMismatch("Q(sqrt " + std::to_string(d) + ") is not a quadratic field");
  return {Kind::QuadraticField, d};
}

std::string CoefficientRing::tag() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::QuadraticField: return "Q(sqrt " + std::to_string(d) + ")";
  }
  return "?";
}

Polynomial::Polynomial(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

Polynomial Polynomial::constant(const Integer& v) { return Polynomial({v}); }

Polynomial Polynomial::monomial(int e, const Integer& v) {
  std::vector<Integer> c(e + 1, 0);
  c[e] = v;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer Polynomial::value_at(long x) const {
  Integer v = 0;
  for (int n = degree(); n >= 0; --n) v = v * x + c_[n];
  return v;
}

Integer Polynomial::min_coefficient() const {
  if (c_.empty()) return 0;
  Integer m = c_[0];
  for (const auto& v : c_) m = std::min(m, v);
  return m;
}

Polynomial Polynomial::shifted(int e) const {
  if (is_zero()) return *this;
  std::vector<Integer> c(e, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::dilated(int k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<Integer> c((c_.size() - 1) * k + 1, 0);
  for (std::size_t n = 0; n < c_.size(); ++n) c[n * k] = c_[n];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Integer> c(x.c_.size() + y.c_.size() - 1, 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> rem = c_;
  std::vector<Integer> quo(degree() - d.degree() + 1, 0);
  const Integer& lead = d.c_.back();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Integer& top = rem[k + d.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    quo[k] = top / lead;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= quo[k] * d.c_[i];
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("inexact polynomial division");
  return Polynomial(std::move(quo));
}

Series Polynomial::to_series(int order) const {
  Series s(order);
  for (int n = 0; n <= std::min(order, degree()); ++n) s[n] = c_[n];
  return s;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  std::string out;
  for (int n = 0; n <= p.degree(); ++n) {
    Integer c = p[n];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (n == 0)
      out += c.get_str();
    else {
      if (c != 1) out += c.get_str() + "*";
      out += n == 1 ? var : var + "^" + std::to_string(n);
    }
  }
  return out.empty() ? "0" : out;
}

BivariateSeries::BivariateSeries(int qorder, int zorder)
    : zorder_(zorder), c_(qorder + 1, std::vector<Integer>(zorder + 1, 0)) {
  if (qorder < 0 || zorder < 0) throw OrderMismatch("negative truncation order");
}

BivariateSeries BivariateSeries::one(int qorder, int zorder) {
  BivariateSeries b(qorder, zorder);
  b.c_[0][0] = 1;
  return b;
}

BivariateSeries BivariateSeries::from_series(const Series& s, int zorder) {
  BivariateSeries b(s.order(), zorder);
  for (int n = 0; n <= s.order(); ++n) b.c_[n][0] = s[n];
  return b;
}

BivariateSeries BivariateSeries::monomial(int zexp, int qexp, int qorder, int zorder, const Integer& v) {
  BivariateSeries b(qorder, zorder);
  if (qexp <= qorder && zexp <= zorder) b.c_[qexp][zexp] = v;
  return b;
}

int BivariateSeries::max_zdegree_at(int qexp) const {
  for (int j = zorder_; j >= 0; --j)
    if (c_[qexp][j] != 0) return j;
  return -1;
}

void BivariateSeries::check(const BivariateSeries& o) const {
  if (qorder() != o.qorder() || zorder_ != o.zorder_) throw OrderMismatch("bivariate orders differ");
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  check(o);
  for (int m = 0; m <= qorder(); ++m)
    for (int j = 0; j <= zorder_; ++j) c_[m][j] += o.c_[m][j];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  check(o);
  for (int m = 0; m <= qorder(); ++m)
    for (int j = 0; j <= zorder_; ++j) c_[m][j] -= o.c_[m][j];
  return *this;
}

BivariateSeries operator*(const BivariateSeries& x, const BivariateSeries& y) {
  x.check(y);
  BivariateSeries out(x.qorder(), x.zorder_);
  const int N = x.qorder(), Z = x.zorder_;
  for (int m1 = 0; m1 <= N; ++m1)
    for (int j1 = 0; j1 <= Z; ++j1) {
      const Integer& a = x.c_[m1][j1];
      if (a == 0) continue;
      for (int m2 = 0; m1 + m2 <= N; ++m2)
        for (int j2 = 0; j1 + j2 <= Z; ++j2) out.c_[m1 + m2][j1 + j2] += a * y.c_[m2][j2];
    }
  return out;
}

BivariateSeries BivariateSeries::substitute_zq(int k) const {
  BivariateSeries out(qorder(), zorder_);
  for (int m = 0; m <= qorder(); ++m)
    for (int j = 0; j <= zorder_; ++j) {
      const int e = m + k * j;
      if (e <= qorder()) out.c_[e][j] += c_[m][j];
    }
  return out;
}

Series BivariateSeries::at_z_one() const {
  Series s(qorder());
  for (int m = 0; m <= qorder(); ++m)
    for (const auto& v : c_[m]) s[m] += v;
  return s;
}

Series BivariateSeries::z_coefficient(int j) const {
  Series s(qorder());
  if (j > zorder_) return s;
  for (int m = 0; m <= qorder(); ++m) s[m] = c_[m][j];
  return s;
}

std::pair<int, int> first_mismatch(const BivariateSeries& x, const BivariateSeries& y) {
  x.check(y);
  for (int m = 0; m <= x.qorder(); ++m)
    for (int j = 0; j <= x.zorder_; ++j)
      if (x.c_[m][j] != y.c_[m][j]) return {m, j};
  return {-1, -1};
}

Series product_inv_factors(const std::vector<InvFactor>& factors, int N) {
  Series s = Series::one(CoefficientRing::integers(), N);
  for (const auto& f : factors) {
    if (f.m < 1 || f.t < 1) throw NonpositiveExponent("factor 1/(q^" + std::to_string(f.m) + ";q^" + std::to_string(f.t) + ")");
    for (int e = f.m; e <= N; e += f.t) s.divide_one_minus(e);
  }
  return s;
}

std::vector<InvFactor> borodin_factors(const Profile& c) {
  const int r = c.rank();
  const int t = r + c.level();
  // s(i,j) = c_i + ... + c_j, 1-based, empty when i > j
  auto s = [&](int i, int j) {
    int v = 0;
    for (int k = i; k <= j; ++k) v += c[k - 1];
    return v;
  };
  std::vector<InvFactor> f{{t, t}};
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j)
      for (int m = 1; m <= c[i - 1]; ++m) f.push_back({m + j - i + s(i + 1, j), t});
  for (int i = 2; i <= r; ++i)
    for (int j = 2; j <= i; ++j)
      for (int m = 1; m <= c[i - 1]; ++m) f.push_back({t - m + j - i - s(j, i - 1), t});
  return f;
}

Series borodin_product(const Profile& c, int N) { return product_inv_factors(borodin_factors(c), N); }

Series inv_pochhammer(int r, int n, int N) {
  Series s = Series::one(CoefficientRing::integers(), N);
  for (int k = 1; (n < 0 || k <= n) && r * k <= N; ++k) s.divide_one_minus(r * k);
  return s;
}

Series pochhammer(int r, int n, int N) {
  Series s = Series::one(CoefficientRing::integers(), N);
  for (int k = 1; (n < 0 || k <= n) && r * k <= N; ++k) s.multiply_one_minus(r * k);
  return s;
}

namespace {

Polynomial finite_pochhammer(int n) {
  Polynomial p = Polynomial::constant(1);
  for (int k = 1; k <= n; ++k) p = p * (Polynomial::constant(1) - Polynomial::monomial(k));
  return p;
}

}  // namespace

Polynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw IndexOutOfRange("q-binomial needs 0 <= k <= n");
  return finite_pochhammer(n).divide_exact(finite_pochhammer(k) * finite_pochhammer(n - k));
}

}  // namespace cyl
