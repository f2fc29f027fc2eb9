#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyl/core.hpp"

namespace cyl {

using Integer = mpz_class;
using Rational = mpq_class;

struct RingMismatch : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct NonpositiveExponent : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// a + b*sqrt(d). d == 0 marks a plain rational that adapts to any field.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(long v) : a_(v) {}  // NOLINT
  Quadratic(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Quadratic(Rational a, Rational b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  Quadratic conjugate() const;
  Rational norm() const;

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o);
  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  Quadratic operator-() const;
  friend bool operator==(const Quadratic& x, const Quadratic& y);

 private:
  long join(const Quadratic& o) const;

  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 0;
};

bool is_squarefree(long d);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const Quadratic& v);

struct CoefficientRing {
  enum class Kind { Integers, Rationals, QuadraticField };
  Kind kind = Kind::Integers;
  long d = 0;

  static CoefficientRing integers() { return {}; }
  static CoefficientRing rationals() { return {Kind::Rationals, 0}; }
  static CoefficientRing quadratic(long d);

  std::string tag() const;
  bool operator==(const CoefficientRing&) const = default;
};

template <class R>
CoefficientRing default_ring();
template <>
inline CoefficientRing default_ring<Integer>() { return CoefficientRing::integers(); }
template <>
inline CoefficientRing default_ring<Rational>() { return CoefficientRing::rationals(); }

template <class R>
R from_integer(const Integer& v) {
  if constexpr (std::is_same_v<R, Quadratic>)
    return Quadratic(Rational(v));
  else
    return R(v);
}

template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries(CoefficientRing ring, int order)
      : ring_(ring), c_(static_cast<std::size_t>(std::max(order, 0)) + 1, R(0)) {
    if (order < 0) throw OrderMismatch("negative truncation order");
  }
  explicit TruncatedSeries(int order) requires(!std::is_same_v<R, Quadratic>)
      : TruncatedSeries(default_ring<R>(), order) {}

  static TruncatedSeries one(CoefficientRing ring, int order) {
    TruncatedSeries s(ring, order);
    s.c_[0] = R(1);
    return s;
  }

  const CoefficientRing& ring() const { return ring_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int n) const { return c_[n]; }
  R& operator[](int n) { return c_[n]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (int n = 0; n <= order(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
  friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    x.check(y);
    TruncatedSeries out(x.ring_, x.order());
    const int N = x.order();
    for (int i = 0; i <= N; ++i) {
      if (x.c_[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j) out.c_[i + j] += x.c_[i] * y.c_[j];
    }
    return out;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries out(ring_, order());
    for (int n = 0; n <= order(); ++n) out.c_[n] = -c_[n];
    return out;
  }
  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.ring_ == y.ring_ && x.c_ == y.c_;
  }

  // multiply in place by 1/(1 - q^e)
  void divide_one_minus(int e) {
    if (e < 1) throw NonpositiveExponent("geometric factor needs exponent >= 1");
    for (int n = e; n <= order(); ++n) c_[n] += c_[n - e];
  }
  // multiply in place by (1 - q^e)
  void multiply_one_minus(int e) {
    if (e < 1) throw NonpositiveExponent("geometric factor needs exponent >= 1");
    for (int n = order(); n >= e; --n) c_[n] -= c_[n - e];
  }

 private:
  void check(const TruncatedSeries& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("series over " + ring_.tag() + " and " + o.ring_.tag());
    if (order() != o.order()) throw OrderMismatch("series orders differ");
  }

  CoefficientRing ring_;
  std::vector<R> c_;
};

template <class R>
TruncatedSeries<R> scale(TruncatedSeries<R> s, const R& k) {
  for (int n = 0; n <= s.order(); ++n) s[n] *= k;
  return s;
}

template <class R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& s, int order) {
  TruncatedSeries<R> out(s.ring(), order);
  for (int n = 0; n <= std::min(order, s.order()); ++n) out[n] = s[n];
  return out;
}

// embed an integer series into another ring
template <class R>
TruncatedSeries<R> embed(const TruncatedSeries<Integer>& s, CoefficientRing ring) {
  TruncatedSeries<R> out(ring, s.order());
  for (int n = 0; n <= s.order(); ++n) out[n] = from_integer<R>(s[n]);
  return out;
}

// first index where two series differ, -1 if equal up to the smaller order
template <class R>
int first_mismatch(const TruncatedSeries<R>& x, const TruncatedSeries<R>& y) {
  const int N = std::min(x.order(), y.order());
  for (int n = 0; n <= N; ++n)
    if (!(x[n] == y[n])) return n;
  return -1;
}

template <class R>
std::string to_string(const TruncatedSeries<R>& s, bool with_order = true) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n] == 0) continue;
    std::string c = to_string(s[n]);
    bool neg = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
    if (neg) c.erase(0, 1);
    if (c.find_first_of("+-", 0) != std::string::npos) c = "(" + c + ")";
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (n == 0)
      out += c;
    else {
      if (c != "1") out += c + "*";
      out += n == 1 ? "q" : "q^" + std::to_string(n);
    }
  }
  if (out.empty()) out = "0";
  if (with_order) out += " + O(q^" + std::to_string(s.order() + 1) + ")";
  return out;
}

using Series = TruncatedSeries<Integer>;

// Dense polynomial with integer coefficients, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> c);
  static Polynomial constant(const Integer& v);
  static Polynomial monomial(int e, const Integer& v = 1);

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer operator[](int n) const { return n < static_cast<int>(c_.size()) ? c_[n] : Integer(0); }
  Integer value_at(long x) const;
  Integer min_coefficient() const;
  Polynomial shifted(int e) const;  // times q^e
  Polynomial dilated(int k) const;  // q -> q^k

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  bool operator==(const Polynomial&) const = default;

  // exact division; throws std::domain_error on a nonzero remainder
  Polynomial divide_exact(const Polynomial& d) const;
  Series to_series(int order) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

std::string to_string(const Polynomial& p, const std::string& var = "q");

// Bivariate series in z, q truncated at q^qorder and z^zorder.
class BivariateSeries {
 public:
  BivariateSeries(int qorder, int zorder);
  static BivariateSeries one(int qorder, int zorder);
  static BivariateSeries from_series(const Series& s, int zorder);
  static BivariateSeries monomial(int zexp, int qexp, int qorder, int zorder, const Integer& v = 1);

  int qorder() const { return static_cast<int>(c_.size()) - 1; }
  int zorder() const { return zorder_; }
  const Integer& at(int qexp, int zexp) const { return c_[qexp][zexp]; }
  Integer& at(int qexp, int zexp) { return c_[qexp][zexp]; }
  int max_zdegree_at(int qexp) const;

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  friend BivariateSeries operator+(BivariateSeries x, const BivariateSeries& y) { return x += y; }
  friend BivariateSeries operator-(BivariateSeries x, const BivariateSeries& y) { return x -= y; }
  friend BivariateSeries operator*(const BivariateSeries& x, const BivariateSeries& y);
  bool operator==(const BivariateSeries&) const = default;

  BivariateSeries substitute_zq(int k) const;  // z -> z q^k
  Series at_z_one() const;
  Series z_coefficient(int j) const;
  // first (q, z) exponent pair where two bivariate series differ, {-1,-1} if none
  friend std::pair<int, int> first_mismatch(const BivariateSeries& x, const BivariateSeries& y);

 private:
  void check(const BivariateSeries& o) const;
  int zorder_;
  std::vector<std::vector<Integer>> c_;
};

struct InvFactor {
  int m;  // base exponent
  int t;  // modulus
};

Series product_inv_factors(const std::vector<InvFactor>& factors, int N);
std::vector<InvFactor> borodin_factors(const Profile& c);
Series borodin_product(const Profile& c, int N);
// 1/(q;q)_n and 1/(q^r;q^r)_n, n may be "infinite" (pass -1)
Series inv_pochhammer(int r, int n, int N);
Series pochhammer(int r, int n, int N);
Polynomial q_binomial(int n, int k);

template <class R>
R ring_power(const R& b, int n) {
  R out(1);
  for (int i = 0; i < n; ++i) out *= b;
  return out;
}

// coeff * q^{n(n+1)/2} / (q;q)_n
template <class R>
TruncatedSeries<R> distinct_term(const R& coeff, int n, CoefficientRing ring, int N) {
  TruncatedSeries<R> t(ring, N);
  const int e = n * (n + 1) / 2;
  if (e > N) return t;
  t[e] = coeff;
  for (int j = 1; j <= n; ++j) t.divide_one_minus(j);
  return t;
}

// n^k beta^n q^{n(n+1)/2} / (q;q)_n
template <class R>
TruncatedSeries<R> euler_term(const R& beta, int k, int n, CoefficientRing ring, int N) {
  Integer nk = 1;
  for (int i = 0; i < k; ++i) nk *= n;
  return distinct_term<R>(R(ring_power(beta, n) * from_integer<R>(nk)), n, ring, N);
}

template <class R>
struct TermSource {
  std::function<TruncatedSeries<R>(int n, int N)> term;
  // largest n whose term can reach q^N
  std::function<int(int N)> last_index;
};

template <class R>
TermSource<R> euler_terms(const R& beta, int k, CoefficientRing ring) {
  return {[beta, k, ring](int n, int N) { return euler_term(beta, k, n, ring, N); },
          [](int N) {
            int n = 0;
            while ((n + 1) * (n + 2) / 2 <= N) ++n;
            return n;
          }};
}

template <class R>
TruncatedSeries<R> progression_filter(const TermSource<R>& src, int r, int s, CoefficientRing ring,
                                      int N) {
  if (r < 1 || s < 0 || s >= r) throw IndexOutOfRange("progression filter needs 0 <= s < r");
  TruncatedSeries<R> out(ring, N);
  const int last = src.last_index(N);
  for (int n = s; n <= last; n += r) out += src.term(n, N);
  return out;
}

template <class R>
TruncatedSeries<R> lambert_zddz(const R& beta, int k, CoefficientRing ring, int N) {
  if (k < 0) throw IndexOutOfRange("derivative order must be non-negative");
  return progression_filter(euler_terms(beta, k, ring), 1, 0, ring, N);
}

// (-beta q; q)_inf as a product
template <class R>
TruncatedSeries<R> euler_distinct_product(const R& beta, CoefficientRing ring, int N) {
  auto out = TruncatedSeries<R>::one(ring, N);
  for (int k = 1; k <= N; ++k)
    for (int n = N; n >= k; --n) out[n] += beta * out[n - k];
  return out;
}

template <class R>
TruncatedSeries<R> euler_distinct(const R& beta, CoefficientRing ring, int N) {
  auto prod = euler_distinct_product(beta, ring, N);
  auto sum = lambert_zddz(beta, 0, ring, N);
  if (!(prod == sum)) throw std::logic_error("Euler product and sum disagree");
  return prod;
}

}  // namespace cyl
