#include "cyl/polynomials.hpp"

#include <algorithm>
#include <map>

namespace cyl {

PolynomialFamily::PolynomialFamily(int r, int level) : r_(r), l_(level), shapes_(all_shapes(r, level)) {
  const int k = static_cast<int>(shapes_.size());
  delta_.assign(k, std::vector<int>(k, 0));
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) delta_[c][d] = delta_shapes(shapes_[c], shapes_[d], l_);
}

int PolynomialFamily::index_of(const Shape& s) const {
  auto it = std::lower_bound(shapes_.begin(), shapes_.end(), s);
  if (it == shapes_.end() || !(*it == s)) throw InvalidShape("shape outside the family");
  return static_cast<int>(it - shapes_.begin());
}

int PolynomialFamily::index_of(const Profile& c) const {
  if (c.rank() != r_) throw RankMismatch("profile rank differs from the family");
  if (c.level() != l_) throw LevelMismatch("profile level differs from the family");
  return index_of(shape_of_zero(c));
}

const Polynomial& PolynomialFamily::get(Table& t, Kind kind, int n, int c) {
  if (n < 0) throw IndexOutOfRange("polynomial index must be non-negative");
  const int k = static_cast<int>(shapes_.size());
  while (static_cast<int>(t.size()) <= n) {
    const int m = static_cast<int>(t.size());
    // P_= recurses on the plain P
    if (kind == Kind::Eq && m > 0) get(p_, Kind::Plain, m - 1, 0);
    const Table& prev = kind == Kind::Eq ? p_ : t;
    std::vector<Polynomial> layer(k);
    for (int x = 0; x < k; ++x) {
      if (m == 0) {
        layer[x] = Polynomial::constant(1);
        continue;
      }
      Polynomial sum;
      for (int d = 0; d < k; ++d) {
        int e = m * delta_[x][d];
        if (kind == Kind::Eq && d == x) e = m * r_;
        if (kind == Kind::Tilde) {
          if (!is_potential_pivot(d)) continue;
          e += m * r_;
        }
        sum += prev[m - 1][d].shifted(e);
      }
      layer[x] = std::move(sum);
    }
    t.push_back(std::move(layer));
  }
  return t[n][c];
}

const Polynomial& PolynomialFamily::P(int n, int c) { return get(p_, Kind::Plain, n, c); }
const Polynomial& PolynomialFamily::P_eq(int n, int c) { return get(peq_, Kind::Eq, n, c); }
const Polynomial& PolynomialFamily::P_tilde(int n, int c) { return get(ptilde_, Kind::Tilde, n, c); }

Polynomial PolynomialFamily::Q_tilde(int n, int c) {
  Polynomial sum;
  for (int m = 0; m <= n; ++m) {
    const int k = n - m;
    Polynomial term = q_binomial(n, k).dilated(r_) * P_eq(k, c);
    for (int j = 1; j <= m; ++j) {
      std::vector<Integer> geo(static_cast<std::size_t>((r_ - 1) * j + 1), 0);
      for (int i = 0; i < r_; ++i) geo[i * j] = 1;
      term = term * Polynomial(std::move(geo));
    }
    term = term.shifted(m * (m + 1) / 2);
    if (m % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

std::shared_ptr<PolynomialFamily> family(int r, int level) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<PolynomialFamily>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{r, level}];
  if (!slot) slot = std::make_shared<PolynomialFamily>(r, level);
  return slot;
}

namespace {

template <class Fn>
Polynomial with_family(const Profile& c, Fn fn) {
  auto f = family(c.rank(), c.level());
  static std::mutex mu;
  std::lock_guard lock(mu);
  return fn(*f, f->index_of(c));
}

}  // namespace

Polynomial P(int n, const Profile& c) {
  return with_family(c, [n](PolynomialFamily& f, int i) { return f.P(n, i); });
}
Polynomial P_eq(int n, const Profile& c) {
  return with_family(c, [n](PolynomialFamily& f, int i) { return f.P_eq(n, i); });
}
Polynomial P_tilde(int n, const Profile& c) {
  return with_family(c, [n](PolynomialFamily& f, int i) { return f.P_tilde(n, i); });
}
Polynomial Q_tilde(int n, const Profile& c) {
  return with_family(c, [n](PolynomialFamily& f, int i) { return f.Q_tilde(n, i); });
}

Series f_at_most(int n, const Profile& c, int N) {
  return P(n, c).to_series(N) * inv_pochhammer(c.rank(), n, N);
}

Series f_exactly(int n, const Profile& c, int N) {
  return P_eq(n, c).to_series(N) * inv_pochhammer(c.rank(), n, N);
}

BivariateSeries F_truncated(const Profile& c, int N) {
  BivariateSeries F(N, N);
  for (int n = 0; n <= N; ++n) {
    const Series t = f_exactly(n, c, N);
    for (int m = 0; m <= N; ++m) F.at(m, n) = t[m];
  }
  return F;
}

namespace {

// (1-z) q^k / (1 - z q^k) F(z q^k); for k = 0 the quotient is exactly 1
BivariateSeries shifted_term(const BivariateSeries& F, int k) {
  const int N = F.qorder(), Z = F.zorder();
  if (k == 0) return F;
  BivariateSeries g(N, Z);
  // (1-z) q^k sum_j z^j q^{kj}
  for (int j = 0; j <= Z; ++j) {
    const int e = k + k * j;
    if (e > N) break;
    g.at(e, j) += 1;
    if (j + 1 <= Z) g.at(e, j + 1) -= 1;
  }
  return g * F.substitute_zq(k);
}

}  // namespace

BivariateSeries functional_equation_rhs(const Profile& c, int N, const FunctionalEquationForm& form) {
  const int r = c.rank();
  const int s = form.self_shift < 0 ? r : form.self_shift;
  const auto shapes = all_shapes(r, c.level());
  const Shape zc = shape_of_zero(c);
  const BivariateSeries z = BivariateSeries::monomial(1, 0, N, N);
  const BivariateSeries one_minus_z = BivariateSeries::one(N, N) - z;

  const BivariateSeries Fc = F_truncated(c, N);
  // (1-z)/(1-z q^s) F_c(z q^s)
  BivariateSeries geo(N, N);
  for (int j = 0; j <= N && s * j <= N; ++j) geo.at(s * j, j) = 1;
  BivariateSeries rhs = one_minus_z * geo * Fc.substitute_zq(s);

  BivariateSeries sum(N, N);
  for (const auto& d : shapes) {
    const int D = form.delta_c_to_d ? delta_shapes(zc, d, c.level()) : delta_shapes(d, zc, c.level());
    const Profile pd = shape_to_profile(d, c.level());
    sum += shifted_term(F_truncated(pd, N), D);
  }
  rhs += z * sum;
  return rhs;
}

FunctionalEquationReport check_functional_equation(const Profile& c, int N, const FunctionalEquationForm& form) {
  const auto lhs = F_truncated(c, N);
  const auto rhs = functional_equation_rhs(c, N, form);
  FunctionalEquationReport rep;
  auto [qe, ze] = first_mismatch(lhs, rhs);
  rep.equal = qe < 0;
  rep.q_exp = qe;
  rep.z_exp = ze;
  return rep;
}

}  // namespace cyl
