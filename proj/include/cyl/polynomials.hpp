#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "cyl/core.hpp"
#include "cyl/series.hpp"

namespace cyl {

// P, P_=, P~ and Q~ for every shape of one (rank, level) family. Layers in n
// are built on demand and kept; not safe for concurrent mutation.
class PolynomialFamily {
 public:
  PolynomialFamily(int r, int level);

  int rank() const { return r_; }
  int level() const { return l_; }
  const std::vector<Shape>& shapes() const { return shapes_; }
  int index_of(const Shape& s) const;
  int index_of(const Profile& c) const;
  bool is_potential_pivot(int d) const { return shapes_[d].first() >= 2; }
  // Delta(shape c, shape d)
  int delta(int c, int d) const { return delta_[c][d]; }

  const Polynomial& P(int n, int c);
  const Polynomial& P_eq(int n, int c);
  const Polynomial& P_tilde(int n, int c);
  Polynomial Q_tilde(int n, int c);

 private:
  using Table = std::vector<std::vector<Polynomial>>;
  enum class Kind { Plain, Eq, Tilde };
  const Polynomial& get(Table& t, Kind kind, int n, int c);

  int r_, l_;
  std::vector<Shape> shapes_;
  std::vector<std::vector<int>> delta_;
  Table p_, peq_, ptilde_;
};

// shared, lazily built family for (r, level)
std::shared_ptr<PolynomialFamily> family(int r, int level);

Polynomial P(int n, const Profile& c);
Polynomial P_eq(int n, const Profile& c);
Polynomial P_tilde(int n, const Profile& c);
Polynomial Q_tilde(int n, const Profile& c);

// sum_n P_{=n,c} z^n / (q^r;q^r)_n, truncated at q^N and z^N
BivariateSeries F_truncated(const Profile& c, int N);
// f_{n,c} = P_{n,c}/(q^r;q^r)_n and f_{=n,c} = P_{=n,c}/(q^r;q^r)_n
Series f_at_most(int n, const Profile& c, int N);
Series f_exactly(int n, const Profile& c, int N);

// The functional equation
//   F_c(z) = (1-z)/(1-z q^s) F_c(z q^s) + z sum_d (1-z) q^D/(1-z q^D) F_d(z q^D)
// with s = self_shift and D = Delta(c,d) or Delta(d,c).
struct FunctionalEquationForm {
  int self_shift = -1;  // -1: the rank r
  bool delta_c_to_d = true;
};

struct FunctionalEquationReport {
  bool equal = false;
  int q_exp = -1;  // first mismatch
  int z_exp = -1;
};

BivariateSeries functional_equation_rhs(const Profile& c, int N, const FunctionalEquationForm& form = {});
FunctionalEquationReport check_functional_equation(const Profile& c, int N, const FunctionalEquationForm& form = {});

}  // namespace cyl
