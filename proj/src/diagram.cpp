#include "cyl/diagram.hpp"

#include <algorithm>

#include "cyl/io.hpp"
#include "cyl/slices.hpp"

namespace cyl {

int ShapeTransitionGraph::index_of(const Shape& s) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  if (it == nodes.end() || !(*it == s)) return -1;
  return static_cast<int>(it - nodes.begin());
}

std::size_t ShapeTransitionGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& o : out) n += o.size();
  return n;
}

ShapeTransitionGraph build_graph(int r, int level) {
  ShapeTransitionGraph g;
  g.rank = r;
  g.level = level;
  g.nodes = all_shapes(r, level);
  // a slice of every shape exists in profile (level,0,...,0), whose offsets vanish
  std::vector<int> c(r, 0);
  c[0] = level;
  const Profile host(c);
  for (const auto& s : g.nodes) {
    std::vector<int> l(r, level);
    for (int j = 0; j < r - 1; ++j) l[j] += s[j];
    std::vector<int> targets;
    for (const auto& t : successors(Slice(host, l))) targets.push_back(g.index_of(t.shape()));
    g.out.push_back(std::move(targets));
  }
  return g;
}

ShapeTransitionGraph build_graph(const Profile& c) {
  auto g = build_graph(c.rank(), c.level());
  g.marked = g.index_of(shape_of_zero(c));
  return g;
}

std::string to_adjacency_list(const ShapeTransitionGraph& g) {
  std::string out;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    out += to_string(g.nodes[k]);
    if (g.marked && *g.marked == static_cast<int>(k)) out += "*";
    out += " ->";
    for (int t : g.out[k]) out += " " + to_string(g.nodes[t]);
    out += "\n";
  }
  return out;
}

GroupedOrder grouped_order(int r, int level) {
  GroupedOrder g;
  const auto shapes = all_shapes(r, level);
  for (int cls = 0; cls < r; ++cls) {
    int size = 0;
    for (const auto& s : shapes)
      if (s.weight() % r == cls) {
        g.shapes.push_back(s);
        ++size;
      }
    g.block_sizes.push_back(size);
  }
  return g;
}

Matrix adjacency_matrix(const ShapeTransitionGraph& g, const std::vector<Shape>& order) {
  const std::size_t n = order.size();
  Matrix A(n, std::vector<Integer>(n, 0));
  std::vector<int> pos(g.nodes.size(), -1);
  for (std::size_t k = 0; k < n; ++k) pos[g.index_of(order[k])] = static_cast<int>(k);
  for (std::size_t s = 0; s < g.nodes.size(); ++s)
    for (int t : g.out[s]) A[pos[t]][pos[s]] += 1;
  return A;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size(), m = y.empty() ? 0 : y[0].size(), k = y.size();
  Matrix out(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][l] * y[l][j];
    }
  return out;
}

Matrix matrix_power(const Matrix& A, int k) {
  const std::size_t n = A.size();
  Matrix out(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  for (int e = 0; e < k; ++e) out = multiply(out, A);
  return out;
}

Matrix transpose(const Matrix& A) {
  const std::size_t n = A.size(), m = A.empty() ? 0 : A[0].size();
  Matrix out(m, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = A[i][j];
  return out;
}

std::vector<Matrix> diagonal_blocks(const Matrix& M, const std::vector<int>& sizes) {
  std::vector<Matrix> out;
  int start = 0;
  for (int s : sizes) {
    Matrix B(s, std::vector<Integer>(s, 0));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) B[i][j] = M[start + i][start + j];
    out.push_back(std::move(B));
    start += s;
  }
  return out;
}

bool is_block_diagonal(const Matrix& M, const std::vector<int>& sizes) {
  std::vector<int> block;
  for (std::size_t b = 0; b < sizes.size(); ++b) block.insert(block.end(), sizes[b], static_cast<int>(b));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (block[i] != block[j] && M[i][j] != 0) return false;
  return true;
}

// Faddeev-LeVerrier; every division is exact over the integers
Polynomial char_poly(const Matrix& A) {
  const int n = static_cast<int>(A.size());
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  Matrix M(n, std::vector<Integer>(n, 0));
  for (int k = 1; k <= n; ++k) {
    M = multiply(A, M);
    for (int i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
    Matrix AM = multiply(A, M);
    Integer tr = 0;
    for (int i = 0; i < n; ++i) tr += AM[i][i];
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return Polynomial(std::move(c));
}

Polynomial strip_x_power(const Polynomial& p) {
  int k = 0;
  while (k <= p.degree() && p[k] == 0) ++k;
  if (k > p.degree()) return p;
  return Polynomial(std::vector<Integer>(p.coeffs().begin() + k, p.coeffs().end()));
}

PathCountTable path_counts(const Profile& c, int N) {
  PathCountTable t{c, N, {}, {}};
  std::map<std::vector<int>, Integer> layer{{std::vector<int>(c.rank(), 0), 1}};
  for (int n = 0; n <= N; ++n) {
    Integer total = 0;
    std::map<Shape, Integer> shapes;
    std::map<std::vector<int>, Integer> next;
    for (const auto& [l, count] : layer) {
      Slice s(c, l);
      total += count;
      shapes[s.shape()] += count;
      if (n < N)
        for (const auto& succ : successors(s)) next[succ.lengths()] += count;
    }
    t.a.push_back(total);
    t.by_shape.push_back(std::move(shapes));
    layer = std::move(next);
  }
  return t;
}

std::vector<Integer> residue_class(const std::vector<Integer>& values, int r, int s) {
  std::vector<Integer> out;
  for (std::size_t n = s; n < values.size(); n += r) out.push_back(values[n]);
  return out;
}

bool satisfies(const LinearRecurrence& rec, const std::vector<Integer>& values) {
  for (std::size_t n = rec.exceptions + rec.order; n < values.size(); ++n) {
    Rational sum = 0;
    for (int i = 0; i <= rec.order; ++i) sum += rec.coeffs[i] * Rational(values[n - i]);
    if (sum != 0) return false;
  }
  return true;
}

LinearRecurrence fit_recurrence(const std::vector<Integer>& values, const FitOptions& opts) {
  const int len = static_cast<int>(values.size());
  for (int v = 0; v <= opts.max_order; ++v)
    for (int e = 0; e <= opts.max_exceptions; ++e) {
      if (len - e < 3 * v + 2) break;
      std::vector<std::vector<Rational>> A;
      std::vector<Rational> b;
      for (int n = e + v; n < len; ++n) {
        std::vector<Rational> row(v);
        for (int i = 1; i <= v; ++i) row[i - 1] = values[n - i];
        A.push_back(std::move(row));
        b.push_back(-Rational(values[n]));
      }
      auto x = solve_linear(std::move(A), std::move(b));
      if (!x) continue;
      LinearRecurrence rec;
      rec.order = v;
      rec.exceptions = e;
      rec.coeffs.push_back(1);
      rec.coeffs.insert(rec.coeffs.end(), x->begin(), x->end());
      return rec;
    }
  throw NoRecurrenceFound("no recurrence of order <= " + std::to_string(opts.max_order));
}

std::string to_string(const LinearRecurrence& rec) {
  std::string out = "b_n";
  for (int i = 1; i <= rec.order; ++i) {
    const Rational& a = rec.coeffs[i];
    if (a == 0) continue;
    out += a < 0 ? " - " : " + ";
    Rational m = abs(a);
    if (m != 1) out += m.get_str() + "*";
    out += "b_{n-" + std::to_string(i) + "}";
  }
  out += " = 0 for n >= " + std::to_string(rec.exceptions + rec.order);
  return out;
}

Series distinct_gf(const Profile& c, int N) {
  int nmax = 0;
  while ((nmax + 1) * (nmax + 2) / 2 <= N) ++nmax;
  const auto t = path_counts(c, nmax);
  const auto ring = CoefficientRing::integers();
  Series s(N);
  for (int n = 0; n <= nmax; ++n) s += distinct_term(t.a[n], n, ring, N);
  return s;
}

}  // namespace cyl
