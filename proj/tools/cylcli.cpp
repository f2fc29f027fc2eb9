#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyl/bijection.hpp"
#include "cyl/diagram.hpp"
#include "cyl/io.hpp"
#include "cyl/lineups.hpp"
#include "cyl/oracle.hpp"
#include "cyl/polynomials.hpp"
#include "cyl/slices.hpp"

using namespace cyl;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string profile;
  int order = -1;
  int n = -1;
  int rank = 0;
  int level = 0;
  std::string format = "text";
  int jobs = 1;
  unsigned long long seed = 0;
  int sample = 0;
  std::vector<std::string> inputs;
  std::string kind;
  std::string mu;
  std::string beta;
  std::string mode = "atmost";
  bool check = false;
  bool matrix = false;
  int self_shift = -1;
  bool swap_delta = false;
};

// a command fills json, text lines and optionally a csv table
struct Result {
  Json j = Json::object();
  std::vector<std::string> text;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
};

Profile need_profile(const Options& o) {
  if (o.profile.empty()) throw UsageError("--profile is required");
  return parse_profile(o.profile);
}

int order_or(const Options& o, int fallback) { return o.order >= 0 ? o.order : fallback; }
int n_or(const Options& o, int fallback) { return o.n >= 0 ? o.n : fallback; }

OracleLimits limits(const Options& o) {
  OracleLimits l;
  l.jobs = std::max(1, o.jobs);
  return l;
}

std::string str(const Integer& v) { return v.get_str(); }

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::vector<std::string> coeff_strings(const Series& s) {
  std::vector<std::string> out;
  for (int m = 0; m <= s.order(); ++m) out.push_back(str(s[m]));
  return out;
}

std::vector<std::string> coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(str(c));
  if (out.empty()) out.push_back("0");
  return out;
}

Json matrix_json(const Matrix& M) {
  Json out = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(str(v));
    out.push_back(r);
  }
  return out;
}

std::string matrix_text(const Matrix& M) {
  std::string out;
  for (const auto& row : M) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(str(v));
    out += (out.empty() ? "" : "\n") + std::string("  [") + join(cells, " ") + "]";
  }
  return out;
}

std::string mismatch_text(int m) { return m < 0 ? "none" : "q^" + std::to_string(m); }

void add_check(Result& r, const std::string& name, bool ok, const std::string& detail) {
  r.j["checks"].push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
  r.text.push_back(std::string(ok ? "ok   " : "FAIL ") + name + (detail.empty() ? "" : "  " + detail));
  r.rows.push_back({name, ok ? "ok" : "FAIL", detail});
  r.ok = r.ok && ok;
}

std::vector<CylindricPartition> read_partitions(const Options& o) {
  if (o.inputs.empty()) throw UsageError("expected a cylindric partition or '-'");
  std::vector<std::string> lines;
  for (const auto& in : o.inputs) {
    if (in != "-") {
      lines.push_back(in);
      continue;
    }
    std::string line;
    while (std::getline(std::cin, line))
      if (!trim(line).empty()) lines.push_back(trim(line));
  }
  std::vector<CylindricPartition> out;
  for (const auto& line : lines) {
    if (line.rfind("c=", 0) == 0) out.push_back(parse_cylindric(line));
    else out.push_back(parse_rows(line, need_profile(o)));
  }
  return out;
}

Result series_result(const std::string& name, const Profile& c, const Series& s) {
  Result r;
  r.j["command"] = name;
  r.j["profile"] = to_string(c);
  r.j["order"] = s.order();
  r.j["coefficients"] = coeff_strings(s);
  r.text.push_back(join(coeff_strings(s)));
  r.header = {"n", "coefficient"};
  for (int m = 0; m <= s.order(); ++m) r.rows.push_back({std::to_string(m), str(s[m])});
  return r;
}

Result cmd_enumerate(const Options& o) {
  const auto c = need_profile(o);
  const int W = order_or(o, 6);
  std::vector<std::string> forms;
  for (const auto& L : enumerate_by_weight(c, W, limits(o))) forms.push_back(to_text(L));
  std::sort(forms.begin(), forms.end());
  Result r;
  r.j["command"] = "enumerate";
  r.j["profile"] = to_string(c);
  r.j["max_weight"] = W;
  r.j["count"] = forms.size();
  r.j["partitions"] = forms;
  r.text = forms;
  r.header = {"partition"};
  for (const auto& f : forms) r.rows.push_back({f});
  return r;
}

Result cmd_count(const Options& o) {
  const auto c = need_profile(o);
  return series_result("count", c, count_series(c, order_or(o, 12), limits(o)));
}

Result cmd_borodin(const Options& o) {
  const auto c = need_profile(o);
  return series_result("borodin", c, borodin_product(c, order_or(o, 12)));
}

Result cmd_decompose(const Options& o) {
  Result r;
  r.j["command"] = "decompose";
  r.header = {"partition", "beta", "mu"};
  for (const auto& L : read_partitions(o)) {
    const auto split = pivot_decompose(L);
    r.j["results"].push_back({{"partition", to_text(L)}, {"beta", to_string(split.beta)}, {"mu", to_string(split.mu)}});
    r.text.push_back("beta=" + to_string(split.beta) + " mu=" + to_string(split.mu));
    r.rows.push_back({to_text(L), to_string(split.beta), to_string(split.mu)});
  }
  return r;
}

Result cmd_reconstruct(const Options& o) {
  const auto c = need_profile(o);
  const auto L = reconstruct(parse_partition(o.mu), parse_beta(o.beta), c);
  Result r;
  r.j["command"] = "reconstruct";
  r.j["profile"] = to_string(c);
  r.j["mu"] = o.mu;
  r.j["beta"] = o.beta;
  r.j["partition"] = to_text(L);
  r.text.push_back(to_text(L));
  return r;
}

Result cmd_slices(const Options& o) {
  Result r;
  r.j["command"] = "slices";
  r.header = {"partition", "multiplicity", "lengths", "shape", "weight"};
  for (const auto& L : read_partitions(o)) {
    Json chain = Json::array();
    if (!r.text.empty()) r.text.push_back("");
    r.text.push_back(to_text(L));
    const auto sc = decompose(L);
    for (const auto& e : sc.entries()) {
      const auto lengths = join(e.slice.lengths());
      const auto shape = to_string(e.slice.shape());
      chain.push_back({{"multiplicity", e.multiplicity}, {"lengths", e.slice.lengths()}, {"shape", shape},
                       {"weight", e.slice.weight()}});
      r.text.push_back("  " + std::to_string(e.multiplicity) + " x [" + lengths + "] shape=" + shape +
                       " weight=" + std::to_string(e.slice.weight()));
      r.rows.push_back({to_text(L), std::to_string(e.multiplicity), lengths, shape, std::to_string(e.slice.weight())});
    }
    r.j["results"].push_back({{"partition", to_text(L)}, {"chain", chain}});
  }
  return r;
}

Result cmd_shrink(const Options& o) {
  ShrinkMode mode;
  if (o.mode == "atmost") mode = ShrinkMode::AtMost;
  else if (o.mode == "exact") mode = ShrinkMode::Exact;
  else throw UsageError("--mode must be atmost or exact");
  Result r;
  r.j["command"] = "shrink";
  r.j["mode"] = o.mode;
  r.header = {"partition", "side", "tight"};
  for (const auto& L : read_partitions(o)) {
    const auto s = shrink(decompose(L).expanded(), mode);
    std::vector<std::string> tight;
    for (const auto& sl : s.tight) tight.push_back("[" + join(sl.lengths()) + "]");
    r.j["results"].push_back({{"partition", to_text(L)}, {"side", to_string(s.side)}, {"tight", tight}});
    r.text.push_back("side=" + to_string(s.side) + " tight=" + join(tight, " "));
    r.rows.push_back({to_text(L), to_string(s.side), join(tight, " ")});
  }
  return r;
}

Result cmd_stg(const Options& o) {
  int rank = o.rank, level = o.level;
  if (!o.profile.empty()) {
    const auto c = parse_profile(o.profile);
    rank = c.rank();
    level = c.level();
  }
  if (rank < 1 || level < 1) throw UsageError("stg needs --profile or --rank and --level");
  const auto g = o.profile.empty() ? build_graph(rank, level) : build_graph(parse_profile(o.profile));
  Result r;
  r.j["command"] = "stg";
  r.j["rank"] = rank;
  r.j["level"] = level;
  r.j["nodes"] = g.nodes.size();
  r.j["edges"] = g.edge_count();
  if (g.marked) r.j["marked"] = to_string(g.nodes[*g.marked]);
  std::istringstream adj(to_adjacency_list(g));
  for (std::string line; std::getline(adj, line);) {
    r.j["adjacency"].push_back(line);
    r.text.push_back(line);
  }
  r.text.push_back(std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edge_count()) + " edges");
  if (o.matrix) {
    const auto order = grouped_order(rank, level);
    const auto A = adjacency_matrix(g, order.shapes);
    std::vector<std::string> names;
    for (const auto& s : order.shapes) names.push_back(to_string(s));
    r.j["order"] = names;
    r.j["block_sizes"] = order.block_sizes;
    r.j["matrix"] = matrix_json(A);
    r.text.push_back("grouped order: " + join(names, " "));
    r.text.push_back("A:\n" + matrix_text(A));
    const auto blocks = diagonal_blocks(matrix_power(A, rank), order.block_sizes);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto p = char_poly(blocks[b]);
      r.j["blocks"].push_back({{"matrix", matrix_json(blocks[b])}, {"char_poly", to_string(p, "x")}});
      r.text.push_back("block " + std::to_string(b) + " of A^" + std::to_string(rank) + ", char poly " +
                       to_string(p, "x") + ":\n" + matrix_text(blocks[b]));
    }
  }
  return r;
}

Result cmd_path_counts(const Options& o) {
  const auto c = need_profile(o);
  const auto t = path_counts(c, order_or(o, 20));
  Result r;
  std::vector<std::string> a;
  for (const auto& v : t.a) a.push_back(str(v));
  r.j["command"] = "path-counts";
  r.j["profile"] = to_string(c);
  r.j["counts"] = a;
  r.text.push_back(join(a));
  r.header = {"n", "count"};
  for (std::size_t m = 0; m < a.size(); ++m) r.rows.push_back({std::to_string(m), a[m]});
  try {
    const auto rec = fit_recurrence(t.a);
    r.j["recurrence"] = to_string(rec);
    r.text.push_back("recurrence: " + to_string(rec));
  } catch (const NoRecurrenceFound&) {
    r.j["recurrence"] = nullptr;
    r.text.push_back("recurrence: none found");
  }
  return r;
}

Result cmd_distinct_gf(const Options& o) {
  const auto c = need_profile(o);
  const int N = order_or(o, 12);
  const auto s = distinct_gf(c, N);
  auto r = series_result("distinct-gf", c, s);
  if (o.check) {
    const int m = first_mismatch(s, count_distinct_series(c, N, limits(o)));
    r.ok = m < 0;
    r.j["oracle_equal"] = r.ok;
    r.j["first_mismatch"] = m;
    r.text.push_back(std::string("oracle: ") + (r.ok ? "equal" : "differs at " + mismatch_text(m)));
  }
  return r;
}

Result cmd_verify_closed_form(const Options& o) {
  const auto c = need_profile(o);
  const int N = order_or(o, 25);
  ClosedFormReport rep;
  std::string form;
  if (c == Profile({1, 1, 1})) {
    rep = verify_closed_form<Rational>(c, {{Rational(3, 2), Rational(2), 0}}, {Rational(-1, 2)}, CoefficientRing::rationals(), N);
    form = "3/2 prod(1+2q^n) - 1/2";
  } else if (c == Profile({2, 0, 0})) {
    const Quadratic phi(Rational(1, 2), Rational(1, 2), 5), psi(Rational(1, 2), Rational(-1, 2), 5);
    rep = verify_closed_form<Quadratic>(
        c, {{Quadratic(Rational(1, 2), Rational(1, 10), 5), phi, 0}, {Quadratic(Rational(1, 2), Rational(-1, 10), 5), psi, 0}},
        {}, CoefficientRing::quadratic(5), N);
    form = "(5+sqrt5)/10 prod(1+phi q^n) + (5-sqrt5)/10 prod(1+psi q^n)";
  } else if (c == Profile({4, 0})) {
    const Quadratic s3(0, 1, 3);
    rep = verify_closed_form<Quadratic>(
        c, {{Quadratic(Rational(1, 3), Rational(1, 6), 3), s3, 0}, {Quadratic(Rational(1, 3), Rational(-1, 6), 3), -s3, 0}},
        {Quadratic(Rational(1, 3))}, CoefficientRing::quadratic(3), N);
    form = "1/3 + (2+sqrt3)/6 prod(1+sqrt3 q^n) + (2-sqrt3)/6 prod(1-sqrt3 q^n)";
  } else {
    throw UsageError("closed forms are known for (1,1,1), (2,0,0) and (4,0)");
  }
  Result r;
  r.ok = rep.equal && rep.irrational_free;
  r.j["command"] = "verify-closed-form";
  r.j["profile"] = to_string(c);
  r.j["form"] = form;
  r.j["order"] = N;
  r.j["equal"] = rep.equal;
  r.j["first_mismatch"] = rep.first_mismatch;
  r.j["irrational_free"] = rep.irrational_free;
  r.text.push_back(form);
  r.text.push_back(std::string(rep.equal ? "equal" : "differs at " + mismatch_text(rep.first_mismatch)) + " to q^" +
                   std::to_string(N) + (rep.irrational_free ? ", irrational parts cancel" : ", irrational part left"));
  return r;
}

Polynomial poly_of(const std::string& kind, int n, const Profile& c) {
  if (kind == "P") return P(n, c);
  if (kind == "Peq") return P_eq(n, c);
  if (kind == "Ptilde") return P_tilde(n, c);
  return Q_tilde(n, c);
}

Result cmd_poly(const Options& o) {
  if (o.kind != "P" && o.kind != "Peq" && o.kind != "Ptilde" && o.kind != "Qtilde")
    throw UsageError("poly expects one of P, Peq, Ptilde, Qtilde");
  Result r;
  r.j["command"] = "poly";
  r.j["kind"] = o.kind;
  r.header = {"r", "l", "n", "shape", "value_at_1", "min_coefficient"};
  auto row = [&](const Profile& c, int n) {
    const auto p = poly_of(o.kind, n, c);
    const auto shape = to_string(shape_of_zero(c));
    r.j["results"].push_back({{"profile", to_string(c)}, {"n", n}, {"coefficients", coeff_strings(p)},
                              {"value_at_1", str(p.value_at(1))}, {"min_coefficient", str(p.min_coefficient())}});
    r.rows.push_back({std::to_string(c.rank()), std::to_string(c.level()), std::to_string(n), shape, str(p.value_at(1)),
                      str(p.min_coefficient())});
    return p;
  };
  if (!o.profile.empty()) {
    const auto c = parse_profile(o.profile);
    const auto p = row(c, n_or(o, 3));
    r.text.push_back(join(coeff_strings(p)));
    r.text.push_back("value at 1: " + str(p.value_at(1)) + ", min coefficient: " + str(p.min_coefficient()));
    return r;
  }
  if (o.rank < 1 || o.level < 1) throw UsageError("poly needs --profile or --rank and --level");
  for (const auto& s : all_shapes(o.rank, o.level))
    for (int n = 0; n <= n_or(o, 4); ++n) {
      const auto c = shape_to_profile(s, o.level);
      const auto p = row(c, n);
      r.text.push_back(to_string(c) + " n=" + std::to_string(n) + ": value at 1 " + str(p.value_at(1)) +
                       ", min coefficient " + str(p.min_coefficient()));
    }
  return r;
}

Result cmd_functional_eq(const Options& o) {
  const auto c = need_profile(o);
  const int N = order_or(o, 10);
  FunctionalEquationForm form;
  form.self_shift = o.self_shift;
  form.delta_c_to_d = !o.swap_delta;
  const auto rep = check_functional_equation(c, N, form);
  Result r;
  r.ok = rep.equal;
  r.j["command"] = "functional-eq";
  r.j["profile"] = to_string(c);
  r.j["order"] = N;
  r.j["equal"] = rep.equal;
  r.j["first_mismatch"] = {{"q", rep.q_exp}, {"z", rep.z_exp}};
  r.text.push_back(rep.equal ? "equal to q^" + std::to_string(N)
                             : "differs at q^" + std::to_string(rep.q_exp) + " z^" + std::to_string(rep.z_exp));
  return r;
}

Result cmd_lineups(const Options& o) {
  const auto c = need_profile(o);
  Result r;
  r.j["command"] = "lineups";
  r.j["profile"] = to_string(c);
  if (!o.inputs.empty()) {
    r.header = {"lineup", "class", "all_pivots", "diagnosis"};
    for (const auto& in : o.inputs) {
      const auto L = classify(parse_beta(in), c);
      r.j["results"].push_back({{"lineup", to_string(L)}, {"class", to_string(L.cls)}, {"iota", L.iota},
                                {"all_pivots", L.all_pivots}, {"diagnosis", L.diagnosis}});
      r.text.push_back(to_string(L) + (L.diagnosis.empty() ? "" : "  (" + L.diagnosis + ")"));
      r.rows.push_back({to_string(L), to_string(L.cls), L.all_pivots ? "true" : "false", L.diagnosis});
    }
    return r;
  }
  const std::string kind = o.kind.empty() ? "mll" : o.kind;
  if (kind != "mll" && kind != "mjl") throw UsageError("--kind must be mll or mjl");
  const int n = n_or(o, 2);
  const auto ls = kind == "mll" ? enumerate_MLL(n, c) : enumerate_MJL(n, c);
  r.j["kind"] = kind;
  r.j["n"] = n;
  r.j["count"] = ls.size();
  r.header = {"lineup"};
  for (const auto& L : ls) {
    r.j["lineups"].push_back(to_string(L));
    r.text.push_back(to_string(L));
    r.rows.push_back({to_string(L)});
  }
  r.text.push_back(std::to_string(ls.size()) + " lineups");
  return r;
}

Result cmd_lemma_check(const Options& o) {
  const auto c = need_profile(o);
  const int N = order_or(o, 14);
  const int lo = o.n >= 0 ? o.n : 0, hi = o.n >= 0 ? o.n : 3;
  Result r;
  r.j["command"] = "lemma-check";
  r.j["profile"] = to_string(c);
  r.j["order"] = N;
  r.header = {"check", "status", "detail"};
  for (int n = lo; n <= hi; ++n) {
    const auto rep = lemma_check(n, c, N);
    add_check(r, "n=" + std::to_string(n), rep.equal, rep.equal ? "" : "differs at " + mismatch_text(rep.first_mismatch));
  }
  return r;
}

Result cmd_qconj_check(const Options& o) {
  const auto c = need_profile(o);
  const int N = order_or(o, 14), n_max = n_or(o, 3);
  const auto rep = qconj_genfunc_check(c, N, n_max);
  Result r;
  r.ok = rep.equal;
  r.j["command"] = "qconj-check";
  r.j["profile"] = to_string(c);
  r.j["order"] = N;
  r.j["n_max"] = n_max;
  r.j["equal"] = rep.equal;
  r.j["first_mismatch"] = {{"q", rep.q_exp}, {"z", rep.z_exp}};
  r.text.push_back(rep.equal ? "equal to q^" + std::to_string(N)
                             : "differs at q^" + std::to_string(rep.q_exp) + " z^" + std::to_string(rep.z_exp));
  return r;
}

Integer ipow(long long b, int n) {
  Integer out = 1;
  for (int i = 0; i < n; ++i) out *= Integer(static_cast<long>(b));
  return out;
}

Result cmd_verify_all(const Options& o) {
  const auto c = need_profile(o);
  const int N = order_or(o, 12), n_max = n_or(o, 4);
  const int n_lineups = std::min(n_max, 3);
  const long long b = binomial(c.level() + c.rank() - 1, c.rank() - 1);
  const auto lim = limits(o);
  Result r;
  r.j["command"] = "verify-all";
  r.j["profile"] = to_string(c);
  r.j["order"] = N;
  r.j["n"] = n_max;
  r.j["seed"] = o.seed;
  r.j["checks"] = Json::array();
  r.header = {"check", "status", "detail"};

  const auto counts = count_series(c, N, lim);
  int m = first_mismatch(counts, borodin_product(c, N));
  add_check(r, "borodin", m < 0, "first mismatch " + mismatch_text(m));

  m = first_mismatch(distinct_gf(c, N), count_distinct_series(c, N, lim));
  add_check(r, "distinct-gf", m < 0, "first mismatch " + mismatch_text(m));

  auto all = enumerate_by_weight(c, N, lim);
  if (o.sample > 0 && static_cast<std::size_t>(o.sample) < all.size()) {
    std::mt19937_64 rng(o.seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.erase(all.begin() + o.sample, all.end());
  }
  const int bound = std::min(c.rank() - 1, c.level() - 1);
  std::string bad;
  for (const auto& L : all) {
    const auto split = pivot_decompose(L);
    const auto back = reconstruct(split.mu, split.beta, c);
    const auto again = pivot_decompose(back);
    if (back != L || again.mu != split.mu || again.beta != split.beta || split.beta.max_run_length() > bound) {
      bad = to_text(L);
      break;
    }
  }
  add_check(r, "bijection", bad.empty(), std::to_string(all.size()) + " partitions" + (bad.empty() ? "" : ", fails on " + bad));

  bool poly_ok = true;
  std::string poly_detail = "n <= " + std::to_string(n_max);
  for (int n = 0; n <= n_max && poly_ok; ++n) {
    for (const auto& [name, p, want] : {std::tuple{"P", P(n, c), ipow(b, n)}, std::tuple{"P_=", P_eq(n, c), ipow(b, n)},
                                        std::tuple{"P~", P_tilde(n, c), ipow(b - c.rank(), n)}}) {
      if (p.min_coefficient() < 0 || p.value_at(1) != want) {
        poly_ok = false;
        poly_detail = std::string(name) + " fails at n=" + std::to_string(n);
        break;
      }
    }
  }
  add_check(r, "polynomials", poly_ok, poly_detail);

  const auto oracle = count_bivariate(c, N, lim);
  std::string f_detail = "n <= " + std::to_string(n_max);
  bool f_ok = true;
  for (int n = 0; n <= n_max && f_ok; ++n) {
    Series exactly(N), at_most(N);
    for (int k = 0; k <= N; ++k) {
      exactly[k] = oracle.at(k, n);
      for (int j = 0; j <= n; ++j) at_most[k] += oracle.at(k, j);
    }
    if (first_mismatch(f_at_most(n, c, N), at_most) >= 0 || first_mismatch(f_exactly(n, c, N), exactly) >= 0) {
      f_ok = false;
      f_detail = "fails at n=" + std::to_string(n);
    }
  }
  add_check(r, "f-vs-oracle", f_ok, f_detail);

  m = first_mismatch(F_truncated(c, N).at_z_one(), borodin_product(c, N));
  add_check(r, "F(z=1)", m < 0, "first mismatch " + mismatch_text(m));

  const auto fe = check_functional_equation(c, N);
  add_check(r, "functional-eq", fe.equal,
            fe.equal ? "" : "differs at q^" + std::to_string(fe.q_exp) + " z^" + std::to_string(fe.z_exp));

  bool lemma_ok = true, q_ok = true, mll_ok = true;
  std::string lemma_detail, q_detail, mll_detail;
  for (int n = 0; n <= n_lineups; ++n) {
    const auto rep = lemma_check(n, c, N);
    if (!rep.equal && lemma_ok) {
      lemma_ok = false;
      lemma_detail = "n=" + std::to_string(n) + " differs at " + mismatch_text(rep.first_mismatch);
    }
    const auto qt = Q_tilde(n, c);
    if (q_ok && (qt != P_tilde(n, c) + mjl_correction(n, c) || qt.value_at(1) != ipow(b - c.rank(), n))) {
      q_ok = false;
      q_detail = "fails at n=" + std::to_string(n);
    }
    if (mll_ok && Integer(static_cast<long>(enumerate_MLL(n, c).size())) != ipow(b - c.rank(), n)) {
      mll_ok = false;
      mll_detail = "fails at n=" + std::to_string(n);
    }
  }
  add_check(r, "lemma", lemma_ok, lemma_detail);
  add_check(r, "Q~", q_ok, q_detail);
  add_check(r, "MLL count", mll_ok, mll_detail);

  const auto g = qconj_genfunc_check(c, N, n_lineups);
  add_check(r, "qconj", g.equal, g.equal ? "" : "differs at q^" + std::to_string(g.q_exp) + " z^" + std::to_string(g.z_exp));

  if (c == Profile({1, 1, 1}) || c == Profile({2, 0, 0}) || c == Profile({4, 0})) {
    Options cf = o;
    cf.order = std::max(N, 25);
    const auto cr = cmd_verify_closed_form(cf);
    add_check(r, "closed-form", cr.ok, cr.text.back());
  }
  r.j["ok"] = r.ok;
  return r;
}

void emit(Result& r, const std::string& format) {
  if (format == "json") {
    Json out = {{"schema", 1}};
    for (auto it = r.j.begin(); it != r.j.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    if (r.header.empty()) {
      std::cout << "key,value\n";
      for (auto it = r.j.begin(); it != r.j.end(); ++it)
        std::cout << it.key() << "," << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
      return;
    }
    auto cell = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    std::cout << join(r.header) << "\n";
    for (const auto& row : r.rows) {
      std::vector<std::string> cells;
      for (const auto& s : row) cells.push_back(cell(s));
      std::cout << join(cells) << "\n";
    }
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylindric partitions: exact counts, bijections and generating-function checks"};
  app.name("cylcli");
  app.require_subcommand(1);
  Options o;

  app.add_option("--profile", o.profile, "profile c1,c2,...");
  app.add_option("--order", o.order, "truncation order N (max weight for enumerate)");
  app.add_option("--n", o.n, "index n (polynomials, lineups, lemma)");
  app.add_option("--rank", o.rank, "rank r for stg and poly sweeps");
  app.add_option("--level", o.level, "level for stg and poly sweeps");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", o.jobs, "worker threads for oracle searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for sampled checks");

  std::map<std::string, std::function<Result(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Result(const Options&)> fn) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    handlers[name] = std::move(fn);
    return s;
  };

  sub("enumerate", "list cylindric partitions of weight <= --order", cmd_enumerate);
  sub("count", "brute-force counts by weight", cmd_count);
  sub("borodin", "coefficients of the Borodin product", cmd_borodin);
  sub("decompose", "split into beta and mu", cmd_decompose)->add_option("input", o.inputs, "rows like 5,4|8,2|7,5,1, or -");
  auto* rec = sub("reconstruct", "rebuild from mu and beta", cmd_reconstruct);
  rec->add_option("--mu", o.mu, "partition mu")->required();
  rec->add_option("--beta", o.beta, "labeled distinct partition beta")->required();
  sub("slices", "slice chain of a cylindric partition", cmd_slices)->add_option("input", o.inputs, "rows, or -");
  auto* sh = sub("shrink", "tight chain and side partition", cmd_shrink);
  sh->add_option("input", o.inputs, "rows, or -");
  sh->add_option("--mode", o.mode, "atmost or exact");
  sub("stg", "shape transition graph", cmd_stg)->add_flag("--matrix", o.matrix, "grouped adjacency matrix and blocks");
  sub("path-counts", "path counts in the shape transition graph", cmd_path_counts);
  sub("distinct-gf", "generating function for distinct parts", cmd_distinct_gf)
      ->add_flag("--check", o.check, "compare against the oracle");
  sub("verify-closed-form", "check a known closed form", cmd_verify_closed_form);
  sub("poly", "P, P_=, P~ or Q~ polynomials", cmd_poly)->add_option("kind", o.kind, "P, Peq, Ptilde or Qtilde")->required();
  auto* fe = sub("functional-eq", "check the functional equation", cmd_functional_eq);
  fe->add_option("--self-shift", o.self_shift, "exponent of q in the self term (default r)");
  fe->add_flag("--swap-delta", o.swap_delta, "use Delta(d,c) in the sum");
  auto* li = sub("lineups", "enumerate or classify lineups", cmd_lineups);
  li->add_option("--kind", o.kind, "mll or mjl");
  li->add_option("beta", o.inputs, "lineups to classify, like 9^(2,2),5^(2,1),1^(2,0)");
  sub("lemma-check", "pivot chain generating function against its formula", cmd_lemma_check);
  sub("qconj-check", "bivariate generating function through pivots", cmd_qconj_check);
  sub("verify-all", "run every cross-check for one profile", cmd_verify_all)
      ->add_option("--sample", o.sample, "check a random subset of this many partitions in the bijection");

  if (argc < 2) {
    std::cerr << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto* chosen = app.get_subcommands().front();
    Result r = handlers.at(chosen->get_name())(o);
    emit(r, o.format);
    return r.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
