#include "homlie2/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

namespace homlie2 {

AlphaShape parse_alpha_shape(const std::string& s) {
  if (s == "diagonal") return AlphaShape::Diagonal;
  if (s == "jordan") return AlphaShape::Jordan;
  if (s == "all") return AlphaShape::All;
  throw Error(ErrorKind::Format, "alpha shape must be diagonal, jordan or all");
}

const std::vector<FamilyDescriptor>& families() {
  static const std::vector<FamilyDescriptor> all = {
      {"oo", {}, "none", "3|2"},
      {"oo_alpha", {"eps"}, "eps arbitrary (eps = 0 gives oo)", "3|2"},
      {"dim11", {"lambda", "rho"}, "lambda, rho != 0", "1|1"},
      {"A1", {"rho1", "t1", "r2"}, "rho1 != 0, rho2 = 0, rho3 = rho1, s = t1^2", "1|2"},
      {"A2", {"rho1", "rho2", "t1"}, "rho1, rho2 != 0, rho3 = rho1 + rho2, s = t1^2, r2 = t1", "1|2"},
      {"A3", {"rho1", "rho3", "t1", "r2"}, "rho1 != 0, rho2 = 0, rho1 + rho3 != 0, s = t1^2 = t1 r2, r2 != 0", "1|2"},
      {"A4", {"rho1", "rho2", "rho3", "t1"}, "rho1, rho2 != 0, rho1 + rho2 + rho3 != 0, s = t1^2, t1 = r2 != 0", "1|2"},
      {"A5", {"rho1", "rho2", "t1"}, "rho1, rho2 != 0, t1 != 0, rho3 = ((1+t1)/t1) rho1 + rho2, s = t1^2", "1|2"},
      {"A6", {"rho1", "t1"}, "rho1, rho3 != 0, rho2 = 0, t1 != 0, rho3 = ((1+t1)/t1) rho1, s = t1^2", "1|2"},
      {"A7", {"rho1"}, "rho1 != 0, rho2 = rho3 = 0, s = t1 = 1", "1|2"},
      {"A8", {"rho2", "rho3"}, "rho1 = 0, rho2 != 0, s = t1 = 0", "1|2"},
      {"A9", {"rho2", "t1"}, "rho1 = 0, rho2 != 0, rho3 = rho2, s = t1^2, t1 != 0", "1|2"},
      {"A10", {"rho3"}, "rho1 = rho2 = 0, rho3 != 0, s = t1 = 0", "1|2"},
      {"B1", {"t1", "a1", "a2", "b1", "b2"}, "s = 1, t1 = r2", "1|2"},
      {"B2", {"t1", "r2", "a1", "b2"}, "s = 1, t1 != r2, a2 = b1 = 0", "1|2"},
      {"B3", {"s", "a1", "a2", "b1", "b2"}, "s != 0, 1, t1 = r2 = 0", "1|2"},
      {"B4", {"s", "t1", "b2"}, "s != 0, 1, t1 != 0, r2 = 0, a1 = a2 = b1 = 0", "1|2"},
      {"B5", {"s", "r2", "b1"}, "s != 0, 1, t1 = rs2, a1 = a2 = b2 = 0, b1 != 0", "1|2"},
      {"B6", {"s", "t1", "r2", "a2"}, "s != 0, 1, t1 != rs2, a1 = b1 = b2 = 0, a2 != 0", "1|2"},
      {"B7", {"s", "t1", "a2", "b2"}, "s != 0, 1, r2 = 0, a1 = b1 = 0", "1|2"},
      {"B8", {"a1", "b1"}, "s = 1, t1 = 0, a2 = 0, b2 = a1 (Jordan twist)", "1|2"},
      {"B9", {"s", "b1"}, "s != 1, t1 = 0, a1 = a2 = b2 = 0, b1 != 0 (Jordan twist)", "1|2"},
      {"B10", {"t1", "a1"}, "s = 1, t1 != 0, a2 = b1 = 0, b2 = a1 != 0 (Jordan twist)", "1|2"},
  };
  return all;
}

const FamilyDescriptor& family(const std::string& name) {
  for (const auto& d : families())
    if (d.name == name) return d;
  throw Error(ErrorKind::Format, "unknown catalog family " + name);
}

namespace {

bool is_jordan_row(const std::string& row) {
  static const std::set<std::string> j = {"A5", "A6", "A7", "A8", "A9", "A10", "B8", "B9", "B10"};
  return j.count(row) > 0;
}

HomLieSuper2 make_oo(const Field& f, Elem eps) {
  HomLieSuper2 g(f, SuperBasis({"h", "x2", "y2", "x1", "y1"}, {0, 0, 0, 1, 1}));
  Elem e2 = f.sqr(eps);
  g.set_bracket(3, 4, g.by_labels({{1, "h"}}));
  g.set_bracket(1, 2, g.by_labels({{1, "h"}}));
  g.set_bracket(0, 3, g.by_labels({{1, "x1"}}));
  g.set_bracket(0, 4, g.by_labels({{eps, "x1"}, {1, "y1"}}));
  g.set_bracket(1, 4, g.by_labels({{1, "x1"}}));
  g.set_bracket(2, 3, g.by_labels({{eps, "x1"}, {1, "y1"}}));
  g.set_sigma(3, g.by_labels({{1, "x2"}}));
  g.set_sigma(4, g.by_labels({{eps, "h"}, {e2, "x2"}, {1, "y2"}}));
  Matrix a = Matrix::identity(f, 5);
  a.set_column(2, g.by_labels({{eps, "h"}, {e2, "x2"}, {1, "y2"}}));
  a.set_column(4, g.by_labels({{eps, "x1"}, {1, "y1"}}));
  g.set_alpha(a);
  return g;
}

Elem get(const Params& p, const std::string& k, Elem def = 0) {
  auto it = p.find(k);
  return it == p.end() ? def : it->second;
}

HomLieSuper2 make_table12(const Field& f, const Table12Coords& c) {
  HomLieSuper2 g(f, SuperBasis({"e", "f1", "f2"}, {0, 1, 1}));
  Vector v = g.zero();
  v.e[1] = c.a1;
  v.e[2] = c.a2;
  g.set_bracket(0, 1, v);
  v.e[1] = c.b1;
  v.e[2] = c.b2;
  g.set_bracket(0, 2, v);
  g.set_bracket(1, 2, g.by_labels({{c.rho1 ^ c.rho2 ^ c.rho3, "e"}}));
  g.set_sigma(1, g.by_labels({{c.rho1, "e"}}));
  g.set_sigma(2, g.by_labels({{c.rho2, "e"}}));
  Matrix a(f, 3, 3);
  a.at(0, 0) = c.s;
  a.at(1, 1) = c.t1;
  if (c.jordan) {
    a.at(1, 2) = 1;
    a.at(2, 2) = c.t1;
  } else {
    a.at(2, 2) = c.r2;
  }
  g.set_alpha(a);
  return g;
}

}  // namespace

Matrix oo_morphism(const Field& f, Elem d1, Elem d2, Elem e1, Elem e2) {
  // basis order h, x2, y2, x1, y1
  Matrix a(f, 5, 5);
  a.at(0, 0) = 1;
  a.at(3, 3) = d1;
  a.at(4, 3) = d2;
  a.at(3, 4) = e1;
  a.at(4, 4) = e2;
  a.at(0, 1) = f.mul(d1, d2);
  a.at(1, 1) = f.sqr(d1);
  a.at(2, 1) = f.sqr(d2);
  a.at(0, 2) = f.mul(e1, e2);
  a.at(1, 2) = f.sqr(e1);
  a.at(2, 2) = f.sqr(e2);
  return a;
}

std::string row_violation(const std::string& row, const Table12Coords& c, const Field& f, Rs2Reading rs2) {
  std::vector<std::pair<const char*, bool>> conds;
  auto need = [&](const char* what, bool ok) { conds.emplace_back(what, ok); };
  Elem kappa = c.rho1 ^ c.rho2 ^ c.rho3;
  bool typeI = row[0] == 'A';
  if (is_jordan_row(row) != c.jordan) return c.jordan ? "twist must be diagonal" : "twist must be a Jordan block";
  if (typeI) {
    need("a1 = a2 = b1 = b2 = 0", (c.a1 | c.a2 | c.b1 | c.b2) == 0);
  } else {
    need("rho1 = rho2 = rho3 = 0", (c.rho1 | c.rho2 | c.rho3) == 0);
  }
  Elem t1sq = f.sqr(c.t1);
  auto ratio = [&]() { return f.mul(f.mul(1 ^ c.t1, f.inv(c.t1)), c.rho1); };
  Elem rs = rs2 == Rs2Reading::SR2 ? f.mul(c.s, c.r2) : c.r2;
  if (row == "A1") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho2 = 0", c.rho2 == 0);
    need("rho3 = rho1 + rho2", kappa == 0);
    need("s = t1^2", c.s == t1sq);
  } else if (row == "A2") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho2 != 0", c.rho2 != 0);
    need("rho3 = rho1 + rho2", kappa == 0);
    need("s = t1^2", c.s == t1sq);
    need("r2 = t1", c.r2 == c.t1);
  } else if (row == "A3") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho2 = 0", c.rho2 == 0);
    need("rho1 + rho3 != 0", (c.rho1 ^ c.rho3) != 0);
    need("s = t1^2", c.s == t1sq);
    need("s = t1 r2", c.s == f.mul(c.t1, c.r2));
    need("r2 != 0", c.r2 != 0);
  } else if (row == "A4") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho2 != 0", c.rho2 != 0);
    need("rho1 + rho2 + rho3 != 0", kappa != 0);
    need("s = t1^2", c.s == t1sq);
    need("t1 = r2", c.t1 == c.r2);
    need("r2 != 0", c.r2 != 0);
  } else if (row == "A5") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho2 != 0", c.rho2 != 0);
    need("t1 != 0", c.t1 != 0);
    if (c.t1 != 0) need("rho3 = ((1+t1)/t1) rho1 + rho2", c.rho3 == (ratio() ^ c.rho2));
    need("s = t1^2", c.s == t1sq);
  } else if (row == "A6") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho3 != 0", c.rho3 != 0);
    need("rho2 = 0", c.rho2 == 0);
    need("t1 != 0", c.t1 != 0);
    if (c.t1 != 0) need("rho3 = ((1+t1)/t1) rho1", c.rho3 == ratio());
    need("s = t1^2", c.s == t1sq);
  } else if (row == "A7") {
    need("rho1 != 0", c.rho1 != 0);
    need("rho2 = 0", c.rho2 == 0);
    need("rho3 = 0", c.rho3 == 0);
    need("s = 1", c.s == 1);
    need("t1 = 1", c.t1 == 1);
  } else if (row == "A8") {
    need("rho1 = 0", c.rho1 == 0);
    need("rho2 != 0", c.rho2 != 0);
    need("s = 0", c.s == 0);
    need("t1 = 0", c.t1 == 0);
  } else if (row == "A9") {
    need("rho1 = 0", c.rho1 == 0);
    need("rho2 != 0", c.rho2 != 0);
    need("rho3 = rho2", c.rho3 == c.rho2);
    need("s = t1^2", c.s == t1sq);
    need("t1 != 0", c.t1 != 0);
  } else if (row == "A10") {
    need("rho1 = 0", c.rho1 == 0);
    need("rho2 = 0", c.rho2 == 0);
    need("rho3 != 0", c.rho3 != 0);
    need("s = 0", c.s == 0);
    need("t1 = 0", c.t1 == 0);
  } else if (row == "B1") {
    need("s = 1", c.s == 1);
    need("t1 = r2", c.t1 == c.r2);
  } else if (row == "B2") {
    need("s = 1", c.s == 1);
    need("t1 != r2", c.t1 != c.r2);
    need("a2 = 0", c.a2 == 0);
    need("b1 = 0", c.b1 == 0);
  } else if (row == "B3") {
    need("s != 0, 1", c.s > 1);
    need("t1 = 0", c.t1 == 0);
    need("r2 = 0", c.r2 == 0);
  } else if (row == "B4") {
    need("s != 0, 1", c.s > 1);
    need("t1 != 0", c.t1 != 0);
    need("r2 = 0", c.r2 == 0);
    need("a1 = a2 = b1 = 0", (c.a1 | c.a2 | c.b1) == 0);
  } else if (row == "B5") {
    need("s != 0, 1", c.s > 1);
    need("t1 = rs2", c.t1 == rs);
    need("a1 = a2 = b2 = 0", (c.a1 | c.a2 | c.b2) == 0);
    need("b1 != 0", c.b1 != 0);
  } else if (row == "B6") {
    need("s != 0, 1", c.s > 1);
    need("t1 != rs2", c.t1 != rs);
    need("a1 = b1 = b2 = 0", (c.a1 | c.b1 | c.b2) == 0);
    need("a2 != 0", c.a2 != 0);
  } else if (row == "B7") {
    need("s != 0, 1", c.s > 1);
    need("r2 = 0", c.r2 == 0);
    need("a1 = b1 = 0", (c.a1 | c.b1) == 0);
  } else if (row == "B8") {
    need("s = 1", c.s == 1);
    need("t1 = 0", c.t1 == 0);
    need("a2 = 0", c.a2 == 0);
    need("b2 = a1", c.b2 == c.a1);
  } else if (row == "B9") {
    need("s != 1", c.s != 1);
    need("t1 = 0", c.t1 == 0);
    need("a1 = a2 = b2 = 0", (c.a1 | c.a2 | c.b2) == 0);
    need("b1 != 0", c.b1 != 0);
  } else if (row == "B10") {
    need("s = 1", c.s == 1);
    need("t1 != 0", c.t1 != 0);
    need("a2 = b1 = 0", (c.a2 | c.b1) == 0);
    need("b2 = a1", c.b2 == c.a1);
    need("a1 != 0", c.a1 != 0);
  } else {
    throw Error(ErrorKind::Format, "unknown table row " + row);
  }
  for (const auto& [what, ok] : conds)
    if (!ok) return row + ": " + what;
  return {};
}

Elem table_lambda_form(const std::string& row, const Table12Coords& c, const Field& f, Elem l) {
  Elem l2 = f.sqr(l), one_l = 1 ^ l;
  if (row[0] == 'B') return 0;
  if (row == "A1") return c.rho1;
  if (row == "A2") return c.rho1 ^ f.mul(l2, c.rho2);
  if (row == "A3") return f.mul(one_l, c.rho1) ^ f.mul(l, c.rho3);
  if (row == "A4") return f.mul(l, c.rho1 ^ f.mul(one_l, c.rho2) ^ c.rho3) ^ c.rho1;
  if (row == "A5") return f.mul(l, c.rho1 ^ f.mul(one_l, c.rho2)) ^ f.mul(l, c.rho3) ^ c.rho1;
  if (row == "A6") return f.mul(l, c.rho1 ^ c.rho3) ^ c.rho1;
  if (row == "A7") return f.mul(c.rho1, one_l);
  if (row == "A8") return f.mul(l, c.rho2 ^ c.rho3 ^ f.mul(l, c.rho2));
  if (row == "A9") return f.mul(l2, c.rho2);
  if (row == "A10") return f.mul(l, c.rho3);
  throw Error(ErrorKind::Format, "unknown table row " + row);
}

HomLieSuper2 build(const std::string& name, const Params& p, const Field& f, const BuildOptions& opt) {
  const FamilyDescriptor& d = family(name);
  for (const auto& [k, v] : p) {
    if (v >= f.size()) throw Error(ErrorKind::ConstraintViolation, "parameter " + k + " outside " + f.name());
  }
  if (name == "oo") return make_oo(f, 0);
  if (name == "oo_alpha") return make_oo(f, get(p, "eps"));
  if (name == "dim11") {
    Elem lambda = get(p, "lambda", 1), rho = get(p, "rho", 1);
    if (lambda == 0) throw Error(ErrorKind::ConstraintViolation, "dim11: lambda != 0");
    if (rho == 0) throw Error(ErrorKind::ConstraintViolation, "dim11: rho != 0");
    HomLieSuper2 g(f, SuperBasis({"e", "f"}, {0, 1}));
    g.set_sigma(1, g.by_labels({{rho, "e"}}));
    g.set_bracket(0, 1, g.by_labels({{f.mul(rho, lambda), "f"}}));
    Matrix a = Matrix::identity(f, 2);
    a.at(1, 1) = lambda;
    g.set_alpha(a);
    return g;
  }
  Table12Coords c;
  c.jordan = is_jordan_row(name);
  auto has = [&](const char* k) { return p.count(k) > 0; };
  c.rho1 = get(p, "rho1");
  c.rho2 = get(p, "rho2");
  c.rho3 = get(p, "rho3");
  c.t1 = get(p, "t1");
  c.r2 = get(p, "r2");
  c.a1 = get(p, "a1");
  c.a2 = get(p, "a2");
  c.b1 = get(p, "b1");
  c.b2 = get(p, "b2");
  c.s = get(p, "s", f.sqr(c.t1));
  // Parameters pinned by the row.
  if (name == "A1" && !has("rho3")) c.rho3 = c.rho1 ^ c.rho2;
  if (name == "A2") {
    if (!has("rho3")) c.rho3 = c.rho1 ^ c.rho2;
    if (!has("r2")) c.r2 = c.t1;
  }
  if (name == "A4" && !has("r2")) c.r2 = c.t1;
  if ((name == "A5" || name == "A6") && !has("rho3") && c.t1 != 0)
    c.rho3 = f.mul(f.mul(1 ^ c.t1, f.inv(c.t1)), c.rho1) ^ c.rho2;
  if (name == "A7") {
    if (!has("s")) c.s = 1;
    if (!has("t1")) c.t1 = 1;
  }
  if (name == "A9" && !has("rho3")) c.rho3 = c.rho2;
  if (name[0] == 'B' && !has("s") && (name == "B1" || name == "B2" || name == "B8" || name == "B10")) c.s = 1;
  if (name == "B1" && !has("r2")) c.r2 = c.t1;
  if (name == "B5" && !has("t1")) c.t1 = opt.rs2 == Rs2Reading::SR2 ? f.mul(c.s, c.r2) : c.r2;
  if ((name == "B8" || name == "B10") && !has("b2")) c.b2 = c.a1;
  std::string v = row_violation(name, c, f, opt.rs2);
  if (!v.empty()) throw Error(ErrorKind::ConstraintViolation, v + " (" + d.conditions + ")");
  return make_table12(f, c);
}

std::optional<Table12Coords> table12_coords(const HomLieSuper2& g) {
  if (g.dim() != 3 || g.basis().parities != std::vector<int>{0, 1, 1}) return std::nullopt;
  const Matrix& a = g.alpha();
  Table12Coords c;
  c.s = a.at(0, 0);
  c.t1 = a.at(1, 1);
  if (a.at(2, 1) != 0) return std::nullopt;
  if (a.at(1, 2) == 0) {
    c.r2 = a.at(2, 2);
  } else if (a.at(1, 2) == 1 && a.at(2, 2) == c.t1) {
    c.jordan = true;
  } else {
    return std::nullopt;
  }
  c.a1 = g.c(0, 1, 1);
  c.a2 = g.c(0, 1, 2);
  c.b1 = g.c(0, 2, 1);
  c.b2 = g.c(0, 2, 2);
  c.rho1 = g.sigma(1).e[0];
  c.rho2 = g.sigma(2).e[0];
  c.rho3 = g.c(1, 2, 0) ^ c.rho1 ^ c.rho2;
  return c;
}

std::vector<std::string> match_to_family(const HomLieSuper2& g, Rs2Reading rs2) {
  std::vector<std::string> out;
  const auto& par = g.basis().parities;
  if (g.dim() == 2 && par == std::vector<int>{0, 1}) {
    const Matrix& a = g.alpha();
    Elem lambda = a.at(1, 1), rho = g.sigma(1).e[0];
    bool ok = a.at(0, 0) == 1 && a.at(0, 1) == 0 && a.at(1, 0) == 0 && lambda != 0 && rho != 0 &&
              g.c(0, 1, 1) == g.field().mul(rho, lambda);
    if (ok) out.push_back("dim11");
    return out;
  }
  if (g.dim() != 3 || par != std::vector<int>{0, 1, 1})
    throw Error(ErrorKind::Unsupported, "family matching needs superdimension (1|1) or (1|2)");
  auto c = table12_coords(g);
  if (!c) return out;
  for (const auto& d : families()) {
    if (d.sdim != "1|2") continue;
    if (row_violation(d.name, *c, g.field(), rs2).empty()) out.push_back(d.name);
  }
  return out;
}

unsigned worker_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HOMLIE2_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

std::vector<Matrix> alpha_candidates(std::size_t m, std::size_t n, const Field& f, AlphaShape shape) {
  std::size_t dim = m + n;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<Matrix> out;
  if (shape == AlphaShape::All) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if ((i < m) == (j < m)) slots.emplace_back(i, j);
  } else {
    for (std::size_t i = 0; i < m; ++i) slots.emplace_back(i, i);
    if (shape == AlphaShape::Diagonal || n < 2) {
      for (std::size_t i = m; i < dim; ++i) slots.emplace_back(i, i);
    } else {
      slots.emplace_back(m, m);  // shared eigenvalue of the odd Jordan block
    }
  }
  std::uint64_t q = f.size(), total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix a(f, dim, dim);
    std::uint64_t c = code;
    for (const auto& [i, j] : slots) {
      a.at(i, j) = static_cast<Elem>(c % q);
      c /= q;
    }
    if (shape == AlphaShape::Jordan && n >= 2)
      for (std::size_t i = m + 1; i < dim; ++i) {
        a.at(i, i) = a.at(m, m);
        a.at(i - 1, i) = 1;
      }
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<Elem> structure_key(const HomLieSuper2& g) {
  std::vector<Elem> k;
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) k.push_back(g.c(i, j, l));
  for (std::size_t i = 0; i < n; ++i) k.insert(k.end(), g.sigma(i).e.begin(), g.sigma(i).e.end());
  k.insert(k.end(), g.alpha().e.begin(), g.alpha().e.end());
  return k;
}

std::vector<Elem> canonical_key(const HomLieSuper2& g, std::size_t m) {
  std::size_t n = g.dim();
  std::vector<std::size_t> ev(m), od(n - m);
  std::iota(ev.begin(), ev.end(), 0);
  std::iota(od.begin(), od.end(), m);
  std::vector<Elem> best;
  do {
    do {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < m; ++i) perm[i] = ev[i];
      for (std::size_t i = m; i < n; ++i) perm[i] = od[i - m];
      auto k = structure_key(permute_basis(g, perm));
      if (best.empty() || k < best) best = k;
    } while (std::next_permutation(od.begin(), od.end()));
  } while (std::next_permutation(ev.begin(), ev.end()));
  return best;
}

}  // namespace

std::vector<HomLieSuper2> enumerate_structures(std::size_t m, std::size_t n, const Field& f, AlphaShape shape,
                                               const EnumerationOptions& opt) {
  if (m + n > 3 || f.size() > 4)
    throw Error(ErrorKind::TooLarge, "enumeration is limited to m + n <= 3 and fields of size <= 4");
  std::size_t dim = m + n;
  SuperBasis basis = SuperBasis::standard(m, n);
  if (m == 1) basis.labels[0] = "e";
  if (n == 1) basis.labels[m] = "f";
  if (n > 1)
    for (std::size_t i = 0; i < n; ++i) basis.labels[m + i] = "f" + std::to_string(i + 1);
  struct Slot {
    bool sigma;
    std::size_t i, j, k;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if ((basis.parities[i] + basis.parities[j]) % 2 == basis.parities[k]) slots.push_back({false, i, j, k});
  for (std::size_t i = m; i < dim; ++i)
    for (std::size_t k = 0; k < m; ++k) slots.push_back({true, i, 0, k});

  std::vector<Matrix> alphas = alpha_candidates(m, n, f, shape);
  std::vector<std::vector<HomLieSuper2>> found(alphas.size());
  std::uint64_t q = f.size(), total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) total *= q;

  auto work = [&](std::size_t ai) {
    HomLieSuper2 g(f, basis);
    g.set_alpha(alphas[ai]);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      std::vector<Vector> sig(dim, g.zero());
      for (const Slot& s : slots) {
        Elem v = static_cast<Elem>(c % q);
        c /= q;
        if (s.sigma) sig[s.i].e[s.k] = v;
        else g.set_c(s.i, s.j, s.k, v);
      }
      for (std::size_t i = m; i < dim; ++i) g.set_sigma(i, sig[i]);
      if (check_axioms(g, opt.require_multiplicative).ok()) found[ai].push_back(g);
    }
  };
  unsigned nt = std::min<std::size_t>(worker_threads(opt.threads), alphas.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t ai = next++; ai < alphas.size(); ai = next++) work(ai);
    });
  for (auto& t : pool) t.join();

  std::vector<HomLieSuper2> out;
  std::set<std::vector<Elem>> seen;
  for (auto& bucket : found)
    for (auto& g : bucket) {
      if (opt.canonicalize && !seen.insert(canonical_key(g, m)).second) continue;
      out.push_back(std::move(g));
    }
  return out;
}

ModuleStub oo_module_stub(const Field& f, Elem d1, Elem d2, Elem e1, Elem e2) {
  ModuleStub s{SuperBasis({"m1", "m3", "m2"}, {0, 0, 1}), Matrix(f, 3, 3)};
  s.beta.at(0, 0) = d1;
  s.beta.at(1, 0) = d2;
  s.beta.at(0, 1) = e1;
  s.beta.at(1, 1) = e2;
  s.beta.at(2, 2) = 1;
  return s;
}

}  // namespace homlie2
