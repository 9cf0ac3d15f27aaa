#include "homlie2/deform.hpp"

#include <random>

namespace homlie2 {

namespace {

struct Probe {
  AxiomVerdict v;
  explicit Probe(std::string name) { v.axiom = std::move(name); }
  template <class Where>
  void compare(Where&& where, const Vector& lhs, const Vector& rhs) {
    if (v.pass && !(lhs == rhs)) {
      v.pass = false;
      v.witness = Witness{std::string(where()), lhs, rhs};
    }
  }
};

std::string tk(std::size_t k) { return "t^" + std::to_string(k) + ": "; }

}  // namespace

TruncatedDeformation::TruncatedDeformation(HomLieSuper2 g, std::vector<CochainPair> t)
    : algebra(std::move(g)), terms(std::move(t)) {
  for (const auto& c : terms) {
    if (c.degree() != 2 || c.layout->alg_dim != algebra.dim() || c.layout->mod_dim != algebra.dim())
      throw Error(ErrorKind::Shape, "deformation terms are degree-2 cochains with adjoint coefficients");
  }
}

Vector TruncatedDeformation::c(std::size_t i, const Vector& x, const Vector& y) const {
  if (i == 0) return bracket_eval(algebra, x, y);
  if (i > terms.size()) return algebra.zero();
  return terms[i - 1].eval_c({x, y});
}

Vector TruncatedDeformation::p(std::size_t i, const Vector& x) const {
  if (i == 0) return squaring_eval(algebra, x);
  if (i > terms.size()) return algebra.zero();
  return terms[i - 1].eval_p(x, {});
}

CochainPair TruncatedDeformation::zero_term() const {
  return CochainPair(make_layout(algebra, adjoint_rep(algebra), 2), algebra.field());
}

bool DeformationReport::ok() const {
  for (const auto& r : per_order)
    if (!r.ok()) return false;
  return true;
}

std::string DeformationReport::summary() const {
  for (std::size_t k = 0; k < per_order.size(); ++k)
    if (!per_order[k].ok()) return tk(k) + per_order[k].summary();
  return "valid through order " + std::to_string(per_order.empty() ? 0 : per_order.size() - 1);
}

DeformationReport check_deformation(const TruncatedDeformation& d) {
  const HomLieSuper2& g = d.algebra;
  const SuperBasis& b = g.basis();
  std::size_t n = g.dim();
  Representation ad = adjoint_rep(g);
  DeformationReport out;
  out.per_order.push_back(check_axioms(g));
  std::vector<Vector> al(n);
  for (std::size_t i = 0; i < n; ++i) al[i] = g.alpha().column(i);
  auto tests = odd_quadratic_test_set(b, g.field());

  for (std::size_t k = 1; k <= d.order(); ++k) {
    AxiomReport rep;
    const CochainPair& term = d.terms[k - 1];
    AxiomVerdict coch;
    coch.axiom = "cochain";
    if (term.parity() != 0 || !is_cochain(g, ad, term)) {
      coch.pass = false;
      coch.witness = Witness{term.parity() != 0 ? "term is not even" : "term violates equivariance", g.zero(), g.zero()};
    }
    rep.add(coch);

    Probe jac("hom-jacobi");
    for (std::size_t i = 0; i < n && jac.v.pass; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t l = j; l < n; ++l) {
          if (b.parities[i] + b.parities[j] + b.parities[l] > 1) continue;
          Vector x = g.unit(i), y = g.unit(j), z = g.unit(l);
          Vector s = g.zero();
          for (std::size_t a = 0; a <= k; ++a) {
            s += d.c(a, al[i], d.c(k - a, y, z));
            s += d.c(a, al[j], d.c(k - a, z, x));
            s += d.c(a, al[l], d.c(k - a, x, y));
          }
          jac.compare([&] { return tk(k) + "(" + b.labels[i] + "," + b.labels[j] + "," + b.labels[l] + ")"; }, s,
                      g.zero());
        }
    rep.add(jac.v);

    Probe sq("squaring-jacobi");
    for (const auto& [name, x] : tests) {
      Vector ax = g.alpha().apply(x);
      for (std::size_t j = 0; j < n; ++j) {
        Vector y = g.unit(j);
        Vector lhs = g.zero(), rhs = g.zero();
        for (std::size_t a = 0; a <= k; ++a) {
          lhs += d.c(a, d.p(k - a, x), al[j]);
          rhs += d.c(a, ax, d.c(k - a, x, y));
        }
        sq.compare([&] { return tk(k) + "x=" + name + ", y=" + b.labels[j]; }, lhs, rhs);
      }
    }
    rep.add(sq.v);

    Probe mb("multiplicative-bracket"), ms("multiplicative-squaring");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        mb.compare([&] { return tk(k) + "(" + b.labels[i] + "," + b.labels[j] + ")"; },
                   g.alpha().apply(d.c(k, g.unit(i), g.unit(j))), d.c(k, al[i], al[j]));
    for (std::size_t i : b.odd_indices())
      ms.compare([&] { return tk(k) + "x=" + b.labels[i]; }, g.alpha().apply(d.p(k, g.unit(i))), d.p(k, al[i]));
    rep.add(mb.v);
    rep.add(ms.v);
    out.per_order.push_back(rep);
  }
  return out;
}

bool first_order_is_cocycle(const TruncatedDeformation& d) {
  if (d.order() == 0) return true;
  return apply_differential(d.algebra, adjoint_rep(d.algebra), d.terms[0]).is_zero();
}

namespace {

// C_n and Q_n at arbitrary arguments, n = d.order() + 1.
struct ObstructionEval {
  const TruncatedDeformation& d;
  std::size_t n;

  Vector C(const Vector& x, const Vector& y, const Vector& z) const {
    const Matrix& a = d.algebra.alpha();
    Vector s = d.algebra.zero();
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = n - i;
      s += d.c(i, d.c(j, x, y), a.apply(z));
      s += d.c(i, d.c(j, y, z), a.apply(x));
      s += d.c(i, d.c(j, z, x), a.apply(y));
    }
    return s;
  }

  Vector Q(const Vector& x, const Vector& y) const {
    const Matrix& a = d.algebra.alpha();
    Vector s = d.algebra.zero();
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = n - i;
      s += d.c(i, d.p(j, x), a.apply(y));
      s += d.c(i, d.c(j, x, y), a.apply(x));
    }
    return s;
  }
};

Vector random_odd(const HomLieSuper2& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, Elem(g.field().size() - 1));
  Vector v = g.zero();
  for (std::size_t i : g.basis().odd_indices()) v.e[i] = dist(rng);
  return v;
}

Vector random_vec(const HomLieSuper2& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, Elem(g.field().size() - 1));
  Vector v = g.zero();
  for (auto& e : v.e) e = dist(rng);
  return v;
}

}  // namespace

ObstructionPair obstruction(const TruncatedDeformation& d) {
  const HomLieSuper2& g = d.algebra;
  Representation ad = adjoint_rep(g);
  auto l3 = make_layout(g, ad, 3);
  ObstructionPair out;
  out.pair = CochainPair(l3, g.field());
  ObstructionEval ev{d, d.order() + 1};
  for (auto m : l3->c_masks) {
    auto t = l3->tuple(m);
    out.pair.set_c(t, ev.C(g.unit(t[0]), g.unit(t[1]), g.unit(t[2])));
  }
  for (const auto& [i, m] : l3->p_keys) {
    auto t = l3->tuple(m);
    out.pair.set_p(i, t, ev.Q(g.unit(i), g.unit(t[0])));
  }
  if (g.basis().odd_count() > 0) {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 8 && out.compatible; ++trial) {
      Vector x1 = random_odd(g, rng), x2 = random_odd(g, rng), y = random_vec(g, rng);
      Vector lhs = ev.Q(x1 + x2, y) + ev.Q(x1, y) + ev.Q(x2, y);
      if (!(lhs == ev.C(x1, x2, y)) || !(out.pair.eval_p(x1, {y}) == ev.Q(x1, y))) out.compatible = false;
    }
  }
  out.closed = apply_differential(g, ad, out.pair).is_zero();
  return out;
}

ExtensionResult extend_order(const TruncatedDeformation& d) {
  const HomLieSuper2& g = d.algebra;
  const Field& f = g.field();
  Representation ad = adjoint_rep(g);
  ExtensionResult res;
  res.obstruction = obstruction(d);
  CochainSpace x2 = cochain_space(g, ad, 2, ParitySel::Even);
  Matrix d2 = differential_matrix(g, ad, 2);
  const Vector& target = res.obstruction.pair.coords;
  std::optional<Vector> sol;
  if (x2.dim() > 0) {
    std::vector<Vector> img;
    for (const auto& v : x2.basis) img.push_back(d2.apply(v));
    sol = solve(Matrix::from_columns(f, target.size(), img), target);
  } else if (target.is_zero()) {
    sol = Vector(f, 0);
  }
  if (sol) {
    Vector w(f, x2.layout->size());
    for (std::size_t i = 0; i < sol->size(); ++i) w.axpy(sol->e[i], x2.basis[i]);
    std::vector<CochainPair> terms = d.terms;
    terms.emplace_back(x2.layout, w);
    res.deformation = TruncatedDeformation(g, terms);
    res.extended = true;
    return res;
  }
  res.deformation = d;
  if (!res.obstruction.closed) return res;
  // Coordinates modulo even coboundaries against a greedy basis of even H^3.
  std::vector<Vector> bvecs;
  for (const auto& v : x2.basis) bvecs.push_back(d2.apply(v));
  SubspaceBasis span = SubspaceBasis::span(f, target.size(), bvecs);
  std::vector<Vector> reps;
  for (const auto& z : cocycle_basis(g, ad, 3, ParitySel::Even))
    if (span.insert(z.coords)) reps.push_back(z.coords);
  std::vector<Vector> cols = reps;
  cols.insert(cols.end(), bvecs.begin(), bvecs.end());
  auto coords = solve(Matrix::from_columns(f, target.size(), cols), target);
  if (coords) res.h3_class.assign(coords->e.begin(), coords->e.begin() + reps.size());
  return res;
}

AxiomReport check_equivalence(const TruncatedDeformation& d1, const TruncatedDeformation& d2, const EquivalenceMap& tau,
                              SquaringForm form) {
  if (d1.order() != d2.order() || tau.taus.size() != d1.order())
    throw Error(ErrorKind::Shape, "deformations and equivalence map must share one order");
  if (!(d1.algebra == d2.algebra)) throw Error(ErrorKind::Shape, "deformations of different algebras");
  const HomLieSuper2& g = d1.algebra;
  const SuperBasis& b = g.basis();
  std::size_t n = g.dim(), N = d1.order();
  Matrix id = Matrix::identity(g.field(), n);
  auto T = [&](std::size_t i) -> const Matrix& { return i == 0 ? id : tau.taus[i - 1]; };
  AxiomReport rep;
  Probe shape("tau-even-equivariant");
  for (std::size_t i = 1; i <= N; ++i) {
    const Matrix& t = T(i);
    if (t.rows != n || t.cols != n) throw Error(ErrorKind::Shape, "tau has wrong shape");
    if (!parity_preserving(b, b, t)) shape.compare([&] { return "tau_" + std::to_string(i) + " is not even"; }, g.unit(0), g.zero());
    Matrix comm = t * g.alpha() + g.alpha() * t;
    for (std::size_t j = 0; j < n; ++j)
      shape.compare([&] { return "tau_" + std::to_string(i) + " alpha != alpha tau_" + std::to_string(i); },
                    comm.column(j), g.zero());
  }
  rep.add(shape.v);

  Probe br("bracket"), sq("squaring");
  for (std::size_t k = 1; k <= N; ++k) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Vector ex = g.unit(x), ey = g.unit(y);
        Vector lhs = g.zero(), rhs = g.zero();
        for (std::size_t i = 0; i <= k; ++i) lhs += T(i).apply(d2.c(k - i, ex, ey));
        for (std::size_t i = 0; i <= k; ++i)
          for (std::size_t j = 0; i + j <= k; ++j) rhs += d1.c(i, T(j).apply(ex), T(k - i - j).apply(ey));
        br.compare([&] { return tk(k) + "(" + b.labels[x] + "," + b.labels[y] + ")"; }, lhs, rhs);
      }
    for (const auto& [name, x] : odd_quadratic_test_set(b, g.field())) {
      Vector lhs = g.zero(), rhs = g.zero();
      for (std::size_t i = 0; i <= k; ++i) lhs += T(i).apply(d2.p(k - i, x));
      for (std::size_t i = 0; 2 * i <= k; ++i) rhs += d1.p(k - 2 * i, T(i).apply(x));
      for (std::size_t j = 0; j <= k; ++j)
        for (std::size_t u = 0; u + j <= k; ++u) {
          std::size_t v = k - j - u;
          if (u >= v) continue;
          if (form == SquaringForm::Truncated && j == 0 && u >= 1) continue;
          rhs += d1.c(j, T(u).apply(x), T(v).apply(x));
        }
      sq.compare([&] { return tk(k) + "x=" + name; }, lhs, rhs);
    }
  }
  rep.add(br.v);
  rep.add(sq.v);
  return rep;
}

TruncatedDeformation gauge_transform_first_order(const TruncatedDeformation& d, const Matrix& tau1) {
  const HomLieSuper2& g = d.algebra;
  if (d.order() == 0) throw Error(ErrorKind::Shape, "deformation has no first-order term");
  Representation ad = adjoint_rep(g);
  auto l1 = make_layout(g, ad, 1);
  CochainPair t(l1, g.field());
  for (std::size_t j = 0; j < g.dim(); ++j) t.set_c({j}, tau1.column(j));
  if (t.parity() != 0 || !is_cochain(g, ad, t))
    throw Error(ErrorKind::NotACochain, "tau_1 must be even and commute with alpha");
  std::vector<CochainPair> terms = d.terms;
  terms[0] = terms[0] + apply_differential(g, ad, t);
  return TruncatedDeformation(g, terms);
}

std::optional<EquivalenceMap> gauge_first_order(const TruncatedDeformation& d) {
  const HomLieSuper2& g = d.algebra;
  if (d.order() == 0) throw Error(ErrorKind::Shape, "deformation has no first-order term");
  Representation ad = adjoint_rep(g);
  const Field& f = g.field();
  CochainSpace x1 = cochain_space(g, ad, 1, ParitySel::Even);
  const Vector& target = d.terms[0].coords;
  if (x1.dim() == 0) {
    if (!target.is_zero()) return std::nullopt;
    return EquivalenceMap{{Matrix(f, g.dim(), g.dim())}};
  }
  Matrix d1 = differential_matrix(g, ad, 1);
  std::vector<Vector> img;
  for (const auto& v : x1.basis) img.push_back(d1.apply(v));
  auto sol = solve(Matrix::from_columns(f, target.size(), img), target);
  if (!sol) return std::nullopt;
  Vector w(f, x1.layout->size());
  for (std::size_t i = 0; i < sol->size(); ++i) w.axpy(sol->e[i], x1.basis[i]);
  CochainPair t(x1.layout, w);
  Matrix tau(f, g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) tau.set_column(j, t.c_at({j}));
  EquivalenceMap out;
  out.taus.push_back(tau);
  for (std::size_t i = 1; i < d.order(); ++i) out.taus.emplace_back(f, g.dim(), g.dim());
  return out;
}

}  // namespace homlie2
