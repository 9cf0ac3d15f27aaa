#include "homlie2/restricted.hpp"

namespace homlie2 {

RestrictedHomLie2::RestrictedHomLie2(HomLieSuper2 g, std::vector<Vector> t) : algebra(std::move(g)), two_map(std::move(t)) {
  if (algebra.basis().odd_count() != 0) throw Error(ErrorKind::Parity, "a restricted Hom-Lie algebra has no odd part");
  if (two_map.size() != algebra.dim()) throw Error(ErrorKind::Shape, "two_map needs one value per basis vector");
  for (const auto& v : two_map)
    if (v.size() != algebra.dim()) throw Error(ErrorKind::Shape, "two_map value has wrong length");
}

Vector two_map_eval(const RestrictedHomLie2& r, const Vector& x) {
  const HomLieSuper2& g = r.algebra;
  const Field& f = g.field();
  Vector out = g.zero();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!x.e[i]) continue;
    out.axpy(f.sqr(x.e[i]), r.two_map[i]);
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (x.e[j]) out.axpy(f.mul(x.e[i], x.e[j]), g.bracket_basis(i, j));
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, Vector>> basis_and_pairs(const HomLieSuper2& g) {
  std::vector<std::pair<std::string, Vector>> out;
  const auto& l = g.basis().labels;
  for (std::size_t i = 0; i < g.dim(); ++i) out.emplace_back(l[i], g.unit(i));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) out.emplace_back(l[i] + "+" + l[j], g.unit(i) + g.unit(j));
  return out;
}

}  // namespace

AxiomReport check_2_structure(const RestrictedHomLie2& r, bool require_multiplicative) {
  const HomLieSuper2& g = r.algebra;
  AxiomReport rep;
  AxiomVerdict shape;
  shape.axiom = "shape";
  if (g.basis().odd_count() != 0 || r.two_map.size() != g.dim()) {
    shape.pass = false;
    shape.witness = Witness{"two_map shape", g.zero(), g.zero()};
    rep.add(shape);
    return rep;
  }
  rep.add(shape);

  AxiomVerdict r1;
  r1.axiom = "r1";
  for (const auto& [name, x] : basis_and_pairs(g)) {
    Vector x2 = two_map_eval(r, x);
    Vector ax = g.alpha().apply(x);
    for (std::size_t j = 0; j < g.dim() && r1.pass; ++j) {
      Vector lhs = bracket_eval(g, x2, g.alpha().column(j));
      Vector rhs = bracket_eval(g, ax, bracket_eval(g, x, g.unit(j)));
      if (!(lhs == rhs)) {
        r1.pass = false;
        r1.witness = Witness{"x=" + name + ", y=" + g.basis().labels[j], lhs, rhs};
      }
    }
    if (!r1.pass) break;
  }
  rep.add(r1);

  AxiomVerdict mult;
  mult.axiom = "two-map-multiplicative";
  if (!require_multiplicative) {
    mult.skipped = true;
  } else {
    for (const auto& [name, x] : basis_and_pairs(g)) {
      Vector lhs = g.alpha().apply(two_map_eval(r, x));
      Vector rhs = two_map_eval(r, g.alpha().apply(x));
      if (!(lhs == rhs)) {
        mult.pass = false;
        mult.witness = Witness{"x=" + name, lhs, rhs};
        break;
      }
    }
  }
  rep.add(mult);
  return rep;
}

RestrictedHomLie2 twist_2_structure(const RestrictedHomLie2& g, const Matrix& alpha) {
  const HomLieSuper2& a = g.algebra;
  if (!(a.alpha() == Matrix::identity(a.field(), a.dim())))
    throw Error(ErrorKind::Incompatibility, "twisting expects an ordinary restricted Lie algebra");
  AxiomReport m = check_morphism(a, a, alpha);
  if (!m.ok()) throw Error(ErrorKind::InvalidMorphism, m.summary());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector lhs = alpha.apply(g.two_map[i]);
    Vector rhs = two_map_eval(g, alpha.column(i));
    if (!(lhs == rhs))
      throw Error(ErrorKind::InvalidMorphism, "alpha(x^[2]) != alpha(x)^[2] at x=" + a.basis().labels[i]);
  }
  std::vector<Vector> t;
  for (const auto& v : g.two_map) t.push_back(alpha.apply(v));
  return RestrictedHomLie2(twist_by_morphism(a, alpha), std::move(t));
}

HomLieSuper2 queerify(const RestrictedHomLie2& r) {
  AxiomReport rep = check_2_structure(r);
  if (!rep.ok()) throw Error(ErrorKind::ConstraintViolation, "invalid 2-structure: " + rep.summary());
  const HomLieSuper2& g = r.algebra;
  std::size_t n = g.dim();
  std::vector<std::string> labels = g.basis().labels;
  std::vector<int> pars(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("Pi_" + g.basis().labels[i]);
    pars.push_back(1);
  }
  HomLieSuper2 h(g.field(), SuperBasis(labels, pars));
  auto lift = [&](const Vector& v, std::size_t shift) {
    Vector w = h.zero();
    for (std::size_t k = 0; k < n; ++k) w.e[shift + k] = v.e[k];
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector b = g.bracket_basis(i, j);
      if (i <= j) {
        h.set_bracket(i, j, lift(b, 0));
        h.set_bracket(n + i, n + j, lift(b, 0));
      }
      h.set_bracket(n + i, j, lift(b, n));
    }
    h.set_sigma(n + i, lift(r.two_map[i], 0));
  }
  Matrix al(g.field(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) al.at(i, j) = al.at(n + i, n + j) = g.alpha().at(i, j);
  h.set_alpha(al);
  return h;
}

CommuteVerdict check_queerify_twist_commute(const RestrictedHomLie2& g, const Matrix& alpha) {
  RestrictedHomLie2 twisted = twist_2_structure(g, alpha);
  HomLieSuper2 rhs = queerify(twisted);
  std::size_t n = g.algebra.dim();
  Matrix at(g.algebra.field(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at.at(i, j) = at.at(n + i, n + j) = alpha.at(i, j);
  HomLieSuper2 lhs = twist_by_morphism(queerify(g), at);
  CommuteVerdict v;
  const auto& l = lhs.basis().labels;
  for (std::size_t i = 0; i < 2 * n && v.difference.empty(); ++i) {
    for (std::size_t j = i; j < 2 * n; ++j)
      if (!(lhs.bracket_basis(i, j) == rhs.bracket_basis(i, j))) {
        v.difference = "bracket [" + l[i] + "," + l[j] + "]";
        break;
      }
    if (v.difference.empty() && lhs.basis().odd(i) && !(lhs.sigma(i) == rhs.sigma(i)))
      v.difference = "squaring s(" + l[i] + ")";
  }
  if (v.difference.empty() && !(lhs.alpha() == rhs.alpha())) v.difference = "twist";
  v.equal = v.difference.empty();
  return v;
}

RestrictedHomLie2 restricted_line(const Field& f) {
  HomLieSuper2 g(f, SuperBasis({"e"}, {0}));
  return RestrictedHomLie2(g, {g.unit(0)});
}

RestrictedHomLie2 restricted_affine(const Field& f) {
  HomLieSuper2 g(f, SuperBasis({"e1", "e2"}, {0, 0}));
  g.set_bracket(0, 1, g.unit(1));
  return RestrictedHomLie2(g, {g.unit(0), g.zero()});
}

}  // namespace homlie2
