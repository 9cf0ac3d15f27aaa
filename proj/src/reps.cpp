#include "homlie2/reps.hpp"

#include <algorithm>

namespace homlie2 {

Representation::Representation(HomLieSuper2 g, SuperBasis module)
    : g_(std::move(g)), mb_(std::move(module)),
      act_(g_.dim(), Matrix(g_.field(), mb_.size(), mb_.size())),
      beta_(Matrix::identity(g_.field(), mb_.size())) {}

void Representation::set_action(std::size_t i, const Matrix& m) {
  if (m.rows != module_dim() || m.cols != module_dim()) throw Error(ErrorKind::Shape, "action matrix has wrong shape");
  act_.at(i) = m;
}

void Representation::set_beta(const Matrix& b) {
  if (b.rows != module_dim() || b.cols != module_dim()) throw Error(ErrorKind::Shape, "beta has wrong shape");
  beta_ = b;
}

Matrix Representation::rho(const Vector& x) const {
  if (x.size() != g_.dim()) throw Error(ErrorKind::Shape, "algebra vector has wrong length");
  Matrix m(field(), module_dim(), module_dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.e[i])
      for (std::size_t t = 0; t < m.e.size(); ++t)
        if (act_[i].e[t]) m.e[t] ^= field().mul(x.e[i], act_[i].e[t]);
  return m;
}

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

}  // namespace

AxiomReport check_representation(const Representation& r) {
  const HomLieSuper2& g = r.algebra();
  const SuperBasis& gb = g.basis();
  const SuperBasis& mb = r.module_basis();
  std::size_t n = g.dim(), d = r.module_dim();
  AxiomReport rep;
  AxiomVerdict par;
  par.axiom = "parity";
  for (std::size_t i = 0; i < n && par.pass; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (r.action(i).at(a, b) && mb.parities[a] != (gb.parities[i] + mb.parities[b]) % 2) {
          par.pass = false;
          par.witness = Witness{"[" + gb.labels[i] + "," + mb.labels[b] + "]", r.module_zero(), r.module_zero()};
        }
  if (par.pass && !parity_preserving(mb, mb, r.beta())) {
    par.pass = false;
    par.witness = Witness{"beta mixes parities", r.module_zero(), r.module_zero()};
  }
  rep.add(par);

  std::vector<Matrix> rho_alpha(n);
  for (std::size_t i = 0; i < n; ++i) rho_alpha[i] = r.rho(g.alpha().column(i));
  Probe twist("twist-compatibility"), jac("mixed-jacobi"), sq("squaring-action");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d; ++b) {
      Vector v = Vector::unit(r.field(), d, b);
      twist.compare([&] { return "x=" + gb.labels[i] + ", v=" + mb.labels[b]; },
                    rho_alpha[i].apply(r.beta().apply(v)), r.beta().apply(r.action(i).apply(v)));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix lhs = r.rho(g.bracket_basis(i, j)) * r.beta();
      Matrix rhs = rho_alpha[i] * r.action(j) + rho_alpha[j] * r.action(i);
      for (std::size_t b = 0; b < d; ++b)
        jac.compare([&] { return "x=" + gb.labels[i] + ", y=" + gb.labels[j] + ", v=" + mb.labels[b]; },
                    lhs.column(b), rhs.column(b));
    }
  for (const auto& [name, x] : odd_quadratic_test_set(gb, g.field())) {
    Matrix lhs = r.rho(squaring_eval(g, x)) * r.beta();
    Matrix rhs = r.rho(g.alpha().apply(x)) * r.rho(x);
    for (std::size_t b = 0; b < d; ++b)
      sq.compare([&] { return "x=" + name + ", v=" + mb.labels[b]; }, lhs.column(b), rhs.column(b));
  }
  rep.add(twist.v);
  rep.add(jac.v);
  rep.add(sq.v);
  return rep;
}

Representation adjoint_rep(const HomLieSuper2& g) {
  Representation r(g, g.basis());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix m(g.field(), g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) m.set_column(j, g.bracket_basis(i, j));
    r.set_action(i, m);
  }
  r.set_beta(g.alpha());
  return r;
}

Representation trivial_rep(const HomLieSuper2& g, std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("m" + std::to_string(i + 1));
  return Representation(g, SuperBasis(labels, std::vector<int>(dim, 0)));
}

HomLieSuper2 semidirect_product(const Representation& r) {
  AxiomReport rep = check_representation(r);
  if (!rep.ok()) throw Error(ErrorKind::InvalidRepresentation, rep.summary());
  const HomLieSuper2& g = r.algebra();
  std::size_t n = g.dim(), d = r.module_dim();
  std::vector<std::string> labels = g.basis().labels;
  std::vector<int> pars = g.basis().parities;
  for (std::size_t a = 0; a < d; ++a) {
    std::string l = r.module_basis().labels[a];
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l = "V." + l;
    labels.push_back(l);
    pars.push_back(r.module_basis().parities[a]);
  }
  HomLieSuper2 h(g.field(), SuperBasis(labels, pars));
  auto lift_g = [&](const Vector& v) {
    Vector w = h.zero();
    for (std::size_t k = 0; k < n; ++k) w.e[k] = v.e[k];
    return w;
  };
  auto lift_m = [&](const Vector& v) {
    Vector w = h.zero();
    for (std::size_t k = 0; k < d; ++k) w.e[n + k] = v.e[k];
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) h.set_bracket(i, j, lift_g(g.bracket_basis(i, j)));
    for (std::size_t a = 0; a < d; ++a) h.set_bracket(i, n + a, lift_m(r.action(i).column(a)));
    if (g.basis().odd(i)) h.set_sigma(i, lift_g(g.sigma(i)));
  }
  Matrix al(g.field(), n + d, n + d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) al.at(i, j) = g.alpha().at(i, j);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) al.at(n + a, n + b) = r.beta().at(a, b);
  h.set_alpha(al);
  return h;
}

HomLieSuper2 gl_hom_structure(std::size_t dim_even, std::size_t dim_odd, const Matrix& beta) {
  std::vector<std::string> l;
  std::vector<int> p;
  for (std::size_t i = 0; i < dim_even + dim_odd; ++i) {
    l.push_back("v" + std::to_string(i + 1));
    p.push_back(i >= dim_even);
  }
  return gl_hom_structure(SuperBasis(l, p), beta);
}

HomLieSuper2 gl_hom_structure(const SuperBasis& module, const Matrix& beta) {
  std::size_t d = module.size();
  if (beta.rows != d || beta.cols != d) throw Error(ErrorKind::Shape, "beta has wrong shape");
  if (!parity_preserving(module, module, beta)) throw Error(ErrorKind::Parity, "beta mixes parities");
  auto binv = beta.inverse();
  if (!binv) throw Error(ErrorKind::NotInvertible, "beta is singular");
  const Field& f = beta.field;
  std::vector<std::string> labels;
  std::vector<int> pars;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      labels.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
      pars.push_back((module.parities[a] + module.parities[b]) % 2);
    }
  HomLieSuper2 h(f, SuperBasis(labels, pars));
  auto unit = [&](std::size_t idx) {
    Matrix m(f, d, d);
    m.e[idx] = 1;
    return m;
  };
  auto flat = [&](const Matrix& m) { return Vector(f, m.e); };
  std::vector<Matrix> conj(d * d);  // beta E beta^-1
  for (std::size_t u = 0; u < d * d; ++u) conj[u] = beta * unit(u) * *binv;
  for (std::size_t u = 0; u < d * d; ++u) {
    for (std::size_t v = u; v < d * d; ++v) {
      Matrix br = conj[u] * unit(v) * *binv + conj[v] * unit(u) * *binv;
      h.set_bracket(u, v, flat(br));
    }
    if (pars[u]) h.set_sigma(u, flat(conj[u] * unit(u) * *binv));
  }
  Matrix ad(f, d * d, d * d);
  for (std::size_t u = 0; u < d * d; ++u) ad.set_column(u, flat(conj[u]));
  h.set_alpha(ad);
  return h;
}

Matrix rep_as_matrix_map(const Representation& r) {
  std::size_t d = r.module_dim();
  Matrix phi(r.field(), d * d, r.algebra().dim());
  for (std::size_t i = 0; i < r.algebra().dim(); ++i) phi.set_column(i, Vector(r.field(), r.action(i).e));
  return phi;
}

AxiomReport check_rep_as_morphism(const Representation& r) {
  HomLieSuper2 gl = gl_hom_structure(r.module_basis(), r.beta());
  return check_morphism(r.algebra(), gl, rep_as_matrix_map(r));
}

std::pair<HomLieSuper2, Representation> twist_representation(const HomLieSuper2& g, const Representation& r,
                                                            const Matrix& alpha, const Matrix& beta) {
  if (!(g.alpha() == Matrix::identity(g.field(), g.dim())))
    throw Error(ErrorKind::Incompatibility, "the algebra must carry the identity twist");
  if (beta.rows != r.module_dim() || beta.cols != r.module_dim()) throw Error(ErrorKind::Shape, "beta has wrong shape");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix lhs = r.rho(alpha.column(i)) * beta;
    Matrix rhs = beta * r.action(i);
    if (!(lhs == rhs))
      throw Error(ErrorKind::Incompatibility, "rho(alpha(x)) beta != beta rho(x) at x=" + g.basis().labels[i]);
  }
  HomLieSuper2 ga = twist_by_morphism(g, alpha);
  Representation out(ga, r.module_basis());
  for (std::size_t i = 0; i < g.dim(); ++i) out.set_action(i, beta * r.action(i));
  out.set_beta(beta);
  return {ga, out};
}

}  // namespace homlie2
