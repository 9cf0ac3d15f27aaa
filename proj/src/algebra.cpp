#include "homlie2/algebra.hpp"

#include <algorithm>
#include <set>

namespace homlie2 {

ParitySel parse_parity_sel(const std::string& s) {
  if (s == "even") return ParitySel::Even;
  if (s == "odd") return ParitySel::Odd;
  if (s == "both") return ParitySel::Both;
  throw Error(ErrorKind::Format, "parity must be even, odd or both, got '" + s + "'");
}

SuperBasis::SuperBasis(std::vector<std::string> l, std::vector<int> p) : labels(std::move(l)), parities(std::move(p)) {
  if (labels.size() != parities.size()) throw Error(ErrorKind::Shape, "labels and parities differ in length");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (parities[i] != 0 && parities[i] != 1) throw Error(ErrorKind::Parity, "parity must be 0 or 1");
    if (!seen.insert(labels[i]).second) throw Error(ErrorKind::Format, "duplicate basis label " + labels[i]);
  }
}

SuperBasis SuperBasis::standard(std::size_t m, std::size_t n, const std::string& even, const std::string& odd) {
  std::vector<std::string> l;
  std::vector<int> p;
  for (std::size_t i = 0; i < m; ++i) {
    l.push_back(even + std::to_string(i + 1));
    p.push_back(0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(odd + std::to_string(i + 1));
    p.push_back(1);
  }
  return SuperBasis(l, p);
}

std::size_t SuperBasis::even_count() const {
  return static_cast<std::size_t>(std::count(parities.begin(), parities.end(), 0));
}

std::vector<std::size_t> SuperBasis::odd_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < size(); ++i)
    if (odd(i)) r.push_back(i);
  return r;
}

std::vector<std::size_t> SuperBasis::even_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < size(); ++i)
    if (!odd(i)) r.push_back(i);
  return r;
}

std::size_t SuperBasis::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  throw Error(ErrorKind::Format, "unknown basis label " + label);
}

int vector_parity(const SuperBasis& b, const Vector& v) {
  bool ev = false, od = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.e[i]) (b.odd(i) ? od : ev) = true;
  if (ev && od) return -1;
  return od ? 1 : 0;
}

bool parity_preserving(const SuperBasis& src, const SuperBasis& dst, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) && dst.parities[i] != src.parities[j]) return false;
  return true;
}

std::string describe(const SuperBasis& b, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.e[i]) continue;
    if (!s.empty()) s += "+";
    if (v.e[i] != 1) s += std::to_string(v.e[i]) + "*";
    s += b.labels[i];
  }
  return s.empty() ? "0" : s;
}

HomLieSuper2::HomLieSuper2(const Field& f, SuperBasis b)
    : field_(f), basis_(std::move(b)), c_(basis_.size() * basis_.size() * basis_.size(), 0),
      sigma_(basis_.size(), Vector(f, basis_.size())), alpha_(Matrix::identity(f, basis_.size())) {}

Vector HomLieSuper2::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(field_, dim());
  for (std::size_t k = 0; k < dim(); ++k) v.e[k] = c(i, j, k);
  return v;
}

void HomLieSuper2::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != dim()) throw Error(ErrorKind::Shape, "bracket value has wrong length");
  for (std::size_t k = 0; k < dim(); ++k) {
    c_[(i * dim() + j) * dim() + k] = v.e[k];
    c_[(j * dim() + i) * dim() + k] = v.e[k];
  }
}

void HomLieSuper2::set_c(std::size_t i, std::size_t j, std::size_t k, Elem v) {
  c_[(i * dim() + j) * dim() + k] = v;
  c_[(j * dim() + i) * dim() + k] = v;
}

void HomLieSuper2::set_sigma(std::size_t i, const Vector& v) {
  if (v.size() != dim()) throw Error(ErrorKind::Shape, "squaring value has wrong length");
  if (!basis_.odd(i) && !v.is_zero()) throw Error(ErrorKind::Parity, "squaring is defined on odd basis vectors only");
  sigma_[i] = v;
}

void HomLieSuper2::set_alpha(const Matrix& a) {
  if (a.rows != dim() || a.cols != dim()) throw Error(ErrorKind::Shape, "twist matrix has wrong shape");
  field_.require_same(a.field);
  alpha_ = a;
}

Vector HomLieSuper2::by_labels(const std::vector<std::pair<Elem, std::string>>& terms) const {
  Vector v = zero();
  for (const auto& [c, l] : terms) v.e[basis_.index_of(l)] ^= c;
  return v;
}

Vector bracket_eval(const HomLieSuper2& g, const Vector& x, const Vector& y) {
  std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::Shape, "bracket arguments have wrong length");
  const Field& f = g.field();
  Vector r(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.e[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y.e[j]) continue;
      Elem s = f.mul(x.e[i], y.e[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (Elem c = g.c(i, j, k)) r.e[k] ^= f.mul(s, c);
    }
  }
  return r;
}

Vector squaring_eval(const HomLieSuper2& g, const Vector& x) {
  std::size_t n = g.dim();
  if (x.size() != n) throw Error(ErrorKind::Shape, "squaring argument has wrong length");
  const Field& f = g.field();
  Vector r(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.e[i]) continue;
    if (!g.basis().odd(i)) throw Error(ErrorKind::Parity, "squaring of a vector with an even component");
    r.axpy(f.sqr(x.e[i]), g.sigma(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!x.e[j]) continue;
      Elem s = f.mul(x.e[i], x.e[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (Elem c = g.c(i, j, k)) r.e[k] ^= f.mul(s, c);
    }
  }
  return r;
}

Vector twist_eval(const HomLieSuper2& g, const Vector& x) { return g.alpha().apply(x); }

bool AxiomReport::ok() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

const AxiomVerdict* AxiomReport::find(const std::string& axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

const AxiomVerdict* AxiomReport::first_failure() const {
  for (const auto& v : verdicts)
    if (!v.pass) return &v;
  return nullptr;
}

std::string AxiomReport::summary() const {
  const AxiomVerdict* f = first_failure();
  if (!f) return "all axioms hold";
  std::string s = f->axiom + " fails";
  if (f->witness) s += " at " + f->witness->where;
  return s;
}

void AxiomReport::merge(const AxiomReport& o) {
  verdicts.insert(verdicts.end(), o.verdicts.begin(), o.verdicts.end());
}

std::vector<std::pair<std::string, Vector>> odd_quadratic_test_set(const SuperBasis& b, const Field& f) {
  std::vector<std::pair<std::string, Vector>> r;
  auto odd = b.odd_indices();
  for (std::size_t a : odd) r.emplace_back(b.labels[a], Vector::unit(f, b.size(), a));
  for (std::size_t x = 0; x < odd.size(); ++x)
    for (std::size_t y = x + 1; y < odd.size(); ++y) {
      Vector v = Vector::unit(f, b.size(), odd[x]);
      v.e[odd[y]] = 1;
      r.emplace_back(b.labels[odd[x]] + "+" + b.labels[odd[y]], v);
    }
  return r;
}

namespace {

// Records the first inequality for one axiom.
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

AxiomReport check_structure(const HomLieSuper2& g) {
  AxiomReport rep;
  const SuperBasis& b = g.basis();
  std::size_t n = g.dim();
  Probe par("parity"), sym("symmetry"), cons("odd-bracket-consistency");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector bij = g.bracket_basis(i, j);
      int want = (b.parities[i] + b.parities[j]) % 2;
      int got = vector_parity(b, bij);
      if (!bij.is_zero() && got != want) {
        Vector proj = bij;
        for (std::size_t k = 0; k < n; ++k)
          if (b.parities[k] == want) proj.e[k] = 0;
        par.compare([&] { return "[" + b.labels[i] + "," + b.labels[j] + "]"; }, proj, g.zero());
      }
      sym.compare([&] { return "[" + b.labels[i] + "," + b.labels[j] + "] vs [" + b.labels[j] + "," + b.labels[i] + "]"; }, bij,
                  g.bracket_basis(j, i));
      if (i == j) sym.compare([&] { return "[" + b.labels[i] + "," + b.labels[i] + "]"; }, bij, g.zero());
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& s = g.sigma(i);
    if (s.is_zero()) continue;
    Vector proj = s;
    for (std::size_t k = 0; k < n; ++k)
      if (!b.odd(k)) proj.e[k] = 0;
    if (!b.odd(i)) proj = s;
    par.compare([&] { return "s(" + b.labels[i] + ")"; }, proj, g.zero());
  }
  if (!parity_preserving(b, b, g.alpha())) {
    par.v.pass = false;
    if (!par.v.witness) par.v.witness = Witness{"twist matrix mixes parities", g.zero(), g.zero()};
  }
  auto odd = b.odd_indices();
  for (std::size_t x = 0; x < odd.size(); ++x)
    for (std::size_t y = x + 1; y < odd.size(); ++y) {
      std::size_t i = odd[x], j = odd[y];
      Vector sum = g.unit(i) + g.unit(j);
      Vector polar = squaring_eval(g, sum) + squaring_eval(g, g.unit(i)) + squaring_eval(g, g.unit(j));
      cons.compare([&] { return "[" + b.labels[i] + "," + b.labels[j] + "]"; }, g.bracket_basis(i, j), polar);
    }
  rep.add(par.v);
  rep.add(sym.v);
  rep.add(cons.v);
  return rep;
}

AxiomReport check_axioms(const HomLieSuper2& g, bool require_multiplicative) {
  AxiomReport rep = check_structure(g);
  if (!rep.ok()) {
    for (const char* name : {"hom-jacobi", "squaring-jacobi", "multiplicative-bracket", "multiplicative-squaring"}) {
      AxiomVerdict v;
      v.axiom = name;
      v.skipped = true;
      rep.add(v);
    }
    return rep;
  }
  const SuperBasis& b = g.basis();
  std::size_t n = g.dim();
  std::vector<Vector> al(n);
  for (std::size_t i = 0; i < n; ++i) al[i] = g.alpha().column(i);

  Probe jac("hom-jacobi");
  for (std::size_t i = 0; i < n && jac.v.pass; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        if (b.parities[i] + b.parities[j] + b.parities[k] > 1) continue;
        Vector s = bracket_eval(g, al[i], g.bracket_basis(j, k));
        s += bracket_eval(g, al[j], g.bracket_basis(k, i));
        s += bracket_eval(g, al[k], g.bracket_basis(i, j));
        jac.compare([&] { return "(" + b.labels[i] + "," + b.labels[j] + "," + b.labels[k] + ")"; }, s, g.zero());
      }
  rep.add(jac.v);

  auto tests = odd_quadratic_test_set(b, g.field());
  Probe sq("squaring-jacobi");
  for (const auto& [name, x] : tests) {
    Vector sx = squaring_eval(g, x), ax = g.alpha().apply(x);
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = bracket_eval(g, sx, al[j]);
      Vector rhs = bracket_eval(g, ax, bracket_eval(g, x, g.unit(j)));
      sq.compare([&] { return "x=" + name + ", y=" + b.labels[j]; }, lhs, rhs);
    }
  }
  rep.add(sq.v);

  Probe mb("multiplicative-bracket"), ms("multiplicative-squaring");
  if (require_multiplicative) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        mb.compare([&] { return "(" + b.labels[i] + "," + b.labels[j] + ")"; }, g.alpha().apply(g.bracket_basis(i, j)),
                   bracket_eval(g, al[i], al[j]));
    for (const auto& [name, x] : tests)
      ms.compare([&] { return "x=" + name; }, g.alpha().apply(squaring_eval(g, x)), squaring_eval(g, g.alpha().apply(x)));
  } else {
    mb.v.skipped = ms.v.skipped = true;
  }
  rep.add(mb.v);
  rep.add(ms.v);
  return rep;
}

AxiomReport check_morphism(const HomLieSuper2& src, const HomLieSuper2& dst, const Matrix& phi) {
  if (phi.rows != dst.dim() || phi.cols != src.dim()) throw Error(ErrorKind::Shape, "morphism matrix has wrong shape");
  src.field().require_same(dst.field());
  src.field().require_same(phi.field);
  AxiomReport rep;
  AxiomVerdict par;
  par.axiom = "parity";
  par.pass = parity_preserving(src.basis(), dst.basis(), phi);
  if (!par.pass) par.witness = Witness{"map mixes parities", src.zero(), src.zero()};
  rep.add(par);
  if (!par.pass) return rep;

  const SuperBasis& b = src.basis();
  std::size_t n = src.dim();
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = phi.column(i);
  Probe br("bracket"), sq("squaring"), tw("twist");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      br.compare([&] { return "(" + b.labels[i] + "," + b.labels[j] + ")"; }, phi.apply(src.bracket_basis(i, j)),
                 bracket_eval(dst, img[i], img[j]));
  for (const auto& [name, x] : odd_quadratic_test_set(b, src.field()))
    sq.compare([&] { return "x=" + name; }, phi.apply(squaring_eval(src, x)), squaring_eval(dst, phi.apply(x)));
  for (std::size_t i = 0; i < n; ++i)
    tw.compare([&] { return b.labels[i]; }, phi.apply(src.alpha().column(i)), dst.alpha().apply(img[i]));
  rep.add(br.v);
  rep.add(sq.v);
  rep.add(tw.v);
  return rep;
}

HomLieSuper2 twist_by_morphism(const HomLieSuper2& g, const Matrix& a) {
  AxiomReport r = check_morphism(g, g, a);
  if (!r.ok()) throw Error(ErrorKind::InvalidMorphism, r.summary());
  HomLieSuper2 h(g.field(), g.basis());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) h.set_bracket(i, j, a.apply(g.bracket_basis(i, j)));
    if (g.basis().odd(i)) h.set_sigma(i, a.apply(g.sigma(i)));
  }
  h.set_alpha(a * g.alpha());
  return h;
}

namespace {

void require_homogeneous(const HomLieSuper2& g, const SubspaceBasis& s) {
  if (s.ambient_dim != g.dim()) throw Error(ErrorKind::Shape, "subspace lives in the wrong ambient space");
  for (const Vector& v : s.vectors) {
    Vector ev = v, od = v;
    for (std::size_t k = 0; k < v.size(); ++k) (g.basis().odd(k) ? ev : od).e[k] = 0;
    if (!s.contains(ev) || !s.contains(od)) throw Error(ErrorKind::Parity, "subspace is not homogeneous");
  }
}

// Homogeneous generators: the even and odd components of each echelon vector.
std::pair<std::vector<Vector>, std::vector<Vector>> split_generators(const HomLieSuper2& g, const SubspaceBasis& s) {
  std::vector<Vector> ev, od;
  for (const Vector& v : s.vectors) {
    Vector e = v, o = v;
    for (std::size_t k = 0; k < v.size(); ++k) (g.basis().odd(k) ? e : o).e[k] = 0;
    if (!e.is_zero()) ev.push_back(e);
    if (!o.is_zero()) od.push_back(o);
  }
  return {ev, od};
}

}  // namespace

AxiomReport check_ideal(const HomLieSuper2& g, const SubspaceBasis& I) {
  require_homogeneous(g, I);
  auto [ev, od] = split_generators(g, I);
  std::vector<Vector> gens = ev;
  gens.insert(gens.end(), od.begin(), od.end());
  const SuperBasis& b = g.basis();
  AxiomReport rep;
  Probe br("bracket-closure"), tw("twist-closure"), sq("squaring-closure");
  for (const Vector& v : gens) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector w = bracket_eval(g, v, g.unit(j));
      br.compare([&] { return "[" + describe(b, v) + "," + b.labels[j] + "]"; }, I.reduce(w), g.zero());
    }
    tw.compare([&] { return "alpha(" + describe(b, v) + ")"; }, I.reduce(g.alpha().apply(v)), g.zero());
  }
  for (std::size_t a = 0; a < od.size(); ++a) {
    sq.compare([&] { return "s(" + describe(b, od[a]) + ")"; }, I.reduce(squaring_eval(g, od[a])), g.zero());
    for (std::size_t c = a + 1; c < od.size(); ++c) {
      Vector x = od[a] + od[c];
      sq.compare([&] { return "s(" + describe(b, x) + ")"; }, I.reduce(squaring_eval(g, x)), g.zero());
    }
  }
  rep.add(br.v);
  rep.add(tw.v);
  rep.add(sq.v);
  return rep;
}

HomLieSuper2 quotient(const HomLieSuper2& g, const SubspaceBasis& I) {
  AxiomReport r = check_ideal(g, I);
  if (!r.ok()) throw Error(ErrorKind::InvalidIdeal, r.summary());
  std::vector<bool> piv(g.dim(), false);
  for (std::size_t p : I.pivots) piv[p] = true;
  std::vector<std::size_t> reps;
  std::vector<std::string> labels;
  std::vector<int> pars;
  for (std::size_t j = 0; j < g.dim(); ++j)
    if (!piv[j]) {
      reps.push_back(j);
      labels.push_back(g.basis().labels[j]);
      pars.push_back(g.basis().parities[j]);
    }
  HomLieSuper2 q(g.field(), SuperBasis(labels, pars));
  auto project = [&](const Vector& v) {
    Vector red = I.reduce(v);
    Vector out = q.zero();
    for (std::size_t a = 0; a < reps.size(); ++a) out.e[a] = red.e[reps[a]];
    return out;
  };
  Matrix alpha(g.field(), reps.size(), reps.size());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t c = a; c < reps.size(); ++c) q.set_bracket(a, c, project(g.bracket_basis(reps[a], reps[c])));
    if (g.basis().odd(reps[a])) q.set_sigma(a, project(g.sigma(reps[a])));
    alpha.set_column(a, project(g.alpha().column(reps[a])));
  }
  q.set_alpha(alpha);
  // s(x + i) = s(x) modulo I for odd coset representatives x and odd i in I.
  auto od = split_generators(g, I).second;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    if (!g.basis().odd(reps[a])) continue;
    Vector x = g.unit(reps[a]);
    for (const Vector& w : od)
      if (!I.contains(squaring_eval(g, x + w) + squaring_eval(g, x)))
        throw Error(ErrorKind::InvalidIdeal, "quotient squaring is not well defined at " + g.basis().labels[reps[a]]);
  }
  return q;
}

SubspaceBasis derived_subalgebra(const HomLieSuper2& g, unsigned steps) {
  SubspaceBasis cur = SubspaceBasis::full(g.field(), g.dim());
  for (unsigned s = 0; s < steps; ++s) {
    std::vector<Vector> gens;
    auto [ev, od] = split_generators(g, cur);
    std::vector<Vector> all = ev;
    all.insert(all.end(), od.begin(), od.end());
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t c = a; c < all.size(); ++c) gens.push_back(bracket_eval(g, all[a], all[c]));
    for (const Vector& w : od) gens.push_back(squaring_eval(g, w));
    cur = SubspaceBasis::span(g.field(), g.dim(), gens);
  }
  return cur;
}

HomLieSuper2 permute_basis(const HomLieSuper2& g, const std::vector<std::size_t>& perm) {
  std::size_t n = g.dim();
  if (perm.size() != n) throw Error(ErrorKind::Shape, "permutation has wrong length");
  std::vector<std::string> labels(n);
  std::vector<int> pars(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = g.basis().labels[i];
    pars[perm[i]] = g.basis().parities[i];
  }
  HomLieSuper2 h(g.field(), SuperBasis(labels, pars));
  auto move = [&](const Vector& v) {
    Vector w = h.zero();
    for (std::size_t k = 0; k < n; ++k) w.e[perm[k]] = v.e[k];
    return w;
  };
  Matrix a(g.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) h.set_bracket(perm[i], perm[j], move(g.bracket_basis(i, j)));
    if (g.basis().odd(i)) h.set_sigma(perm[i], move(g.sigma(i)));
    a.set_column(perm[i], move(g.alpha().column(i)));
  }
  h.set_alpha(a);
  return h;
}

HomLieSuper2 even_part(const HomLieSuper2& g) {
  auto ev = g.basis().even_indices();
  std::vector<std::string> labels;
  for (std::size_t i : ev) labels.push_back(g.basis().labels[i]);
  HomLieSuper2 h(g.field(), SuperBasis(labels, std::vector<int>(ev.size(), 0)));
  auto restrict = [&](const Vector& v) {
    Vector w = h.zero();
    for (std::size_t a = 0; a < ev.size(); ++a) w.e[a] = v.e[ev[a]];
    return w;
  };
  Matrix a(g.field(), ev.size(), ev.size());
  for (std::size_t x = 0; x < ev.size(); ++x) {
    for (std::size_t y = x; y < ev.size(); ++y) h.set_bracket(x, y, restrict(g.bracket_basis(ev[x], ev[y])));
    a.set_column(x, restrict(g.alpha().column(ev[x])));
  }
  h.set_alpha(a);
  return h;
}

AxiomReport check_hom_lie_algebra(const HomLieSuper2& g) {
  AxiomReport rep;
  Probe jac("hom-jacobi");
  std::size_t n = g.dim();
  const SuperBasis& b = g.basis();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Vector s = bracket_eval(g, g.alpha().column(i), g.bracket_basis(j, k));
        s += bracket_eval(g, g.alpha().column(j), g.bracket_basis(k, i));
        s += bracket_eval(g, g.alpha().column(k), g.bracket_basis(i, j));
        jac.compare([&] { return "(" + b.labels[i] + "," + b.labels[j] + "," + b.labels[k] + ")"; }, s, g.zero());
      }
  rep.add(jac.v);
  return rep;
}

}  // namespace homlie2
