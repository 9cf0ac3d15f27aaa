#include "homlie2/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace homlie2 {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
std::uint64_t p_key(std::size_t i, std::uint64_t mask) { return (std::uint64_t(i) << 32) | mask; }

void combinations(std::size_t n, std::size_t k, std::size_t start, std::uint64_t mask, std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) combinations(n, k - 1, i + 1, mask | bit(i), out);
}

}  // namespace

int CochainLayout::coord_parity(std::size_t t) const {
  std::size_t slot = t < p_offset() ? t / mod_dim : (t - p_offset()) / mod_dim;
  std::size_t a = t % mod_dim;
  std::uint64_t mask = t < p_offset() ? c_masks[slot] : p_keys[slot].second;
  int p = mod_par[a];
  for (std::size_t i : tuple(mask)) p += alg_par[i];
  return p % 2;
}

std::vector<std::size_t> CochainLayout::tuple(std::uint64_t mask) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alg_dim; ++i)
    if (mask & bit(i)) out.push_back(i);
  return out;
}

std::string CochainLayout::coord_name(std::size_t t, const SuperBasis& gb, const SuperBasis& mb) const {
  auto args = [&](std::uint64_t mask) {
    std::string s;
    for (std::size_t i : tuple(mask)) s += (s.empty() ? "" : ",") + gb.labels[i];
    return s;
  };
  std::size_t a = t % mod_dim;
  if (t < p_offset()) return "c(" + args(c_masks[t / mod_dim]) + ")[" + mb.labels[a] + "]";
  const auto& [i, mask] = p_keys[(t - p_offset()) / mod_dim];
  std::string z = args(mask);
  return "p(" + gb.labels[i] + (z.empty() ? "" : ";" + z) + ")[" + mb.labels[a] + "]";
}

std::shared_ptr<const CochainLayout> make_layout(const HomLieSuper2& g, const Representation& r, std::size_t n) {
  if (g.dim() > 32) throw Error(ErrorKind::TooLarge, "cochain layouts support at most 32 basis vectors");
  if (n > g.dim() + 2) throw Error(ErrorKind::TooLarge, "degree exceeds the algebra dimension");
  auto l = std::make_shared<CochainLayout>();
  l->degree = n;
  l->alg_dim = g.dim();
  l->mod_dim = r.module_dim();
  l->alg_par = g.basis().parities;
  l->mod_par = r.module_basis().parities;
  if (n <= g.dim()) combinations(g.dim(), n, 0, 0, l->c_masks);
  for (std::size_t i = 0; i < l->c_masks.size(); ++i) l->c_index[l->c_masks[i]] = i;
  if (n >= 2 && n - 2 <= g.dim()) {
    std::vector<std::uint64_t> z;
    combinations(g.dim(), n - 2, 0, 0, z);
    for (std::size_t i : g.basis().odd_indices())
      for (auto m : z) {
        l->p_index[p_key(i, m)] = l->p_keys.size();
        l->p_keys.emplace_back(i, m);
      }
  }
  return l;
}

CochainPair::CochainPair(std::shared_ptr<const CochainLayout> l, const Field& f)
    : layout(std::move(l)), coords(f, layout->size()) {}

CochainPair::CochainPair(std::shared_ptr<const CochainLayout> l, Vector v) : layout(std::move(l)), coords(std::move(v)) {
  if (coords.size() != layout->size()) throw Error(ErrorKind::Shape, "cochain coordinates have wrong length");
}

int CochainPair::parity() const {
  int p = -2;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (!coords.e[t]) continue;
    int q = layout->coord_parity(t);
    if (p == -2)
      p = q;
    else if (p != q)
      return -1;
  }
  return p == -2 ? 0 : p;
}

namespace {

std::uint64_t mask_of(const CochainLayout& l, std::vector<std::size_t>& args, bool& repeated) {
  std::uint64_t m = 0;
  repeated = false;
  for (std::size_t i : args) {
    if (i >= l.alg_dim) throw Error(ErrorKind::Shape, "basis index out of range");
    if (m & bit(i)) repeated = true;
    m |= bit(i);
  }
  return m;
}

Vector slot(const CochainPair& c, std::size_t base) {
  std::size_t d = c.layout->mod_dim;
  return Vector(c.coords.field, std::vector<Elem>(c.coords.e.begin() + base, c.coords.e.begin() + base + d));
}

void add_slot(Vector& out, Elem coef, const CochainPair& c, std::size_t base) {
  const Field& f = c.coords.field;
  for (std::size_t a = 0; a < out.size(); ++a)
    if (c.coords.e[base + a]) out.e[a] ^= f.mul(coef, c.coords.e[base + a]);
}

// Sum over supports of args[k..], skipping indices already in mask.
template <class Leaf>
void expand(const std::vector<Vector>& args, std::size_t k, std::uint64_t mask, Elem coef, const Field& f, Leaf&& leaf) {
  if (k == args.size()) {
    leaf(mask, coef);
    return;
  }
  const Vector& v = args[k];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.e[i] || (mask & bit(i))) continue;
    expand(args, k + 1, mask | bit(i), f.mul(coef, v.e[i]), f, leaf);
  }
}

}  // namespace

Vector CochainPair::c_at(const std::vector<std::size_t>& args) const {
  std::vector<std::size_t> a = args;
  bool rep;
  std::uint64_t m = mask_of(*layout, a, rep);
  if (a.size() != degree()) throw Error(ErrorKind::Shape, "wrong number of cochain arguments");
  if (rep) return Vector(coords.field, layout->mod_dim);
  return slot(*this, layout->c_index.at(m) * layout->mod_dim);
}

void CochainPair::set_c(std::vector<std::size_t> args, const Vector& value) {
  bool rep;
  std::uint64_t m = mask_of(*layout, args, rep);
  if (args.size() != degree()) throw Error(ErrorKind::Shape, "wrong number of cochain arguments");
  if (rep) throw Error(ErrorKind::Shape, "alternating cochain takes distinct arguments");
  if (value.size() != layout->mod_dim) throw Error(ErrorKind::Shape, "cochain value has wrong length");
  std::size_t base = layout->c_index.at(m) * layout->mod_dim;
  std::copy(value.e.begin(), value.e.end(), coords.e.begin() + base);
}

Vector CochainPair::p_at(std::size_t odd_index, const std::vector<std::size_t>& args) const {
  std::vector<std::size_t> a = args;
  bool rep;
  std::uint64_t m = mask_of(*layout, a, rep);
  if (degree() < 2 || a.size() + 2 != degree()) throw Error(ErrorKind::Shape, "wrong number of p arguments");
  if (rep) return Vector(coords.field, layout->mod_dim);
  auto it = layout->p_index.find(p_key(odd_index, m));
  if (it == layout->p_index.end()) throw Error(ErrorKind::Parity, "p takes an odd basis vector first");
  return slot(*this, layout->p_offset() + it->second * layout->mod_dim);
}

void CochainPair::set_p(std::size_t odd_index, std::vector<std::size_t> args, const Vector& value) {
  bool rep;
  std::uint64_t m = mask_of(*layout, args, rep);
  if (degree() < 2 || args.size() + 2 != degree()) throw Error(ErrorKind::Shape, "wrong number of p arguments");
  if (rep) throw Error(ErrorKind::Shape, "p is alternating in its trailing arguments");
  if (value.size() != layout->mod_dim) throw Error(ErrorKind::Shape, "cochain value has wrong length");
  auto it = layout->p_index.find(p_key(odd_index, m));
  if (it == layout->p_index.end()) throw Error(ErrorKind::Parity, "p takes an odd basis vector first");
  std::size_t base = layout->p_offset() + it->second * layout->mod_dim;
  std::copy(value.e.begin(), value.e.end(), coords.e.begin() + base);
}

Vector CochainPair::eval_c(const std::vector<Vector>& args) const {
  if (args.size() != degree()) throw Error(ErrorKind::Shape, "wrong number of cochain arguments");
  const Field& f = coords.field;
  Vector out(f, layout->mod_dim);
  expand(args, 0, 0, 1, f, [&](std::uint64_t m, Elem coef) {
    add_slot(out, coef, *this, layout->c_index.at(m) * layout->mod_dim);
  });
  return out;
}

Vector CochainPair::eval_p(const Vector& x, const std::vector<Vector>& z) const {
  if (degree() < 2 || z.size() + 2 != degree()) throw Error(ErrorKind::Shape, "wrong number of p arguments");
  const Field& f = coords.field;
  Vector out(f, layout->mod_dim);
  std::vector<std::size_t> sup;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.e[i]) continue;
    if (!layout->alg_par[i]) throw Error(ErrorKind::Parity, "p is defined on odd vectors only");
    sup.push_back(i);
  }
  for (std::size_t a = 0; a < sup.size(); ++a) {
    std::size_t i = sup[a];
    expand(z, 0, 0, f.sqr(x.e[i]), f, [&](std::uint64_t m, Elem coef) {
      add_slot(out, coef, *this, layout->p_offset() + layout->p_index.at(p_key(i, m)) * layout->mod_dim);
    });
    for (std::size_t b = a + 1; b < sup.size(); ++b) {
      std::size_t j = sup[b];
      expand(z, 0, bit(i) | bit(j), f.mul(x.e[i], x.e[j]), f, [&](std::uint64_t m, Elem coef) {
        add_slot(out, coef, *this, layout->c_index.at(m) * layout->mod_dim);
      });
    }
  }
  return out;
}

CochainPair CochainPair::operator+(const CochainPair& o) const {
  if (degree() != o.degree() || coords.size() != o.coords.size()) throw Error(ErrorKind::Shape, "cochain degrees differ");
  return CochainPair(layout, coords + o.coords);
}

SubspaceBasis CochainSpace::span() const {
  return SubspaceBasis::span(field, layout->size(), basis);
}

namespace {

std::vector<Vector> units(const HomLieSuper2& g, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  for (std::size_t i : idx) out.push_back(g.unit(i));
  return out;
}

std::vector<Vector> mapped(const Matrix& a, const std::vector<Vector>& v) {
  std::vector<Vector> out;
  for (const auto& x : v) out.push_back(a.apply(x));
  return out;
}

std::vector<Vector> without(const std::vector<Vector>& v, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i && k != j) out.push_back(v[k]);
  return out;
}

struct DiffContext {
  const HomLieSuper2& g;
  const Representation& r;
  std::size_t n;
  Matrix ak;  // alpha^(n-1), identity at n = 0

  DiffContext(const HomLieSuper2& g_, const Representation& r_, std::size_t n_)
      : g(g_), r(r_), n(n_), ak(n_ == 0 ? Matrix::identity(g_.field(), g_.dim()) : g_.alpha().power(unsigned(n_ - 1))) {}

  Vector dc(const CochainPair& c, const std::vector<Vector>& z) const {
    Vector out = r.module_zero();
    for (std::size_t i = 0; i < z.size(); ++i) out += r.act(ak.apply(z[i]), c.eval_c(without(z, i)));
    if (n == 0) return out;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j) {
        std::vector<Vector> args{bracket_eval(g, z[i], z[j])};
        for (auto& v : mapped(g.alpha(), without(z, i, j))) args.push_back(std::move(v));
        out += c.eval_c(args);
      }
    return out;
  }

  Vector dp(const CochainPair& c, const Vector& x, const std::vector<Vector>& z) const {
    std::vector<Vector> az = mapped(g.alpha(), z);
    Vector ax = g.alpha().apply(x);
    std::vector<Vector> args{x};
    args.insert(args.end(), z.begin(), z.end());
    Vector out = r.act(ak.apply(x), c.eval_c(args));
    args = {squaring_eval(g, x)};
    args.insert(args.end(), az.begin(), az.end());
    out += c.eval_c(args);
    for (std::size_t k = 0; k < z.size(); ++k) {
      out += r.act(ak.apply(z[k]), c.eval_p(x, without(z, k)));
      args = {bracket_eval(g, x, z[k]), ax};
      for (auto& v : without(az, k)) args.push_back(v);
      out += c.eval_c(args);
    }
    for (std::size_t k = 0; k < z.size(); ++k)
      for (std::size_t l = k + 1; l < z.size(); ++l) {
        args = {bracket_eval(g, z[k], z[l])};
        for (auto& v : without(az, k, l)) args.push_back(v);
        out += c.eval_p(ax, args);
      }
    return out;
  }
};

}  // namespace

Vector differential_p_at(const HomLieSuper2& g, const Representation& r, const CochainPair& c, const Vector& x,
                         const std::vector<Vector>& z) {
  if (c.degree() == 0 || z.size() + 1 != c.degree()) throw Error(ErrorKind::Shape, "wrong number of arguments");
  return DiffContext(g, r, c.degree()).dp(c, x, z);
}

CochainPair apply_differential(const HomLieSuper2& g, const Representation& r, const CochainPair& c) {
  std::size_t n = c.degree();
  auto out_l = make_layout(g, r, n + 1);
  CochainPair out(out_l, Vector(g.field(), out_l->size()));
  if (c.coords.is_zero()) return out;
  DiffContext ctx(g, r, n);
  for (auto m : out_l->c_masks) {
    auto idx = out_l->tuple(m);
    out.set_c(idx, ctx.dc(c, units(g, idx)));
  }
  for (const auto& [i, m] : out_l->p_keys) {
    auto idx = out_l->tuple(m);
    out.set_p(i, idx, ctx.dp(c, g.unit(i), units(g, idx)));
  }
  return out;
}

std::vector<Elem> cochain_residual(const HomLieSuper2& g, const Representation& r, const CochainPair& c) {
  const CochainLayout& l = *c.layout;
  std::vector<Elem> out;
  auto push = [&](const Vector& v) { out.insert(out.end(), v.e.begin(), v.e.end()); };
  if (l.degree == 0) {
    Vector m = c.eval_c({});
    push(r.beta().apply(m) + m);
    for (std::size_t x = 0; x < g.dim(); ++x)
      for (std::size_t y = 0; y < g.dim(); ++y) {
        Vector ym = r.action(y).apply(m);
        push(r.act(g.alpha().column(x), ym) + r.action(x).apply(ym));
      }
    return out;
  }
  for (auto m : l.c_masks) {
    auto z = units(g, l.tuple(m));
    push(r.beta().apply(c.eval_c(z)) + c.eval_c(mapped(g.alpha(), z)));
  }
  for (const auto& [i, m] : l.p_keys) {
    auto z = units(g, l.tuple(m));
    push(r.beta().apply(c.eval_p(g.unit(i), z)) + c.eval_p(g.alpha().column(i), mapped(g.alpha(), z)));
  }
  return out;
}

bool is_cochain(const HomLieSuper2& g, const Representation& r, const CochainPair& c) {
  for (Elem e : cochain_residual(g, r, c))
    if (e) return false;
  return true;
}

CochainPair differential(const HomLieSuper2& g, const Representation& r, const CochainPair& c) {
  if (!is_cochain(g, r, c)) throw Error(ErrorKind::NotACochain, "argument violates the cochain constraints");
  return apply_differential(g, r, c);
}

Matrix differential_matrix(const HomLieSuper2& g, const Representation& r, std::size_t n) {
  auto l = make_layout(g, r, n);
  auto l1 = make_layout(g, r, n + 1);
  Matrix d(g.field(), l1->size(), l->size());
  for (std::size_t t = 0; t < l->size(); ++t) {
    CochainPair u(l, Vector::unit(g.field(), l->size(), t));
    d.set_column(t, apply_differential(g, r, u).coords);
  }
  return d;
}

CochainSpace cochain_space(const HomLieSuper2& g, const Representation& r, std::size_t n, ParitySel parity) {
  CochainSpace cs;
  cs.field = g.field();
  cs.layout = make_layout(g, r, n);
  const CochainLayout& l = *cs.layout;
  const Field& f = g.field();
  for (int p = 0; p < 2; ++p) {
    if ((p == 0 && parity == ParitySel::Odd) || (p == 1 && parity == ParitySel::Even)) continue;
    std::vector<std::size_t> slots;
    for (std::size_t t = 0; t < l.size(); ++t)
      if (l.coord_parity(t) == p) slots.push_back(t);
    if (slots.empty()) continue;
    std::vector<Vector> cols;
    for (std::size_t t : slots) cols.emplace_back(f, cochain_residual(g, r, CochainPair(cs.layout, Vector::unit(f, l.size(), t))));
    SubspaceBasis ker = kernel_basis(Matrix::from_columns(f, cols[0].size(), cols));
    for (const auto& v : ker.vectors) {
      Vector w(f, l.size());
      for (std::size_t k = 0; k < slots.size(); ++k) w.e[slots[k]] = v.e[k];
      cs.basis.push_back(w);
    }
    (p == 0 ? cs.even_dim : cs.odd_dim) = ker.dim();
  }
  return cs;
}

namespace {

Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, Elem(f.size() - 1));
  Vector v(f, n);
  for (auto& e : v.e) e = d(rng);
  return v;
}

Vector random_odd(const HomLieSuper2& g, std::mt19937_64& rng) {
  Vector v = random_vector(g.field(), g.dim(), rng);
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!g.basis().odd(i)) v.e[i] = 0;
  return v;
}

std::vector<Vector> random_args(const HomLieSuper2& g, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(random_vector(g.field(), g.dim(), rng));
  return out;
}

}  // namespace

ComplexReport verify_complex(const HomLieSuper2& g, const Representation& r, std::size_t n_max, std::size_t trials,
                             std::uint64_t seed) {
  ComplexReport rep;
  std::mt19937_64 rng(seed);
  const Field& f = g.field();
  bool has_odd = g.basis().odd_count() > 0;
  auto finding = [&](std::string s) {
    rep.ok = false;
    if (rep.findings.size() < 20) rep.findings.push_back(std::move(s));
  };
  for (std::size_t n = 0; n <= n_max; ++n) {
    CochainSpace cs = cochain_space(g, r, n);
    std::vector<std::pair<std::string, CochainPair>> cands;
    for (std::size_t i = 0; i < cs.dim(); ++i) cands.emplace_back("basis cochain " + std::to_string(i), cs.element(i));
    for (std::size_t t = 0; t < trials && cs.dim() > 0; ++t) {
      Vector w(f, cs.layout->size());
      Vector coef = random_vector(f, cs.dim(), rng);
      for (std::size_t i = 0; i < cs.dim(); ++i) w.axpy(coef.e[i], cs.basis[i]);
      cands.emplace_back("random cochain " + std::to_string(t), CochainPair(cs.layout, w));
    }
    const std::string deg = "degree " + std::to_string(n) + ", ";
    for (const auto& [name, c] : cands) {
      CochainPair d = apply_differential(g, r, c);
      ++rep.checks;
      if (!is_cochain(g, r, d)) finding(deg + name + ": image of the differential is not a cochain");
      CochainPair dd = apply_differential(g, r, d);
      ++rep.checks;
      if (!dd.is_zero()) {
        std::size_t t = 0;
        while (!dd.coords.e[t]) ++t;
        finding(deg + name + ": d o d != 0 at " + dd.layout->coord_name(t, g.basis(), r.module_basis()));
      }
      if (has_odd && n >= 1) {
        Vector x = random_odd(g, rng), y = random_odd(g, rng);
        auto z = random_args(g, n - 1, rng);
        Vector lhs = differential_p_at(g, r, c, x + y, z) + differential_p_at(g, r, c, x, z) +
                     differential_p_at(g, r, c, y, z);
        std::vector<Vector> args{x, y};
        args.insert(args.end(), z.begin(), z.end());
        ++rep.checks;
        if (!(lhs == d.eval_c(args))) finding(deg + name + ": p-part of the differential is not polar to its c-part");
        ++rep.checks;
        if (!(differential_p_at(g, r, c, x, z) == d.eval_p(x, z)))
          finding(deg + name + ": stored p-part disagrees with direct evaluation");
      }
      if (n >= 2) {
        auto z = random_args(g, n, rng);
        Vector cz = c.eval_c(z), caz = c.eval_c(mapped(g.alpha(), z));
        if (has_odd) {
          Vector x = random_odd(g, rng);
          Matrix a1 = g.alpha().power(unsigned(n - 1)), a2 = g.alpha().power(unsigned(n - 2));
          ++rep.checks;
          if (!(r.act(a1.apply(x), r.act(a2.apply(x), cz)) == r.act(a2.apply(squaring_eval(g, x)), caz)))
            finding(deg + name + ": auxiliary identity (i) fails");
        }
        Vector u = random_vector(f, g.dim(), rng), v = random_vector(f, g.dim(), rng);
        ++rep.checks;
        if (!(r.act(g.alpha().apply(u), r.act(v, cz)) + r.act(g.alpha().apply(v), r.act(u, cz)) ==
              r.act(bracket_eval(g, u, v), caz)))
          finding(deg + name + ": auxiliary identity (ii) fails");
      }
    }
  }
  return rep;
}

namespace {

std::vector<Vector> images(const Matrix& d, const CochainSpace& cs) {
  std::vector<Vector> out;
  for (const auto& v : cs.basis) out.push_back(d.apply(v));
  return out;
}

std::size_t rank_of(const Field& f, std::size_t n, const std::vector<Vector>& vs) {
  return SubspaceBasis::span(f, n, vs).dim();
}

}  // namespace

CohomologyDims cohomology_dims(const HomLieSuper2& g, const Representation& r, std::size_t n) {
  CohomologyDims out;
  out.n = n;
  const Field& f = g.field();
  Matrix dn = differential_matrix(g, r, n);
  std::size_t next = make_layout(g, r, n + 1)->size();
  std::optional<Matrix> dm;
  if (n > 0) dm = differential_matrix(g, r, n - 1);
  for (int p = 0; p < 2; ++p) {
    ParitySel sel = p == 0 ? ParitySel::Even : ParitySel::Odd;
    CochainSpace xn = cochain_space(g, r, n, sel);
    std::size_t z = xn.dim() - rank_of(f, next, images(dn, xn));
    std::size_t b = 0;
    if (dm) {
      CochainSpace xm = cochain_space(g, r, n - 1, sel);
      auto bimg = images(*dm, xm);
      SubspaceBasis span_x = xn.span();
      for (const auto& v : bimg) {
        if (!span_x.contains(v))
          throw Error(ErrorKind::ComplexViolation, "a coboundary of degree " + std::to_string(n) + " is not a cochain");
        if (!dn.apply(v).is_zero())
          throw Error(ErrorKind::ComplexViolation, "d o d != 0 in degree " + std::to_string(n - 1));
      }
      b = rank_of(f, xn.layout->size(), bimg);
    }
    (p == 0 ? out.even_Z : out.odd_Z) = z;
    (p == 0 ? out.even_B : out.odd_B) = b;
    (p == 0 ? out.even_H : out.odd_H) = z - b;
  }
  out.dim_Z = out.even_Z + out.odd_Z;
  out.dim_B = out.even_B + out.odd_B;
  out.dim_H = out.even_H + out.odd_H;
  return out;
}

std::vector<CochainPair> cocycle_basis(const HomLieSuper2& g, const Representation& r, std::size_t n, ParitySel parity) {
  const Field& f = g.field();
  CochainSpace xn = cochain_space(g, r, n, parity);
  std::vector<CochainPair> out;
  if (xn.dim() == 0) return out;
  Matrix dn = differential_matrix(g, r, n);
  auto img = images(dn, xn);
  SubspaceBasis ker = kernel_basis(Matrix::from_columns(f, img[0].size(), img));
  for (const auto& k : ker.vectors) {
    Vector w(f, xn.layout->size());
    for (std::size_t i = 0; i < k.size(); ++i) w.axpy(k.e[i], xn.basis[i]);
    out.emplace_back(xn.layout, w);
  }
  return out;
}

namespace {

void require_cocycle(const HomLieSuper2& g, const Representation& r, const CochainPair& c) {
  if (!is_cochain(g, r, c)) throw Error(ErrorKind::NotACochain, "argument violates the cochain constraints");
  if (!apply_differential(g, r, c).is_zero()) throw Error(ErrorKind::NotClosed, "argument is not a cocycle");
}

}  // namespace

std::optional<CochainPair> is_coboundary(const HomLieSuper2& g, const Representation& r, const CochainPair& c) {
  require_cocycle(g, r, c);
  std::size_t n = c.degree();
  if (n == 0) {
    if (c.is_zero()) throw Error(ErrorKind::Unsupported, "degree-0 coboundaries have no preimage space");
    return std::nullopt;
  }
  const Field& f = g.field();
  CochainSpace xm = cochain_space(g, r, n - 1);
  auto lm = make_layout(g, r, n - 1);
  if (xm.dim() == 0) {
    if (c.is_zero()) return CochainPair(lm, Vector(f, lm->size()));
    return std::nullopt;
  }
  auto img = images(differential_matrix(g, r, n - 1), xm);
  auto sol = solve(Matrix::from_columns(f, c.coords.size(), img), c.coords);
  if (!sol) return std::nullopt;
  Vector w(f, lm->size());
  for (std::size_t i = 0; i < sol->size(); ++i) w.axpy(sol->e[i], xm.basis[i]);
  return CochainPair(lm, w);
}

std::size_t class_rank(const HomLieSuper2& g, const Representation& r, const std::vector<CochainPair>& cocycles) {
  if (cocycles.empty()) return 0;
  std::size_t n = cocycles[0].degree();
  for (const auto& c : cocycles) {
    if (c.degree() != n) throw Error(ErrorKind::Shape, "cocycles of different degrees");
    require_cocycle(g, r, c);
  }
  const Field& f = g.field();
  std::size_t len = cocycles[0].coords.size();
  std::vector<Vector> b;
  if (n > 0) b = images(differential_matrix(g, r, n - 1), cochain_space(g, r, n - 1));
  std::size_t rb = rank_of(f, len, b);
  for (const auto& c : cocycles) b.push_back(c.coords);
  return rank_of(f, len, b) - rb;
}

}  // namespace homlie2
