#include "homlie2/derivations.hpp"

namespace homlie2 {

SubspaceBasis DerivationSpace::span() const {
  std::size_t n = algebra.dim();
  std::vector<Vector> gens;
  for (const auto& d : basis) gens.emplace_back(algebra.field(), d.e);
  return SubspaceBasis::span(algebra.field(), n * n, gens);
}

bool DerivationSpace::contains(const Matrix& d) const { return span().contains(Vector(algebra.field(), d.e)); }

namespace {

void append(std::vector<Elem>& out, const Vector& v) { out.insert(out.end(), v.e.begin(), v.e.end()); }

std::vector<Elem> residual_with(const HomLieSuper2& g, const Matrix& d, const Matrix& ak) {
  const SuperBasis& b = g.basis();
  std::size_t n = g.dim();
  std::vector<Elem> out;
  Matrix comm = d * g.alpha() + g.alpha() * d;
  out.insert(out.end(), comm.e.begin(), comm.e.end());
  std::vector<Vector> dcol(n), acol(n);
  for (std::size_t i = 0; i < n; ++i) {
    dcol[i] = d.column(i);
    acol[i] = ak.column(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool even_i = !b.odd(i);
      bool odd_pair = b.odd(i) && b.odd(j) && i < j;
      if (!even_i && !odd_pair) continue;
      Vector r = d.apply(g.bracket_basis(i, j));
      r += bracket_eval(g, dcol[i], acol[j]);
      if (even_i)
        r += bracket_eval(g, acol[i], dcol[j]);
      else
        r += bracket_eval(g, dcol[j], acol[i]);
      append(out, r);
    }
    if (b.odd(i)) {
      Vector r = d.apply(g.sigma(i));
      r += bracket_eval(g, dcol[i], acol[i]);
      append(out, r);
    }
  }
  return out;
}

}  // namespace

std::vector<Elem> derivation_residual(const HomLieSuper2& g, const Matrix& d, unsigned k) {
  if (d.rows != g.dim() || d.cols != g.dim()) throw Error(ErrorKind::Shape, "derivation has wrong shape");
  return residual_with(g, d, g.alpha().power(k));
}

bool is_derivation(const HomLieSuper2& g, const Matrix& d, unsigned k) {
  for (Elem x : derivation_residual(g, d, k))
    if (x) return false;
  return true;
}

namespace {

std::vector<Matrix> solve_block(const HomLieSuper2& g, const Matrix& ak, int parity) {
  std::size_t n = g.dim();
  const Field& f = g.field();
  std::vector<std::size_t> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if ((g.basis().parities[a] + g.basis().parities[c]) % 2 == parity) slots.push_back(a * n + c);
  if (slots.empty()) return {};
  std::vector<Vector> cols;
  for (std::size_t s : slots) {
    Matrix d(f, n, n);
    d.e[s] = 1;
    cols.emplace_back(f, residual_with(g, d, ak));
  }
  Matrix sys = Matrix::from_columns(f, cols[0].size(), cols);
  SubspaceBasis ker = kernel_basis(sys);
  std::vector<Matrix> out;
  for (const auto& v : ker.vectors) {
    Matrix d(f, n, n);
    for (std::size_t t = 0; t < slots.size(); ++t) d.e[slots[t]] = v.e[t];
    out.push_back(d);
  }
  return out;
}

}  // namespace

DerivationSpace derivation_space(const HomLieSuper2& g, unsigned k, ParitySel parity) {
  DerivationSpace ds;
  ds.algebra = g;
  ds.power = k;
  Matrix ak = g.alpha().power(k);
  if (parity != ParitySel::Odd) {
    ds.basis = solve_block(g, ak, 0);
    ds.even_dim = ds.basis.size();
  }
  if (parity != ParitySel::Even) {
    auto odd = solve_block(g, ak, 1);
    ds.odd_dim = odd.size();
    ds.basis.insert(ds.basis.end(), odd.begin(), odd.end());
  }
  return ds;
}

Matrix adjoint_alpha_derivation(const HomLieSuper2& g, const Vector& x, unsigned k) {
  if (x.size() != g.dim()) throw Error(ErrorKind::Shape, "vector has wrong length");
  if (!(g.alpha().apply(x) == x))
    throw Error(ErrorKind::FixedPointViolation, "alpha(x) != x for x = " + describe(g.basis(), x));
  Matrix ak = g.alpha().power(k);
  Matrix m(g.field(), g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) m.set_column(j, bracket_eval(g, x, ak.column(j)));
  if (!is_derivation(g, m, k))
    throw Error(ErrorKind::ConstraintViolation, "adjoint map is not an alpha^k-derivation");
  return m;
}

DerivationSuperalgebra derivation_superalgebra(const HomLieSuper2& g, unsigned max_k) {
  const Field& f = g.field();
  std::size_t n = g.dim();
  std::vector<DerivationSpace> spaces;
  std::vector<SubspaceBasis> spans;
  for (unsigned k = 0; k <= max_k; ++k) {
    spaces.push_back(derivation_space(g, k));
    spans.push_back(spaces.back().span());
  }
  DerivationSuperalgebra out;
  std::vector<std::string> labels;
  std::vector<int> pars;
  std::vector<std::size_t> offset;
  for (unsigned k = 0; k <= max_k; ++k) {
    offset.push_back(labels.size());
    const auto& ds = spaces[k];
    for (std::size_t i = 0; i < ds.dim(); ++i) {
      labels.push_back("D" + std::to_string(i + 1) + "^" + std::to_string(k));
      pars.push_back(i >= ds.even_dim);
      out.degree.push_back(k);
      out.elements.push_back(ds.basis[i]);
    }
  }
  HomLieSuper2 h(f, SuperBasis(labels, pars));
  std::size_t dim = labels.size();

  // Coordinates of m in the degree-k piece, placed in the big algebra.
  auto embed = [&](const Matrix& m, unsigned k, const std::string& what) -> Vector {
    Vector out_v = h.zero();
    if (m.is_zero()) return out_v;
    if (k > max_k) {
      out.overflow.push_back(what);
      return out_v;
    }
    Vector flat(f, m.e);
    // Coordinates relative to the derivation basis, not the RREF basis.
    std::vector<Vector> gens;
    for (const auto& d : spaces[k].basis) gens.emplace_back(f, d.e);
    Matrix sys = Matrix::from_columns(f, n * n, gens);
    auto sol = gens.empty() ? std::nullopt : solve(sys, flat);
    if (!sol) {
      out.violations.push_back(what + " leaves der_" + std::to_string(k));
      return out_v;
    }
    for (std::size_t i = 0; i < sol->size(); ++i) out_v.e[offset[k] + i] = sol->e[i];
    return out_v;
  };

  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      const Matrix& x = out.elements[a];
      const Matrix& y = out.elements[b];
      Matrix br = x * y + y * x;
      h.set_bracket(a, b, embed(br, out.degree[a] + out.degree[b], "[" + labels[a] + "," + labels[b] + "]"));
    }
    if (pars[a]) {
      const Matrix& x = out.elements[a];
      h.set_sigma(a, embed(x * x, 2 * out.degree[a], "s(" + labels[a] + ")"));
    }
  }
  out.algebra = h;
  return out;
}

}  // namespace homlie2
