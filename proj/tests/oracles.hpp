#pragma once

// Brute-force reference implementations shared by the unit tests. They work on
// raw structure constants and never call the library's evaluators.

#include <cstdint>
#include <functional>
#include <vector>

#include "homlie2/algebra.hpp"

namespace oracle {

using homlie2::Elem;
using homlie2::Field;
using homlie2::HomLieSuper2;
using V = std::vector<Elem>;

inline V add(V a, const V& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

inline V scale(const Field& f, Elem c, V a) {
  for (auto& x : a) x = f.mul(c, x);
  return a;
}

inline V apply(const homlie2::Matrix& m, const V& x) {
  V out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] ^= m.field.mul(m.at(i, j), x[j]);
  return out;
}

inline V bracket(const HomLieSuper2& g, const V& x, const V& y) {
  const Field& f = g.field();
  std::size_t n = g.dim();
  V out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem a = f.mul(x[i], y[j]);
      if (!a) continue;
      if (i == j) {
        // [x,x] = 2 s(x) = 0 in characteristic 2 for odd basis vectors.
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) out[k] ^= f.mul(a, g.c(i, j, k));
    }
  return out;
}

inline V squaring(const HomLieSuper2& g, const V& x) {
  const Field& f = g.field();
  std::size_t n = g.dim();
  V out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    out = add(out, scale(f, f.sqr(x[i]), g.sigma(i).e));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!x[j]) continue;
      V b(n, 0);
      for (std::size_t k = 0; k < n; ++k) b[k] = g.c(i, j, k);
      out = add(out, scale(f, f.mul(x[i], x[j]), b));
    }
  }
  return out;
}

// Every vector of F^n supported on the given coordinates.
inline std::vector<V> vectors_on(const Field& f, std::size_t n, const std::vector<std::size_t>& support) {
  std::vector<V> out{V(n, 0)};
  for (std::size_t idx : support) {
    std::vector<V> next;
    for (const auto& v : out)
      for (Elem c = 0; c < f.size(); ++c) {
        V w = v;
        w[idx] = c;
        next.push_back(w);
      }
    out.swap(next);
  }
  return out;
}

inline bool is_zero(const V& v) {
  for (Elem e : v)
    if (e) return false;
  return true;
}

// All axioms on all homogeneous elements (exhaustive, so only for tiny algebras).
inline bool axioms_hold(const HomLieSuper2& g, bool multiplicative = true) {
  const auto& b = g.basis();
  std::size_t n = g.dim();
  const Field& f = g.field();
  auto ev = b.even_indices(), od = b.odd_indices();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) && (b.parities[i] ^ b.parities[j]) != b.parities[k]) return false;
      if (g.alpha().at(i, j) && b.parities[i] != b.parities[j]) return false;
    }
  for (std::size_t i : od)
    for (std::size_t k = 0; k < n; ++k)
      if (g.sigma(i).e[k] && b.odd(k)) return false;
  auto E = vectors_on(f, n, ev), O = vectors_on(f, n, od);
  auto A = [&](const V& x) { return apply(g.alpha(), x); };
  auto jac = [&](const V& x, const V& y, const V& z) {
    V s = add(add(bracket(g, A(x), bracket(g, y, z)), bracket(g, A(y), bracket(g, z, x))),
              bracket(g, A(z), bracket(g, x, y)));
    return is_zero(s);
  };
  for (const auto& x : E)
    for (const auto& y : E)
      for (const auto& z : E)
        if (!jac(x, y, z)) return false;
  for (const auto& x : E)
    for (const auto& y : E)
      for (const auto& z : O)
        if (!jac(x, y, z)) return false;
  std::vector<V> all;
  for (const auto& e : E)
    for (const auto& o : O) all.push_back(add(e, o));
  for (const auto& x : O)
    for (const auto& y : all)
      if (bracket(g, squaring(g, x), A(y)) != bracket(g, A(x), bracket(g, x, y))) return false;
  if (multiplicative) {
    for (const auto& x : all)
      for (const auto& y : all)
        if (A(bracket(g, x, y)) != bracket(g, A(x), A(y))) return false;
    for (const auto& x : O)
      if (A(squaring(g, x)) != squaring(g, A(x))) return false;
  }
  return true;
}

}  // namespace oracle
