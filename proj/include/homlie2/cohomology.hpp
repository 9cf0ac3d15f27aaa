#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homlie2/reps.hpp"

namespace homlie2 {

// Coordinates of degree-n cochains: c on increasing n-tuples of basis indices,
// then p on (odd index, increasing (n-2)-tuple); each slot holds a module vector.
// Tuples are stored as bitmasks over algebra indices.
struct CochainLayout {
  std::size_t degree = 0, alg_dim = 0, mod_dim = 0;
  std::vector<int> alg_par, mod_par;
  std::vector<std::uint64_t> c_masks;
  std::vector<std::pair<std::size_t, std::uint64_t>> p_keys;
  std::unordered_map<std::uint64_t, std::size_t> c_index;
  std::unordered_map<std::uint64_t, std::size_t> p_index;  // key (i << 32) | mask

  std::size_t p_offset() const { return c_masks.size() * mod_dim; }
  std::size_t size() const { return p_offset() + p_keys.size() * mod_dim; }
  // Parity of coordinate t as a multilinear map (the quadratic slot counts twice).
  int coord_parity(std::size_t t) const;
  std::vector<std::size_t> tuple(std::uint64_t mask) const;
  std::string coord_name(std::size_t t, const SuperBasis& gb, const SuperBasis& mb) const;
};

std::shared_ptr<const CochainLayout> make_layout(const HomLieSuper2& g, const Representation& r, std::size_t n);

struct CochainPair {
  std::shared_ptr<const CochainLayout> layout;
  Vector coords;

  CochainPair() = default;
  // The zero cochain.
  CochainPair(std::shared_ptr<const CochainLayout> l, const Field& f);
  CochainPair(std::shared_ptr<const CochainLayout> l, Vector v);

  std::size_t degree() const { return layout->degree; }
  // 0 even, 1 odd, -1 mixed; the zero cochain reports 0.
  int parity() const;
  bool is_zero() const { return coords.is_zero(); }

  Vector c_at(const std::vector<std::size_t>& args) const;
  void set_c(std::vector<std::size_t> args, const Vector& value);
  Vector p_at(std::size_t odd_index, const std::vector<std::size_t>& args) const;
  void set_p(std::size_t odd_index, std::vector<std::size_t> args, const Vector& value);

  // Multilinear, alternating evaluation on arbitrary vectors.
  Vector eval_c(const std::vector<Vector>& args) const;
  // Quadratic in the odd vector x: sum x_i^2 p(f_i,z) + sum_{i<j} x_i x_j c(f_i,f_j,z).
  Vector eval_p(const Vector& x, const std::vector<Vector>& z) const;

  CochainPair operator+(const CochainPair& o) const;
  bool operator==(const CochainPair& o) const { return degree() == o.degree() && coords == o.coords; }
};

struct CochainSpace {
  Field field;
  std::shared_ptr<const CochainLayout> layout;
  std::vector<Vector> basis;  // even elements first
  std::size_t even_dim = 0, odd_dim = 0;

  std::size_t dim() const { return basis.size(); }
  SubspaceBasis span() const;
  CochainPair element(std::size_t i) const { return CochainPair(layout, basis[i]); }
};

// Violations of the equivariance (and degree-0) constraints; all zero iff a cochain.
std::vector<Elem> cochain_residual(const HomLieSuper2& g, const Representation& r, const CochainPair& c);
bool is_cochain(const HomLieSuper2& g, const Representation& r, const CochainPair& c);

CochainSpace cochain_space(const HomLieSuper2& g, const Representation& r, std::size_t n,
                           ParitySel parity = ParitySel::Both);

// Applies the degree-n formula without checking membership.
CochainPair apply_differential(const HomLieSuper2& g, const Representation& r, const CochainPair& c);
// Same, but rejects non-cochains.
CochainPair differential(const HomLieSuper2& g, const Representation& r, const CochainPair& c);
// Column t is the differential of the t-th unit coordinate.
Matrix differential_matrix(const HomLieSuper2& g, const Representation& r, std::size_t n);

// Direct evaluation of the degree-n differential's p-part at an arbitrary odd x.
Vector differential_p_at(const HomLieSuper2& g, const Representation& r, const CochainPair& c, const Vector& x,
                         const std::vector<Vector>& z);

struct ComplexReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> findings;
};

// d o d = 0 on every basis cochain and `trials` random ones up to degree n_max, image
// membership of each differential, polarization of the p-part, and the two auxiliary
// identities on random vectors.
ComplexReport verify_complex(const HomLieSuper2& g, const Representation& r, std::size_t n_max, std::size_t trials,
                             std::uint64_t seed = 1);

struct CohomologyDims {
  std::size_t n = 0;
  std::size_t dim_Z = 0, dim_B = 0, dim_H = 0;
  std::size_t even_H = 0, odd_H = 0;
  std::size_t even_Z = 0, odd_Z = 0, even_B = 0, odd_B = 0;
};

CohomologyDims cohomology_dims(const HomLieSuper2& g, const Representation& r, std::size_t n);
std::vector<CochainPair> cocycle_basis(const HomLieSuper2& g, const Representation& r, std::size_t n,
                                       ParitySel parity = ParitySel::Both);
// Preimage under the differential, or nullopt when the cocycle is not exact.
std::optional<CochainPair> is_coboundary(const HomLieSuper2& g, const Representation& r, const CochainPair& c);
// Number of independent classes among the given cocycles modulo coboundaries.
std::size_t class_rank(const HomLieSuper2& g, const Representation& r, const std::vector<CochainPair>& cocycles);

}  // namespace homlie2
