#pragma once

#include <utility>
#include <vector>

#include "homlie2/algebra.hpp"

namespace homlie2 {

class Representation {
 public:
  Representation() = default;
  // Zero action, identity beta.
  Representation(HomLieSuper2 g, SuperBasis module);

  const HomLieSuper2& algebra() const { return g_; }
  const SuperBasis& module_basis() const { return mb_; }
  std::size_t module_dim() const { return mb_.size(); }
  const Field& field() const { return g_.field(); }

  // rho(e_i) as a module endomorphism; column j is [e_i, v_j].
  const Matrix& action(std::size_t i) const { return act_[i]; }
  void set_action(std::size_t i, const Matrix& m);
  const Matrix& beta() const { return beta_; }
  void set_beta(const Matrix& b);

  Matrix rho(const Vector& x) const;
  Vector act(const Vector& x, const Vector& v) const { return rho(x).apply(v); }
  Vector module_zero() const { return Vector(field(), module_dim()); }

  bool operator==(const Representation& o) const {
    return g_ == o.g_ && mb_ == o.mb_ && act_ == o.act_ && beta_ == o.beta_;
  }

 private:
  HomLieSuper2 g_;
  SuperBasis mb_;
  std::vector<Matrix> act_;
  Matrix beta_;
};

AxiomReport check_representation(const Representation& r);
Representation adjoint_rep(const HomLieSuper2& g);
Representation trivial_rep(const HomLieSuper2& g, std::size_t dim = 1);
HomLieSuper2 semidirect_product(const Representation& r);

HomLieSuper2 gl_hom_structure(std::size_t dim_even, std::size_t dim_odd, const Matrix& beta);
HomLieSuper2 gl_hom_structure(const SuperBasis& module, const Matrix& beta);
// Column i is rho_beta(e_i) flattened row-major.
Matrix rep_as_matrix_map(const Representation& r);
AxiomReport check_rep_as_morphism(const Representation& r);

std::pair<HomLieSuper2, Representation> twist_representation(const HomLieSuper2& g, const Representation& r,
                                                            const Matrix& alpha, const Matrix& beta);

}  // namespace homlie2
