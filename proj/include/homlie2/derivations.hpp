#pragma once

#include <string>
#include <vector>

#include "homlie2/algebra.hpp"

namespace homlie2 {

struct DerivationSpace {
  HomLieSuper2 algebra;
  unsigned power = 0;
  // Even basis elements first, then odd; each entry a full endomorphism.
  std::vector<Matrix> basis;
  std::size_t even_dim = 0, odd_dim = 0;

  std::size_t dim() const { return basis.size(); }
  // Span in the flattened (row-major) endomorphism space.
  SubspaceBasis span() const;
  bool contains(const Matrix& d) const;
};

// Residual of every defining identity; all zero iff D is an alpha^k-derivation.
std::vector<Elem> derivation_residual(const HomLieSuper2& g, const Matrix& d, unsigned k);
bool is_derivation(const HomLieSuper2& g, const Matrix& d, unsigned k);

DerivationSpace derivation_space(const HomLieSuper2& g, unsigned k, ParitySel parity = ParitySel::Both);

// y -> [x, alpha^k(y)] for an alpha-fixed x.
Matrix adjoint_alpha_derivation(const HomLieSuper2& g, const Vector& x, unsigned k);

struct DerivationSuperalgebra {
  HomLieSuper2 algebra;  // identity twist
  std::vector<unsigned> degree;
  std::vector<Matrix> elements;
  // Products whose degree exceeds max_k; recorded as zero in `algebra`.
  std::vector<std::string> overflow;
  // In-range products that left the expected graded piece (empty when closure holds).
  std::vector<std::string> violations;
};

DerivationSuperalgebra derivation_superalgebra(const HomLieSuper2& g, unsigned max_k);

}  // namespace homlie2
