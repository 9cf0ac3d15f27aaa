#pragma once

#include <string>
#include <vector>

#include "homlie2/algebra.hpp"

namespace homlie2 {

struct RestrictedHomLie2 {
  HomLieSuper2 algebra;          // purely even
  std::vector<Vector> two_map;   // e_i^[2]

  RestrictedHomLie2() = default;
  RestrictedHomLie2(HomLieSuper2 g, std::vector<Vector> t);
};

// (sum a_i e_i)^[2] = sum a_i^2 e_i^[2] + sum_{i<j} a_i a_j [e_i, e_j]
Vector two_map_eval(const RestrictedHomLie2& r, const Vector& x);

// Verdicts: "shape", "r1", and "two-map-multiplicative" (alpha(x^[2]) = alpha(x)^[2];
// skipped unless require_multiplicative).
AxiomReport check_2_structure(const RestrictedHomLie2& r, bool require_multiplicative = true);
RestrictedHomLie2 twist_2_structure(const RestrictedHomLie2& g, const Matrix& alpha);
HomLieSuper2 queerify(const RestrictedHomLie2& r);

struct CommuteVerdict {
  bool equal = false;
  std::string difference;  // empty when equal
};
CommuteVerdict check_queerify_twist_commute(const RestrictedHomLie2& g, const Matrix& alpha);

// span{e}, zero bracket, e^[2] = e.
RestrictedHomLie2 restricted_line(const Field& f);
// [e1,e2] = e2, e1^[2] = e1, e2^[2] = 0.
RestrictedHomLie2 restricted_affine(const Field& f);

}  // namespace homlie2
