#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie2/cohomology.hpp"

namespace homlie2 {

// [x,y]_t = [x,y] + sum_i c_i(x,y) t^i and s_t(x) = s(x) + sum_i p_i(x) t^i, truncated at t^order.
// terms[i-1] holds (c_i, p_i), a degree-2 cochain with adjoint coefficients.
struct TruncatedDeformation {
  HomLieSuper2 algebra;
  std::vector<CochainPair> terms;

  TruncatedDeformation() = default;
  explicit TruncatedDeformation(HomLieSuper2 g) : algebra(std::move(g)) {}
  TruncatedDeformation(HomLieSuper2 g, std::vector<CochainPair> t);

  std::size_t order() const { return terms.size(); }
  Vector c(std::size_t i, const Vector& x, const Vector& y) const;  // c_0 is the bracket
  Vector p(std::size_t i, const Vector& x) const;                   // p_0 is the squaring
  // Zero degree-2 cochain with adjoint coefficients.
  CochainPair zero_term() const;
};

struct DeformationReport {
  // per_order[k] checks the coefficient of t^k.
  std::vector<AxiomReport> per_order;
  bool ok() const;
  std::string summary() const;
};

DeformationReport check_deformation(const TruncatedDeformation& d);
bool first_order_is_cocycle(const TruncatedDeformation& d);

struct ObstructionPair {
  CochainPair pair;          // (C_n, Q_n) as a degree-3 cochain
  bool compatible = true;    // Q_n polarizes to C_n at sampled odd pairs
  bool closed = true;        // d^3 (C_n, Q_n) = 0
};

// Obstruction to extending an order-(n-1) deformation to order n.
ObstructionPair obstruction(const TruncatedDeformation& d);

struct ExtensionResult {
  bool extended = false;
  TruncatedDeformation deformation;  // order n when extended
  ObstructionPair obstruction;
  // When not extended and the obstruction is closed: its coordinates in a fixed basis of H^3
  // (empty if the obstruction is not closed).
  std::vector<Elem> h3_class;
};

ExtensionResult extend_order(const TruncatedDeformation& d);

struct EquivalenceMap {
  std::vector<Matrix> taus;  // tau_1 .. tau_N
};

enum class SquaringForm {
  // Full expansion of s_t(tau(x)), including [tau_u(x), tau_v(x)] cross terms.
  Full,
  // Only the terms with j >= 1 in the cross sum; agrees with Full through order 2.
  Truncated,
};

// Checks tau(d2) = d1 coefficientwise: sum tau_i(c2_j(x,y)) = sum c1_i(tau_j x, tau_k y) and the squaring analogue.
AxiomReport check_equivalence(const TruncatedDeformation& d1, const TruncatedDeformation& d2, const EquivalenceMap& tau,
                              SquaringForm form = SquaringForm::Full);

// d2 with (c2_1, p2_1) = (c_1, p_1) + d^1 tau_1; tau_1 must be an even equivariant endomorphism.
TruncatedDeformation gauge_transform_first_order(const TruncatedDeformation& d, const Matrix& tau1);
// tau_1 with d^1 tau_1 = (c_1, p_1), or nullopt when the first-order term is not exact.
std::optional<EquivalenceMap> gauge_first_order(const TruncatedDeformation& d);

}  // namespace homlie2
