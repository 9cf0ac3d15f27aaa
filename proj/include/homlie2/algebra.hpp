#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie2/linalg.hpp"

namespace homlie2 {

struct SuperBasis {
  std::vector<std::string> labels;
  std::vector<int> parities;  // 0 even, 1 odd

  SuperBasis() = default;
  SuperBasis(std::vector<std::string> l, std::vector<int> p);
  // Even labels e0.., then odd labels f0..
  static SuperBasis standard(std::size_t m, std::size_t n, const std::string& even = "e", const std::string& odd = "f");

  std::size_t size() const { return labels.size(); }
  std::size_t even_count() const;
  std::size_t odd_count() const { return size() - even_count(); }
  bool odd(std::size_t i) const { return parities[i] != 0; }
  std::vector<std::size_t> odd_indices() const;
  std::vector<std::size_t> even_indices() const;
  std::size_t index_of(const std::string& label) const;
  bool operator==(const SuperBasis&) const = default;
};

// Parity of a vector: 0/1 if homogeneous, -1 if mixed; zero counts as both (returns 0).
int vector_parity(const SuperBasis& b, const Vector& v);
bool parity_preserving(const SuperBasis& src, const SuperBasis& dst, const Matrix& m);
std::string describe(const SuperBasis& b, const Vector& v);

enum class ParitySel { Even, Odd, Both };
ParitySel parse_parity_sel(const std::string& s);

class HomLieSuper2 {
 public:
  HomLieSuper2() = default;
  // Zero bracket, zero squaring, identity twist.
  HomLieSuper2(const Field& f, SuperBasis b);

  const Field& field() const { return field_; }
  const SuperBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  Elem c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  // Stores [b_i, b_j] = [b_j, b_i] = v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  void set_c(std::size_t i, std::size_t j, std::size_t k, Elem v);
  const Vector& sigma(std::size_t i) const { return sigma_[i]; }
  void set_sigma(std::size_t i, const Vector& v);
  const Matrix& alpha() const { return alpha_; }
  void set_alpha(const Matrix& a);

  Vector zero() const { return Vector(field_, dim()); }
  Vector unit(std::size_t i) const { return Vector::unit(field_, dim(), i); }
  Vector by_labels(const std::vector<std::pair<Elem, std::string>>& terms) const;

  bool operator==(const HomLieSuper2& o) const {
    return field_ == o.field_ && basis_ == o.basis_ && c_ == o.c_ && sigma_ == o.sigma_ && alpha_ == o.alpha_;
  }

 private:
  Field field_;
  SuperBasis basis_;
  std::vector<Elem> c_;
  std::vector<Vector> sigma_;
  Matrix alpha_;
};

Vector bracket_eval(const HomLieSuper2& g, const Vector& x, const Vector& y);
Vector squaring_eval(const HomLieSuper2& g, const Vector& x);
Vector twist_eval(const HomLieSuper2& g, const Vector& x);

struct Witness {
  std::string where;
  Vector lhs, rhs;
};

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  bool skipped = false;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool ok() const;
  const AxiomVerdict* find(const std::string& axiom) const;
  const AxiomVerdict* first_failure() const;
  std::string summary() const;
  void add(AxiomVerdict v) { verdicts.push_back(std::move(v)); }
  void merge(const AxiomReport& o);
};

// Test vectors sufficient for identities quadratic in an odd argument:
// odd basis vectors and their pairwise sums.
std::vector<std::pair<std::string, Vector>> odd_quadratic_test_set(const SuperBasis& b, const Field& f);

AxiomReport check_structure(const HomLieSuper2& g);
AxiomReport check_axioms(const HomLieSuper2& g, bool require_multiplicative = true);
AxiomReport check_morphism(const HomLieSuper2& src, const HomLieSuper2& dst, const Matrix& phi);

HomLieSuper2 twist_by_morphism(const HomLieSuper2& g, const Matrix& alpha_new);

AxiomReport check_ideal(const HomLieSuper2& g, const SubspaceBasis& i);
HomLieSuper2 quotient(const HomLieSuper2& g, const SubspaceBasis& i);
SubspaceBasis derived_subalgebra(const HomLieSuper2& g, unsigned steps);

// Relabels basis vector i as position perm[i].
HomLieSuper2 permute_basis(const HomLieSuper2& g, const std::vector<std::size_t>& perm);
// Restriction to the even part (a Hom-Lie algebra).
HomLieSuper2 even_part(const HomLieSuper2& g);
// Plain Hom-Lie algebra check: [a(x),[y,z]] + cyclic = 0 on all basis triples.
AxiomReport check_hom_lie_algebra(const HomLieSuper2& g);

}  // namespace homlie2
