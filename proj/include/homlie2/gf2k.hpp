#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "homlie2/errors.hpp"

namespace homlie2 {

// Raw field element: bit i is the coefficient of x^i.
using Elem = std::uint32_t;

struct FieldSpec {
  unsigned k = 1;
  std::uint32_t modulus = 0b11;

  bool operator==(const FieldSpec&) const = default;
};

// Standard moduli: k = 1, 2, 3, 4, 8.
FieldSpec standard_spec(unsigned k);
bool is_irreducible(std::uint32_t poly);

// Shared immutable handle on GF(2^k). Copies are cheap.
class Field {
 public:
  Field();  // GF(2)
  explicit Field(const FieldSpec& spec);
  static Field gf(unsigned k) { return Field(standard_spec(k)); }

  const FieldSpec& spec() const { return t_->spec; }
  unsigned k() const { return t_->spec.k; }
  std::uint32_t size() const { return 1u << t_->spec.k; }

  static Elem add(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (!t_->table.empty()) return t_->table[(a << t_->spec.k) | b];
    return mul_slow(a, b);
  }
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  bool operator==(const Field& o) const { return t_ == o.t_ || t_->spec == o.t_->spec; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  void require_same(const Field& o) const;
  std::string name() const;

 private:
  struct Tables {
    FieldSpec spec;
    std::vector<std::uint16_t> table;  // full product table when k <= 8
  };
  Elem mul_slow(Elem a, Elem b) const;
  std::shared_ptr<const Tables> t_;
};

class Scalar {
 public:
  Scalar(const Field& f, Elem bits);
  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const { return f_; }
  Elem bits() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const { return *this + o; }
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar square() const { return *this * *this; }

  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  Field f_;
  Elem v_;
};

Scalar f_add(const Scalar& a, const Scalar& b);
Scalar f_mul(const Scalar& a, const Scalar& b);
Scalar f_inv(const Scalar& a);

// Parses "0", "1", "a", "a+1", "a^3+a", or a plain integer bit pattern.
Elem parse_elem(const Field& f, const std::string& text);
std::string format_elem(Elem e);

}  // namespace homlie2
