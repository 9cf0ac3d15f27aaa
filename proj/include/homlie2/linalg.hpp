#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homlie2/gf2k.hpp"

namespace homlie2 {

struct Vector {
  Field field;
  std::vector<Elem> e;

  Vector() = default;
  Vector(const Field& f, std::size_t n) : field(f), e(n, 0) {}
  Vector(const Field& f, std::vector<Elem> v) : field(f), e(std::move(v)) {}
  static Vector unit(const Field& f, std::size_t n, std::size_t i) {
    Vector v(f, n);
    v.e[i] = 1;
    return v;
  }

  std::size_t size() const { return e.size(); }
  Elem operator[](std::size_t i) const { return e[i]; }
  Elem& operator[](std::size_t i) { return e[i]; }
  bool is_zero() const;

  // this += c * o
  void axpy(Elem c, const Vector& o);
  Vector& operator+=(const Vector& o);
  Vector operator+(const Vector& o) const;
  Vector scaled(Elem c) const;
  bool operator==(const Vector& o) const { return e == o.e && (e.empty() || field == o.field); }
};

struct Matrix {
  Field field;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> e;  // row-major

  Matrix() = default;
  Matrix(const Field& f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), e(r * c, 0) {}
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);

  Elem at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
  Elem& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix transpose() const;
  Matrix power(unsigned k) const;
  std::optional<Matrix> inverse() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && e == o.e && (e.empty() || field == o.field);
  }
};

struct SubspaceBasis {
  Field field;
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;  // reduced row-echelon
  std::vector<std::size_t> pivots;

  SubspaceBasis() = default;
  SubspaceBasis(const Field& f, std::size_t n) : field(f), ambient_dim(n) {}
  static SubspaceBasis span(const Field& f, std::size_t n, const std::vector<Vector>& gens);
  static SubspaceBasis full(const Field& f, std::size_t n);

  std::size_t dim() const { return vectors.size(); }
  // Remainder after clearing all pivot columns; zero iff v is in the span.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  bool contains(const SubspaceBasis& o) const;
  // Coefficients of v in terms of `vectors`; nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  // Adds v if independent; returns whether the span grew.
  bool insert(const Vector& v);
  bool operator==(const SubspaceBasis& o) const { return ambient_dim == o.ambient_dim && vectors == o.vectors; }
};

struct RrefResult {
  Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref_full(const Matrix& m);
std::pair<Matrix, std::size_t> rref(const Matrix& m);
std::size_t rank(const Matrix& m);
SubspaceBasis kernel_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b);

}  // namespace homlie2
