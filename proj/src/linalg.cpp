#include "homlie2/linalg.hpp"

namespace homlie2 {

namespace {

void check_len(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorKind::Shape, std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

// row_dst += c * row_src over the columns [from, cols)
void row_axpy(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t from, std::size_t cols) {
  if (c == 1) {
    for (std::size_t j = from; j < cols; ++j) dst[j] ^= src[j];
    return;
  }
  for (std::size_t j = from; j < cols; ++j)
    if (src[j]) dst[j] ^= f.mul(c, src[j]);
}

}  // namespace

bool Vector::is_zero() const {
  for (Elem x : e)
    if (x) return false;
  return true;
}

void Vector::axpy(Elem c, const Vector& o) {
  check_len(e.size(), o.e.size(), "vector axpy");
  if (c == 0) return;
  if (!e.empty()) field.require_same(o.field);
  row_axpy(field, e.data(), o.e.data(), c, 0, e.size());
}

Vector& Vector::operator+=(const Vector& o) {
  axpy(1, o);
  return *this;
}

Vector Vector::operator+(const Vector& o) const {
  Vector r = *this;
  r += o;
  return r;
}

Vector Vector::scaled(Elem c) const {
  Vector r = *this;
  for (Elem& x : r.e) x = field.mul(c, x);
  return r;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_len(rows[i].size(), cols, "matrix row");
    std::copy(rows[i].e.begin(), rows[i].e.end(), m.e.begin() + i * cols);
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(field, std::vector<Elem>(e.begin() + i * cols, e.begin() + (i + 1) * cols));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(field, rows);
  for (std::size_t i = 0; i < rows; ++i) v.e[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  check_len(v.size(), rows, "matrix column");
  for (std::size_t i = 0; i < rows; ++i) at(i, j) = v.e[i];
}

Vector Matrix::apply(const Vector& v) const {
  check_len(v.size(), cols, "matrix-vector product");
  Vector r(field, rows);
  for (std::size_t j = 0; j < cols; ++j) {
    Elem c = v.e[j];
    if (!c) continue;
    for (std::size_t i = 0; i < rows; ++i)
      if (Elem a = at(i, j)) r.e[i] ^= field.mul(a, c);
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_len(cols, o.rows, "matrix product");
  Matrix r(field, rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      if (Elem a = at(i, k)) row_axpy(field, &r.e[i * o.cols], &o.e[k * o.cols], a, 0, o.cols);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_len(rows, o.rows, "matrix sum rows");
  check_len(cols, o.cols, "matrix sum cols");
  Matrix r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] ^= o.e[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field, cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::power(unsigned k) const {
  check_len(rows, cols, "matrix power");
  Matrix r = identity(field, rows);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<Matrix> Matrix::inverse() const {
  check_len(rows, cols, "matrix inverse");
  std::size_t n = rows;
  Matrix aug(field, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref_full(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

bool Matrix::is_zero() const {
  for (Elem x : e)
    if (x) return false;
  return true;
}

RrefResult rref_full(const Matrix& m) {
  RrefResult r{m, 0, {}};
  Matrix& a = r.m;
  const Field& f = a.field;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t p = row;
    while (p < a.rows && a.at(p, col) == 0) ++p;
    if (p == a.rows) continue;
    if (p != row)
      std::swap_ranges(a.e.begin() + p * a.cols, a.e.begin() + (p + 1) * a.cols, a.e.begin() + row * a.cols);
    Elem* prow = &a.e[row * a.cols];
    Elem inv = f.inv(prow[col]);
    if (inv != 1)
      for (std::size_t j = col; j < a.cols; ++j) prow[j] = f.mul(inv, prow[j]);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      Elem c = a.at(i, col);
      if (c) row_axpy(f, &a.e[i * a.cols], prow, c, col, a.cols);
    }
    r.pivots.push_back(col);
    ++row;
  }
  r.rank = row;
  return r;
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  RrefResult r = rref_full(m);
  return {std::move(r.m), r.rank};
}

std::size_t rank(const Matrix& m) { return rref_full(m).rank; }

SubspaceBasis kernel_basis(const Matrix& m) {
  RrefResult r = rref_full(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field, m.cols);
    v.e[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v.e[r.pivots[i]] = r.m.at(i, free);
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(m.field, m.cols, gens);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  check_len(b.size(), m.rows, "solve right-hand side");
  Matrix aug(m.field, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::copy(m.e.begin() + i * m.cols, m.e.begin() + (i + 1) * m.cols, aug.e.begin() + i * aug.cols);
    aug.at(i, m.cols) = b.e[i];
  }
  RrefResult r = rref_full(aug);
  if (r.rank > 0 && r.pivots[r.rank - 1] == m.cols) return std::nullopt;
  Vector x(m.field, m.cols);
  for (std::size_t i = 0; i < r.rank; ++i) x.e[r.pivots[i]] = r.m.at(i, m.cols);
  return x;
}

SubspaceBasis SubspaceBasis::span(const Field& f, std::size_t n, const std::vector<Vector>& gens) {
  SubspaceBasis s(f, n);
  if (gens.empty()) return s;
  RrefResult r = rref_full(Matrix::from_rows(f, n, gens));
  for (std::size_t i = 0; i < r.rank; ++i) s.vectors.push_back(r.m.row(i));
  s.pivots = r.pivots;
  return s;
}

SubspaceBasis SubspaceBasis::full(const Field& f, std::size_t n) {
  SubspaceBasis s(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.vectors.push_back(Vector::unit(f, n, i));
    s.pivots.push_back(i);
  }
  return s;
}

Vector SubspaceBasis::reduce(const Vector& v) const {
  check_len(v.size(), ambient_dim, "subspace membership");
  Vector r = v;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (Elem c = r.e[pivots[i]]) r.axpy(c, vectors[i]);
  return r;
}

bool SubspaceBasis::contains(const SubspaceBasis& o) const {
  for (const Vector& v : o.vectors)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  Vector c(field, vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) c.e[i] = v.e[pivots[i]];
  Vector check(field, ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) check.axpy(c.e[i], vectors[i]);
  if (!(check == v)) return std::nullopt;
  return c;
}

bool SubspaceBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  if (r.is_zero()) return false;
  std::vector<Vector> gens = vectors;
  gens.push_back(r);
  *this = span(field, ambient_dim, gens);
  return true;
}

std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
  if (!z.contains(b)) throw Error(ErrorKind::NotASubspace, "boundary space is not contained in the cycle space");
  return z.dim() - b.dim();
}

}  // namespace homlie2
