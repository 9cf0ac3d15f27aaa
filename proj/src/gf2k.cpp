#include "homlie2/gf2k.hpp"

#include <bit>
#include <cctype>

namespace homlie2 {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SpecMismatch: return "spec-mismatch";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::InvalidMorphism: return "invalid-morphism";
    case ErrorKind::InvalidIdeal: return "invalid-ideal";
    case ErrorKind::InvalidRepresentation: return "invalid-representation";
    case ErrorKind::Incompatibility: return "incompatibility";
    case ErrorKind::FixedPointViolation: return "fixed-point-violation";
    case ErrorKind::NotACochain: return "not-a-cochain";
    case ErrorKind::NotClosed: return "not-closed";
    case ErrorKind::ComplexViolation: return "complex-violation";
    case ErrorKind::NotASubspace: return "not-a-subspace";
    case ErrorKind::ConstraintViolation: return "constraint-violation";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Format: return "format";
  }
  return "unknown";
}

namespace {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  int d = degree(poly);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q)
    if (poly_mod(poly, q) == 0) return false;
  return true;
}

FieldSpec standard_spec(unsigned k) {
  switch (k) {
    case 1: return {1, 0b11};
    case 2: return {2, 0b111};
    case 3: return {3, 0b1011};
    case 4: return {4, 0b10011};
    case 8: return {8, 0x11B};
    default: break;
  }
  throw Error(ErrorKind::Unsupported, "no standard modulus for k=" + std::to_string(k));
}

Field::Field() : Field(standard_spec(1)) {}

Field::Field(const FieldSpec& spec) {
  if (spec.k < 1 || spec.k > 16)
    throw Error(ErrorKind::Unsupported, "extension degree must lie in 1..16");
  if (degree(spec.modulus) != static_cast<int>(spec.k) || !is_irreducible(spec.modulus))
    throw Error(ErrorKind::ConstraintViolation, "modulus is not an irreducible polynomial of degree k");
  auto t = std::make_shared<Tables>();
  t->spec = spec;
  t_ = t;
  if (spec.k <= 8) {
    std::uint32_t q = 1u << spec.k;
    t->table.resize(std::size_t(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) t->table[(a << spec.k) | b] = static_cast<std::uint16_t>(mul_slow(a, b));
  }
}

Elem Field::mul_slow(Elem a, Elem b) const {
  std::uint64_t r = 0;
  for (std::uint64_t x = a; b; b >>= 1, x <<= 1)
    if (b & 1) r ^= x;
  return static_cast<Elem>(poly_mod(r, t_->spec.modulus));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(a, (std::uint64_t(1) << k()) - 2);
}

void Field::require_same(const Field& o) const {
  if (!(*this == o)) throw Error(ErrorKind::SpecMismatch, name() + " vs " + o.name());
}

std::string Field::name() const { return "GF(2^" + std::to_string(k()) + ")"; }

Scalar::Scalar(const Field& f, Elem bits) : f_(f), v_(bits) {
  if (bits >= f.size()) throw Error(ErrorKind::ConstraintViolation, "scalar not reduced");
}

Scalar Scalar::operator+(const Scalar& o) const {
  f_.require_same(o.f_);
  return Scalar(f_, v_ ^ o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  f_.require_same(o.f_);
  return Scalar(f_, f_.mul(v_, o.v_));
}

Scalar Scalar::inverse() const { return Scalar(f_, f_.inv(v_)); }

Scalar f_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar f_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar f_inv(const Scalar& a) { return a.inverse(); }

Elem parse_elem(const Field& f, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::Format, "empty scalar");
  Elem v = 0;
  if (s.find('a') == std::string::npos) {
    std::size_t used = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(s, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s[0] == '-') throw Error(ErrorKind::Format, "bad scalar '" + text + "'");
    v = static_cast<Elem>(n);
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t end = s.find('+', pos);
      if (end == std::string::npos) end = s.size();
      std::string term = s.substr(pos, end - pos);
      unsigned e = 0;
      if (term == "1") e = 0;
      else if (term == "a") e = 1;
      else if (term.size() > 2 && term[0] == 'a' && term[1] == '^' &&
               term.find_first_not_of("0123456789", 2) == std::string::npos && term.size() < 8)
        e = static_cast<unsigned>(std::stoul(term.substr(2)));
      else throw Error(ErrorKind::Format, "bad scalar term '" + term + "'");
      v ^= f.pow(f.k() == 1 ? 1 : 2, e);
      pos = end + 1;
    }
  }
  if (v >= f.size()) throw Error(ErrorKind::Format, "scalar " + text + " outside " + f.name());
  return v;
}

std::string format_elem(Elem e) { return std::to_string(e); }

}  // namespace homlie2
