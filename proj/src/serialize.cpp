#include "homlie2/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace homlie2 {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::Format, msg); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t to_index(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) bad(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

Elem to_elem(const Field& f, const json& j) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    auto v = j.get<std::uint64_t>();
    if (v >= f.size()) bad("scalar " + std::to_string(v) + " is not in " + f.name());
    return static_cast<Elem>(v);
  }
  if (j.is_string()) {
    try {
      return parse_elem(f, j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  bad("scalar must be an integer or a polynomial string");
}

// Index or label.
std::size_t basis_ref(const SuperBasis& b, const json& j, const char* what) {
  if (j.is_string()) {
    const auto& s = j.get<std::string>();
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b.labels[i] == s) return i;
    bad(std::string("unknown ") + what + " label \"" + s + "\"");
  }
  return to_index(j, b.size(), what);
}

json basis_to_json(const SuperBasis& b) {
  json out = json::array();
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back({{"label", b.labels[i]}, {"parity", b.parities[i]}});
  return out;
}

SuperBasis basis_from_json(const json& j) {
  if (!j.is_array()) bad("basis must be an array");
  std::vector<std::string> labels;
  std::vector<int> par;
  for (const auto& e : j) {
    const auto& l = need(e, "label");
    const auto& p = need(e, "parity");
    if (!l.is_string()) bad("label must be a string");
    if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1)) bad("parity must be 0 or 1");
    labels.push_back(l.get<std::string>());
    par.push_back(p.get<int>());
  }
  try {
    return SuperBasis(std::move(labels), std::move(par));
  } catch (const Error& e) {
    bad(e.what());
  }
}

std::filesystem::path resolve(const std::string& base_dir, const std::string& ref) {
  std::filesystem::path p(ref);
  return p.is_absolute() ? p : std::filesystem::path(base_dir) / p;
}

HomLieSuper2 algebra_ref(const json& j, const std::string& base_dir) {
  if (j.is_string()) {
    auto p = resolve(base_dir, j.get<std::string>());
    return algebra_from_json(read_json_file(p.string()));
  }
  return algebra_from_json(j);
}

std::vector<std::size_t> args_from_json(const SuperBasis& b, const json& j) {
  if (!j.is_array()) bad("args must be an array");
  std::vector<std::size_t> out;
  for (const auto& a : j) out.push_back(basis_ref(b, a, "argument"));
  return out;
}

}  // namespace

json field_to_json(const Field& f) { return {{"k", f.k()}, {"modulus", f.spec().modulus}}; }

Field field_from_json(const json& j) {
  if (j.is_string()) {
    // Shorthand "gf2", "gf4", ...
    auto s = j.get<std::string>();
    if (s.rfind("gf", 0) != 0) bad("unknown field \"" + s + "\"");
    unsigned q = 0;
    try {
      q = static_cast<unsigned>(std::stoul(s.substr(2)));
    } catch (...) {
      bad("unknown field \"" + s + "\"");
    }
    unsigned k = 0;
    while ((1u << k) < q) ++k;
    if (k == 0 || (1u << k) != q) bad("field order must be a power of two: " + s);
    try {
      return Field::gf(k);
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  const auto& k = need(j, "k");
  if (!k.is_number_integer()) bad("field k must be an integer");
  FieldSpec spec;
  spec.k = k.get<unsigned>();
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_number_integer()) bad("field modulus must be an integer");
    spec.modulus = j.at("modulus").get<std::uint32_t>();
  } else {
    try {
      spec = standard_spec(spec.k);
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  try {
    return Field(spec);
  } catch (const Error& e) {
    bad(e.what());
  }
}

json matrix_to_json(const Matrix& m) { return {{"rows", m.rows}, {"cols", m.cols}, {"entries", m.e}}; }

Matrix matrix_from_json(const Field& f, const json& j) {
  const auto& r = need(j, "rows");
  const auto& c = need(j, "cols");
  const auto& e = need(j, "entries");
  if (!r.is_number_integer() || !c.is_number_integer() || r.get<long long>() < 0 || c.get<long long>() < 0)
    bad("matrix shape must be non-negative integers");
  Matrix m(f, r.get<std::size_t>(), c.get<std::size_t>());
  if (!e.is_array() || e.size() != m.rows * m.cols)
    bad("matrix entries must be an array of rows*cols = " + std::to_string(m.rows * m.cols) + " scalars");
  for (std::size_t t = 0; t < e.size(); ++t) m.e[t] = to_elem(f, e[t]);
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) out.push_back({{"k", k}, {"c", v[k]}});
  return out;
}

Vector vector_from_json(const Field& f, std::size_t n, const json& j) {
  if (!j.is_array()) bad("vector must be a sparse array of {k, c}");
  Vector v(f, n);
  for (const auto& t : j) v[to_index(need(t, "k"), n, "k")] ^= to_elem(f, need(t, "c"));
  return v;
}

json algebra_to_json(const HomLieSuper2& g) {
  json out;
  out["field"] = field_to_json(g.field());
  out["basis"] = basis_to_json(g.basis());
  json br = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (g.c(i, j, k)) br.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", g.c(i, j, k)}});
  out["bracket"] = br;
  json sq = json::array();
  for (std::size_t i : g.basis().odd_indices())
    if (!g.sigma(i).is_zero()) sq.push_back({{"i", i}, {"values", vector_to_json(g.sigma(i))}});
  out["squaring"] = sq;
  out["alpha"] = matrix_to_json(g.alpha());
  return out;
}

HomLieSuper2 algebra_from_json(const json& j) {
  if (!j.is_object()) bad("algebra must be a JSON object");
  Field f = field_from_json(need(j, "field"));
  SuperBasis b = basis_from_json(need(j, "basis"));
  HomLieSuper2 g(f, b);
  std::size_t n = b.size();
  if (j.contains("bracket")) {
    const auto& br = j.at("bracket");
    if (!br.is_array()) bad("bracket must be an array");
    for (const auto& t : br) {
      std::size_t i = basis_ref(b, need(t, "i"), "i"), jj = basis_ref(b, need(t, "j"), "j");
      std::size_t k = basis_ref(b, need(t, "k"), "k");
      if (i > jj) std::swap(i, jj);
      if (i == jj) bad("bracket entry with i == j (set by the squaring)");
      g.set_c(i, jj, k, g.c(i, jj, k) ^ to_elem(f, need(t, "c")));
    }
  }
  if (j.contains("squaring")) {
    const auto& sq = j.at("squaring");
    if (!sq.is_array()) bad("squaring must be an array");
    for (const auto& t : sq) {
      std::size_t i = basis_ref(b, need(t, "i"), "i");
      if (!b.odd(i)) bad("squaring given on even basis vector " + b.labels[i]);
      Vector v = vector_from_json(f, n, need(t, "values"));
      try {
        g.set_sigma(i, g.sigma(i) + v);
      } catch (const Error& e) {
        bad(e.what());
      }
    }
  }
  if (j.contains("alpha")) {
    Matrix a = matrix_from_json(f, j.at("alpha"));
    if (a.rows != n || a.cols != n) bad("alpha must be " + std::to_string(n) + "x" + std::to_string(n));
    try {
      g.set_alpha(a);
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  return g;
}

json rep_to_json(const Representation& r) {
  json out;
  out["algebra"] = algebra_to_json(r.algebra());
  out["module_basis"] = basis_to_json(r.module_basis());
  json act = json::array();
  for (std::size_t i = 0; i < r.algebra().dim(); ++i) {
    const Matrix& m = r.action(i);
    for (std::size_t a = 0; a < m.rows; ++a)
      for (std::size_t b = 0; b < m.cols; ++b)
        if (m.at(a, b)) act.push_back({{"i", i}, {"j", b}, {"k", a}, {"c", m.at(a, b)}});
  }
  out["action"] = act;
  out["beta"] = matrix_to_json(r.beta());
  return out;
}

Representation rep_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object()) bad("representation must be a JSON object");
  HomLieSuper2 g = algebra_ref(need(j, "algebra"), base_dir);
  SuperBasis mb = basis_from_json(need(j, "module_basis"));
  Representation r(g, mb);
  const Field& f = g.field();
  std::vector<Matrix> act(g.dim(), Matrix(f, mb.size(), mb.size()));
  if (j.contains("action")) {
    const auto& a = j.at("action");
    if (!a.is_array()) bad("action must be an array");
    // {"i": algebra index, "j": module index, "k": module index, "c"}: e_i . v_j has c on v_k.
    for (const auto& t : a) {
      std::size_t i = basis_ref(g.basis(), need(t, "i"), "i");
      std::size_t src = basis_ref(mb, need(t, "j"), "j"), dst = basis_ref(mb, need(t, "k"), "k");
      act[i].at(dst, src) ^= to_elem(f, need(t, "c"));
    }
  }
  try {
    for (std::size_t i = 0; i < g.dim(); ++i) r.set_action(i, act[i]);
    if (j.contains("beta")) {
      Matrix b = matrix_from_json(f, j.at("beta"));
      if (b.rows != mb.size() || b.cols != mb.size()) bad("beta has the wrong shape");
      r.set_beta(b);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Format) throw;
    bad(e.what());
  }
  return r;
}

json restricted_to_json(const RestrictedHomLie2& r) {
  json out = algebra_to_json(r.algebra);
  json tm = json::array();
  for (std::size_t i = 0; i < r.two_map.size(); ++i) tm.push_back({{"i", i}, {"values", vector_to_json(r.two_map[i])}});
  out["two_map"] = tm;
  return out;
}

RestrictedHomLie2 restricted_from_json(const json& j) {
  HomLieSuper2 g = algebra_from_json(j.contains("algebra") && j.at("algebra").is_object() ? j.at("algebra") : j);
  std::vector<Vector> t(g.dim(), g.zero());
  const auto& tm = need(j, "two_map");
  if (!tm.is_array()) bad("two_map must be an array");
  for (const auto& e : tm) {
    std::size_t i = basis_ref(g.basis(), need(e, "i"), "i");
    t[i] += vector_from_json(g.field(), g.dim(), need(e, "values"));
  }
  try {
    return RestrictedHomLie2(g, t);
  } catch (const Error& e) {
    bad(e.what());
  }
}

json cochain_to_json(const CochainPair& c) {
  const CochainLayout& l = *c.layout;
  json out;
  out["degree"] = l.degree;
  out["parity"] = c.parity();
  json cs = json::array(), ps = json::array();
  for (std::size_t s = 0; s < l.c_masks.size(); ++s) {
    auto args = l.tuple(l.c_masks[s]);
    Vector v = c.c_at(args);
    if (!v.is_zero()) cs.push_back({{"args", args}, {"value", vector_to_json(v)}});
  }
  for (const auto& [i, mask] : l.p_keys) {
    auto args = l.tuple(mask);
    Vector v = c.p_at(i, args);
    if (!v.is_zero()) ps.push_back({{"x", i}, {"args", args}, {"value", vector_to_json(v)}});
  }
  out["c"] = cs;
  out["p"] = ps;
  return out;
}

CochainPair cochain_from_json(const HomLieSuper2& g, const Representation& r, const json& j) {
  if (!j.is_object()) bad("cochain must be a JSON object");
  const auto& deg = need(j, "degree");
  if (!deg.is_number_integer() || deg.get<long long>() < 0) bad("degree must be a non-negative integer");
  std::size_t n = deg.get<std::size_t>();
  if (n > g.dim()) bad("degree exceeds the algebra dimension");
  auto layout = make_layout(g, r, n);
  CochainPair c(layout, g.field());
  const Field& f = g.field();
  std::size_t md = r.module_dim();
  if (j.contains("m")) {
    if (n != 0) bad("\"m\" is only valid in degree 0");
    c.set_c({}, c.c_at({}) + vector_from_json(f, md, j.at("m")));
  }
  if (j.contains("c")) {
    if (!j.at("c").is_array()) bad("c must be an array");
    for (const auto& t : j.at("c")) {
      auto args = args_from_json(g.basis(), need(t, "args"));
      if (args.size() != n) bad("c entry has " + std::to_string(args.size()) + " arguments, expected " + std::to_string(n));
      std::sort(args.begin(), args.end());
      if (std::adjacent_find(args.begin(), args.end()) != args.end())
        bad("c entry repeats an argument; use p for the quadratic part");
      c.set_c(args, c.c_at(args) + vector_from_json(f, md, need(t, "value")));
    }
  }
  if (j.contains("p")) {
    if (!j.at("p").is_array()) bad("p must be an array");
    if (n < 2 && !j.at("p").empty()) bad("p entries need degree >= 2");
    for (const auto& t : j.at("p")) {
      std::size_t x = basis_ref(g.basis(), need(t, "x"), "x");
      if (!g.basis().odd(x)) bad("p entry at even basis vector " + g.basis().labels[x]);
      auto args = args_from_json(g.basis(), t.contains("args") ? t.at("args") : json::array());
      if (args.size() + 2 != n) bad("p entry has the wrong number of arguments");
      std::sort(args.begin(), args.end());
      if (std::adjacent_find(args.begin(), args.end()) != args.end()) bad("p entry repeats an argument");
      c.set_p(x, args, c.p_at(x, args) + vector_from_json(f, md, need(t, "value")));
    }
  }
  if (j.contains("parity") && j.at("parity").is_number_integer()) {
    int want = j.at("parity").get<int>();
    if (!c.is_zero() && want != c.parity()) bad("declared parity does not match the coefficients");
  }
  return c;
}

json deformation_to_json(const TruncatedDeformation& d) {
  json out;
  out["algebra"] = algebra_to_json(d.algebra);
  out["order"] = d.order();
  json terms = json::array();
  for (const auto& t : d.terms) {
    json tj = cochain_to_json(t);
    terms.push_back({{"c", tj["c"]}, {"p", tj["p"]}});
  }
  out["terms"] = terms;
  return out;
}

TruncatedDeformation deformation_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object()) bad("deformation must be a JSON object");
  HomLieSuper2 g = algebra_ref(need(j, "algebra"), base_dir);
  Representation ad = adjoint_rep(g);
  const auto& terms = need(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  std::size_t order = terms.size();
  if (j.contains("order")) {
    if (!j.at("order").is_number_integer()) bad("order must be an integer");
    order = j.at("order").get<std::size_t>();
    if (order < terms.size()) bad("more terms than the declared order");
  }
  TruncatedDeformation d(g);
  for (std::size_t i = 0; i < order; ++i) {
    if (i < terms.size()) {
      json cj = {{"degree", 2}, {"c", terms[i].value("c", json::array())}, {"p", terms[i].value("p", json::array())}};
      d.terms.push_back(cochain_from_json(g, ad, cj));
    } else {
      d.terms.push_back(d.zero_term());
    }
  }
  return d;
}

json tau_to_json(const EquivalenceMap& t) {
  json a = json::array();
  for (const auto& m : t.taus) a.push_back(matrix_to_json(m));
  return {{"taus", a}};
}

EquivalenceMap tau_from_json(const Field& f, const json& j) {
  const auto& a = need(j, "taus");
  if (!a.is_array()) bad("taus must be an array");
  EquivalenceMap t;
  for (const auto& m : a) t.taus.push_back(matrix_from_json(f, m));
  return t;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = d[v & 15];
  return s;
}

}  // namespace homlie2
