// Acceptance run: one PASS/FAIL line per criterion on stdout, details on stderr.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "homlie2/catalog.hpp"
#include "homlie2/cli.hpp"
#include "homlie2/deform.hpp"
#include "homlie2/derivations.hpp"
#include "homlie2/restricted.hpp"
#include "homlie2/serialize.hpp"

using namespace homlie2;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
    std::cerr << "    " << why << "\n";
  }
};

fs::path work_dir() {
  static fs::path p = [] {
    fs::path d = fs::temp_directory_path() / ("homlie2-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return p;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

int cli_run(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

const std::vector<Elem> gf16_sample = {2, 3, 4, 5, 6, 7, 9, 11, 13, 15};

// Criterion 1: the emitted oo_alpha matches the listed brackets, squaring and twist, and verifies.
Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  for (unsigned k : {2u, 4u}) {
    Field f = Field::gf(k);
    for (Elem eps = 0; eps < f.size(); ++eps) {
      std::string out;
      std::string field = k == 2 ? "gf4" : "gf16";
      if (cli_run({"catalog", "emit", "oo_alpha", "--param", "eps=" + format_elem(eps), "--field", field}, out) != 0) {
        o.fail("emit failed for eps=" + format_elem(eps));
        continue;
      }
      std::string path = write_file("oa.json", out);
      HomLieSuper2 g = algebra_from_json(json::parse(out));
      auto v = [&](std::vector<std::pair<Elem, std::string>> t) { return g.by_labels(t); };
      auto br = [&](const char* a, const char* b) { return bracket_eval(g, v({{1, a}}), v({{1, b}})); };
      Elem e2 = f.sqr(eps);
      bool ok = br("x1", "y1") == v({{1, "h"}}) && br("x2", "y2") == v({{1, "h"}}) && br("h", "x1") == v({{1, "x1"}}) &&
                br("h", "y1") == v({{eps, "x1"}, {1, "y1"}}) && br("x2", "y1") == v({{1, "x1"}}) &&
                br("y2", "x1") == v({{eps, "x1"}, {1, "y1"}}) && br("h", "x2").is_zero() && br("h", "y2").is_zero() &&
                br("y1", "y2").is_zero() && br("x2", "x1").is_zero() &&
                squaring_eval(g, v({{1, "x1"}})) == v({{1, "x2"}}) &&
                squaring_eval(g, v({{1, "y1"}})) == v({{eps, "h"}, {e2, "x2"}, {1, "y2"}}) &&
                g.alpha().apply(v({{1, "y1"}})) == v({{eps, "x1"}, {1, "y1"}}) &&
                g.alpha().apply(v({{1, "y2"}})) == v({{eps, "h"}, {e2, "x2"}, {1, "y2"}});
      if (!ok) o.fail(field + " eps=" + format_elem(eps) + ": structure differs from the listing");
      if (cli_run({"verify", path}, out) != 0) o.fail(field + " eps=" + format_elem(eps) + ": verify failed");
    }
  }
  double s = seconds_since(t0);
  if (s >= 1.0) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.note = "GF(4) and GF(16), every eps, " + std::to_string(s) + " s";
  return o;
}

// Criterion 2: complex-check n_max = 3, 25 trials, trivial and adjoint coefficients.
Outcome criterion2() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, HomLieSuper2>> algs;
  Field f4 = Field::gf(2), f16 = Field::gf(4), f2;
  algs.emplace_back("oo/GF(4)", build("oo", {}, f4));
  for (Elem eps = 1; eps < 16; ++eps) algs.emplace_back("oo_alpha/GF(16) eps=" + format_elem(eps), build("oo_alpha", {{"eps", eps}}, f16));
  for (const Field& f : {f2, f4}) {
    algs.emplace_back("Q(line)/" + f.name(), queerify(restricted_line(f)));
    algs.emplace_back("Q(affine)/" + f.name(), queerify(restricted_affine(f)));
  }
  auto survivors = enumerate_structures(1, 2, f2, AlphaShape::All);
  std::mt19937 rng(2);
  for (int i = 0; i < 5; ++i) algs.emplace_back("(1|2) survivor", survivors[rng() % survivors.size()]);
  std::size_t runs = 0;
  for (const auto& [name, g] : algs) {
    std::string path = write_file("cc.json", algebra_to_json(g).dump(2));
    // Degrees above dim g have no cochains in this layout; the 2-dimensional algebras stop at 2.
    std::string nmax = std::to_string(std::min<std::size_t>(3, g.dim()));
    std::string out;
    int code = cli_run({"complex-check", path, "--nmax", nmax, "--trials", "25", "--coefficients", "both"}, out);
    json j = json::parse(out);
    if (code != 0 || j["violations"] != 0) o.fail(name + ": " + j["violations"].dump() + " violations");
    runs += j["runs"].size();
  }
  double s = seconds_since(t0);
  if (s >= 120.0) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.note = std::to_string(algs.size()) + " algebras, " + std::to_string(runs) + " runs, 0 violations, " + std::to_string(s) + " s";
  return o;
}

Matrix tensor(const HomLieSuper2& g, const std::vector<std::tuple<Elem, std::string, std::string>>& terms) {
  Matrix d(g.field(), g.dim(), g.dim());
  for (const auto& [c, a, b] : terms) d.at(g.basis().index_of(a), g.basis().index_of(b)) ^= c;
  return d;
}

// Criterion 3: derivation spaces of oo_alpha and the listed derivations.
Outcome criterion3() {
  Outcome o;
  Field f = Field::gf(4);
  for (Elem eps = 1; eps < 16; ++eps) {
    HomLieSuper2 g = build("oo_alpha", {{"eps", eps}}, f);
    std::vector<std::vector<Matrix>> listed = {
        {tensor(g, {{1, "h", "y2"}, {1, "x1", "y1"}}), tensor(g, {{1, "x1", "x1"}, {1, "y1", "y1"}}),
         tensor(g, {{1, "x1", "h"}, {1, "h", "y1"}, {1, "y1", "y2"}})},
        {tensor(g, {{1, "h", "y2"}, {1, "x1", "y1"}}), tensor(g, {{eps, "x1", "y1"}, {1, "x1", "x1"}, {1, "y1", "y1"}}),
         tensor(g, {{eps, "x1", "y2"}, {1, "x1", "h"}, {1, "h", "y1"}, {1, "y1", "y2"}})}};
    for (unsigned k : {0u, 1u}) {
      DerivationSpace d = derivation_space(g, k);
      if (d.even_dim != 2 || d.odd_dim != 1)
        o.fail("eps=" + format_elem(eps) + " k=" + std::to_string(k) + ": (" + std::to_string(d.even_dim) + "|" +
               std::to_string(d.odd_dim) + ")");
      for (std::size_t i = 0; i < 3; ++i)
        if (!d.contains(listed[k][i]))
          o.fail("D" + std::to_string(i + 1) + "^" + std::to_string(k) + " not a derivation at eps=" + format_elem(eps));
    }
  }
  if (o.pass) o.note = "dimension 3 = (2|1) for k = 0, 1 and all listed D members, eps in GF(16)*";
  return o;
}

// Criterion 4: H^2 with trivial coefficients.
Outcome criterion4() {
  Outcome o;
  std::vector<std::pair<Field, Elem>> cases;
  for (Elem e = 1; e < 4; ++e) cases.emplace_back(Field::gf(2), e);
  for (Elem e : gf16_sample) cases.emplace_back(Field::gf(4), e);
  for (const auto& [f, eps] : cases) {
    HomLieSuper2 g = build("oo_alpha", {{"eps", eps}}, f);
    CohomologyDims d = cohomology_dims(g, trivial_rep(g), 2);
    if (d.dim_H != 0) o.fail(f.name() + " eps=" + format_elem(eps) + ": dim H2 = " + std::to_string(d.dim_H));
  }
  if (o.pass) o.note = "dim H2 = 0 on " + std::to_string(cases.size()) + " cases";
  return o;
}

enum { H = 0, X2 = 1, Y2 = 2, X1 = 3, Y1 = 4 };

struct Listed {
  std::string name;
  std::vector<std::tuple<Elem, std::size_t, std::size_t, std::size_t>> c;  // coef, output, a, b
  std::vector<std::tuple<Elem, std::size_t, std::size_t>> p;               // coef, odd x, output
};

std::vector<Listed> listed_classes(const Field& f, Elem e) {
  Elem e2 = f.sqr(e), e3 = f.mul(e2, e);
  return {
      {"c4",
       {{e, X1, H, X1}, {e2, X1, H, Y1}, {1, X1, X1, X2}, {e2, X1, X1, Y2}, {e2, X2, X1, Y1}, {e2, X2, X2, Y2},
        {e, Y1, H, Y1}, {1, Y1, X2, Y1}},
       {{1, X1, H}, {e2, Y1, H}, {e3, Y1, X2}, {e, Y1, Y2}}},
      {"c5", {{1, H, H, Y2}, {1, X1, H, Y1}, {1, X1, X1, Y2}}, {}},
      {"c9",
       {{1, H, H, X1}, {e, H, H, Y1}, {e, X1, X1, Y1}, {e, X2, H, X1}, {e2, X2, H, Y1}, {e2, X2, X1, Y2}, {e, X2, X2, Y1},
        {1, Y2, H, Y1}, {1, Y2, X1, Y2}},
       {{1, X1, X1}}},
      {"c10", {{1, H, X1, Y1}}, {{1, X1, X2}, {e, Y1, H}, {e2, Y1, X2}, {1, Y1, Y2}}},
      {"c11", {{1, H, X2, Y2}, {1, X1, X1, Y2}, {1, X1, X2, Y1}, {e, X2, X1, Y1}, {e, X2, X2, Y2}}, {{1, X1, X2}}},
      {"c12",
       {{1, X1, X1, Y1}, {e, X1, H, Y1}, {e, X2, X1, Y1}, {e, X2, X2, Y2}, {1, Y1, H, Y1}, {1, Y1, X1, Y2}},
       {{1, X1, X2}}},
  };
}

CochainPair encode(const HomLieSuper2& g, const Representation& r, const Listed& l) {
  CochainPair c(make_layout(g, r, 2), g.field());
  for (const auto& [coef, out, a, b] : l.c) {
    Vector v = c.c_at({a, b});
    v[out] ^= coef;
    c.set_c({a, b}, v);
  }
  for (const auto& [coef, x, out] : l.p) {
    Vector v = c.p_at(x, {});
    v[out] ^= coef;
    c.set_p(x, {}, v);
  }
  return c;
}

// Criterion 5: H^2 with adjoint coefficients and the listed representatives.
Outcome criterion5() {
  Outcome o;
  struct Case {
    Field f;
    Elem eps;
    std::size_t want;
  };
  std::vector<Case> cases;
  for (Elem e = 2; e < 4; ++e) cases.push_back({Field::gf(2), e, 6});
  for (Elem e : gf16_sample) cases.push_back({Field::gf(4), e, 6});
  cases.push_back({Field::gf(1), 1, 4});
  cases.push_back({Field::gf(2), 1, 4});
  bool full_reading = true, even_reading = true;
  std::string seen;
  for (const auto& c : cases) {
    HomLieSuper2 g = build("oo_alpha", {{"eps", c.eps}}, c.f);
    CohomologyDims d = cohomology_dims(g, adjoint_rep(g), 2);
    full_reading = full_reading && d.dim_H == c.want;
    even_reading = even_reading && d.even_H == c.want;
    std::string s = c.f.name() + " eps=" + format_elem(c.eps) + ": " + std::to_string(d.dim_H) + " = (" +
                    std::to_string(d.even_H) + "|" + std::to_string(d.odd_H) + "), listed " + std::to_string(c.want);
    std::cerr << "    " << s << "\n";
    if (seen.empty()) seen = s;
  }
  if (!full_reading && !even_reading) o.fail("dim H2 matches neither reading (" + seen + ")");

  Field f = Field::gf(4);
  Elem eps = 6;
  HomLieSuper2 g = build("oo_alpha", {{"eps", eps}}, f);
  Representation ad = adjoint_rep(g);
  std::vector<CochainPair> valid;
  for (const auto& l : listed_classes(f, eps)) {
    CochainPair c = encode(g, ad, l);
    if (!is_cochain(g, ad, c)) {
      o.fail(l.name + " is not an equivariant cochain at eps=" + format_elem(eps));
      continue;
    }
    if (!apply_differential(g, ad, c).is_zero()) {
      o.fail(l.name + " is not closed");
      continue;
    }
    if (is_coboundary(g, ad, c)) o.fail(l.name + " is a coboundary");
    valid.push_back(c);
  }
  std::size_t rank = class_rank(g, ad, valid);
  std::cerr << "    listed classes: " << valid.size() << " cocycles, class rank " << rank << "\n";
  if (rank != 6) o.fail("listed classes span " + std::to_string(rank) + " classes, not 6");
  if (o.pass) o.note = full_reading ? "full H2 reading" : "even-part reading";
  return o;
}

HomLieSuper2 random_survivor(const std::vector<HomLieSuper2>& pool, std::mt19937& rng) { return pool[rng() % pool.size()]; }

Matrix random_even(const SuperBasis& b, const Field& f, std::mt19937& rng) {
  Matrix m(f, b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.parities[i] == b.parities[j]) m.at(i, j) = rng() % f.size();
  return m;
}

// Criterion 6: executable theorems.
Outcome criterion6() {
  Outcome o;
  Field f2, f4 = Field::gf(2);
  std::size_t checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) o.fail(what);
  };

  // Catalog instances with valid axioms.
  std::vector<HomLieSuper2> cat = {build("oo", {}, f4)};
  for (Elem e = 1; e < 4; ++e) cat.push_back(build("oo_alpha", {{"eps", e}}, f4));
  for (const auto& d : families()) {
    if (d.sdim != "1|2") continue;
    for (Elem v = 1; v < 4; ++v) {
      Params p;
      for (const auto& k : d.params) p[k] = v;
      try {
        HomLieSuper2 g = build(d.name, p, f4);
        if (check_axioms(g).ok()) cat.push_back(g);
      } catch (const Error&) {
      }
    }
  }
  std::mt19937 rng(6);
  auto pool = enumerate_structures(1, 2, f2, AlphaShape::All);
  std::vector<HomLieSuper2> inputs = cat;
  for (int i = 0; i < 100; ++i) inputs.push_back(random_survivor(pool, rng));

  for (const auto& g : inputs) {
    // Semidirect product with the adjoint module.
    expect(check_axioms(semidirect_product(adjoint_rep(g))).ok(), "semidirect product fails the axioms");
    // Twisting by morphisms.
    for (int t = 0; t < 20; ++t) {
      Matrix a = random_even(g.basis(), g.field(), rng);
      if (!check_morphism(g, g, a).ok()) continue;
      expect(check_axioms(twist_by_morphism(g, a)).ok(), "twist by a morphism fails the axioms");
    }
  }

  // gl(V) for every invertible even beta over GF(2).
  for (auto [m, n] : {std::pair{1u, 1u}, {2u, 1u}}) {
    std::size_t d = m + n;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if ((i < m) == (j < m)) slots.emplace_back(i, j);
    for (std::uint32_t code = 0; code < (1u << slots.size()); ++code) {
      Matrix b(f2, d, d);
      for (std::size_t s = 0; s < slots.size(); ++s) b.at(slots[s].first, slots[s].second) = (code >> s) & 1;
      if (rank(b) != d) continue;
      expect(check_axioms(gl_hom_structure(m, n, b)).ok(), "gl structure fails the axioms");
    }
  }

  // Representation identities versus morphisms into gl(V).
  std::size_t agree_valid = 0;
  for (int t = 0; t < 100; ++t) {
    HomLieSuper2 g = t < 50 ? random_survivor(pool, rng) : build("oo_alpha", {{"eps", Elem(t % 4)}}, f4);
    Representation r(g, SuperBasis({"u", "w"}, {0, 1}));
    const Field& f = g.field();
    if (t % 3 == 0) {
      r = adjoint_rep(g);
    } else {
      for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix m(f, 2, 2);
        if (g.basis().parities[i] == 0) {
          m.at(0, 0) = rng() % 2 ? rng() % f.size() : 0;
          m.at(1, 1) = rng() % 2 ? rng() % f.size() : 0;
        } else {
          m.at(0, 1) = rng() % 2 ? rng() % f.size() : 0;
          m.at(1, 0) = rng() % 2 ? rng() % f.size() : 0;
        }
        r.set_action(i, m);
      }
      Matrix b(f, 2, 2);
      b.at(0, 0) = 1 + rng() % (f.size() - 1);
      b.at(1, 1) = 1 + rng() % (f.size() - 1);
      r.set_beta(b);
    }
    if (rank(r.beta()) != r.module_dim()) continue;
    bool a = check_representation(r).ok(), b = check_rep_as_morphism(r).ok();
    expect(a == b, "representation check and morphism check disagree");
    agree_valid += a;
  }
  std::cerr << "    representation cases accepted by both checks: " << agree_valid << "\n";

  // Queerification and twisting of restricted structures.
  std::vector<RestrictedHomLie2> rs;
  for (const Field& f : {f2, f4}) {
    rs.push_back(restricted_line(f));
    rs.push_back(restricted_affine(f));
  }
  while (rs.size() < 104) {
    HomLieSuper2 g(f2, SuperBasis({"e1", "e2"}, {0, 0}));
    g.set_bracket(0, 1, g.by_labels({{Elem(rng() % 2), "e1"}, {Elem(rng() % 2), "e2"}}));
    Matrix a(f2, 2, 2);
    // Half of them are ordinary restricted Lie algebras (alpha = I), the inputs of the twist.
    if (rs.size() % 2) a = Matrix::identity(f2, 2);
    else
      for (auto& x : a.e) x = rng() % 2;
    g.set_alpha(a);
    std::vector<Vector> t(2, g.zero());
    for (auto& v : t)
      for (auto& x : v.e) x = rng() % 2;
    RestrictedHomLie2 r(g, t);
    if (check_hom_lie_algebra(g).ok() && check_2_structure(r).ok()) rs.push_back(r);
  }
  std::size_t commute = 0;
  for (const auto& r : rs) {
    expect(check_axioms(queerify(r)).ok(), "queerification fails the axioms");
    const Field& f = r.algebra.field();
    if (!(r.algebra.alpha() == Matrix::identity(f, r.algebra.dim()))) continue;
    std::size_t n = r.algebra.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= f.size();
    for (std::uint64_t code = 0; code < total; ++code) {
      Matrix a(f, n, n);
      std::uint64_t c = code;
      for (auto& x : a.e) {
        x = c % f.size();
        c /= f.size();
      }
      if (!check_morphism(r.algebra, r.algebra, a).ok()) continue;
      bool compatible = true;
      for (std::size_t i = 0; i < n; ++i) compatible = compatible && a.apply(r.two_map[i]) == two_map_eval(r, a.column(i));
      if (!compatible) continue;
      expect(check_queerify_twist_commute(r, a).equal, "queerify and twist do not commute");
      ++commute;
    }
  }
  std::cerr << "    commute checks: " << commute << "\n";
  if (o.pass) o.note = std::to_string(checks) + " checks, 0 failures";
  return o;
}

using Tensor = std::vector<std::vector<std::vector<Elem>>>;

// Criterion 7: deformations.
Outcome criterion7() {
  Outcome o;
  Field f16 = Field::gf(4);
  {
    HomLieSuper2 g = build("oo_alpha", {{"eps", 6}}, f16);
    Representation ad = adjoint_rep(g);
    // Every even cocycle basis vector, which covers a generating set of the even classes.
    auto gens = cocycle_basis(g, ad, 2, ParitySel::Even);
    std::vector<CochainPair> chosen;
    for (const auto& c : gens) {
      TruncatedDeformation d(g, std::vector<CochainPair>{c});
      if (!check_deformation(d).ok() || !first_order_is_cocycle(d)) o.fail("an even cocycle fails at order 1");
      chosen.push_back(c);
    }
    std::cerr << "    even 2-cocycles wrapped at order 1: " << gens.size() << " (class rank "
              << class_rank(g, ad, chosen) << ")\n";
  }

  std::mt19937 rng(7);
  std::size_t yes = 0, no = 0;
  Field f2;
  HomLieSuper2 ab(f2, SuperBasis({"e1", "e2", "e3"}, {0, 0, 0}));
  ab.set_alpha(Matrix::identity(f2, 3));
  for (int t = 0; t < 50; ++t) {
    if (t % 2 == 0) {
      // Zero bracket, alpha = I: solvable iff c1 satisfies the Jacobi identity.
      Tensor c1(3, std::vector<std::vector<Elem>>(3, std::vector<Elem>(3, 0)));
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
          for (std::size_t k = 0; k < 3; ++k) c1[a][b][k] = c1[b][a][k] = rng() % 3 == 0;
      auto mul = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
        std::vector<Elem> out(3, 0);
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t k = 0; k < 3; ++k) out[k] ^= x[a] & y[b] & c1[a][b][k];
        return out;
      };
      bool lie = true;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          for (std::size_t c = 0; c < 3; ++c) {
            std::vector<Elem> u(3, 0), v(3, 0), w(3, 0);
            u[a] = v[b] = w[c] = 1;
            auto j1 = mul(mul(u, v), w), j2 = mul(mul(v, w), u), j3 = mul(mul(w, u), v);
            for (std::size_t k = 0; k < 3; ++k) lie = lie && (j1[k] ^ j2[k] ^ j3[k]) == 0;
          }
      CochainPair c(make_layout(ab, adjoint_rep(ab), 2), f2);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) c.set_c({a, b}, Vector(f2, c1[a][b]));
      ExtensionResult e = extend_order(TruncatedDeformation(ab, {c}));
      if (e.extended != lie) o.fail("extension disagrees with the Jacobi oracle");
      if (e.extended && !check_deformation(e.deformation).ok()) o.fail("extended deformation fails");
      (e.extended ? yes : no)++;
    } else {
      HomLieSuper2 g = build("oo_alpha", {{"eps", Elem(1 + rng() % 3)}}, Field::gf(2));
      Representation ad = adjoint_rep(g);
      CochainPair c(make_layout(g, ad, 2), g.field());
      for (const auto& b : cocycle_basis(g, ad, 2, ParitySel::Even))
        c = c + CochainPair(b.layout, b.coords.scaled(rng() % 4));
      ExtensionResult e = extend_order(TruncatedDeformation(g, {c}));
      Matrix d2 = differential_matrix(g, ad, 2);
      std::vector<Vector> img;
      for (const auto& v : cochain_space(g, ad, 2, ParitySel::Even).basis) img.push_back(d2.apply(v));
      std::size_t r0 = SubspaceBasis::span(g.field(), d2.rows, img).dim();
      img.push_back(e.obstruction.pair.coords);
      bool solvable = SubspaceBasis::span(g.field(), d2.rows, img).dim() == r0;
      if (e.extended != solvable) o.fail("extension disagrees with the rank test");
      if (e.extended && !check_deformation(e.deformation).ok()) o.fail("extended deformation fails");
      (e.extended ? yes : no)++;
    }
  }
  std::cerr << "    extension cases: " << yes << " extended, " << no << " obstructed\n";
  if (yes == 0 || no == 0) o.fail("extension cases do not cover both directions");

  for (int t = 0; t < 50; ++t) {
    HomLieSuper2 g = build("oo_alpha", {{"eps", Elem(rng() % 16)}}, f16);
    Representation ad = adjoint_rep(g);
    CochainPair c(make_layout(g, ad, 2), f16);
    for (const auto& b : cocycle_basis(g, ad, 2, ParitySel::Even))
      c = c + CochainPair(b.layout, b.coords.scaled(rng() % 16));
    TruncatedDeformation d(g, {c});
    CochainSpace x1 = cochain_space(g, ad, 1, ParitySel::Even);
    Vector w(f16, x1.layout->size());
    for (const auto& b : x1.basis) w.axpy(rng() % 16, b);
    CochainPair t1(x1.layout, w);
    Matrix tau(f16, 5, 5);
    for (std::size_t j = 0; j < 5; ++j) tau.set_column(j, t1.c_at({j}));
    TruncatedDeformation d2 = gauge_transform_first_order(d, tau);
    if (!check_equivalence(d, d2, {{tau}}).ok()) o.fail("first-order equivalence identity fails");
    if (gauge_first_order(d).has_value() != is_coboundary(g, ad, c).has_value())
      o.fail("gauge triviality disagrees with exactness");
  }
  if (o.pass) o.note = "order-1 classes, 50 extension cases, 50 gauge pairs";
  return o;
}

// Criterion 8: classification cross-check over GF(2).
Outcome criterion8() {
  Outcome o;
  Field f;
  auto t0 = Clock::now();
  auto s11 = enumerate_structures(1, 1, f, AlphaShape::All);
  double s = seconds_since(t0);
  if (s >= 10.0) o.fail("(1|1) enumeration took " + std::to_string(s) + " s");
  std::size_t considered = 0, mismatched = 0;
  for (const auto& g : s11) {
    if (g.sigma(1).is_zero() || g.c(0, 1, 1) == 0) continue;
    ++considered;
    if (match_to_family(g).empty()) {
      ++mismatched;
      std::cerr << "    (1|1) survivor outside the normal form: s(f) = " << describe(g.basis(), g.sigma(1))
                << ", [e,f] = " << describe(g.basis(), bracket_eval(g, g.unit(0), g.unit(1))) << ", alpha = diag("
                << g.alpha().at(0, 0) << "," << g.alpha().at(1, 1) << ")\n";
    }
  }
  if (mismatched) o.fail(std::to_string(mismatched) + " of " + std::to_string(considered) + " (1|1) survivors miss the normal form");

  t0 = Clock::now();
  std::size_t total = 0, unmatched = 0;
  for (AlphaShape shape : {AlphaShape::Diagonal, AlphaShape::Jordan}) {
    auto v = enumerate_structures(1, 2, f, shape);
    total += v.size();
    for (const auto& g : v) unmatched += match_to_family(g).empty();
  }
  s = seconds_since(t0);
  if (s >= 600.0) o.fail("(1|2) enumeration took " + std::to_string(s) + " s");
  std::cerr << "    (1|2) survivors: " << total << ", unmatched (reported, not failing): " << unmatched << "\n";
  if (o.pass) o.note = std::to_string(considered) + " (1|1) matched; (1|2) unmatched " + std::to_string(unmatched);
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"oo_alpha reproduction", criterion1}, {"complex property", criterion2},   {"derivations of oo_alpha", criterion3},
      {"H2 trivial coefficients", criterion4}, {"H2 adjoint coefficients", criterion5}, {"executable theorems", criterion6},
      {"deformation theory", criterion7},     {"classification cross-check", criterion8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::cerr << "criterion " << i + 1 << ": " << criteria[i].first << "\n";
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.note << std::endl;
    failed += !o.pass;
  }
  fs::remove_all(work_dir());
  return failed ? 1 : 0;
}
