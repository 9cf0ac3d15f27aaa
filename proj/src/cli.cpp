#include "homlie2/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "homlie2/catalog.hpp"
#include "homlie2/derivations.hpp"
#include "homlie2/serialize.hpp"

namespace homlie2::cli {

namespace {

// Mathematical failure: the report is complete, exit 1.
struct Failed {};

struct Context {
  json report;
  std::ostream& out;
  std::ostream& err;

  void input(const std::string& path) {
    std::string bytes = read_text_file(path);
    report["inputs"].push_back({{"path", path}, {"fnv1a", hex64(fnv1a(bytes))}});
  }
  json load(const std::string& path) {
    input(path);
    return read_json_file(path);
  }
};

std::string dir_of(const std::string& path) {
  auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

json witness_json(const SuperBasis& b, const Witness& w) {
  json j = {{"where", w.where}};
  if (w.lhs.size() == b.size() && w.rhs.size() == b.size()) {
    j["lhs"] = describe(b, w.lhs);
    j["rhs"] = describe(b, w.rhs);
  } else {
    j["lhs"] = w.lhs.e;
    j["rhs"] = w.rhs.e;
  }
  return j;
}

json axioms_json(const SuperBasis& b, const AxiomReport& rep) {
  json a = json::array();
  for (const auto& v : rep.verdicts) {
    json e = {{"axiom", v.axiom}, {"pass", v.pass}};
    if (v.skipped) e["skipped"] = true;
    if (v.witness) e["witness"] = witness_json(b, *v.witness);
    a.push_back(e);
  }
  return a;
}

Field field_option(const std::string& s) { return field_from_json(json(s)); }

Representation coefficients(Context& cx, const HomLieSuper2& g, const std::string& which) {
  if (which == "trivial") return trivial_rep(g);
  if (which == "adjoint") return adjoint_rep(g);
  Representation r = rep_from_json(cx.load(which), dir_of(which));
  if (!(r.algebra() == g)) throw Error(ErrorKind::Format, which + ": representation is over a different algebra");
  return r;
}

int cmd_verify(Context& cx, const std::string& file, bool weak) {
  json j = cx.load(file);
  bool pass = true;
  if (j.contains("module_basis")) {
    Representation r = rep_from_json(j, dir_of(file));
    AxiomReport alg = check_axioms(r.algebra(), !weak);
    AxiomReport rep = check_representation(r);
    cx.report["kind"] = "representation";
    cx.report["axioms"] = axioms_json(r.algebra().basis(), alg);
    cx.report["representation"] = axioms_json(r.module_basis(), rep);
    pass = alg.ok() && rep.ok();
  } else if (j.contains("two_map")) {
    RestrictedHomLie2 r = restricted_from_json(j);
    AxiomReport alg = check_axioms(r.algebra, !weak);
    AxiomReport two = check_2_structure(r, !weak);
    cx.report["kind"] = "restricted";
    cx.report["axioms"] = axioms_json(r.algebra.basis(), alg);
    cx.report["two_structure"] = axioms_json(r.algebra.basis(), two);
    pass = alg.ok() && two.ok();
  } else {
    HomLieSuper2 g = algebra_from_json(j);
    AxiomReport rep = check_axioms(g, !weak);
    cx.report["kind"] = "algebra";
    cx.report["axioms"] = axioms_json(g.basis(), rep);
    pass = rep.ok();
  }
  cx.report["weak"] = weak;
  cx.report["pass"] = pass;
  if (!pass) throw Failed{};
  return 0;
}

int cmd_twist(Context& cx, const std::string& file, const std::string& alpha_file) {
  HomLieSuper2 g = algebra_from_json(cx.load(file));
  Matrix a = matrix_from_json(g.field(), cx.load(alpha_file));
  if (a.rows != g.dim() || a.cols != g.dim()) throw Error(ErrorKind::Format, "twist matrix has the wrong shape");
  AxiomReport morph = check_morphism(g, g, a);
  cx.report["morphism"] = axioms_json(g.basis(), morph);
  if (!morph.ok()) {
    cx.report["pass"] = false;
    throw Failed{};
  }
  HomLieSuper2 t = twist_by_morphism(g, a);
  AxiomReport rep = check_axioms(t);
  cx.report["axioms"] = axioms_json(t.basis(), rep);
  cx.report["algebra"] = algebra_to_json(t);
  cx.report["pass"] = rep.ok();
  if (!rep.ok()) throw Failed{};
  return 0;
}

int cmd_derivations(Context& cx, const std::string& file, unsigned k, const std::string& parity) {
  HomLieSuper2 g = algebra_from_json(cx.load(file));
  ParitySel sel = ParitySel::Both;
  if (parity == "e") sel = ParitySel::Even;
  else if (parity == "o") sel = ParitySel::Odd;
  else if (!parity.empty()) sel = parse_parity_sel(parity);
  DerivationSpace d = derivation_space(g, k, sel);
  cx.report["k"] = k;
  cx.report["even_dim"] = d.even_dim;
  cx.report["odd_dim"] = d.odd_dim;
  json b = json::array();
  for (const auto& m : d.basis) b.push_back(matrix_to_json(m));
  cx.report["basis"] = b;
  return 0;
}

int cmd_cohomology(Context& cx, const std::string& file, unsigned n, const std::string& coeff, bool basis) {
  HomLieSuper2 g = algebra_from_json(cx.load(file));
  Representation r = coefficients(cx, g, coeff);
  CohomologyDims d = cohomology_dims(g, r, n);
  cx.report["coefficients"] = coeff;
  cx.report["n"] = n;
  cx.report["dim_Z"] = d.dim_Z;
  cx.report["dim_B"] = d.dim_B;
  cx.report["dim_H"] = d.dim_H;
  cx.report["parity_split"] = {d.even_H, d.odd_H};
  if (basis) {
    auto z = cocycle_basis(g, r, n);
    json zb = json::array(), reps = json::array();
    std::vector<CochainPair> chosen;
    for (const auto& c : z) {
      zb.push_back(cochain_to_json(c));
      if (chosen.size() == d.dim_H) continue;
      chosen.push_back(c);
      if (class_rank(g, r, chosen) == chosen.size()) reps.push_back(cochain_to_json(c));
      else chosen.pop_back();
    }
    cx.report["cocycle_basis"] = zb;
    cx.report["class_representatives"] = reps;
  }
  return 0;
}

int cmd_queerify(Context& cx, const std::string& file) {
  RestrictedHomLie2 r = restricted_from_json(cx.load(file));
  AxiomReport two = check_2_structure(r);
  cx.report["two_structure"] = axioms_json(r.algebra.basis(), two);
  if (!two.ok()) {
    cx.report["pass"] = false;
    throw Failed{};
  }
  HomLieSuper2 q = queerify(r);
  AxiomReport rep = check_axioms(q);
  cx.report["axioms"] = axioms_json(q.basis(), rep);
  cx.report["algebra"] = algebra_to_json(q);
  cx.report["pass"] = rep.ok();
  if (!rep.ok()) throw Failed{};
  return 0;
}

json deformation_report_json(const HomLieSuper2& g, const DeformationReport& rep) {
  json a = json::array();
  for (std::size_t k = 0; k < rep.per_order.size(); ++k)
    a.push_back({{"order", k}, {"pass", rep.per_order[k].ok()}, {"axioms", axioms_json(g.basis(), rep.per_order[k])}});
  return a;
}

int cmd_deform(Context& cx, const std::string& alg_file, const std::string& cocycle_file, unsigned order) {
  if (order < 1) throw Error(ErrorKind::Format, "--order must be at least 1");
  HomLieSuper2 g = algebra_from_json(cx.load(alg_file));
  Representation ad = adjoint_rep(g);
  CochainPair c = cochain_from_json(g, ad, cx.load(cocycle_file));
  if (c.degree() != 2) throw Error(ErrorKind::Format, "the cocycle must have degree 2");
  TruncatedDeformation d(g, {c});
  cx.report["cocycle"] = {{"is_cochain", is_cochain(g, ad, c)}, {"parity", c.parity()}};
  bool closed = is_cochain(g, ad, c) && first_order_is_cocycle(d);
  cx.report["cocycle"]["closed"] = closed;
  json steps = json::array();
  bool pass = closed;
  for (unsigned n = 2; pass && n <= order; ++n) {
    ExtensionResult e = extend_order(d);
    json s = {{"order", n},
              {"extended", e.extended},
              {"obstruction_closed", e.obstruction.closed},
              {"obstruction_compatible", e.obstruction.compatible}};
    if (!e.extended) {
      s["h3_class"] = e.h3_class;
      s["obstruction"] = cochain_to_json(e.obstruction.pair);
      pass = false;
    } else {
      d = e.deformation;
    }
    steps.push_back(s);
  }
  DeformationReport rep = check_deformation(d);
  cx.report["extension"] = steps;
  cx.report["per_order"] = deformation_report_json(g, rep);
  cx.report["reached_order"] = d.order();
  cx.report["deformation"] = deformation_to_json(d);
  pass = pass && rep.ok();
  cx.report["pass"] = pass;
  if (!pass) throw Failed{};
  return 0;
}

int cmd_equivalent(Context& cx, const std::string& f1, const std::string& f2, const std::string& tau_file,
                   const std::string& form) {
  TruncatedDeformation d1 = deformation_from_json(cx.load(f1), dir_of(f1));
  TruncatedDeformation d2 = deformation_from_json(cx.load(f2), dir_of(f2));
  if (!(d1.algebra == d2.algebra)) throw Error(ErrorKind::Format, "the deformations have different base algebras");
  EquivalenceMap tau = tau_from_json(d1.algebra.field(), cx.load(tau_file));
  SquaringForm sf = form == "truncated" ? SquaringForm::Truncated : SquaringForm::Full;
  AxiomReport rep = check_equivalence(d1, d2, tau, sf);
  cx.report["squaring_form"] = form;
  cx.report["axioms"] = axioms_json(d1.algebra.basis(), rep);
  cx.report["pass"] = rep.ok();
  if (!rep.ok()) throw Failed{};
  return 0;
}

int cmd_classify(Context& cx, const std::string& sdim, const std::string& field, const std::string& alpha,
                 const std::string& rs2, bool emit_all) {
  std::size_t m = 0, n = 0;
  char comma = 0;
  std::istringstream ss(sdim);
  if (!(ss >> m >> comma >> n) || comma != ',' || !ss.eof()) throw Error(ErrorKind::Format, "--sdim must be m,n");
  Field f = field_option(field);
  Rs2Reading reading = rs2 == "r2" ? Rs2Reading::R2 : Rs2Reading::SR2;
  auto survivors = enumerate_structures(m, n, f, parse_alpha_shape(alpha));
  cx.report["sdim"] = {m, n};
  cx.report["field"] = field_to_json(f);
  cx.report["alpha"] = alpha;
  cx.report["survivors"] = survivors.size();
  bool matchable = (m == 1 && (n == 1 || n == 2));
  cx.report["matchable"] = matchable;
  if (!matchable) {
    if (emit_all) {
      json all = json::array();
      for (const auto& g : survivors) all.push_back(algebra_to_json(g));
      cx.report["structures"] = all;
    }
    return 0;
  }
  std::map<std::string, std::size_t> counts;
  json unmatched = json::array(), all = json::array();
  std::size_t considered = 0;
  for (const auto& g : survivors) {
    if (emit_all) all.push_back(algebra_to_json(g));
    if (n == 1) {
      // The normal form is claimed only for nonzero squaring and nonzero action.
      if (g.sigma(1).is_zero() || g.bracket_basis(0, 1).is_zero()) continue;
    }
    ++considered;
    auto rows = match_to_family(g, reading);
    for (const auto& r : rows) ++counts[r];
    if (rows.empty()) unmatched.push_back(algebra_to_json(g));
  }
  cx.report["considered"] = considered;
  cx.report["rs2_reading"] = rs2;
  cx.report["row_counts"] = counts;
  cx.report["unmatched_count"] = unmatched.size();
  cx.report["unmatched"] = unmatched;
  if (emit_all) cx.report["structures"] = all;
  return 0;
}

int cmd_catalog_list(Context& cx) {
  json a = json::array();
  for (const auto& d : families())
    a.push_back({{"name", d.name}, {"sdim", d.sdim}, {"params", d.params}, {"conditions", d.conditions}});
  cx.report["families"] = a;
  return 0;
}

// Emits the bare algebra payload so the output can be fed back to `verify`.
int cmd_catalog_emit(Context& cx, const std::string& name, const std::vector<std::string>& params,
                     const std::string& field, const std::string& rs2) {
  Field f = field_option(field);
  family(name);
  Params p;
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Format, "--param expects key=value, got " + kv);
    p[kv.substr(0, eq)] = parse_elem(f, kv.substr(eq + 1));
  }
  BuildOptions opt;
  opt.rs2 = rs2 == "r2" ? Rs2Reading::R2 : Rs2Reading::SR2;
  cx.report = algebra_to_json(build(name, p, f, opt));
  return 0;
}

int cmd_complex_check(Context& cx, const std::string& file, unsigned nmax, unsigned trials, std::uint64_t seed,
                      const std::string& coeff) {
  HomLieSuper2 g = algebra_from_json(cx.load(file));
  std::vector<std::pair<std::string, Representation>> reps;
  if (coeff == "both") {
    reps.emplace_back("trivial", trivial_rep(g));
    reps.emplace_back("adjoint", adjoint_rep(g));
  } else {
    reps.emplace_back(coeff, coefficients(cx, g, coeff));
  }
  cx.report["nmax"] = nmax;
  cx.report["trials"] = trials;
  cx.report["seed"] = seed;
  json runs = json::array();
  bool pass = true;
  std::size_t violations = 0;
  for (const auto& [name, r] : reps) {
    ComplexReport c = verify_complex(g, r, nmax, trials, seed);
    runs.push_back({{"coefficients", name}, {"ok", c.ok}, {"checks", c.checks}, {"findings", c.findings}});
    pass = pass && c.ok;
    violations += c.findings.size();
  }
  cx.report["runs"] = runs;
  cx.report["violations"] = violations;
  cx.report["pass"] = pass;
  if (!pass) throw Failed{};
  return 0;
}

bool usage_kind(ErrorKind k) {
  return k == ErrorKind::Format || k == ErrorKind::Shape || k == ErrorKind::Unsupported || k == ErrorKind::TooLarge;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-Lie superalgebras in characteristic 2", "homlie2"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Include elapsed wall time in the report");

  std::string file, file2, aux, parity, coeff = "adjoint", field = "gf2", alpha = "all", sdim, rs2 = "sr2";
  std::string form = "full", name, cc_coeff = "both";
  unsigned k = 0, n = 0, order = 1, nmax = 3, trials = 25;
  std::uint64_t seed = 0;
  bool weak = false, basis = false, emit_all = false;
  std::vector<std::string> params;

  auto* verify = app.add_subcommand("verify", "Check the axioms of an algebra, representation or 2-structure");
  verify->add_option("file", file)->required();
  verify->add_flag("--weak", weak, "Do not require multiplicativity");

  auto* twist = app.add_subcommand("twist", "Twist an algebra by an endomorphism");
  twist->add_option("file", file)->required();
  twist->add_option("--alpha", aux, "Matrix file")->required();

  auto* der = app.add_subcommand("derivations", "alpha^k-derivations");
  der->add_option("file", file)->required();
  der->add_option("--k", k)->required();
  der->add_option("--parity", parity)->check(CLI::IsMember({"e", "o", "even", "odd", "both"}));

  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions in degree n");
  coh->add_option("file", file)->required();
  coh->add_option("--n", n)->required();
  coh->add_option("--coefficients", coeff, "trivial, adjoint or a representation file");
  coh->add_flag("--basis", basis, "Dump cocycles and class representatives");

  auto* qu = app.add_subcommand("queerify", "Build the queerification of a restricted Hom-Lie algebra");
  qu->add_option("file", file)->required();

  auto* def = app.add_subcommand("deform", "Extend a 2-cocycle to a deformation");
  def->add_option("algebra", file)->required();
  def->add_option("--cocycle", aux)->required();
  def->add_option("--order", order)->required();

  auto* eq = app.add_subcommand("equivalent", "Check an equivalence of truncated deformations");
  eq->add_option("d1", file)->required();
  eq->add_option("d2", file2)->required();
  eq->add_option("--tau", aux)->required();
  eq->add_option("--squaring-form", form)->check(CLI::IsMember({"full", "truncated"}));

  auto* cls = app.add_subcommand("classify", "Enumerate structures and match them against the catalog");
  cls->add_option("--sdim", sdim, "m,n")->required();
  cls->add_option("--field", field)->check(CLI::IsMember({"gf2", "gf4"}));
  cls->add_option("--alpha", alpha)->check(CLI::IsMember({"diagonal", "jordan", "all"}));
  cls->add_option("--rs2", rs2)->check(CLI::IsMember({"sr2", "r2"}));
  cls->add_flag("--emit-all", emit_all, "Include every survivor");

  auto* cat = app.add_subcommand("catalog", "Named families");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list");
  auto* cat_emit = cat->add_subcommand("emit");
  cat_emit->add_option("name", name)->required();
  cat_emit->add_option("--param", params, "key=value")->allow_extra_args(false);
  cat_emit->add_option("--field", field);
  cat_emit->add_option("--rs2", rs2)->check(CLI::IsMember({"sr2", "r2"}));

  auto* cc = app.add_subcommand("complex-check", "Randomized check of the cochain complex");
  cc->add_option("file", file)->required();
  cc->add_option("--nmax", nmax)->required();
  cc->add_option("--trials", trials)->required();
  cc->add_option("--seed", seed);
  cc->add_option("--coefficients", cc_coeff, "trivial, adjoint, both or a representation file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  Context cx{json::object(), out, err};
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  std::string cmd;
  for (auto* s : app.get_subcommands()) cmd = s->get_name();
  cx.report["command"] = cmd;
  cx.report["inputs"] = json::array();
  bool raw = false;
  try {
    if (*verify) code = cmd_verify(cx, file, weak);
    else if (*twist) code = cmd_twist(cx, file, aux);
    else if (*der) code = cmd_derivations(cx, file, k, parity);
    else if (*coh) code = cmd_cohomology(cx, file, n, coeff, basis);
    else if (*qu) code = cmd_queerify(cx, file);
    else if (*def) code = cmd_deform(cx, file, aux, order);
    else if (*eq) code = cmd_equivalent(cx, file, file2, aux, form);
    else if (*cls) code = cmd_classify(cx, sdim, field, alpha, rs2, emit_all);
    else if (*cat_list) code = cmd_catalog_list(cx);
    else if (*cat_emit) {
      raw = true;
      code = cmd_catalog_emit(cx, name, params, field, rs2);
    } else if (*cc) code = cmd_complex_check(cx, file, nmax, trials, seed, cc_coeff);
  } catch (const Failed&) {
    code = 1;
  } catch (const Error& e) {
    code = usage_kind(e.kind()) ? 2 : 1;
    err << e.what() << "\n";
    if (raw) return code;
    cx.report["pass"] = false;
    cx.report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  if (timing && !raw)
    cx.report["elapsed_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << cx.report.dump(2) << "\n";
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace homlie2::cli
