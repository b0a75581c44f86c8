#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/irreducibility.hpp"
#include "braidrep/json_io.hpp"
#include "braidrep/kernel_probe.hpp"
#include "braidrep/presentation.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/sampling.hpp"
#include "braidrep/solver.hpp"

using namespace braidrep;

namespace {

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::string status = "pass";  // pass | fail | divergence | exploratory
  std::ostringstream text;
};

int emit(Report& r, bool json) {
  if (json) {
    Json out{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"status", r.status}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << r.text.str();
    std::cout << "status: " << r.status << '\n';
  }
  return r.status == "fail" ? 1 : 0;
}

struct RepArgs {
  std::string kind;
  int n = 3;
  std::string a = "1", c = "0";
  int family = 5;
  std::string p = "0", q = "1", r = "0";
  bool monoid = false;
};

void add_rep_options(CLI::App* sub, RepArgs& args) {
  sub->add_option("kind", args.kind, "standard | burau | f | singular-ext | vsb2")
      ->required()
      ->check(CLI::IsMember({"standard", "burau", "f", "singular-ext", "vsb2"}));
  sub->add_option("n", args.n, "strand count")->required();
  sub->add_option("--a", args.a, "Laurent polynomial a of the tau block");
  sub->add_option("--c", args.c, "Laurent polynomial c of the tau block");
  sub->add_option("--family", args.family, "involution family 1..5 (vsb2)");
  sub->add_option("--p", args.p, "family 1 parameter p");
  sub->add_option("--q", args.q, "family 1 parameter q");
  sub->add_option("--r", args.r, "family 2/3 parameter r");
  sub->add_flag("--monoid", args.monoid, "do not invert tau");
}

Representation<LaurentPoly> build_rep(const RepArgs& args) {
  const ExtensionParams<LaurentPoly> params{LaurentPoly::parse(args.a), LaurentPoly::parse(args.c)};
  if (args.kind == "standard") return standard_rep(args.n);
  if (args.kind == "burau") return burau_rep(args.n);
  if (args.kind == "f") return f_rep(args.n);
  if (args.kind == "singular-ext") return singular_extension(args.n, params, !args.monoid);
  if (args.n != 2) throw BadStrandCount("vsb2 needs n = 2");
  InvolutionFamily<LaurentPoly> fam;
  fam.id = args.family;
  fam.p = LaurentPoly::parse(args.p);
  fam.q = LaurentPoly::parse(args.q);
  fam.r = LaurentPoly::parse(args.r);
  return vsb2_extension(fam, params, !args.monoid);
}

Json rep_inputs(const RepArgs& args) {
  Json in{{"kind", args.kind}, {"n", args.n}};
  if (args.kind == "singular-ext" || args.kind == "vsb2") {
    in["a"] = args.a;
    in["c"] = args.c;
    in["group"] = !args.monoid;
  }
  if (args.kind == "vsb2") in["family"] = args.family;
  return in;
}

Mode default_mode(const std::string& kind) {
  if (kind == "singular-ext") return Mode::singular;
  if (kind == "vsb2") return Mode::virtual_singular;
  return Mode::braid;
}

int cmd_show_rep(const RepArgs& args, bool json) {
  Report r;
  r.command = "show-rep";
  r.inputs = rep_inputs(args);
  const auto rep = build_rep(args);
  r.result = to_json(rep);
  for (const auto& [g, m] : rep.images()) r.text << g.str() << " =\n" << matrix_str(m) << '\n';
  return emit(r, json);
}

int cmd_verify(const RepArgs& args, const std::string& mode_text, bool json) {
  Report r;
  r.command = "verify";
  r.inputs = rep_inputs(args);
  const Mode mode = mode_text.empty() ? default_mode(args.kind) : parse_mode(mode_text);
  r.inputs["mode"] = mode_name(mode);
  const auto rep = build_rep(args);
  const auto pres = build_presentation(args.n, mode, !args.monoid);
  const auto violations = verify_relations(rep, pres);
  Json list = Json::array();
  for (const auto& v : violations) {
    list.push_back(Json{{"relation", v.relation.str()}, {"difference", to_json(v.difference)}});
    r.text << "violated: " << v.relation.str() << '\n';
  }
  r.result = Json{{"relations", pres.relations.size()}, {"violations", std::move(list)}};
  r.text << pres.relations.size() << " relations checked, " << violations.size() << " violated\n";
  r.status = violations.empty() ? "pass" : "fail";
  return emit(r, json);
}

void print_family(std::ostream& os, const SolutionFamily& f) {
  if (!f.label.empty()) os << (std::isdigit(static_cast<unsigned char>(f.label[0])) ? "family " : "") << f.label << ": ";
  os << "free {";
  for (std::size_t i = 0; i < f.free.size(); ++i) os << (i ? ", " : "") << f.free[i];
  os << "}";
  for (const auto& [u, e] : f.bindings) os << "; " << u << " = " << e.str();
  for (const auto& p : f.nonzero) os << "; " << p.str() << " != 0";
  os << '\n';
}

int cmd_solve_extension(const std::string& target, int n, bool json) {
  Report r;
  r.command = "solve-extension";
  r.inputs = Json{{"target", target}, {"n", n}};
  if (target == "sb") {
    const auto rep = solve_singular_extension(n);
    r.result = to_json(rep);
    r.text << rep.equation_count << " equations (" << rep.linear_count << " linear, " << rep.nonlinear_count
           << " nonlinear) in " << rep.unknown_count << " unknowns; discarded " << rep.discarded_zero
           << " zero and " << rep.discarded_duplicate << " duplicate entries\n";
    print_family(r.text, rep.raw);
    r.text << "block form a = " << rep.a_expr.str() << ", c = " << rep.c_expr.str() << '\n';
    r.text << "raw family matches block form: " << (rep.raw_matches_form ? "yes" : "no") << '\n';
    if (!rep.residual_free.empty()) {
      r.text << "residual free unknowns:";
      for (const auto& f : rep.residual_free) r.text << ' ' << f;
      r.text << '\n';
    }
    r.text << "outer entries fixed to the identity, ";
    print_family(r.text, rep.imposed);
    r.text << "imposed family matches block form: " << (rep.imposed_matches_form ? "yes" : "no") << '\n';
    const bool ok = rep.imposed_matches_form && rep.residue_after_imposed.empty() && rep.unrepresentable.empty();
    r.status = ok ? "pass" : "fail";
  } else if (target == "vsb2" || (target == "vsb" && n == 2)) {
    const auto fams = solve_involution_2x2();
    Json list = Json::array();
    bool ok = fams.size() == 5;
    for (const auto& f : fams) {
      const bool sq = involution_squares_to_identity(f);
      ok = ok && sq;
      Json j = to_json(f);
      j["squares_to_identity"] = sq;
      list.push_back(std::move(j));
      print_family(r.text, f);
    }
    r.result = Json{{"families", std::move(list)}};
    r.status = ok ? "pass" : "fail";
  } else if (target == "vsb") {
    const auto sys = assemble_vsb_system(n);
    const auto part = solve_linear_part(sys);
    Json residue = Json::array();
    for (const auto& e : sys.nonlinear_residue) residue.push_back(substitute(e, part.bindings).str());
    r.result = Json{{"unknowns", sys.unknowns.size()},
                    {"equations", sys.all_equations.size()},
                    {"linear", sys.equations.size()},
                    {"nonlinear", sys.nonlinear_residue.size()},
                    {"linear_part", to_json(part)},
                    {"nonlinear_residue", std::move(residue)}};
    r.text << sys.all_equations.size() << " equations (" << sys.equations.size() << " linear, "
           << sys.nonlinear_residue.size() << " nonlinear) in " << sys.unknowns.size() << " unknowns\n";
    r.text << "linear part: ";
    print_family(r.text, part);
    for (const auto& e : sys.nonlinear_residue) r.text << "  " << substitute(e, part.bindings).str() << " = 0\n";
    r.status = "exploratory";
  } else {
    throw CLI::ValidationError("target", "expected sb, vsb2 or vsb");
  }
  return emit(r, json);
}

template <class F>
void print_verdict(std::ostream& os, const IrreducibilityVerdict<F>& v) {
  os << (v.irreducible ? "irreducible" : "reducible") << " (span " << v.span_dim << " of " << v.dim * v.dim << ")\n";
  if (v.witness) {
    os << "invariant subspace (" << v.witness_source << "):\n";
    for (const auto& b : v.witness->basis) {
      os << "  (";
      for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << entry_str(b[i]);
      os << ")^T\n";
    }
  }
}

int cmd_irreducible(int n, const std::string& t, const std::string& a, const std::string& c, bool symbolic_t,
                    bool monoid, bool json) {
  Report r;
  r.command = "irreducible";
  r.inputs = Json{{"n", n}, {"a", a}, {"c", c}, {"group", !monoid}};
  bool irreducible = false;
  bool predicted = true;
  if (symbolic_t) {
    r.inputs["t"] = "symbolic";
    const auto rep = singular_extension(n, {LaurentPoly::parse(a), LaurentPoly::parse(c)}, !monoid);
    const auto v = is_irreducible(symbolic(rep));
    r.result = to_json(v);
    print_verdict(r.text, v);
    irreducible = v.irreducible;
  } else {
    r.inputs["t"] = t;
    const Rational t0 = parse_rational(t), av = parse_rational(a), cv = parse_rational(c);
    if (sgn(t0) == 0) throw ZeroSpecialization("t0 must be nonzero");
    if (!monoid && sgn(Rational(av * av - t0 * cv * cv)) == 0) throw SingularTau("a^2 - t0 c^2 = 0");
    const auto rep = singular_extension<Rational>(n, {av, cv}, t0, !monoid);
    const auto v = is_irreducible(collect(rep, t0));
    r.result = to_json(v);
    r.result["all_ones_invariant"] = all_ones_check(collect(rep, t0));
    print_verdict(r.text, v);
    irreducible = v.irreducible;
    predicted = t0 != 1 || Rational(av + cv) != 1;
  }
  r.result["predicted"] = predicted ? "irreducible" : "reducible";
  r.text << "predicted: " << (predicted ? "irreducible" : "reducible") << '\n';
  if (n == 2 && irreducible != predicted) {
    r.status = "divergence";
  } else {
    r.status = irreducible == predicted ? "pass" : "fail";
  }
  return emit(r, json);
}

int cmd_grid(int n, const std::string& spec_file, bool serial, bool json) {
  std::ifstream in(spec_file);
  if (!in) throw CLI::ValidationError("spec-file", "cannot open " + spec_file);
  const Json spec = Json::parse(in);
  GridSpec grid;
  grid.ns = {n};
  for (const auto& t : spec.at("t")) grid.ts.push_back(parse_rational(t.get<std::string>()));
  if (spec.contains("ac"))
    for (const auto& p : spec.at("ac"))
      grid.acs.emplace_back(parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>()));
  const int draws = spec.value("random", 0);
  Sampler rng;
  for (int k = 0; k < draws;) {
    const Rational a = rng.rational(), c = rng.rational();
    bool ok = true;
    for (const auto& t0 : grid.ts)
      if (sgn(Rational(a * a - t0 * c * c)) == 0) ok = false;
    if (!ok) continue;
    grid.acs.emplace_back(a, c);
    ++k;
  }
  const auto cells = serial ? grid_report_serial(grid) : grid_report(grid);

  Report r;
  r.command = "grid";
  r.inputs = Json{{"n", n}, {"spec", spec}, {"seed", env_seed()}};
  Json rows = Json::array();
  for (const auto& c : cells) rows.push_back(to_json(c));
  r.result = Json{{"summary", grid_summary(cells)}, {"cells", std::move(rows)}};
  r.text << grid_csv(cells);
  bool bad = false, watch = false;
  for (const auto& c : cells) {
    if (c.agree) continue;
    if (c.divergence_watch) {
      watch = true;
    } else {
      bad = true;
    }
  }
  r.status = bad ? "fail" : watch ? "divergence" : "pass";
  return emit(r, json);
}

std::vector<int> parse_pair(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
  if (v.size() != 4) throw CLI::ValidationError("--pair", "expected i,j,k,l");
  return v;
}

int cmd_kernel_probe(int n, const std::vector<std::string>& pairs, const std::string& a, const std::string& c,
                     bool json) {
  Report r;
  r.command = "kernel-probe";
  r.inputs = Json{{"n", n}, {"a", a}, {"c", c}, {"pairs", pairs}};
  const ExtensionParams<LaurentPoly> params{LaurentPoly::parse(a), LaurentPoly::parse(c)};
  Representation<LaurentPoly> rep = [&] {
    try {
      return singular_extension(n, params, true);
    } catch (const NonInvertibleTau&) {
      return singular_extension(n, params, false);
    }
  }();
  std::vector<std::pair<IndexPair, IndexPair>> candidates;
  for (const auto& s : pairs) {
    const auto v = parse_pair(s);
    candidates.push_back({{v[0], v[1]}, {v[2], v[3]}});
  }
  if (candidates.empty()) candidates = default_candidates(n);
  Json list = Json::array();
  bool failed = false;
  for (const auto& [p1, p2] : candidates) {
    const std::string label = "[A" + std::to_string(p1.first) + std::to_string(p1.second) + ", A" +
                              std::to_string(p2.first) + std::to_string(p2.second) + "]";
    const Word w = pure_commutator_word(n, p1, p2);
    try {
      const auto cert = certify(rep, w, {{"a", params.a.str()}, {"c", params.c.str()}});
      Json j = to_json(cert);
      j["candidate"] = label;
      list.push_back(std::move(j));
      r.text << label << ": certificate, " << cert.word.size() << " letters, image identity, nontriviality "
             << cert.nontriviality << '\n';
    } catch (const TrivialWord& e) {
      list.push_back(Json{{"candidate", label}, {"rejected", e.kind()}, {"reason", e.what()}});
      r.text << label << ": rejected, trivial by commutation\n";
    } catch (const NotInKernel& e) {
      failed = true;
      list.push_back(Json{{"candidate", label}, {"rejected", e.kind()}, {"reason", e.what()}});
      r.text << label << ": not in kernel\n";
    }
  }
  r.result = Json{{"results", std::move(list)}};
  r.status = failed ? "fail" : "pass";
  return emit(r, json);
}

int cmd_involutions(const std::string& classify, bool json) {
  Report r;
  r.command = "involutions";
  if (classify.empty()) {
    const auto fams = solve_involution_2x2();
    Json list = Json::array();
    for (const auto& f : fams) {
      list.push_back(to_json(f));
      print_family(r.text, f);
    }
    r.result = Json{{"families", std::move(list)}};
    return emit(r, json);
  }
  r.inputs = Json{{"classify", classify}};
  std::vector<Rational> v;
  std::string cleaned = classify;
  for (char& ch : cleaned)
    if (ch == ';') ch = ',';
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) throw CLI::ValidationError("--classify", "expected p,q;r,s");
  const Matrix<Rational> m{{v[0], v[1]}, {v[2], v[3]}};
  const auto cls = involution_classify(m);
  r.result = Json{{"family", cls.family}, {"p", rational_str(cls.p)}, {"q", rational_str(cls.q)},
                  {"r", rational_str(cls.r)}};
  r.text << "family " << cls.family << " (p = " << rational_str(cls.p) << ", q = " << rational_str(cls.q)
         << ", r = " << rational_str(cls.r) << ")\n";
  return emit(r, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact braid, singular braid and virtual singular braid representations"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  RepArgs show_args;
  auto* show = app.add_subcommand("show-rep", "print generator matrices");
  add_rep_options(show, show_args);

  RepArgs verify_args;
  std::string mode;
  auto* verify = app.add_subcommand("verify", "check every defining relation");
  add_rep_options(verify, verify_args);
  verify->add_option("--mode", mode, "braid | singular | virtual_singular");

  std::string target;
  int solve_n = 2;
  auto* solve = app.add_subcommand("solve-extension", "solve for tau (sb) or nu (vsb2, vsb) images");
  solve->add_option("target", target, "sb | vsb2 | vsb")->required();
  solve->add_option("n", solve_n, "strand count");

  int irr_n = 3;
  std::string irr_t = "2", irr_a = "1", irr_c = "0";
  bool irr_symbolic = false, irr_monoid = false;
  auto* irr = app.add_subcommand("irreducible", "Burnside span verdict for a singular extension");
  irr->add_option("n", irr_n, "strand count")->required();
  irr->add_option("--t", irr_t, "rational t0");
  irr->add_option("--a", irr_a, "a (rational, or Laurent with --symbolic)");
  irr->add_option("--c", irr_c, "c (rational, or Laurent with --symbolic)");
  irr->add_flag("--symbolic", irr_symbolic, "keep t symbolic over Q(t)");
  irr->add_flag("--monoid", irr_monoid, "do not invert tau");

  int grid_n = 3;
  std::string grid_file;
  bool grid_serial = false;
  auto* grid = app.add_subcommand("grid", "sweep (t0, a, c) cells against the predicted verdicts");
  grid->add_option("n", grid_n, "strand count")->required();
  grid->add_option("spec-file", grid_file, "JSON {\"t\": [...], \"ac\": [[a, c], ...], \"random\": k}")->required();
  grid->add_flag("--serial", grid_serial, "use the serial reference kernel");

  int kp_n = 3;
  std::vector<std::string> kp_pairs;
  std::string kp_a = "1", kp_c = "0";
  auto* kp = app.add_subcommand("kernel-probe", "certify pure braid commutators in the kernel");
  kp->add_option("n", kp_n, "strand count")->required();
  kp->add_option("--pair", kp_pairs, "i,j,k,l for [A_ij, A_kl]");
  kp->add_option("--a", kp_a, "Laurent a");
  kp->add_option("--c", kp_c, "Laurent c");

  std::string classify;
  auto* inv = app.add_subcommand("involutions", "the five involution families of nu_1");
  inv->add_option("--classify", classify, "classify p,q;r,s");

  for (auto* sub : {show, verify, solve, irr, grid, kp, inv}) sub->add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*show) return cmd_show_rep(show_args, json);
    if (*verify) return cmd_verify(verify_args, mode, json);
    if (*solve) return cmd_solve_extension(target, solve_n, json);
    if (*irr) return cmd_irreducible(irr_n, irr_t, irr_a, irr_c, irr_symbolic, irr_monoid, json);
    if (*grid) return cmd_grid(grid_n, grid_file, grid_serial, json);
    if (*kp) return cmd_kernel_probe(kp_n, kp_pairs, kp_a, kp_c, json);
    if (*inv) return cmd_involutions(classify, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
