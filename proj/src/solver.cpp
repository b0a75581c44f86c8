#include "braidrep/solver.hpp"

#include <algorithm>
#include <set>
#include <cstdint>
#include <stdexcept>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

MultiPoly t_poly() { return MultiPoly(LaurentPoly::t()); }

Matrix<MultiPoly> unknown_matrix(const std::vector<std::string>& names, std::size_t dim) {
  Matrix<MultiPoly> m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = MultiPoly::variable(names[r * dim + c]);
  return m;
}

Matrix<MultiPoly> word_image(const std::map<Generator, Matrix<MultiPoly>>& images, const Word& w, std::size_t dim) {
  Matrix<MultiPoly> acc = Matrix<MultiPoly>::identity(dim);
  for (const auto& l : w.letters) {
    if (l.exponent < 0) throw InverseUnavailable("cannot assemble equations through " + l.str());
    auto it = images.find(l.generator());
    if (it == images.end()) throw UnassignedGenerator(l.generator().str() + " is neither known nor unknown");
    acc = acc * it->second;
  }
  return acc;
}

bool is_zero_expr(const RationalExpr& e) { return e.num.is_zero(); }

bool satisfies(const ConstraintSystem& sys, const SolutionFamily& fam) {
  for (const auto& e : sys.all_equations)
    if (!is_zero_expr(substitute(e, fam.bindings))) return false;
  return true;
}

SolutionFamily fixed_family(std::string label, std::vector<std::string> free,
                            std::map<std::string, RationalExpr> bindings) {
  SolutionFamily f;
  f.label = std::move(label);
  f.free = std::move(free);
  f.bindings = std::move(bindings);
  return f;
}

SolutionFamily solve_impl(const ConstraintSystem& sys) {
  const std::vector<std::string> cols(sys.elimination_order.rbegin(), sys.elimination_order.rend());
  std::map<std::string, std::size_t> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;
  const std::size_t last = cols.size();

  Matrix<RationalFunction> m(sys.equations.size(), cols.size() + 1);
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    const auto& eq = sys.equations[i];
    for (const auto& [v, c] : eq.coefficients) {
      auto it = col_of.find(v);
      if (it == col_of.end()) throw UnassignedGenerator("equation mentions unknown " + v + " outside the system");
      m(i, it->second) = c;
    }
    m(i, last) = eq.constant;
  }
  const auto pivots = rref_in_place(m);

  std::vector<bool> is_pivot(cols.size() + 1, false);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == last)
      throw Inconsistent("system reduces to 0 = " + m(k, last).str() + " (equation " +
                         std::to_string(k + 1) + " after elimination)");
    is_pivot[pivots[k]] = true;
  }

  SolutionFamily fam;
  fam.discarded_zero = sys.discarded_zero;
  fam.discarded_duplicate = sys.discarded_duplicate;
  for (const auto& u : sys.unknowns)
    if (!is_pivot[col_of.at(u)]) fam.free.push_back(u);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    MultiPoly expr(-m(k, last));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (is_pivot[j] || m(k, j).is_zero()) continue;
      expr -= MultiPoly(m(k, j)) * MultiPoly::variable(cols[j]);
    }
    fam.bindings.emplace(cols[pivots[k]], RationalExpr(expr));
  }
  return fam;
}

bool matches_block_form(const std::map<Generator, Matrix<MultiPoly>>& images, int n, MultiPoly* a_out,
                        MultiPoly* c_out) {
  const auto& t1 = images.at({Kind::tau, 1});
  const MultiPoly a = t1(0, 0), c = t1(1, 0);
  if (a_out) *a_out = a;
  if (c_out) *c_out = c;
  const auto block = tau_block(a, c, t_poly());
  for (int i = 1; i <= n - 1; ++i) {
    if (images.at({Kind::tau, i}) != block_embed(block, static_cast<std::size_t>(i), static_cast<std::size_t>(n)))
      return false;
  }
  return true;
}

}  // namespace

void ConstraintSystem::add_equation(const MultiPoly& e, EquationSource src) {
  if (e.is_zero()) {
    ++discarded_zero;
    return;
  }
  const MultiPoly neg = -e;
  for (const auto& old : all_equations) {
    if (old == e || old == neg) {
      ++discarded_duplicate;
      return;
    }
  }
  all_equations.push_back(e);
  sources.push_back(src);

  bool linear = e.total_degree() <= 1;
  if (linear) {
    const std::set<std::string> known(unknowns.begin(), unknowns.end());
    for (const auto& v : e.variables())
      if (!known.count(v)) linear = false;
  }
  if (linear) {
    equations.push_back(*LinearExpr::from(e));
  } else {
    nonlinear_residue.push_back(e);
  }
}

std::vector<std::string> reading_order_names(std::size_t dim, const std::string& suffix) {
  std::vector<std::string> names;
  names.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t k = r * dim + c;
      if (dim * dim <= 26) {
        names.push_back(std::string(1, static_cast<char>('a' + k)) + suffix);
      } else {
        names.push_back("x" + suffix + "_" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
      }
    }
  }
  return names;
}

std::map<Generator, Matrix<MultiPoly>> lift(const Representation<LaurentPoly>& rep) {
  std::map<Generator, Matrix<MultiPoly>> out;
  for (const auto& [g, m] : rep.images()) out.emplace(g, m.map([](const LaurentPoly& x) { return MultiPoly(x); }));
  return out;
}

ConstraintSystem assemble(const Presentation& pres, const std::map<Generator, Matrix<MultiPoly>>& known,
                          const std::vector<UnknownGenerator>& unknowns, std::size_t dim) {
  ConstraintSystem sys;
  std::map<Generator, Matrix<MultiPoly>> images;
  for (const auto& [g, m] : known) {
    if (m.rows() != dim || m.cols() != dim)
      throw ModeMismatch(g.str() + " image is not " + std::to_string(dim) + "x" + std::to_string(dim));
    images.emplace(g, m);
  }
  for (const auto& u : unknowns) {
    if (u.names.size() != dim * dim)
      throw ModeMismatch(u.gen.str() + " needs " + std::to_string(dim * dim) + " unknown names");
    if (images.count(u.gen)) throw ModeMismatch(u.gen.str() + " is both known and unknown");
    Matrix<MultiPoly> m = unknown_matrix(u.names, dim);
    images.emplace(u.gen, m);
    sys.unknown_images.emplace(u.gen, m);
    sys.unknowns.insert(sys.unknowns.end(), u.names.begin(), u.names.end());
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < dim; ++r) sys.elimination_order.push_back(u.names[r * dim + c]);
  }
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const auto& rel = pres.relations[i];
    const Matrix<MultiPoly> diff = word_image(images, rel.lhs, dim) - word_image(images, rel.rhs, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) sys.add_equation(diff(r, c), {i, r, c});
  }
  return sys;
}

ConstraintSystem assemble_singular_system(int n) {
  const Presentation pres = build_presentation(n, Mode::singular, true);
  const auto dim = static_cast<std::size_t>(n);
  std::vector<UnknownGenerator> unknowns;
  for (int i = 1; i <= n - 1; ++i)
    unknowns.push_back({{Kind::tau, i}, reading_order_names(dim, n == 2 ? "" : std::to_string(i))});
  return assemble(pres, lift(standard_rep(n)), unknowns, dim);
}

ConstraintSystem assemble_vsb2_system() { return assemble_vsb_system(2); }

ConstraintSystem assemble_vsb_system(int n) {
  const Presentation pres = build_presentation(n, Mode::virtual_singular, true);
  const auto dim = static_cast<std::size_t>(n);
  auto known = lift(standard_rep(n));
  const auto block = tau_block(MultiPoly::variable("a"), MultiPoly::variable("c"), t_poly());
  for (int i = 1; i <= n - 1; ++i) known.emplace(Generator{Kind::tau, i}, block_embed(block, static_cast<std::size_t>(i), dim));
  std::vector<UnknownGenerator> unknowns;
  for (int i = 1; i <= n - 1; ++i) {
    if (n == 2) {
      unknowns.push_back({{Kind::nu, 1}, {"p", "q", "r", "s"}});
    } else {
      unknowns.push_back({{Kind::nu, i}, reading_order_names(dim, "v" + std::to_string(i))});
    }
  }
  return assemble(pres, known, unknowns, dim);
}

RationalExpr SolutionFamily::value(const std::string& unknown) const {
  auto it = bindings.find(unknown);
  if (it != bindings.end()) return it->second;
  return RationalExpr(MultiPoly::variable(unknown));
}

std::map<std::string, MultiPoly> SolutionFamily::polynomial_bindings() const {
  std::map<std::string, MultiPoly> out;
  for (const auto& [u, e] : bindings) {
    if (!e.is_polynomial()) throw std::logic_error("binding of " + u + " is not polynomial: " + e.str());
    out.emplace(u, e.num);
  }
  return out;
}

SolutionFamily solve_linear(const ConstraintSystem& sys) {
  if (!sys.nonlinear_residue.empty())
    throw NonlinearSystem(std::to_string(sys.nonlinear_residue.size()) + " equations are not linear, first: " +
                          sys.nonlinear_residue.front().str());
  return solve_impl(sys);
}

SolutionFamily solve_linear_part(const ConstraintSystem& sys) { return solve_impl(sys); }

std::map<Generator, Matrix<MultiPoly>> substitute_images(const ConstraintSystem& sys, const SolutionFamily& fam) {
  const auto values = fam.polynomial_bindings();
  std::map<Generator, Matrix<MultiPoly>> out;
  for (const auto& [g, m] : sys.unknown_images)
    out.emplace(g, m.map([&](const MultiPoly& x) { return x.substitute(values); }));
  return out;
}

std::vector<std::string> laurent_representability(const SolutionFamily& fam) {
  std::vector<std::string> flagged;
  for (const auto& [u, e] : fam.bindings) {
    bool ok = e.is_polynomial();
    if (ok)
      for (const auto& [m, c] : e.num.terms())
        if (!c.is_laurent()) ok = false;
    if (!ok) flagged.push_back(u);
  }
  return flagged;
}

SingularFormReport solve_singular_extension(int n) {
  SingularFormReport rep;
  rep.n = n;
  const ConstraintSystem sys = assemble_singular_system(n);
  rep.unknown_count = sys.unknowns.size();
  rep.equation_count = sys.all_equations.size();
  rep.linear_count = sys.equations.size();
  rep.nonlinear_count = sys.nonlinear_residue.size();
  rep.discarded_zero = sys.discarded_zero;
  rep.discarded_duplicate = sys.discarded_duplicate;

  rep.raw = solve_linear_part(sys);
  rep.raw.label = "raw";
  rep.unrepresentable = laurent_representability(rep.raw);
  rep.raw_matches_form = matches_block_form(substitute_images(sys, rep.raw), n, &rep.a_expr, &rep.c_expr);
  std::set<std::string> block_vars = rep.a_expr.variables();
  for (const auto& v : rep.c_expr.variables()) block_vars.insert(v);
  for (const auto& f : rep.raw.free)
    if (!block_vars.count(f)) rep.residual_free.push_back(f);

  ConstraintSystem imposed = sys;
  const auto dim = static_cast<std::size_t>(n);
  for (int i = 1; i <= n - 1; ++i) {
    const auto& m = sys.unknown_images.at({Kind::tau, i});
    const auto lo = static_cast<std::size_t>(i - 1), hi = static_cast<std::size_t>(i);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const bool inner = (r == lo || r == hi) && (c == lo || c == hi);
        if (!inner) imposed.add_equation(m(r, c) - MultiPoly(r == c ? 1 : 0), {SIZE_MAX, r, c});
      }
  }
  rep.imposed = solve_linear_part(imposed);
  rep.imposed.label = "imposed";
  rep.imposed_matches_form = matches_block_form(substitute_images(imposed, rep.imposed), n, nullptr, nullptr);
  for (const auto& e : sys.nonlinear_residue) {
    RationalExpr v = substitute(e, rep.imposed.bindings);
    if (!v.num.is_zero()) rep.residue_after_imposed.push_back(v.num);
  }
  return rep;
}

std::vector<SolutionFamily> solve_involution_2x2(const ConstraintSystem& vsb2) {
  const MultiPoly p = MultiPoly::variable("p"), q = MultiPoly::variable("q"), r = MultiPoly::variable("r");
  std::vector<SolutionFamily> fams;

  // q != 0: pq + qs = 0 gives s = -p, then p^2 + qr = 1 gives r.
  SolutionFamily f1 = fixed_family("1", {"p", "q"}, {{"r", RationalExpr(MultiPoly(1) - p * p, q)}, {"s", RationalExpr(-p)}});
  f1.nonzero.push_back(q);
  fams.push_back(f1);
  // q = 0: p^2 = s^2 = 1 and r(p + s) = 0; p = -s leaves r free, p = s forces r = 0.
  fams.push_back(fixed_family("2", {"r"}, {{"p", RationalExpr(MultiPoly(-1))}, {"q", RationalExpr(MultiPoly(0))}, {"s", RationalExpr(MultiPoly(1))}}));
  fams.push_back(fixed_family("3", {"r"}, {{"p", RationalExpr(MultiPoly(1))}, {"q", RationalExpr(MultiPoly(0))}, {"s", RationalExpr(MultiPoly(-1))}}));
  fams.push_back(fixed_family("4", {}, {{"p", RationalExpr(MultiPoly(-1))}, {"q", RationalExpr(MultiPoly(0))}, {"r", RationalExpr(MultiPoly(0))}, {"s", RationalExpr(MultiPoly(-1))}}));
  fams.push_back(fixed_family("5", {}, {{"p", RationalExpr(MultiPoly(1))}, {"q", RationalExpr(MultiPoly(0))}, {"r", RationalExpr(MultiPoly(0))}, {"s", RationalExpr(MultiPoly(1))}}));

  for (auto& f : fams) {
    f.discarded_zero = vsb2.discarded_zero;
    f.discarded_duplicate = vsb2.discarded_duplicate;
    if (!satisfies(vsb2, f)) throw std::logic_error("involution family " + f.label + " fails the assembled equations");
  }
  return fams;
}

std::vector<SolutionFamily> solve_involution_2x2() { return solve_involution_2x2(assemble_vsb2_system()); }

std::vector<RationalExpr> involution_entries(const SolutionFamily& fam) {
  return {fam.value("p"), fam.value("q"), fam.value("r"), fam.value("s")};
}

bool involution_squares_to_identity(const SolutionFamily& fam) {
  const auto e = involution_entries(fam);
  const RationalExpr one(MultiPoly(1)), zero(MultiPoly(0));
  const RationalExpr m00 = e[0] * e[0] + e[1] * e[2];
  const RationalExpr m01 = e[0] * e[1] + e[1] * e[3];
  const RationalExpr m10 = e[2] * e[0] + e[3] * e[2];
  const RationalExpr m11 = e[2] * e[1] + e[3] * e[3];
  return m00.equals(one) && m01.equals(zero) && m10.equals(zero) && m11.equals(one);
}

InvolutionClass involution_classify(const Matrix<Rational>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw ShapeMismatch("involution_classify needs a 2x2 matrix");
  if (!(m * m).is_identity()) throw NotInvolution("M*M != I for " + matrix_str(m));
  const Rational p = m(0, 0), q = m(0, 1), r = m(1, 0), s = m(1, 1);
  InvolutionClass out;
  if (sgn(q) != 0) {
    out.family = 1;
    out.p = p;
    out.q = q;
    out.r = r;
    return out;
  }
  if (p == -1 && s == 1) {
    out.family = 2;
  } else if (p == 1 && s == -1) {
    out.family = 3;
  } else if (p == -1 && s == -1 && sgn(r) == 0) {
    out.family = 4;
  } else if (p == 1 && s == 1 && sgn(r) == 0) {
    out.family = 5;
  } else {
    throw Unclassifiable("no family matches " + matrix_str(m));
  }
  out.p = p;
  out.r = r;
  return out;
}

}  // namespace braidrep
