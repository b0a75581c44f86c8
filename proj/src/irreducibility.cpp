#include "braidrep/irreducibility.hpp"

#include <algorithm>
#include <exception>
#include <type_traits>
#include <sstream>

#include "braidrep/errors.hpp"

#ifdef BRAIDREP_HAVE_OPENMP
#include <omp.h>
#endif

namespace braidrep {

namespace {

// Rows kept in echelon form with unit pivots; rows inserted later are zero
// at every earlier pivot, so one pass in insertion order fully reduces.
template <class F>
class Echelon {
 public:
  std::vector<F> reduce(std::vector<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (entry_is_zero(v[p])) continue;
      const F f = v[p];
      const auto& row = rows_[k];
      for (std::size_t j = p; j < v.size(); ++j)
        if (!entry_is_zero(row[j])) v[j] -= f * row[j];
    }
    return v;
  }

  bool insert_reduced(std::vector<F> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && entry_is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    const F inv = F(1) / v[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] = v[j] * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
bool is_zero_vector(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!entry_is_zero(x)) return false;
  return true;
}

template <class F>
std::vector<F> ones(std::size_t dim) {
  return std::vector<F>(dim, F(1));
}

template <class F>
Subspace<F> line(const std::vector<F>& v) {
  Subspace<F> s;
  s.ambient = v.size();
  s.basis.push_back(v);
  return s;
}

template <class F>
Matrix<F> stacked_minus_identity(const SpecializedRep<F>& spec) {
  Matrix<F> m(spec.dim * spec.images.size(), spec.dim);
  for (std::size_t k = 0; k < spec.images.size(); ++k)
    for (std::size_t r = 0; r < spec.dim; ++r)
      for (std::size_t c = 0; c < spec.dim; ++c)
        m(k * spec.dim + r, c) = spec.images[k](r, c) - (r == c ? F(1) : F(0));
  return m;
}

Subspace<Rational> intersect(const Subspace<Rational>& u, const Subspace<Rational>& v) {
  const std::size_t dim = u.ambient, ku = u.dimension(), kv = v.dimension();
  Matrix<Rational> m(dim, ku + kv);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < ku; ++j) m(i, j) = u.basis[j][i];
    for (std::size_t j = 0; j < kv; ++j) m(i, ku + j) = -v.basis[j][i];
  }
  const auto ns = mat_nullspace(m);
  Subspace<Rational> out;
  out.ambient = dim;
  for (const auto& x : ns.basis) {
    std::vector<Rational> w(dim, Rational(0));
    for (std::size_t j = 0; j < ku; ++j)
      for (std::size_t i = 0; i < dim; ++i) w[i] += x[j] * u.basis[j][i];
    out.basis.push_back(std::move(w));
  }
  return out;
}

Subspace<Rational> eigenspace(const Matrix<Rational>& a, const Rational& lambda) {
  Matrix<Rational> m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return mat_nullspace(m);
}

// Depth-first choice of one rational eigenspace per image, pruned as soon as
// the running intersection is zero.
std::optional<std::vector<Rational>> common_eigenvector(const std::vector<std::vector<Subspace<Rational>>>& spaces,
                                                        std::size_t k, const Subspace<Rational>& acc) {
  if (acc.dimension() == 0) return std::nullopt;
  if (k == spaces.size()) return acc.basis.front();
  for (const auto& s : spaces[k]) {
    auto hit = common_eigenvector(spaces, k + 1, intersect(acc, s));
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> find_common_eigenvector(const SpecializedRep<Rational>& spec) {
  std::vector<std::vector<Subspace<Rational>>> spaces;
  for (const auto& a : spec.images) {
    const auto roots = rational_roots(char_poly(a));
    if (!roots) return std::nullopt;
    std::vector<Subspace<Rational>> es;
    for (const auto& r : *roots) es.push_back(eigenspace(a, r));
    if (es.empty()) return std::nullopt;
    spaces.push_back(std::move(es));
  }
  Subspace<Rational> all;
  all.ambient = spec.dim;
  for (std::size_t i = 0; i < spec.dim; ++i) {
    std::vector<Rational> e(spec.dim, Rational(0));
    e[i] = 1;
    all.basis.push_back(std::move(e));
  }
  return common_eigenvector(spaces, 0, all);
}

std::vector<Integer> divisors(Integer x) {
  x = abs(x);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    small.push_back(d);
    if (d * d != x) large.push_back(Integer(x / d));
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const std::vector<Integer>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

void validate_grid(const GridSpec& spec) {
  for (int n : spec.ns) detail::check_strands(n);
  for (const auto& t0 : spec.ts) {
    if (sgn(t0) == 0) throw ZeroSpecialization("grid t0 must be nonzero");
    for (const auto& [a, c] : spec.acs)
      if (sgn(Rational(a * a - t0 * c * c)) == 0)
        throw SingularTau("a^2 - t0 c^2 = 0 at t0=" + rational_str(t0) + ", a=" + rational_str(a) +
                          ", c=" + rational_str(c));
  }
}

struct CellIndex {
  int n;
  Rational t0, a, c;
};

std::vector<CellIndex> grid_cells(const GridSpec& spec) {
  std::vector<CellIndex> out;
  for (int n : spec.ns)
    for (const auto& t0 : spec.ts)
      for (const auto& [a, c] : spec.acs) out.push_back({n, t0, a, c});
  return out;
}

}  // namespace

SpecializedRep<Rational> specialize(const Representation<LaurentPoly>& rep, const Rational& t0) {
  if (sgn(t0) == 0) throw ZeroSpecialization("t0 must be nonzero");
  return collect(rep.map_entries([&](const LaurentPoly& x) { return x.eval(t0); }), t0);
}

SpecializedRep<RationalFunction> symbolic(const Representation<LaurentPoly>& rep) {
  return collect(rep.map_entries([](const LaurentPoly& x) { return RationalFunction(x); }), std::nullopt);
}

template <class F>
std::size_t burnside_span_serial(const SpecializedRep<F>& spec) {
  const std::size_t full = spec.dim * spec.dim;
  Echelon<F> basis;
  std::vector<Matrix<F>> frontier{Matrix<F>::identity(spec.dim)};
  basis.insert_reduced(vectorize(frontier.front()));
  while (!frontier.empty() && basis.size() < full) {
    std::vector<Matrix<F>> next;
    for (const auto& m : frontier)
      for (const auto& g : spec.images) {
        Matrix<F> p = m * g;
        if (basis.insert_reduced(vectorize(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return basis.size();
}

template <class F>
std::size_t burnside_span(const SpecializedRep<F>& spec) {
  const std::size_t full = spec.dim * spec.dim;
  const std::size_t gens = spec.images.size();
  Echelon<F> basis;
  std::vector<Matrix<F>> frontier{Matrix<F>::identity(spec.dim)};
  basis.insert_reduced(vectorize(frontier.front()));
  while (!frontier.empty() && basis.size() < full) {
    const std::size_t count = frontier.size() * gens;
    std::vector<Matrix<F>> products(count);
    std::vector<std::vector<F>> reduced(count);
    const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      products[idx] = frontier[idx / gens] * spec.images[idx % gens];
      reduced[idx] = basis.reduce(vectorize(products[idx]));
    }
    std::vector<Matrix<F>> next;
    for (std::size_t k = 0; k < count; ++k) {
      if (is_zero_vector(reduced[k])) continue;
      if (basis.insert_reduced(std::move(reduced[k]))) next.push_back(std::move(products[k]));
    }
    frontier = std::move(next);
  }
  return basis.size();
}

template <class F>
bool all_ones_check(const SpecializedRep<F>& spec) {
  const auto v = ones<F>(spec.dim);
  for (const auto& a : spec.images) {
    const auto w = mat_apply(a, v);
    for (const auto& x : w)
      if (!(x == w.front())) return false;
  }
  return true;
}

template <class F>
Subspace<F> invariant_closure(const SpecializedRep<F>& spec, const std::vector<F>& v) {
  Subspace<F> out;
  out.ambient = spec.dim;
  Echelon<F> basis;
  if (!basis.insert_reduced(v)) return out;
  out.basis.push_back(v);
  std::vector<std::vector<F>> frontier{v};
  while (!frontier.empty() && basis.size() < spec.dim) {
    std::vector<std::vector<F>> next;
    for (const auto& w : frontier)
      for (const auto& a : spec.images) {
        auto u = mat_apply(a, w);
        if (basis.insert_reduced(u)) {
          out.basis.push_back(u);
          next.push_back(std::move(u));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

template <class F>
bool is_invariant(const SpecializedRep<F>& spec, const Subspace<F>& s) {
  for (const auto& a : spec.images)
    for (const auto& b : s.basis)
      if (!s.contains(mat_apply(a, b))) return false;
  return true;
}

template <class F>
IrreducibilityVerdict<F> is_irreducible(const SpecializedRep<F>& spec) {
  IrreducibilityVerdict<F> v;
  v.dim = spec.dim;
  v.span_dim = burnside_span(spec);
  v.irreducible = v.span_dim == spec.dim * spec.dim;
  if (v.irreducible) return v;

  auto accept = [&](Subspace<F> s, const char* source) {
    if (s.dimension() == 0 || s.dimension() >= spec.dim || !is_invariant(spec, s)) return false;
    v.witness = std::move(s);
    v.witness_source = source;
    return true;
  };
  auto fixed = mat_nullspace(stacked_minus_identity(spec));
  if (fixed.dimension() == spec.dim && spec.dim > 1) fixed = line(fixed.basis.front());
  if (accept(std::move(fixed), "fixed")) return v;
  if (all_ones_check(spec) && accept(line(ones<F>(spec.dim)), "all_ones")) return v;
  if constexpr (std::is_same_v<F, Rational>) {
    if (auto e = find_common_eigenvector(spec)) accept(line(*e), "eigen");
  }
  return v;
}

std::vector<Rational> char_poly(const Matrix<Rational>& a) {
  if (!a.is_square()) throw NotSquare("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix<Rational> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const Matrix<Rational> am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
    c[n - k].canonicalize();
  }
  return c;
}

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs) {
  Integer l = 1;
  for (const auto& q : coeffs) l = lcm(l, Integer(q.get_den()));
  std::vector<Integer> c;
  for (const auto& q : coeffs) c.push_back(Integer(q * Rational(l)));
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.empty()) return roots;
  std::size_t shift = 0;
  while (c[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  if (c.size() == 1) return roots;
  static const Integer bound("1000000000000");
  if (abs(c.front()) > bound || abs(c.back()) > bound) return std::nullopt;
  const auto ps = divisors(c.front()), qs = divisors(c.back());
  for (const auto& q : qs)
    for (const auto& p : ps)
      for (int sign : {1, -1}) {
        Rational x(Integer(sign * p), q);
        x.canonicalize();
        if (x.get_den() != q) continue;
        if (sgn(horner(c, x)) == 0) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

GridCell grid_cell(int n, const Rational& t0, const Rational& a, const Rational& c) {
  GridCell cell;
  cell.n = n;
  cell.t0 = t0;
  cell.a = a;
  cell.c = c;
  Representation<Rational> rep = [&] {
    try {
      return singular_extension<Rational>(n, {a, c}, t0, true);
    } catch (const NonInvertibleTau& e) {
      throw SingularTau(e.what());
    }
  }();
  const auto spec = collect(rep, t0);
  cell.span_dim = burnside_span_serial(spec);
  cell.irreducible = cell.span_dim == static_cast<std::size_t>(n * n);
  cell.predicted = t0 != 1 || Rational(a + c) != 1;
  cell.agree = cell.irreducible == cell.predicted;
  cell.divergence_watch = n == 2;
  cell.all_ones = all_ones_check(spec);
  return cell;
}

std::vector<GridCell> grid_report_serial(const GridSpec& spec) {
  validate_grid(spec);
  std::vector<GridCell> out;
  for (const auto& k : grid_cells(spec)) out.push_back(grid_cell(k.n, k.t0, k.a, k.c));
  return out;
}

std::vector<GridCell> grid_report(const GridSpec& spec) {
  validate_grid(spec);
  const auto idx = grid_cells(spec);
  std::vector<GridCell> out(idx.size());
  std::exception_ptr failure;
  const auto total = static_cast<long>(idx.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) {
    const auto& c = idx[static_cast<std::size_t>(k)];
    try {
      out[static_cast<std::size_t>(k)] = grid_cell(c.n, c.t0, c.a, c.c);
    } catch (...) {
#pragma omp critical(braidrep_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string grid_csv(const std::vector<GridCell>& cells) {
  std::ostringstream os;
  os << "n,t0,a,c,span_dim,verdict,predicted,agree\n";
  for (const auto& c : cells) {
    os << c.n << ',' << rational_str(c.t0) << ',' << rational_str(c.a) << ',' << rational_str(c.c) << ','
       << c.span_dim << ',' << (c.irreducible ? "irreducible" : "reducible") << ','
       << (c.predicted ? "irreducible" : "reducible") << ',' << (c.agree ? "yes" : "no") << '\n';
  }
  return os.str();
}

template std::size_t burnside_span_serial(const SpecializedRep<Rational>&);
template std::size_t burnside_span_serial(const SpecializedRep<RationalFunction>&);
template std::size_t burnside_span(const SpecializedRep<Rational>&);
template std::size_t burnside_span(const SpecializedRep<RationalFunction>&);
template IrreducibilityVerdict<Rational> is_irreducible(const SpecializedRep<Rational>&);
template IrreducibilityVerdict<RationalFunction> is_irreducible(const SpecializedRep<RationalFunction>&);
template bool all_ones_check(const SpecializedRep<Rational>&);
template bool all_ones_check(const SpecializedRep<RationalFunction>&);
template Subspace<Rational> invariant_closure(const SpecializedRep<Rational>&, const std::vector<Rational>&);
template Subspace<RationalFunction> invariant_closure(const SpecializedRep<RationalFunction>&,
                                                      const std::vector<RationalFunction>&);
template bool is_invariant(const SpecializedRep<Rational>&, const Subspace<Rational>&);
template bool is_invariant(const SpecializedRep<RationalFunction>&, const Subspace<RationalFunction>&);

}  // namespace braidrep
