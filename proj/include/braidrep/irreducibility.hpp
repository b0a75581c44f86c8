#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

/// Field-valued images of a representation: every generator image followed
/// by every stored inverse. t0 is empty in symbolic-t mode.
template <class F>
struct SpecializedRep {
  int n = 0;
  std::size_t dim = 0;
  std::optional<Rational> t0;
  std::vector<std::string> names;  // "s1", "s1^-1", "t2", ...
  std::vector<Matrix<F>> images;
};

template <class F>
SpecializedRep<F> collect(const Representation<F>& rep, std::optional<Rational> t0) {
  SpecializedRep<F> out;
  out.n = rep.n();
  out.dim = rep.dim();
  out.t0 = std::move(t0);
  for (const auto& [g, m] : rep.images()) {
    out.names.push_back(g.str());
    out.images.push_back(m);
  }
  for (const auto& [g, m] : rep.images()) {
    if (!rep.has_inverse(g)) continue;
    out.names.push_back(g.str() + "^-1");
    out.images.push_back(rep.inverse_image(g));
  }
  return out;
}

/// Evaluates t at t0. Throws ZeroSpecialization for t0 = 0.
SpecializedRep<Rational> specialize(const Representation<LaurentPoly>& rep, const Rational& t0);
/// Embeds the entries into Q(t).
SpecializedRep<RationalFunction> symbolic(const Representation<LaurentPoly>& rep);

/// Dimension of the unital algebra generated by the images.
template <class F>
std::size_t burnside_span_serial(const SpecializedRep<F>& spec);
/// Same result; products and reductions of each layer run in parallel.
template <class F>
std::size_t burnside_span(const SpecializedRep<F>& spec);

template <class F>
struct IrreducibilityVerdict {
  bool irreducible = false;
  std::size_t span_dim = 0;
  std::size_t dim = 0;
  std::optional<Subspace<F>> witness;  // invariant, checked against every image
  std::string witness_source;          // "fixed", "all_ones", "eigen" or ""
};

template <class F>
IrreducibilityVerdict<F> is_irreducible(const SpecializedRep<F>& spec);

/// Every image sends (1, ..., 1) to a multiple of itself.
template <class F>
bool all_ones_check(const SpecializedRep<F>& spec);

/// Smallest subspace containing v and invariant under every image.
template <class F>
Subspace<F> invariant_closure(const SpecializedRep<F>& spec, const std::vector<F>& v);

/// Each image maps every basis vector of s back into s.
template <class F>
bool is_invariant(const SpecializedRep<F>& spec, const Subspace<F>& s);

/// Roots in Q of a polynomial with rational coefficients (low degree first).
/// Returns nullopt when the candidate enumeration would be too large.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs);
/// Characteristic polynomial det(xI - A), low degree first (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const Matrix<Rational>& a);

struct GridCell {
  int n = 3;
  Rational t0 = 1, a = 0, c = 0;
  std::size_t span_dim = 0;
  bool irreducible = false;
  bool predicted = false;  // t0 != 1 or a + c != 1
  bool agree = false;
  bool divergence_watch = false;  // n = 2
  bool all_ones = false;
};

struct GridSpec {
  std::vector<int> ns;
  std::vector<Rational> ts;
  std::vector<std::pair<Rational, Rational>> acs;
};

/// Cells in (n, t0, (a, c)) order. Throws ZeroSpecialization for t0 = 0 and
/// SingularTau when a^2 - t0 c^2 = 0, before any cell is computed.
std::vector<GridCell> grid_report_serial(const GridSpec& spec);
std::vector<GridCell> grid_report(const GridSpec& spec);

GridCell grid_cell(int n, const Rational& t0, const Rational& a, const Rational& c);

/// CSV with header n,t0,a,c,span_dim,verdict,predicted,agree.
std::string grid_csv(const std::vector<GridCell>& cells);

extern template std::size_t burnside_span_serial(const SpecializedRep<Rational>&);
extern template std::size_t burnside_span_serial(const SpecializedRep<RationalFunction>&);
extern template std::size_t burnside_span(const SpecializedRep<Rational>&);
extern template std::size_t burnside_span(const SpecializedRep<RationalFunction>&);
extern template IrreducibilityVerdict<Rational> is_irreducible(const SpecializedRep<Rational>&);
extern template IrreducibilityVerdict<RationalFunction> is_irreducible(const SpecializedRep<RationalFunction>&);
extern template bool all_ones_check(const SpecializedRep<Rational>&);
extern template bool all_ones_check(const SpecializedRep<RationalFunction>&);
extern template Subspace<Rational> invariant_closure(const SpecializedRep<Rational>&, const std::vector<Rational>&);
extern template Subspace<RationalFunction> invariant_closure(const SpecializedRep<RationalFunction>&,
                                                             const std::vector<RationalFunction>&);
extern template bool is_invariant(const SpecializedRep<Rational>&, const Subspace<Rational>&);
extern template bool is_invariant(const SpecializedRep<RationalFunction>&, const Subspace<RationalFunction>&);

}  // namespace braidrep
