#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/multipoly.hpp"
#include "braidrep/presentation.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

/// A generator whose image is a matrix of fresh unknowns, named row-major.
struct UnknownGenerator {
  Generator gen;
  std::vector<std::string> names;  // dim*dim, row-major
};

/// Where an equation came from: entry (row, col) of lhs - rhs of a relation.
struct EquationSource {
  std::size_t relation_index = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Scalar equations (each asserted = 0) produced by imposing a presentation
/// on a partially unknown representation.
struct ConstraintSystem {
  std::vector<std::string> unknowns;           // reading order
  std::vector<std::string> elimination_order;  // earliest entries are kept free when possible
  std::vector<MultiPoly> all_equations;        // assembly order, deduplicated
  std::vector<EquationSource> sources;         // parallel to all_equations
  std::vector<LinearExpr> equations;           // degree <= 1 part
  std::vector<MultiPoly> nonlinear_residue;    // degree >= 2 part
  std::size_t discarded_zero = 0;              // entries identically 0
  std::size_t discarded_duplicate = 0;         // entries equal to +-(an earlier equation)
  std::map<Generator, Matrix<MultiPoly>> unknown_images;

  /// Appends an entry of lhs - rhs under the discard rules above.
  void add_equation(const MultiPoly& e, EquationSource src);
};

/// Row-major names for a dim x dim unknown matrix: letters a, b, c, ... with
/// `suffix` appended ("a1" ... "i1"); beyond 26 entries names are
/// "x<suffix>_<row>_<col>".
std::vector<std::string> reading_order_names(std::size_t dim, const std::string& suffix);

std::map<Generator, Matrix<MultiPoly>> lift(const Representation<LaurentPoly>& rep);

/// Builds the system lhs - rhs = 0 for every relation of `pres`. Generators
/// in `known` have fixed images; generators in `unknowns` get matrices of
/// unknowns. Throws ModeMismatch for a dimension clash and
/// UnassignedGenerator if a relation uses a generator in neither set.
ConstraintSystem assemble(const Presentation& pres, const std::map<Generator, Matrix<MultiPoly>>& known,
                          const std::vector<UnknownGenerator>& unknowns, std::size_t dim);

/// SB_n with standard sigma images and every tau_i unknown. For n = 2 the
/// unknowns are a, b, c, d; otherwise a1..i1, a2..i2 style names.
ConstraintSystem assemble_singular_system(int n);

/// VSB_2 with sigma_1 standard, tau_1 = [[a, c t], [c, a]] (a, c symbols)
/// and nu_1 = [[p, q], [r, s]] unknown.
ConstraintSystem assemble_vsb2_system();

/// VSB_n exploratory system: sigma standard, tau in the solved block form
/// with symbols a, c, every nu_i unknown.
ConstraintSystem assemble_vsb_system(int n);

/// Parametrized solution: every unknown is either free or bound to an
/// expression in the free parameters.
struct SolutionFamily {
  std::string label;
  std::vector<std::string> free;                  // reading order
  std::map<std::string, RationalExpr> bindings;   // unknown -> expression in `free`
  std::vector<MultiPoly> nonzero;                 // side conditions, each != 0
  std::size_t discarded_zero = 0;
  std::size_t discarded_duplicate = 0;

  /// Binding of `unknown`, or the unknown itself when it is free.
  RationalExpr value(const std::string& unknown) const;
  /// Polynomial bindings only (throws std::logic_error otherwise).
  std::map<std::string, MultiPoly> polynomial_bindings() const;
};

/// Gauss-Jordan over Q(t). Pivots are chosen from the end of
/// `elimination_order`, so the free parameters are the earliest unknowns in
/// that order that can be free. Throws NonlinearSystem if the residue is
/// nonempty and Inconsistent (with the offending reduced equation).
SolutionFamily solve_linear(const ConstraintSystem& sys);
/// Same, ignoring the nonlinear residue.
SolutionFamily solve_linear_part(const ConstraintSystem& sys);

/// Unknown images with the family's bindings substituted.
std::map<Generator, Matrix<MultiPoly>> substitute_images(const ConstraintSystem& sys, const SolutionFamily& fam);

/// Bindings whose expression is not a Laurent polynomial in the free
/// parameters (a non-unit denominator somewhere). Empty means the family
/// lives over Z[t^{+-1}].
std::vector<std::string> laurent_representability(const SolutionFamily& fam);

/// Result of solving for all SB_n extensions of the standard representation
/// and comparing with the block form tau_i = I (+) [[a, c t], [c, a]] (+) I.
struct SingularFormReport {
  int n = 2;
  std::size_t unknown_count = 0;
  std::size_t equation_count = 0;   // after discards
  std::size_t linear_count = 0;
  std::size_t nonlinear_count = 0;
  std::size_t discarded_zero = 0;
  std::size_t discarded_duplicate = 0;
  SolutionFamily raw;                        // linear part, reported verbatim
  MultiPoly a_expr, c_expr;                  // read off tau_1 of the raw family
  std::vector<std::string> residual_free;    // raw free parameters beyond a, c
  bool raw_matches_form = false;
  SolutionFamily imposed;                    // outer entries of tau_i forced to identity
  bool imposed_matches_form = false;
  std::vector<MultiPoly> residue_after_imposed;  // nonzero leftovers of the nonlinear residue
  std::vector<std::string> unrepresentable;      // from laurent_representability(raw)
};

SingularFormReport solve_singular_extension(int n);

/// The five families of 2x2 involutions solving nu_1^2 = 1, found by the case
/// split q != 0 / q = 0 (r free, p = -1 or 1) / q = r = 0 (p = s = -1 or 1).
/// Each family is checked against the assembled equations before returning.
std::vector<SolutionFamily> solve_involution_2x2(const ConstraintSystem& vsb2);
std::vector<SolutionFamily> solve_involution_2x2();

/// [[p, q], [r, s]] of a family with its bindings substituted.
std::vector<RationalExpr> involution_entries(const SolutionFamily& fam);
/// nu^2 = I as an identity of rational expressions in the free parameters.
bool involution_squares_to_identity(const SolutionFamily& fam);

struct InvolutionClass {
  int family = 0;
  Rational p = 0, q = 0, r = 0;
};

/// Literal family membership of a rational 2x2 involution. Throws
/// NotInvolution when m*m != I.
InvolutionClass involution_classify(const Matrix<Rational>& m);

}  // namespace braidrep
