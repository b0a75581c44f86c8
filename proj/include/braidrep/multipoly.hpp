#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidrep/entry_traits.hpp"
#include "braidrep/laurent.hpp"

namespace braidrep {

/// Product of named unknowns, variable -> power (powers >= 1).
using Monomial = std::map<std::string, unsigned>;

/// Polynomial in named unknowns with coefficients in Q(t). This is the entry
/// type of a partially-unknown representation: products of known Laurent
/// matrices and unknown matrices stay here, and the resulting scalar
/// equations are classified by total degree.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, RationalFunction>;

  MultiPoly() = default;
  MultiPoly(long c);                      // NOLINT
  MultiPoly(const RationalFunction& c);  // NOLINT
  MultiPoly(const LaurentPoly& c);       // NOLINT

  static MultiPoly variable(const std::string& name);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  RationalFunction constant() const;
  /// Coefficient of the degree-one monomial `var`.
  RationalFunction linear_coefficient(const std::string& var) const;
  unsigned total_degree() const;
  std::set<std::string> variables() const;

  MultiPoly& operator+=(const MultiPoly& g);
  MultiPoly& operator-=(const MultiPoly& g);
  MultiPoly& operator*=(const MultiPoly& g);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
  friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  friend bool operator==(const MultiPoly& f, const MultiPoly& g) { return f.terms_ == g.terms_; }
  friend bool operator<(const MultiPoly& f, const MultiPoly& g);

  /// Replaces each listed variable by a polynomial; others are kept.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
  /// Full numeric evaluation. Throws std::out_of_range if a variable is
  /// missing, Pole if a coefficient has a pole at t0.
  Rational eval(const std::map<std::string, Rational>& values, const Rational& t0) const;
  /// Specializes t only.
  MultiPoly eval_t(const Rational& t0) const;

  /// Terms by descending degree, e.g. "c*t^1", "-a + d", "p^2 + q*r - 1".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const RationalFunction& c);

  Terms terms_;
};

/// num / den with den != 0; no cancellation is attempted. Used for solution
/// bindings such as r = (1 - p^2)/q.
struct RationalExpr {
  MultiPoly num;
  MultiPoly den = MultiPoly(1);

  RationalExpr() = default;
  RationalExpr(MultiPoly n) : num(std::move(n)) {}  // NOLINT
  RationalExpr(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {}

  bool is_polynomial() const { return den == MultiPoly(1); }
  bool is_zero() const { return num.is_zero(); }
  bool equals(const RationalExpr& o) const { return num * o.den == o.num * den; }

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a) { return {-a.num, a.den}; }
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

  Rational eval(const std::map<std::string, Rational>& values, const Rational& t0) const;
  std::string str() const;
};

/// Substitutes rational expressions into a polynomial.
RationalExpr substitute(const MultiPoly& f, const std::map<std::string, RationalExpr>& values);

/// constant + sum coefficient_u * u, canonical (no zero coefficients).
struct LinearExpr {
  RationalFunction constant;
  std::map<std::string, RationalFunction> coefficients;

  /// nullopt when f has total degree > 1.
  static std::optional<LinearExpr> from(const MultiPoly& f);
  MultiPoly to_poly() const;
  bool is_zero() const { return constant.is_zero() && coefficients.empty(); }
};

template <>
struct entry_traits<MultiPoly> {
  static constexpr bool is_field = false;
  static constexpr const char* domain = "multipoly";
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static std::optional<MultiPoly> try_div(const MultiPoly& a, const MultiPoly& b);
  static std::string str(const MultiPoly& x) { return x.str(); }
};

}  // namespace braidrep
