#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "braidrep/entry_traits.hpp"

namespace braidrep {

using Integer = mpz_class;
// Exact value substituted for t; the rational points of C.
using Rational = mpq_class;

/// Element of Z[t, t^-1] held as a sparse exponent -> coefficient map.
/// No stored coefficient is ever zero, so the zero polynomial is the empty
/// map and equality is map equality.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Integer& c, Exponent e);
  static LaurentPoly t(Exponent e = 1) { return monomial(1, e); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// True iff this is +-t^k.
  bool is_unit() const;
  /// (-t^k)^-1 etc.; nullopt unless is_unit().
  std::optional<LaurentPoly> unit_inverse() const;

  Exponent min_exponent() const;  // precondition: nonzero
  Exponent max_exponent() const;  // precondition: nonzero
  Integer content() const;        // gcd of coefficients, 0 for zero

  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g);
  LaurentPoly operator-() const;
  LaurentPoly shifted(Exponent k) const;  // this * t^k
  LaurentPoly pow(unsigned k) const;

  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) { return f.terms_ == g.terms_; }
  // Arbitrary but total; used for sorting and deduplication.
  friend bool operator<(const LaurentPoly& f, const LaurentPoly& g);

  /// Specialize t := t0. Throws ZeroSpecialization when t0 = 0.
  Rational eval(const Rational& t0) const;

  /// Exponents descending, e.g. "2*t^3 - 1", "t^1 + t^-1", "0".
  std::string str() const;
  /// Inverse of str(); also accepts the looser CLI forms "1+t", "t^-1",
  /// "2t^3-1". Throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(Exponent e, const Integer& c);

  Terms terms_;
};

/// f / g when g divides f in Z[t^{+-1}].
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// gcd in Z[t^{+-1}], normalized to lowest exponent 0 and positive lowest
/// coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);

/// Element of Q(t) as a reduced quotient of Laurent polynomials. The
/// denominator always has lowest exponent 0 and positive lowest
/// coefficient, which makes the representative unique.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) { normalize(); }  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction& operator+=(const RationalFunction& g);
  RationalFunction& operator-=(const RationalFunction& g);
  RationalFunction& operator*=(const RationalFunction& g);
  RationalFunction& operator/=(const RationalFunction& g);
  RationalFunction operator-() const;
  RationalFunction inverse() const;  // throws DivisionByZero

  friend RationalFunction operator+(RationalFunction f, const RationalFunction& g) { return f += g; }
  friend RationalFunction operator-(RationalFunction f, const RationalFunction& g) { return f -= g; }
  friend RationalFunction operator*(RationalFunction f, const RationalFunction& g) { return f *= g; }
  friend RationalFunction operator/(RationalFunction f, const RationalFunction& g) { return f /= g; }
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }
  friend bool operator<(const RationalFunction& f, const RationalFunction& g);

  /// Throws ZeroSpecialization for t0 = 0 and Pole when den(t0) = 0.
  Rational eval(const Rational& t0) const;

  std::string str() const;
  static RationalFunction parse(std::string_view text);

  /// Re-normalizes; exposed so idempotence can be tested.
  RationalFunction normalized() const;

 private:
  struct Raw {};
  RationalFunction(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

template <>
struct entry_traits<LaurentPoly> {
  static constexpr bool is_field = false;
  static constexpr const char* domain = "laurent";
  static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
  static std::optional<LaurentPoly> try_div(const LaurentPoly& a, const LaurentPoly& b) {
    return divide_exact(a, b);
  }
  static std::string str(const LaurentPoly& x) { return x.str(); }
  static LaurentPoly parse(std::string_view s) { return LaurentPoly::parse(s); }
};

template <>
struct entry_traits<RationalFunction> {
  static constexpr bool is_field = true;
  static constexpr const char* domain = "rational_function";
  static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
  static std::optional<RationalFunction> try_div(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  static std::string str(const RationalFunction& x) { return x.str(); }
  static RationalFunction parse(std::string_view s) { return RationalFunction::parse(s); }
};

template <>
struct entry_traits<Rational> {
  static constexpr bool is_field = true;
  static constexpr const char* domain = "rational";
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::optional<Rational> try_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) return std::nullopt;
    return Rational(a / b);
  }
  static std::string str(const Rational& x) { return rational_str(x); }
  static Rational parse(std::string_view s) { return parse_rational(s); }
};

}  // namespace braidrep
