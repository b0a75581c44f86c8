#include "braidrep/laurent.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

// Dense polynomials over Z, lowest degree first, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Requires f nonzero; returns (dense part, lowest exponent).
std::pair<Dense, LaurentPoly::Exponent> to_dense(const LaurentPoly& f) {
  const auto lo = f.min_exponent();
  Dense d(static_cast<std::size_t>(f.max_exponent() - lo + 1));
  for (const auto& [e, c] : f.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return {std::move(d), lo};
}

LaurentPoly from_dense(const Dense& d, LaurentPoly::Exponent shift) {
  LaurentPoly f;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) f += LaurentPoly::monomial(d[i], shift + static_cast<LaurentPoly::Exponent>(i));
  return f;
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Dense primitive_part(Dense p) {
  trim(p);
  if (p.empty()) return p;
  Integer g = dense_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Pseudo-remainder of a by b (b nonzero).
Dense pseudo_rem(Dense a, const Dense& b) {
  const auto db = b.size() - 1;
  const Integer& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const auto shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

// gcd in Z[x] via the primitive remainder sequence, content included.
Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  Integer c;
  {
    Integer ca = dense_content(a), cb = dense_content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x *= c;
  return a;
}

// Exact division in Z[x]; nullopt if b does not divide a.
std::optional<Dense> dense_div(Dense a, const Dense& b) {
  trim(a);
  if (a.empty()) return Dense{};
  if (a.size() < b.size()) return std::nullopt;
  Dense q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const auto shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer k = a.back() / lb;
    q[shift] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= k * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

Rational rat_pow(const Rational& base, LaurentPoly::Exponent e) {
  Rational r;
  const auto k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), k);
  if (e < 0) std::swap(n, d);
  r = Rational(n, d);
  r.canonicalize();
  return r;
}

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

bool read_digits(std::string_view s, std::size_t& i, std::string& out) {
  const auto start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  out.assign(s.substr(start, i - start));
  return i > start;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly f;
  if (c != 0) f.terms_.emplace(e, c);
  return f;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (!is_unit()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial(c, -e);
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const { return terms_.begin()->first; }
LaurentPoly::Exponent LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) { return *this = *this * g; }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r;
  for (const auto& [e1, c1] : f.terms_)
    for (const auto& [e2, c2] : g.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

bool operator<(const LaurentPoly& f, const LaurentPoly& g) {
  return std::lexicographical_compare(
      f.terms_.begin(), f.terms_.end(), g.terms_.begin(), g.terms_.end(),
      [](const auto& x, const auto& y) { return x.first != y.first ? x.first < y.first : x.second < y.second; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = 1;
  LaurentPoly base = *this;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& t0) const {
  if (sgn(t0) == 0) throw ZeroSpecialization("t cannot be specialized to 0");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += Rational(c) * rat_pow(t0, e);
  acc.canonicalize();
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << "t^" << e;
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view s) {
  LaurentPoly f;
  std::size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws(s, i);
    if (i == s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws(s, i);
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
    }
    first = false;
    std::string digits;
    Integer coef = 1;
    const bool has_coef = read_digits(s, i, digits);
    if (has_coef) coef = Integer(digits);
    skip_ws(s, i);
    Exponent exponent = 0;
    bool has_t = false;
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) throw ParseError("dangling '*' in '" + std::string(s) + "'");
      ++i;
      skip_ws(s, i);
      if (i == s.size() || s[i] != 't') throw ParseError("expected 't' after '*' in '" + std::string(s) + "'");
    }
    if (i < s.size() && s[i] == 't') {
      has_t = true;
      exponent = 1;
      ++i;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws(s, i);
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        if (!read_digits(s, i, digits)) throw ParseError("missing exponent in '" + std::string(s) + "'");
        exponent = esign * std::stoll(digits);
      }
    }
    if (!has_coef && !has_t) throw ParseError("expected a term at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
    f.add_term(exponent, sign * coef);
  }
  return f;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return LaurentPoly{};
  auto [fd, fe] = to_dense(f);
  auto [gd, ge] = to_dense(g);
  auto q = dense_div(std::move(fd), gd);
  if (!q) return std::nullopt;
  return from_dense(*q, fe - ge);
}

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  Dense fd, gd;
  if (!f.is_zero()) fd = to_dense(f).first;
  if (!g.is_zero()) gd = to_dense(g).first;
  Dense d = dense_gcd(std::move(fd), std::move(gd));
  trim(d);
  std::size_t lo = 0;
  while (d[lo] == 0) ++lo;
  LaurentPoly r = from_dense(d, -static_cast<LaurentPoly::Exponent>(lo));
  if (r.terms().begin()->second < 0) r = -r;
  return r;
}

// ----------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const auto shift = -den_.min_exponent();
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);
  if (!den_.is_constant() || den_.terms().begin()->second != 1) {
    const LaurentPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  if (den_.terms().begin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::normalized() const {
  RationalFunction r = *this;
  r.normalize();
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& g) {
  if (den_ == g.den_) {
    num_ += g.num_;
  } else {
    num_ = num_ * g.den_ + g.num_ * den_;
    den_ *= g.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& g) { return *this += -g; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& g) {
  num_ *= g.num_;
  den_ *= g.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& g) { return *this *= g.inverse(); }

RationalFunction RationalFunction::operator-() const { return {Raw{}, -num_, den_}; }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero rational function");
  return {den_, num_};
}

bool operator<(const RationalFunction& f, const RationalFunction& g) {
  if (f.num_ == g.num_) return f.den_ < g.den_;
  return f.num_ < g.num_;
}

Rational RationalFunction::eval(const Rational& t0) const {
  const Rational d = den_.eval(t0);
  if (sgn(d) == 0) throw Pole("denominator " + den_.str() + " vanishes at t = " + rational_str(t0));
  Rational r = num_.eval(t0) / d;
  r.canonicalize();
  return r;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction RationalFunction::parse(std::string_view s) {
  auto strip = [](std::string_view part) {
    std::size_t b = 0, e = part.size();
    while (b < e && std::isspace(static_cast<unsigned char>(part[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(part[e - 1]))) --e;
    part = part.substr(b, e - b);
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
    return part;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return RationalFunction(LaurentPoly::parse(strip(s)));
  return {LaurentPoly::parse(strip(s.substr(0, slash))), LaurentPoly::parse(strip(s.substr(slash + 1)))};
}

// ------------------------------------------------------------------ Rational

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::string digits;
  if (!read_digits(s, i, digits)) throw ParseError("bad rational '" + s + "'");
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!read_digits(s, i, digits)) throw ParseError("bad rational '" + s + "'");
    if (Integer(digits) == 0) throw ParseError("zero denominator in '" + s + "'");
  }
  if (i != s.size()) throw ParseError("bad rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace braidrep
