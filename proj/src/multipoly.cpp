#include "braidrep/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

unsigned degree_of(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) r[v] += e;
  return r;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, RationalFunction(c));
}

MultiPoly::MultiPoly(const RationalFunction& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(const LaurentPoly& c) : MultiPoly(RationalFunction(c)) {}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly f;
  f.terms_.emplace(Monomial{{name, 1U}}, RationalFunction(1));
  return f;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

RationalFunction MultiPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? RationalFunction(0) : it->second;
}

RationalFunction MultiPoly::linear_coefficient(const std::string& var) const {
  auto it = terms_.find(Monomial{{var, 1U}});
  return it == terms_.end() ? RationalFunction(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

std::set<std::string> MultiPoly::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vs.insert(v);
  return vs;
}

void MultiPoly::add_term(const Monomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& g) { return *this = *this * g; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly r;
  for (const auto& [m1, c1] : f.terms_)
    for (const auto& [m2, c2] : g.terms_) r.add_term(multiply(m1, m2), c1 * c2);
  return r;
}

bool operator<(const MultiPoly& f, const MultiPoly& g) {
  return std::lexicographical_compare(f.terms_.begin(), f.terms_.end(), g.terms_.begin(), g.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    MultiPoly term(c);
    Monomial kept;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept[v] = e;
        continue;
      }
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    if (!kept.empty()) {
      MultiPoly mono;
      mono.terms_.emplace(kept, RationalFunction(1));
      term *= mono;
    }
    out += term;
  }
  return out;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& values, const Rational& t0) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c.eval(t0);
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw std::out_of_range("no value for unknown " + v);
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    acc += term;
  }
  acc.canonicalize();
  return acc;
}

MultiPoly MultiPoly::eval_t(const Rational& t0) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const Rational v = c.eval(t0);
    out.add_term(m, RationalFunction(LaurentPoly(v.get_num()), LaurentPoly(v.get_den())));
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, RationalFunction>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return degree_of(x.first) > degree_of(y.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const std::string mono = monomial_str(m);
    bool neg = false;
    std::string body;
    const auto& terms = c.num().terms();
    if (mono.empty()) {
      body = c.str();
      if (c.is_laurent() && terms.size() == 1 && terms.begin()->second < 0) {
        neg = true;
        body = (-c).str();
      }
    } else if (c.is_laurent() && terms.size() == 1) {
      const auto& [e, k] = *terms.begin();
      neg = k < 0;
      const Integer mag = abs(k);
      body = (mag != 1 ? mag.get_str() + "*" : std::string()) + mono;
      if (e != 0) body += "*t^" + std::to_string(e);
    } else {
      body = "(" + c.str() + ")*" + mono;
    }
    if (first) {
      out += neg ? "-" + body : body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) { return {a.num * b.num, a.den * b.den}; }

Rational RationalExpr::eval(const std::map<std::string, Rational>& values, const Rational& t0) const {
  const Rational d = den.eval(values, t0);
  if (sgn(d) == 0) throw Pole("denominator " + den.str() + " vanishes");
  Rational r = num.eval(values, t0) / d;
  r.canonicalize();
  return r;
}

std::string RationalExpr::str() const {
  if (is_polynomial()) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

RationalExpr substitute(const MultiPoly& f, const std::map<std::string, RationalExpr>& values) {
  RationalExpr acc{MultiPoly(0)};
  for (const auto& [m, c] : f.terms()) {
    RationalExpr term{MultiPoly(c)};
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      const RationalExpr x = it == values.end() ? RationalExpr{MultiPoly::variable(v)} : it->second;
      for (unsigned k = 0; k < e; ++k) term = term * x;
    }
    acc = acc + term;
  }
  return acc;
}

std::optional<LinearExpr> LinearExpr::from(const MultiPoly& f) {
  if (f.total_degree() > 1) return std::nullopt;
  LinearExpr e;
  for (const auto& [m, c] : f.terms()) {
    if (m.empty()) {
      e.constant = c;
    } else {
      e.coefficients.emplace(m.begin()->first, c);
    }
  }
  return e;
}

MultiPoly LinearExpr::to_poly() const {
  MultiPoly f(constant);
  for (const auto& [v, c] : coefficients) f += MultiPoly(c) * MultiPoly::variable(v);
  return f;
}

std::optional<MultiPoly> entry_traits<MultiPoly>::try_div(const MultiPoly& a, const MultiPoly& b) {
  if (!b.is_constant() || b.is_zero()) return std::nullopt;
  return a * MultiPoly(b.constant().inverse());
}

}  // namespace braidrep
