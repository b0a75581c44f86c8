#include "braidrep/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "braidrep/errors.hpp"

namespace braidrep {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::sigma: return 's';
    case Kind::tau: return 't';
    case Kind::nu: return 'v';
  }
  return '?';
}

std::string Generator::str() const { return kind_letter(kind) + std::to_string(index); }

std::string Letter::str() const {
  std::string s = kind_letter(kind) + std::to_string(index);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

Letter sigma(int i, int e) { return {Kind::sigma, i, e}; }
Letter tau(int i, int e) { return {Kind::tau, i, e}; }
Letter nu(int i, int e) { return {Kind::nu, i, e}; }

bool Word::has_kind(Kind k) const {
  for (const auto& l : letters)
    if (l.kind == k) return true;
  return false;
}

Word& Word::operator*=(const Word& o) {
  letters.insert(letters.end(), o.letters.begin(), o.letters.end());
  return *this;
}

std::string Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += letters[i].str();
  }
  return s;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1" && w.empty()) continue;
    Letter l;
    switch (tok[0]) {
      case 's': l.kind = Kind::sigma; break;
      case 't': l.kind = Kind::tau; break;
      case 'v': l.kind = Kind::nu; break;
      default: throw ParseError("unknown generator letter in '" + tok + "'");
    }
    std::size_t i = 1;
    const auto digits_from = [&](std::size_t start) {
      std::size_t j = start;
      while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
      return j;
    };
    std::size_t j = digits_from(i);
    if (j == i) throw ParseError("missing generator index in '" + tok + "'");
    l.index = std::stoi(tok.substr(i, j - i));
    if (j < tok.size()) {
      if (tok.compare(j, std::string::npos, "^-1") == 0) {
        l.exponent = -1;
      } else if (tok.compare(j, std::string::npos, "^1") != 0) {
        throw ParseError("bad exponent in '" + tok + "'");
      }
    }
    if (l.index < 1) throw ParseError("generator index must be positive in '" + tok + "'");
    w.letters.push_back(l);
  }
  return w;
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::braid: return "braid";
    case Mode::singular: return "singular";
    case Mode::virtual_singular: return "virtual_singular";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  if (s == "braid") return Mode::braid;
  if (s == "singular") return Mode::singular;
  if (s == "virtual_singular" || s == "virtual-singular") return Mode::virtual_singular;
  throw ParseError("unknown mode '" + std::string(s) + "'");
}

std::string family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::braid: return "braid";
    case RelationFamily::far_commute: return "far_commute";
    case RelationFamily::tau_far_tau: return "tau_far_tau";
    case RelationFamily::tau_far_sigma: return "tau_far_sigma";
    case RelationFamily::tau_sigma: return "tau_sigma";
    case RelationFamily::sigma_sigma_tau: return "sigma_sigma_tau";
    case RelationFamily::sigma_sigma_tau_back: return "sigma_sigma_tau_back";
    case RelationFamily::nu_square: return "nu_square";
    case RelationFamily::nu_braid: return "nu_braid";
    case RelationFamily::nu_sigma_mixed: return "nu_sigma_mixed";
    case RelationFamily::nu_tau_mixed: return "nu_tau_mixed";
    case RelationFamily::nu_far_sigma: return "nu_far_sigma";
    case RelationFamily::nu_far_tau: return "nu_far_tau";
  }
  return "?";
}

std::string Relation::str() const {
  return (lhs.empty() ? std::string("1") : lhs.str()) + " = " + (rhs.empty() ? std::string("1") : rhs.str());
}

bool Presentation::uses(Kind k) const {
  switch (k) {
    case Kind::sigma: return true;
    case Kind::tau: return mode != Mode::braid;
    case Kind::nu: return mode == Mode::virtual_singular;
  }
  return false;
}

namespace {

using F = RelationFamily;

void add(std::vector<Relation>& out, F f, Word lhs, Word rhs) { out.push_back({f, std::move(lhs), std::move(rhs)}); }

// a_i b_j = b_j a_i over ordered pairs with |i-j| >= 2; `unordered` keeps
// only i < j (for a == b).
template <class A, class B>
void far_pairs(std::vector<Relation>& out, F f, int n, A a, B b, bool unordered) {
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2 || (unordered && j < i)) continue;
      add(out, f, {a(i, 1), b(j, 1)}, {b(j, 1), a(i, 1)});
    }
}

}  // namespace

Presentation build_presentation(int n, Mode mode, bool group) {
  if (n < 2) throw BadStrandCount("need n >= 2, got " + std::to_string(n));
  Presentation p{n, mode, group, {}};
  auto& r = p.relations;
  for (int i = 1; i <= n - 2; ++i)
    add(r, F::braid, {sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)});
  far_pairs(r, F::far_commute, n, sigma, sigma, true);
  if (mode == Mode::braid) return p;

  far_pairs(r, F::tau_far_tau, n, tau, tau, true);
  far_pairs(r, F::tau_far_sigma, n, tau, sigma, false);
  for (int i = 1; i <= n - 1; ++i) add(r, F::tau_sigma, {tau(i), sigma(i)}, {sigma(i), tau(i)});
  for (int i = 1; i <= n - 2; ++i)
    add(r, F::sigma_sigma_tau, {sigma(i), sigma(i + 1), tau(i)}, {tau(i + 1), sigma(i), sigma(i + 1)});
  for (int i = 1; i <= n - 2; ++i)
    add(r, F::sigma_sigma_tau_back, {sigma(i + 1), sigma(i), tau(i + 1)}, {tau(i), sigma(i + 1), sigma(i)});
  if (mode == Mode::singular) return p;

  for (int i = 1; i <= n - 1; ++i) add(r, F::nu_square, {nu(i), nu(i)}, {});
  for (int i = 1; i <= n - 2; ++i) add(r, F::nu_braid, {nu(i), nu(i + 1), nu(i)}, {nu(i + 1), nu(i), nu(i + 1)});
  for (int i = 1; i <= n - 2; ++i)
    add(r, F::nu_sigma_mixed, {nu(i), sigma(i + 1), nu(i)}, {nu(i + 1), sigma(i), nu(i + 1)});
  for (int i = 1; i <= n - 2; ++i)
    add(r, F::nu_tau_mixed, {nu(i), tau(i + 1), nu(i)}, {nu(i + 1), tau(i), nu(i + 1)});
  far_pairs(r, F::nu_far_sigma, n, nu, sigma, false);
  far_pairs(r, F::nu_far_tau, n, nu, tau, false);
  return p;
}

Word pure_braid_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw BadIndices("A_ij needs 1 <= i < j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j) +
                     " n=" + std::to_string(n));
  Word w;
  for (int k = j - 1; k > i; --k) w.letters.push_back(sigma(k));
  w.letters.push_back(sigma(i));
  w.letters.push_back(sigma(i));
  for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back(sigma(k, -1));
  return w;
}

Word inverse(const Word& w, bool group) {
  Word r;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == Kind::tau && !group && it->exponent == 1)
      throw InverseUnavailable("tau letters are not invertible in the monoid");
    r.letters.push_back(it->inverse());
  }
  return r;
}

Word commutator(const Word& u, const Word& v, bool group) {
  return u * v * inverse(u, group) * inverse(v, group);
}

Word free_reduce(const Word& w) {
  Word r;
  for (const auto& l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == l.inverse()) {
      r.letters.pop_back();
    } else {
      r.letters.push_back(l);
    }
  }
  return r;
}

namespace {

bool commute(const Letter& a, const Letter& b) {
  if (a.kind == b.kind && a.index == b.index) return true;
  const bool far = std::abs(a.index - b.index) >= 2;
  auto pair_is = [&](Kind x, Kind y) { return (a.kind == x && b.kind == y) || (a.kind == y && b.kind == x); };
  if (far && (pair_is(Kind::sigma, Kind::sigma) || pair_is(Kind::tau, Kind::tau) || pair_is(Kind::tau, Kind::sigma) ||
              pair_is(Kind::nu, Kind::sigma) || pair_is(Kind::nu, Kind::tau)))
    return true;
  return a.index == b.index && pair_is(Kind::tau, Kind::sigma);
}

}  // namespace

bool trivial_by_commutation(const Word& w) {
  std::vector<Letter> ls = free_reduce(w).letters;
  bool changed = true;
  while (changed && !ls.empty()) {
    changed = false;
    for (std::size_t i = 0; i < ls.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (ls[j] == ls[i].inverse()) {
          ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(j));
          ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commute(ls[i], ls[j])) break;
      }
    }
  }
  return ls.empty();
}

}  // namespace braidrep
