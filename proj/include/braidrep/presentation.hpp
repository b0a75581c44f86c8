#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

/// sigma: classical crossing, tau: singular crossing, nu: virtual crossing.
enum class Kind : unsigned char { sigma, tau, nu };

char kind_letter(Kind k);  // 's', 't', 'v'

struct Generator {
  Kind kind = Kind::sigma;
  int index = 1;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  std::string str() const;  // "s1", "t2", "v1"
};

struct Letter {
  Kind kind = Kind::sigma;
  int index = 1;
  int exponent = 1;  // +1 or -1

  Generator generator() const { return {kind, index}; }
  Letter inverse() const { return {kind, index, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  std::string str() const;  // "s1", "s2^-1"
};

/// Finite product of letters; the empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> l) : letters(l) {}
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  bool has_kind(Kind k) const;

  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  friend bool operator==(const Word&, const Word&) = default;

  /// Space separated letters, "s1 s2^-1 t1 v1"; the empty word is "".
  std::string str() const;
  /// Inverse of str(); "1" and "" both denote the empty word.
  static Word parse(std::string_view text);
};

Letter sigma(int i, int e = 1);
Letter tau(int i, int e = 1);
Letter nu(int i, int e = 1);

enum class Mode : unsigned char { braid, singular, virtual_singular };

std::string mode_name(Mode m);
Mode parse_mode(std::string_view s);

/// The defining relation families, in presentation order. Relations are
/// sorted by family first and then by index tuple.
enum class RelationFamily : unsigned char {
  braid,                 // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
  far_commute,           // s_i s_j = s_j s_i,               |i-j| >= 2
  tau_far_tau,           // t_i t_j = t_j t_i,               |i-j| >= 2
  tau_far_sigma,         // t_i s_j = s_j t_i,               |i-j| >= 2
  tau_sigma,             // t_i s_i = s_i t_i
  sigma_sigma_tau,       // s_i s_{i+1} t_i = t_{i+1} s_i s_{i+1}
  sigma_sigma_tau_back,  // s_{i+1} s_i t_{i+1} = t_i s_{i+1} s_i
  nu_square,             // v_i v_i = 1
  nu_braid,              // v_i v_{i+1} v_i = v_{i+1} v_i v_{i+1}
  nu_sigma_mixed,        // v_i s_{i+1} v_i = v_{i+1} s_i v_{i+1}
  nu_tau_mixed,          // v_i t_{i+1} v_i = v_{i+1} t_i v_{i+1}
  nu_far_sigma,          // v_i s_j = s_j v_i,               |i-j| >= 2
  nu_far_tau,            // v_i t_j = t_j v_i,               |i-j| >= 2
};

std::string family_name(RelationFamily f);

struct Relation {
  RelationFamily family;
  Word lhs;
  Word rhs;

  std::string str() const;  // "s1 t1 = t1 s1"
};

/// B_n, SM_n/SB_n or VSM_n/VSB_n. The monoid and group share generators and
/// relations; `group` only decides whether tau letters may be inverted.
struct Presentation {
  int n = 2;
  Mode mode = Mode::braid;
  bool group = true;
  std::vector<Relation> relations;

  bool uses(Kind k) const;
  bool allows_inverse(Kind k) const { return k != Kind::tau || group; }
};

/// Throws BadStrandCount for n < 2.
Presentation build_presentation(int n, Mode mode, bool group = true);

/// A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1. Throws
/// BadIndices unless 1 <= i < j <= n.
Word pure_braid_generator(int i, int j, int n);

/// Letter-reversed, exponent-negated word. Throws InverseUnavailable on a
/// tau letter when `group` is false.
Word inverse(const Word& w, bool group = true);

/// u v u^-1 v^-1 (not reduced).
Word commutator(const Word& u, const Word& v, bool group = true);

/// Cancels adjacent g g^-1 pairs until none remain.
Word free_reduce(const Word& w);

/// True when w reduces to the empty word by free cancellation across
/// letters that commute by a defining relation (s_i s_j, t_i t_j, t_i s_j,
/// v_i s_j, v_i t_j for |i-j| >= 2, and t_i s_i). Such a w is trivial in the
/// right-angled Artin group of those commutations, hence trivial in every
/// group presented here. A false result proves nothing.
bool trivial_by_commutation(const Word& w);

}  // namespace braidrep
