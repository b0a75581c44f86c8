#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/presentation.hpp"

namespace braidrep {

/// Assignment generator -> dim x dim matrix over one entry domain. Inverses
/// are computed once at assignment time and stored; a generator without a
/// stored inverse cannot appear with exponent -1.
template <class T>
class Representation {
 public:
  Representation(int n, std::size_t dim, bool group = true) : n_(n), dim_(dim), group_(group) {}

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  bool group() const noexcept { return group_; }
  static constexpr const char* domain() { return entry_traits<T>::domain; }

  /// Stores the image and tries to invert it. Tau images are only inverted
  /// in group mode, and there the inverse must exist (NonInvertibleTau).
  /// Sigma and nu images must always be invertible.
  void assign(Generator g, Matrix<T> image) {
    if (image.rows() != dim_ || image.cols() != dim_)
      throw ShapeMismatch(g.str() + " image is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
    std::optional<Matrix<T>> inv;
    const bool want = g.kind != Kind::tau || group_;
    if (want) {
      try {
        inv = mat_inverse(image);
      } catch (const NotInvertible& e) {
        fail_inverse(g, e.what());
      } catch (const NotUnitDeterminant& e) {
        fail_inverse(g, e.what());
      }
    }
    images_.insert_or_assign(g, std::move(image));
    if (inv) {
      inverses_.insert_or_assign(g, std::move(*inv));
    } else {
      inverses_.erase(g);
    }
  }

  bool has(Generator g) const { return images_.count(g) != 0; }
  bool has_inverse(Generator g) const { return inverses_.count(g) != 0; }
  bool has_kind(Kind k) const {
    for (const auto& [g, m] : images_)
      if (g.kind == k) return true;
    return false;
  }
  const std::map<Generator, Matrix<T>>& images() const noexcept { return images_; }

  const Matrix<T>& image(Generator g) const {
    auto it = images_.find(g);
    if (it == images_.end()) throw UnassignedGenerator(g.str() + " has no image");
    return it->second;
  }

  const Matrix<T>& inverse_image(Generator g) const {
    image(g);
    auto it = inverses_.find(g);
    if (it == inverses_.end()) throw NonInvertibleLetter(g.str() + "^-1 is not available");
    return it->second;
  }

  const Matrix<T>& letter_image(const Letter& l) const {
    return l.exponent > 0 ? image(l.generator()) : inverse_image(l.generator());
  }

  /// Entry-wise change of domain (specialization, embedding into Q(t)).
  template <class F>
  auto map_entries(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Representation<U> out(n_, dim_, group_);
    for (const auto& [g, m] : images_) out.assign(g, m.map(f));
    return out;
  }

 private:
  void fail_inverse(Generator g, const std::string& why) const {
    if (g.kind == Kind::tau) throw NonInvertibleTau(g.str() + ": " + why);
    throw NotInvertible(g.str() + ": " + why);
  }

  int n_;
  std::size_t dim_;
  bool group_;
  std::map<Generator, Matrix<T>> images_;
  std::map<Generator, Matrix<T>> inverses_;
};

/// a and c of the tau block [[a, c t], [c, a]].
template <class T>
struct ExtensionParams {
  T a;
  T c;
};

/// One of the five involution shapes for the image of nu_1 on VSB_2.
/// Family 1 uses p, q; families 2 and 3 use r; 4 and 5 have no parameters.
template <class T>
struct InvolutionFamily {
  int id = 5;
  T p = T(0);
  T q = T(0);
  T r = T(0);
};

namespace detail {

inline void check_strands(int n) {
  if (n < 2) throw BadStrandCount("need n >= 2, got " + std::to_string(n));
}

}  // namespace detail

template <class T>
Matrix<T> standard_block(const T& t) {
  return {{T(0), t}, {T(1), T(0)}};
}

template <class T>
Matrix<T> tau_block(const T& a, const T& c, const T& t) {
  return {{a, T(c * t)}, {c, a}};
}

/// sigma_i -> I_{i-1} (+) [[0, t], [1, 0]] (+) I_{n-i-1}.
template <class T>
Representation<T> standard_rep(int n, const T& t, bool group = true) {
  detail::check_strands(n);
  Representation<T> rep(n, static_cast<std::size_t>(n), group);
  for (int i = 1; i <= n - 1; ++i)
    rep.assign({Kind::sigma, i}, block_embed(standard_block(t), static_cast<std::size_t>(i), static_cast<std::size_t>(n)));
  return rep;
}

inline Representation<LaurentPoly> standard_rep(int n) { return standard_rep<LaurentPoly>(n, LaurentPoly::t()); }

/// sigma_i -> I_{i-1} (+) [[1-t, t], [1, 0]] (+) I_{n-i-1}.
template <class T>
Representation<T> burau_rep(int n, const T& t) {
  detail::check_strands(n);
  Representation<T> rep(n, static_cast<std::size_t>(n));
  const Matrix<T> block{{T(T(1) - t), t}, {T(1), T(0)}};
  for (int i = 1; i <= n - 1; ++i)
    rep.assign({Kind::sigma, i}, block_embed(block, static_cast<std::size_t>(i), static_cast<std::size_t>(n)));
  return rep;
}

inline Representation<LaurentPoly> burau_rep(int n) { return burau_rep<LaurentPoly>(n, LaurentPoly::t()); }

/// sigma_i -> 3x3 block [[1, 1, 0], [0, -t, 0], [0, t, 1]] at position i in
/// dimension n+1.
template <class T>
Representation<T> f_rep(int n, const T& t) {
  detail::check_strands(n);
  const auto dim = static_cast<std::size_t>(n + 1);
  Representation<T> rep(n, dim);
  const Matrix<T> block{{T(1), T(1), T(0)}, {T(0), T(-t), T(0)}, {T(0), t, T(1)}};
  for (int i = 1; i <= n - 1; ++i) rep.assign({Kind::sigma, i}, block_embed(block, static_cast<std::size_t>(i), dim));
  return rep;
}

inline Representation<LaurentPoly> f_rep(int n) { return f_rep<LaurentPoly>(n, LaurentPoly::t()); }

/// Standard sigma images plus tau_i -> I_{i-1} (+) [[a, c t], [c, a]] (+)
/// I_{n-i-1}. In group mode the tau images must be invertible in the entry
/// domain: a^2 - t c^2 a unit of Z[t^{+-1}], or nonzero over a field.
template <class T>
Representation<T> singular_extension(int n, const ExtensionParams<T>& params, const T& t, bool group = true) {
  Representation<T> rep = standard_rep(n, t, group);
  const auto block = tau_block(params.a, params.c, t);
  for (int i = 1; i <= n - 1; ++i)
    rep.assign({Kind::tau, i}, block_embed(block, static_cast<std::size_t>(i), static_cast<std::size_t>(n)));
  return rep;
}

inline Representation<LaurentPoly> singular_extension(int n, const ExtensionParams<LaurentPoly>& params,
                                                      bool group = true) {
  return singular_extension<LaurentPoly>(n, params, LaurentPoly::t(), group);
}

/// The nu_1 image of an involution family.
///   1: [[p, q], [(1-p^2)/q, -p]]   2: [[-1, 0], [r, 1]]   3: [[1, 0], [r, -1]]
///   4: -I                          5: I
/// Over Z[t^{+-1}] family 1 needs q | 1 - p^2 (DivisibilityViolation); over a
/// field only q != 0 (ZeroQ).
template <class T>
Matrix<T> involution_matrix(const InvolutionFamily<T>& fam) {
  switch (fam.id) {
    case 1: {
      if (entry_is_zero(fam.q)) throw ZeroQ("family 1 needs q != 0");
      const T num = T(T(1) - fam.p * fam.p);
      auto r = entry_traits<T>::try_div(num, fam.q);
      if (!r) throw DivisibilityViolation("q = " + entry_str(fam.q) + " does not divide 1 - p^2 = " + entry_str(num));
      return {{fam.p, fam.q}, {*r, T(-fam.p)}};
    }
    case 2: return {{T(-1), T(0)}, {fam.r, T(1)}};
    case 3: return {{T(1), T(0)}, {fam.r, T(-1)}};
    case 4: return {{T(-1), T(0)}, {T(0), T(-1)}};
    case 5: return Matrix<T>::identity(2);
    default: throw BadIndices("involution family id must be 1..5, got " + std::to_string(fam.id));
  }
}

/// Representation of VSB_2: sigma_1 and tau_1 as in singular_extension(2),
/// nu_1 from the chosen involution family.
template <class T>
Representation<T> vsb2_extension(const InvolutionFamily<T>& fam, const ExtensionParams<T>& params, const T& t,
                                 bool group = true) {
  Representation<T> rep = singular_extension(2, params, t, group);
  rep.assign({Kind::nu, 1}, involution_matrix(fam));
  return rep;
}

inline Representation<LaurentPoly> vsb2_extension(const InvolutionFamily<LaurentPoly>& fam,
                                                  const ExtensionParams<LaurentPoly>& params, bool group = true) {
  return vsb2_extension<LaurentPoly>(fam, params, LaurentPoly::t(), group);
}

/// Ordered product of letter images; the empty word gives I_dim.
template <class T>
Matrix<T> evaluate_word(const Representation<T>& rep, const Word& w) {
  Matrix<T> acc = Matrix<T>::identity(rep.dim());
  for (const auto& l : w.letters) acc = acc * rep.letter_image(l);
  return acc;
}

template <class T>
struct Violation {
  std::size_t relation_index;
  Relation relation;
  Matrix<T> difference;  // image(lhs) - image(rhs), nonzero
};

/// Checks every defining relation; empty result iff all hold exactly.
/// Throws ModeMismatch when the strand counts differ or the presentation
/// uses a generator kind the representation does not assign.
template <class T>
std::vector<Violation<T>> verify_relations(const Representation<T>& rep, const Presentation& pres) {
  if (rep.n() != pres.n)
    throw ModeMismatch("representation has n=" + std::to_string(rep.n()) + ", presentation n=" + std::to_string(pres.n));
  for (Kind k : {Kind::sigma, Kind::tau, Kind::nu})
    if (pres.uses(k) && !rep.has_kind(k))
      throw ModeMismatch(std::string("presentation mode ") + mode_name(pres.mode) + " needs " + kind_letter(k) +
                         " images");
  std::vector<Violation<T>> out;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const auto& rel = pres.relations[i];
    Matrix<T> diff = evaluate_word(rep, rel.lhs) - evaluate_word(rep, rel.rhs);
    if (!diff.is_zero()) out.push_back({i, rel, std::move(diff)});
  }
  return out;
}

}  // namespace braidrep
