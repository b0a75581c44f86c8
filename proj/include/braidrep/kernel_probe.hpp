#pragma once

#include <map>
#include <string>
#include <utility>

#include "braidrep/errors.hpp"
#include "braidrep/presentation.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

using IndexPair = std::pair<int, int>;

/// Freely reduced [A_ij, A_kl]. Throws BadIndices for invalid pairs.
Word pure_commutator_word(int n, IndexPair p1, IndexPair p2);

/// Shared-strand pairs (1, j), (1, k) with j < k: the default probe list.
std::vector<std::pair<IndexPair, IndexPair>> default_candidates(int n);

template <class T>
Matrix<T> pure_commutator_image(const Representation<T>& rep, IndexPair p1, IndexPair p2) {
  if (rep.n() < 3) throw BadIndices("pure braid commutators need n >= 3");
  if (!rep.group()) throw ModeMismatch("pure braid commutators need group mode");
  return evaluate_word(rep, pure_commutator_word(rep.n(), p1, p2));
}

/// A nonempty reduced word with identity image. Nontriviality of the word is
/// taken from the literature on pure braid commutators, never computed.
struct KernelCertificate {
  Word word;
  int n = 0;
  std::string domain;
  std::map<std::string, std::string> params;
  bool image_is_identity = true;
  std::string nontriviality = "cited";
  bool nontriviality_verified = false;
};

/// Throws TrivialWord when the reduced word is empty or collapses through
/// defining commutations, NotInKernel when its image is not the identity.
template <class T>
KernelCertificate certify(const Representation<T>& rep, const Word& word,
                          std::map<std::string, std::string> params = {}) {
  const Word w = free_reduce(word);
  if (w.empty()) throw TrivialWord("word is empty after free reduction");
  if (trivial_by_commutation(w)) throw TrivialWord(w.str() + " is trivial by far commutation");
  const Matrix<T> m = evaluate_word(rep, w);
  if (!m.is_identity()) throw NotInKernel(w.str() + " has image " + matrix_str(m));
  KernelCertificate cert;
  cert.word = w;
  cert.n = rep.n();
  cert.domain = Representation<T>::domain();
  cert.params = std::move(params);
  return cert;
}

}  // namespace braidrep
