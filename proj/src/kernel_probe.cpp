#include "braidrep/kernel_probe.hpp"

namespace braidrep {

Word pure_commutator_word(int n, IndexPair p1, IndexPair p2) {
  const Word a = pure_braid_generator(p1.first, p1.second, n);
  const Word b = pure_braid_generator(p2.first, p2.second, n);
  return free_reduce(commutator(a, b));
}

std::vector<std::pair<IndexPair, IndexPair>> default_candidates(int n) {
  std::vector<std::pair<IndexPair, IndexPair>> out;
  for (int j = 2; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) out.push_back({{1, j}, {1, k}});
  return out;
}

}  // namespace braidrep
