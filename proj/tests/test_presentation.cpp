#include "support.hpp"

#include <algorithm>

#include "braidrep/errors.hpp"
#include "braidrep/presentation.hpp"

using namespace braidrep;

namespace {

std::size_t count_family(const Presentation& p, RelationFamily f) {
  return static_cast<std::size_t>(
      std::count_if(p.relations.begin(), p.relations.end(), [&](const Relation& r) { return r.family == f; }));
}

Word random_word(Sampler& rng, int n, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    const int i = static_cast<int>(rng.uniform(1, n - 1));
    const int e = rng.uniform(0, 1) ? 1 : -1;
    w.letters.push_back(sigma(i, e));
  }
  return w;
}

bool same_relation(const Relation& r, const std::string& lhs, const std::string& rhs) {
  const Word l = Word::parse(lhs), x = Word::parse(rhs);
  return (r.lhs == l && r.rhs == x) || (r.lhs == x && r.rhs == l);
}

}  // namespace

TEST_CASE("presentation: word text format round-trips") {
  const Word w = Word::parse("s1 s2^-1 t1 v1");
  CHECK(w.size() == 4);
  CHECK(w.letters[1] == sigma(2, -1));
  CHECK(w.letters[2] == tau(1));
  CHECK(w.letters[3] == nu(1));
  CHECK(w.str() == "s1 s2^-1 t1 v1");
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("x1"), ParseError);
  Sampler rng(31);
  for (int k = 0; k < 100; ++k) {
    const Word r = random_word(rng, 5, static_cast<std::size_t>(rng.uniform(0, 9)));
    CHECK(Word::parse(r.str()) == r);
  }
}

TEST_CASE("presentation: relation sets") {
  CHECK_THROWS_AS(build_presentation(1, Mode::braid), BadStrandCount);

  const auto b3 = build_presentation(3, Mode::braid);
  REQUIRE(b3.relations.size() == 1);
  CHECK(same_relation(b3.relations[0], "s1 s2 s1", "s2 s1 s2"));

  const auto s2 = build_presentation(2, Mode::singular);
  REQUIRE(s2.relations.size() == 1);
  CHECK(same_relation(s2.relations[0], "t1 s1", "s1 t1"));

  const auto s3 = build_presentation(3, Mode::singular);
  std::vector<Relation> with_tau;
  for (const auto& r : s3.relations)
    if (r.lhs.has_kind(Kind::tau) || r.rhs.has_kind(Kind::tau)) with_tau.push_back(r);
  REQUIRE(with_tau.size() == 4);
  CHECK(same_relation(with_tau[0], "s1 t1", "t1 s1"));
  CHECK(same_relation(with_tau[1], "s2 t2", "t2 s2"));
  CHECK(same_relation(with_tau[2], "s1 s2 t1", "t2 s1 s2"));
  CHECK(same_relation(with_tau[3], "s2 s1 t2", "t1 s2 s1"));

  const auto v2 = build_presentation(2, Mode::virtual_singular);
  std::vector<Relation> with_nu;
  for (const auto& r : v2.relations)
    if (r.lhs.has_kind(Kind::nu) || r.rhs.has_kind(Kind::nu)) with_nu.push_back(r);
  REQUIRE(with_nu.size() == 1);
  CHECK(same_relation(with_nu[0], "v1 v1", ""));
}

TEST_CASE("presentation: relation counts in closed form") {
  for (int n = 2; n <= 8; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    const std::size_t far = (nn - 2) * (nn >= 3 ? nn - 3 : 0) / 2;
    const auto b = build_presentation(n, Mode::braid);
    CHECK(count_family(b, RelationFamily::braid) == nn - 2);
    CHECK(count_family(b, RelationFamily::far_commute) == far);
    CHECK(b.relations.size() == nn - 2 + far);

    const auto s = build_presentation(n, Mode::singular);
    CHECK(count_family(s, RelationFamily::tau_far_tau) == far);
    CHECK(count_family(s, RelationFamily::tau_far_sigma) == 2 * far);
    CHECK(count_family(s, RelationFamily::tau_sigma) == nn - 1);
    CHECK(count_family(s, RelationFamily::sigma_sigma_tau) == nn - 2);
    CHECK(count_family(s, RelationFamily::sigma_sigma_tau_back) == nn - 2);

    const auto v = build_presentation(n, Mode::virtual_singular);
    CHECK(count_family(v, RelationFamily::nu_square) == nn - 1);
    CHECK(count_family(v, RelationFamily::nu_braid) == nn - 2);
    CHECK(count_family(v, RelationFamily::nu_far_sigma) == 2 * far);
  }
}

TEST_CASE("presentation: every relation uses indices in range and its family's shape") {
  for (int n = 2; n <= 7; ++n) {
    for (Mode m : {Mode::braid, Mode::singular, Mode::virtual_singular}) {
      const auto p = build_presentation(n, m);
      for (const auto& r : p.relations) {
        for (const Word* w : {&r.lhs, &r.rhs})
          for (const auto& l : w->letters) {
            CHECK(l.index >= 1);
            CHECK(l.index <= n - 1);
            CHECK(l.exponent == 1);
          }
        if (r.family == RelationFamily::far_commute || r.family == RelationFamily::tau_far_tau ||
            r.family == RelationFamily::tau_far_sigma || r.family == RelationFamily::nu_far_sigma ||
            r.family == RelationFamily::nu_far_tau) {
          REQUIRE(r.lhs.size() == 2);
          CHECK(std::abs(r.lhs.letters[0].index - r.lhs.letters[1].index) >= 2);
          CHECK(r.rhs.letters[0] == r.lhs.letters[1]);
          CHECK(r.rhs.letters[1] == r.lhs.letters[0]);
        }
        if (r.family == RelationFamily::braid || r.family == RelationFamily::nu_braid) {
          REQUIRE(r.lhs.size() == 3);
          CHECK(r.lhs.letters[0] == r.rhs.letters[1]);
          CHECK(r.lhs.letters[1] == r.rhs.letters[0]);
          CHECK(r.lhs.letters[1].index == r.lhs.letters[0].index + 1);
        }
      }
    }
  }
}

TEST_CASE("presentation: pure braid generators") {
  CHECK(pure_braid_generator(1, 2, 4) == Word::parse("s1 s1"));
  CHECK(pure_braid_generator(1, 3, 3) == Word::parse("s2 s1 s1 s2^-1"));
  CHECK_THROWS_AS(pure_braid_generator(2, 2, 4), BadIndices);
  CHECK_THROWS_AS(pure_braid_generator(1, 5, 4), BadIndices);
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Word a = pure_braid_generator(i, j, n);
        CHECK(a.size() == static_cast<std::size_t>(2 * (j - i - 1) + 2));
        CHECK(free_reduce(a) == a);
      }
}

TEST_CASE("presentation: commutators and free reduction") {
  const Word s1 = Word::parse("s1");
  CHECK(free_reduce(commutator(Word::parse("s1 s2"), Word{})).empty());
  CHECK(free_reduce(commutator(s1, s1)).empty());
  const Word c = commutator(pure_braid_generator(1, 2, 3), pure_braid_generator(1, 3, 3));
  CHECK(c.size() == 12);
  CHECK(free_reduce(c).size() == 12);
  CHECK(free_reduce(Word::parse("s1 s1^-1")).empty());
  CHECK(free_reduce(Word::parse("s1 s2 s2^-1 s1")) == Word::parse("s1 s1"));
  CHECK_THROWS_AS(inverse(Word::parse("t1"), false), InverseUnavailable);
  CHECK(inverse(Word::parse("t1 s2"), true) == Word::parse("s2^-1 t1^-1"));

  Sampler rng(32);
  for (int k = 0; k < 100; ++k) {
    const Word w = random_word(rng, 4, static_cast<std::size_t>(rng.uniform(0, 14)));
    const Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK_FALSE(r.letters[i] == r.letters[i + 1].inverse());
    CHECK(free_reduce(w * inverse(w)).empty());
  }
}

TEST_CASE("presentation: commutation guard") {
  CHECK(trivial_by_commutation(commutator(pure_braid_generator(1, 2, 5), pure_braid_generator(3, 4, 5))));
  CHECK_FALSE(trivial_by_commutation(commutator(pure_braid_generator(1, 2, 3), pure_braid_generator(1, 3, 3))));
  CHECK(trivial_by_commutation(Word::parse("s1 s3 s1^-1 s3^-1")));
  CHECK(trivial_by_commutation(Word::parse("t1 s1 t1^-1 s1^-1")));
  CHECK_FALSE(trivial_by_commutation(Word::parse("s1 s2 s1^-1 s2^-1")));
  CHECK_FALSE(trivial_by_commutation(Word::parse("s1")));
}
