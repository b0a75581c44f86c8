#include "support.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/irreducibility.hpp"

using namespace braidrep;

namespace {

// Span of all words of length <= L in the images (no inverses: over a field
// an invertible matrix is a polynomial in itself), grown until a whole
// length adds nothing. Independent of the layered echelon in the library.
template <class F>
std::size_t word_span_oracle(const SpecializedRep<F>& spec) {
  const std::size_t d = spec.dim;
  std::vector<Matrix<F>> gens;
  for (std::size_t i = 0; i < spec.images.size(); ++i)
    if (spec.names[i].find("^-1") == std::string::npos) gens.push_back(spec.images[i]);
  std::vector<Matrix<F>> all{Matrix<F>::identity(d)}, layer = all;
  auto rank_of = [&] {
    Matrix<F> stack(all.size(), d * d);
    for (std::size_t k = 0; k < all.size(); ++k)
      for (std::size_t e = 0; e < d * d; ++e) stack(k, e) = all[k].data()[e];
    return mat_rank(stack);
  };
  std::size_t prev = rank_of();
  for (std::size_t len = 1; len <= d * d; ++len) {
    std::vector<Matrix<F>> next;
    for (const auto& w : layer)
      for (const auto& g : gens) next.push_back(w * g);
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
    const std::size_t r = rank_of();
    if (r == prev) break;
    prev = r;
    if (all.size() > 6000) break;
  }
  return prev;
}

SpecializedRep<Rational> sing(int n, const Rational& t0, const Rational& a, const Rational& c) {
  return collect(singular_extension<Rational>(n, {a, c}, t0, false), t0);
}

SpecializedRep<Rational> std_at(int n, const Rational& t0) { return specialize(standard_rep(n), t0); }

std::pair<Rational, Rational> random_ac(Sampler& rng, const Rational& t0) {
  for (;;) {
    const Rational a = rng.rational(), c = rng.rational();
    if (sgn(a * a - t0 * c * c) != 0) return {a, c};
  }
}

}  // namespace

TEST_CASE("irreducibility: span examples") {
  CHECK(burnside_span(std_at(3, 2)) == 9);
  CHECK(burnside_span(std_at(3, 1)) < 9);
  CHECK(burnside_span(std_at(2, 2)) == 2);
  CHECK(burnside_span(std_at(4, 2)) == 16);
  CHECK(burnside_span(std_at(4, 1)) < 16);
  CHECK(burnside_span(symbolic(standard_rep(2))) == 2);
  CHECK(burnside_span(symbolic(standard_rep(3))) == 9);
  CHECK_THROWS_AS(specialize(standard_rep(3), 0), ZeroSpecialization);
}

TEST_CASE("irreducibility: span agrees with the brute-force word oracle") {
  Sampler rng(61);
  for (int n = 2; n <= 3; ++n)
    for (const Rational t0 : {Rational(1), Rational(2), Rational(-1)}) {
      CHECK(burnside_span(std_at(n, t0)) == word_span_oracle(std_at(n, t0)));
      for (int k = 0; k < 4; ++k) {
        auto [a, c] = random_ac(rng, t0);
        if (k == 0 && t0 == 1) a = 1 - c;
        if (sgn(a * a - t0 * c * c) == 0) continue;
        const auto s = sing(n, t0, a, c);
        CHECK(burnside_span(s) == word_span_oracle(s));
      }
    }
  const auto f = specialize(f_rep(3), 2);
  CHECK(burnside_span(f) == word_span_oracle(f));
}

TEST_CASE("irreducibility: serial and parallel spans agree") {
  Sampler rng(62);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 5; ++k) {
      const Rational t0 = k == 0 ? Rational(1) : rng.nonzero_rational();
      const auto [a, c] = random_ac(rng, t0);
      const auto s = sing(n, t0, a, c);
      const auto sp = burnside_span(s);
      REQUIRE(sp == burnside_span_serial(s));
      REQUIRE(sp <= s.dim * s.dim);
    }
}

TEST_CASE("irreducibility: verdict examples") {
  const auto v1 = is_irreducible(sing(3, 1, 3, -1));
  CHECK(v1.irreducible);
  CHECK(v1.span_dim == 9);
  CHECK_FALSE(v1.witness);

  const auto v2 = is_irreducible(sing(3, 1, 2, -1));
  CHECK_FALSE(v2.irreducible);
  REQUIRE(v2.witness);
  CHECK(is_invariant(sing(3, 1, 2, -1), *v2.witness));
  const Subspace<Rational> ones{3, {{1, 1, 1}}};
  const Matrix<Rational> both = v2.witness->as_columns();
  Matrix<Rational> aug(3, v2.witness->dimension() + 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < v2.witness->dimension(); ++j) aug(i, j) = both(i, j);
    aug(i, v2.witness->dimension()) = 1;
  }
  CHECK(mat_rank(aug) == v2.witness->dimension());
  CHECK(is_invariant(sing(3, 1, 2, -1), ones));

  CHECK(is_irreducible(sing(3, 2, 1, 0)).irreducible);
}

TEST_CASE("irreducibility: witnesses are invariant") {
  Sampler rng(63);
  for (int n = 3; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      const Rational c = rng.rational();
      const Rational a = k % 2 ? 1 - c : rng.rational();
      if (sgn(a * a - c * c) == 0) continue;
      const auto s = sing(n, 1, a, c);
      const auto v = is_irreducible(s);
      REQUIRE(v.irreducible == (a + c != 1));
      REQUIRE(v.irreducible == (v.span_dim == s.dim * s.dim));
      if (v.witness) REQUIRE(is_invariant(s, *v.witness));
    }
}

TEST_CASE("irreducibility: all-ones line") {
  CHECK(all_ones_check(sing(4, 1, 2, -1)));
  CHECK(all_ones_check(sing(3, 1, Rational(1, 2), Rational(1, 2))));
  // tau_1 sends (1,1,1) to (a+c, a+c, 1): a line only when a + c = 1.
  CHECK_FALSE(all_ones_check(sing(3, 1, 3, -1)));
  CHECK_FALSE(all_ones_check(std_at(3, 2)));
  CHECK(all_ones_check(std_at(3, 1)));
}

TEST_CASE("irreducibility: orbit closure of each basis vector at t0 = 1") {
  Sampler rng(64);
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto [a, c] = random_ac(rng, 1);
      const auto s = sing(n, 1, a, c);
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        REQUIRE(invariant_closure(s, e).dimension() == static_cast<std::size_t>(n));
      }
    }
}

TEST_CASE("irreducibility: adding generators never shrinks the span") {
  Sampler rng(65);
  for (int n = 3; n <= 4; ++n)
    for (int k = 0; k < 5; ++k) {
      const Rational t0 = rng.nonzero_rational();
      const auto [a, c] = random_ac(rng, t0);
      const auto full = sing(n, t0, a, c);
      SpecializedRep<Rational> sub = full;
      sub.images.clear();
      sub.names.clear();
      for (std::size_t i = 0; i < full.images.size(); ++i)
        if (full.names[i][0] == 's') {
          sub.names.push_back(full.names[i]);
          sub.images.push_back(full.images[i]);
        }
      const auto s_sub = burnside_span(sub), s_full = burnside_span(full);
      REQUIRE(s_sub <= s_full);
      if (s_sub == full.dim * full.dim) REQUIRE(is_irreducible(full).irreducible);
    }
}

TEST_CASE("irreducibility: characteristic polynomial and rational roots") {
  CHECK(char_poly(Matrix<Rational>{{0, 1}, {1, 0}}) == std::vector<Rational>{-1, 0, 1});
  const auto roots = rational_roots({Rational(-1, 2), Rational(1, 2), 1});  // (x + 1)(x - 1/2)
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rational>{-1, Rational(1, 2)});
  CHECK(rational_roots({1, 0, 1})->empty());
}

TEST_CASE("irreducibility: grid") {
  Sampler rng(66);
  GridSpec g;
  g.ns = {3};
  g.ts = {2, -1, Rational(3, 2)};
  for (int k = 0; k < 10; ++k) g.acs.push_back(random_ac(rng, Rational(3, 2)));
  // Drop draws singular for some t in the list.
  std::erase_if(g.acs, [&](const auto& ac) {
    for (const auto& t0 : g.ts)
      if (sgn(ac.first * ac.first - t0 * ac.second * ac.second) == 0) return true;
    return false;
  });
  const auto cells = grid_report(g);
  CHECK(cells.size() == g.ts.size() * g.acs.size());
  for (const auto& cell : cells) {
    CHECK(cell.irreducible);
    CHECK(cell.agree);
  }
  CHECK(grid_report_serial(g).size() == cells.size());

  GridSpec r{{3}, {1}, {{2, -1}, {0, 1}, {3, -2}}};
  for (const auto& cell : grid_report(r)) {
    CHECK_FALSE(cell.irreducible);
    CHECK(cell.agree);
    CHECK(cell.all_ones);
  }

  const auto d = grid_cell(2, 2, 0, 1);
  CHECK(d.span_dim == 2);
  CHECK_FALSE(d.irreducible);
  CHECK(d.predicted);
  CHECK_FALSE(d.agree);
  CHECK(d.divergence_watch);

  CHECK_THROWS_AS(grid_report(GridSpec{{3}, {1}, {{1, 1}}}), SingularTau);
  CHECK_THROWS_AS(grid_report(GridSpec{{3}, {0}, {{1, 0}}}), ZeroSpecialization);

  const auto csv = grid_csv(grid_report(r));
  CHECK(csv.rfind("n,t0,a,c,span_dim,verdict,predicted,agree\n", 0) == 0);
}

TEST_CASE("irreducibility: serial and parallel grids agree") {
  Sampler rng(67);
  GridSpec g{{2, 3, 4}, {1, 2, Rational(-1, 3)}, {}};
  for (int k = 0; k < 6; ++k) g.acs.push_back({rng.rational(), rng.rational()});
  std::erase_if(g.acs, [&](const auto& ac) {
    for (const auto& t0 : g.ts)
      if (sgn(ac.first * ac.first - t0 * ac.second * ac.second) == 0) return true;
    return false;
  });
  const auto a = grid_report(g), b = grid_report_serial(g);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].span_dim == b[i].span_dim);
    CHECK(a[i].agree == b[i].agree);
  }
}
