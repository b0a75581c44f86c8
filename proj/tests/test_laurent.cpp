#include "support.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/laurent.hpp"

using namespace braidrep;
using braidrep::test::dense_mul;
using braidrep::test::from_dense;
using braidrep::test::to_dense;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("laurent: text rendering and parsing") {
  CHECK(P("2*t^3 - 1").str() == "2*t^3 - 1");
  CHECK(P("t + t^-1").str() == "t^1 + t^-1");
  CHECK(P("0").str() == "0");
  CHECK(P("1+t") == P("t^1 + 1"));
  CHECK(P("2t^3-1") == P("2*t^3 - 1"));
  CHECK(P("t^-1") == LaurentPoly::t(-1));
  CHECK(P("-t^2") == LaurentPoly::monomial(-1, 2));
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("2*"), ParseError);
  CHECK_THROWS_AS(P("t^"), ParseError);

  Sampler rng(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly f = rng.laurent(5, 6, 40);
    CHECK(LaurentPoly::parse(f.str()) == f);
  }
}

TEST_CASE("laurent: addition and multiplication examples") {
  const LaurentPoly f = P("t + t^-1");
  CHECK(f + LaurentPoly(0) == f);
  CHECK((P("t^2 - 1") + P("1 - t^2")).is_zero());
  CHECK(P("t + 1") + P("t - 1") == P("2*t"));
  CHECK(f * LaurentPoly::t() == P("t^2 + 1"));
  CHECK(P("t - 1") * P("t + 1") == P("t^2 - 1"));
  Sampler rng(12);
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly g = rng.laurent();
    CHECK(g * LaurentPoly(1) == g);
  }
}

TEST_CASE("laurent: ring axioms on 500 random triples") {
  Sampler rng(13);
  for (int k = 0; k < 500; ++k) {
    const LaurentPoly f = rng.laurent(4, 4, 9), g = rng.laurent(4, 4, 9), h = rng.laurent(4, 4, 9);
    REQUIRE((f + g) + h == f + (g + h));
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * (g + h) == f * g + f * h);
    REQUIRE(f * g == g * f);
    REQUIRE(f + g == g + f);
    REQUIRE((f - f).is_zero());
    REQUIRE(f + (-f) == LaurentPoly(0));
  }
}

TEST_CASE("laurent: product agrees with dense convolution") {
  Sampler rng(14);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly f = rng.laurent(6, 8, 50), g = rng.laurent(6, 8, 50);
    CHECK(f * g == from_dense(dense_mul(to_dense(f), to_dense(g))));
  }
}

TEST_CASE("laurent: canonical form stores no zero coefficients") {
  Sampler rng(15);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly f = rng.laurent(6, 3, 3) * rng.laurent(6, 3, 3) - rng.laurent(6, 3, 3);
    for (const auto& [e, c] : f.terms()) CHECK(c != 0);
  }
}

TEST_CASE("laurent: evaluation") {
  CHECK(P("t^2 - 1").eval(2) == 3);
  CHECK(P("t^-1").eval(Rational(1, 2)) == 2);
  CHECK_THROWS_AS(P("t").eval(0), ZeroSpecialization);

  Sampler rng(16);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly f = rng.laurent(), g = rng.laurent();
    const Rational t0 = rng.nonzero_rational();
    // Independent evaluation: sum c * t0^e with explicit powers.
    auto direct = [&](const LaurentPoly& p) {
      Rational acc = 0;
      for (const auto& [e, c] : p.terms()) {
        Rational pw = 1;
        for (long i = 0; i < std::abs(static_cast<long>(e)); ++i) pw *= t0;
        if (e < 0) pw = 1 / pw;
        acc += Rational(c) * pw;
      }
      return acc;
    };
    REQUIRE((f * g).eval(t0) == f.eval(t0) * g.eval(t0));
    REQUIRE((f + g).eval(t0) == f.eval(t0) + g.eval(t0));
    REQUIRE(f.eval(t0) == direct(f));
  }
}

TEST_CASE("laurent: units") {
  CHECK(P("-t^3").is_unit());
  CHECK_FALSE(P("t + 1").is_unit());
  CHECK_FALSE(LaurentPoly(0).is_unit());
  CHECK_FALSE(LaurentPoly(2).is_unit());
  Sampler rng(17);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly f = rng.laurent(2, 3, 2);
    const auto inv = f.unit_inverse();
    CHECK(f.is_unit() == inv.has_value());
    if (inv) CHECK((f * *inv).is_one());
    if (!f.is_zero() && f.terms().size() == 1) {
      const auto& [e, c] = *f.terms().begin();
      CHECK(f.is_unit() == (abs(c) == 1));
    }
  }
}

TEST_CASE("laurent: exact division and gcd") {
  const LaurentPoly f = P("t^2 - 1"), g = P("t - 1");
  CHECK(divide_exact(f, g) == P("t + 1"));
  CHECK_FALSE(divide_exact(g, f).has_value());
  CHECK(gcd(f, P("t^3 - t^2")) == P("1 - t"));
  Sampler rng(18);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly a = rng.nonzero_laurent(3, 2, 4), b = rng.nonzero_laurent(3, 2, 4),
                      c = rng.nonzero_laurent(3, 2, 4);
    const LaurentPoly d = gcd(a * c, b * c);
    CHECK(divide_exact(a * c, d).has_value());
    CHECK(divide_exact(b * c, d).has_value());
    CHECK(divide_exact(d, c).has_value());
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("rational function: normalization") {
  const RationalFunction x(P("t^2 - 1"), P("t - 1"));
  CHECK(x.is_laurent());
  CHECK(x.num() == P("t + 1"));
  const RationalFunction y(P("1"), P("-2*t^3"));
  CHECK(y.den().min_exponent() == 0);
  CHECK(y.den().terms().begin()->second > 0);
  CHECK(y == RationalFunction(P("-t^-3"), P("2")));
  CHECK_THROWS_AS(RationalFunction(P("1"), P("0")), DivisionByZero);
  CHECK_THROWS_AS(RationalFunction(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(RationalFunction(P("1"), P("t - 1")).eval(1), Pole);

  Sampler rng(19);
  for (int k = 0; k < 200; ++k) {
    const RationalFunction a(rng.laurent(3, 2, 5), rng.nonzero_laurent(3, 2, 5));
    const RationalFunction b(rng.laurent(3, 2, 5), rng.nonzero_laurent(3, 2, 5));
    REQUIRE(a.normalized() == a);
    REQUIRE(a.normalized().normalized() == a.normalized());
    REQUIRE(RationalFunction::parse(a.str()) == a);
    REQUIRE((a + b) - b == a);
    if (!b.is_zero()) REQUIRE((a * b) / b == a);
    const Rational t0 = rng.nonzero_rational();
    try {
      const Rational ea = a.eval(t0), eb = b.eval(t0);
      REQUIRE((a * b).eval(t0) == ea * eb);
      REQUIRE((a + b).eval(t0) == ea + eb);
    } catch (const Pole&) {
    }
  }
}
