#include "doctest.h"
#include "k0ring/int_poly.hpp"
#include "test_helpers.hpp"

using namespace k0ring;
using k0ring::testing::rand_poly;

TEST_CASE("addition examples") {
  CHECK(IntPoly::parse("x^2 - 1") + IntPoly::parse("1") == IntPoly::parse("x^2"));
  CHECK(IntPoly::zero() + IntPoly::parse("x^3 - 2*x") == IntPoly::parse("x^3 - 2*x"));
  CHECK(IntPoly::parse("x^2 - 1") + IntPoly::parse("x^2 - 1") ==
        IntPoly::parse("2*x^2 - 2"));
}

TEST_CASE("multiplication examples") {
  CHECK(IntPoly::x() * IntPoly::x() == IntPoly::parse("x^2"));
  CHECK(IntPoly::parse("x - 1") * IntPoly::parse("x + 1") == IntPoly::parse("x^2 - 1"));
  // m_2 * m_2 expanded by hand
  CHECK(IntPoly::parse("x^2 - 1") * IntPoly::parse("x^2 - 1") ==
        IntPoly::parse("x^4 - 2*x^2 + 1"));
}

TEST_CASE("divmod by monic divisor") {
  auto [q1, r1] = divmod_monic(IntPoly::parse("x^2"), IntPoly::parse("x^2 - x - 2"));
  CHECK(q1 == IntPoly::one());
  CHECK(r1 == IntPoly::parse("x + 2"));

  auto [q2, r2] = divmod_monic(IntPoly::x(), IntPoly::parse("x^2 - x - 2"));
  CHECK(q2.is_zero());
  CHECK(r2 == IntPoly::x());

  auto [q3, r3] = divmod_monic(IntPoly::parse("x^3 - 2*x"), IntPoly::parse("x^3 - 4*x"));
  CHECK(q3 == IntPoly::one());
  CHECK(r3 == IntPoly::parse("2*x"));

  CHECK_THROWS_WITH_AS(divmod_monic(IntPoly::x(), IntPoly::parse("2*x - 1")),
                       "divisor must be monic nonconstant", std::invalid_argument);
  CHECK_THROWS_AS(divmod_monic(IntPoly::x(), IntPoly::one()), std::invalid_argument);
}

TEST_CASE("composition examples") {
  IntPoly f = IntPoly::parse("x^2 - 2");
  CHECK(compose(f, f) == IntPoly::parse("x^4 - 4*x^2 + 2"));
  IntPoly h = IntPoly::parse("7*x^3 - x + 5");
  CHECK(compose(IntPoly::x(), h) == h);
  CHECK(compose(IntPoly::parse("x^3 - 3*x"), IntPoly::x()) == IntPoly::parse("x^3 - 3*x"));
}

TEST_CASE("integer evaluation examples") {
  CHECK(IntPoly::parse("x^4 - 3*x^2 + 1").eval(2) == 5);   // m_4(2) = 5
  CHECK(IntPoly::parse("x^3 - 2*x").eval(1) == -1);        // m_3(1) = -1
  CHECK(IntPoly::parse("x^5 - 7*x + 3").eval(0) == 3);
}

TEST_CASE("zero polynomial degree is a sentinel") {
  CHECK(IntPoly::zero().is_zero());
  CHECK(IntPoly::zero().degree() == IntPoly::kNegInfDegree);
  CHECK(IntPoly::zero().size() == 0);
  CHECK((IntPoly::parse("x") - IntPoly::parse("x")).is_zero());
}

TEST_CASE("ring axioms on random triples with wide coefficients") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 60; ++iter) {
    IntPoly a = rand_poly(rng, 7, 128), b = rand_poly(rng, 7, 128), c = rand_poly(rng, 7, 128);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("divmod recombination is exact") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 60; ++iter) {
    IntPoly a = rand_poly(rng, 12, 96);
    IntPoly m = rand_poly(rng, 5, 32);
    // force monic nonconstant
    std::vector<BigInt> mc(m.coeffs());
    mc.resize(std::max<std::size_t>(mc.size(), 2));
    mc.back() = 1;
    IntPoly monic{std::move(mc)};
    auto [q, r] = divmod_monic(a, monic);
    CHECK(q * monic + r == a);
    CHECK((r.is_zero() || r.degree() < monic.degree()));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 25; ++iter) {
    IntPoly a = rand_poly(rng, 3, 16), b = rand_poly(rng, 3, 16), c = rand_poly(rng, 3, 16);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
  }
}

TEST_CASE("substitution respects congruences") {
  // If A == B mod M then h(A) == h(B) mod M: the fact behind reducing
  // Frobenius substitutions incrementally.
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 25; ++iter) {
    IntPoly m = rand_poly(rng, 4, 24);
    std::vector<BigInt> mc(m.coeffs());
    mc.resize(std::max<std::size_t>(mc.size(), 3));
    mc.back() = 1;
    IntPoly monic{std::move(mc)};
    IntPoly a = rand_poly(rng, 6, 24);
    IntPoly h = rand_poly(rng, 3, 16);
    IntPoly a_red = divmod_monic(a, monic).second;
    IntPoly lhs = divmod_monic(compose(h, a), monic).second;
    IntPoly rhs = divmod_monic(compose(h, a_red), monic).second;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("text formats round-trip") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 40; ++iter) {
    IntPoly a = rand_poly(rng, 9, 80);
    CHECK(IntPoly::parse(a.to_string()) == a);
    CHECK(IntPoly::parse(a.to_list_string()) == a);
  }
  CHECK(IntPoly::parse("0").is_zero());
  CHECK(IntPoly::parse("[]").is_zero());
  CHECK(IntPoly::zero().to_string() == "0");
  CHECK(IntPoly::parse("x^4-4*x^2+2") == IntPoly::parse("[2,0,-4,0,1]"));
  CHECK(IntPoly::parse("-x") == -IntPoly::x());
  CHECK(IntPoly::parse("  x^2 - x - 2 ").to_string() == "x^2 - x - 2");
  CHECK_THROWS_AS(IntPoly::parse("x^2 + + 1"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse(""), std::invalid_argument);
}
