#include "doctest.h"
#include "k0ring/sym_laurent.hpp"
#include "test_helpers.hpp"

using namespace k0ring;
using k0ring::testing::rand_laurent;

namespace {
SymLaurent t_plus_tinv() { return SymLaurent::symmetric_term(1, 1); }
}  // namespace

TEST_CASE("laurent multiplication examples") {
  SymLaurent a = t_plus_tinv();
  SymLaurent sq = a * a;
  CHECK(sq == SymLaurent::symmetric_term(2, 1) + SymLaurent::constant(2));
  CHECK(SymLaurent::constant(1) * a == a);
  SymLaurent b = SymLaurent::symmetric_term(2, 1) + SymLaurent::constant(1);
  SymLaurent prod = a * b;  // ch M_1 * ch M_2
  CHECK(prod == SymLaurent::symmetric_term(3, 1) + SymLaurent::symmetric_term(1, 2));
}

TEST_CASE("substitute_power examples") {
  CHECK(t_plus_tinv().substitute_power(2) == SymLaurent::symmetric_term(2, 1));
  std::mt19937_64 rng(3);
  SymLaurent any = rand_laurent(rng, 5, 20);
  CHECK(any.substitute_power(1) == any);
  SymLaurent c = SymLaurent::symmetric_term(2, 1) + SymLaurent::constant(2);
  CHECK(c.substitute_power(3) == SymLaurent::symmetric_term(6, 1) + SymLaurent::constant(2));
  CHECK_THROWS_AS(any.substitute_power(0), std::invalid_argument);
}

TEST_CASE("clear_to_poly examples") {
  CHECK(t_plus_tinv().clear_to_poly() == IntPoly::parse("x^2 + 1"));
  CHECK(SymLaurent{}.clear_to_poly().is_zero());
  SymLaurent d = SymLaurent::symmetric_term(2, 1) + SymLaurent::constant(-2);
  CHECK(d.clear_to_poly() == IntPoly::parse("x^4 - 2*x^2 + 1"));
}

TEST_CASE("symmetry is enforced at construction") {
  std::map<long, BigInt> bad{{1, BigInt(1)}, {-1, BigInt(2)}};
  CHECK_THROWS_AS(SymLaurent::from_map(bad), std::invalid_argument);
  std::map<long, BigInt> lopsided{{3, BigInt(1)}};
  CHECK_THROWS_AS(SymLaurent::from_map(lopsided), std::invalid_argument);
  std::map<long, BigInt> good{{2, BigInt(5)}, {0, BigInt(-1)}, {-2, BigInt(5)}};
  CHECK(SymLaurent::from_map(good).coeff(-2) == 5);
}

TEST_CASE("products preserve symmetry; dilation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    SymLaurent a = rand_laurent(rng, 6, 24), b = rand_laurent(rng, 6, 24);
    SymLaurent prod = a * b;
    for (const auto& [e, v] : prod.coeffs()) CHECK(prod.coeff(-e) == v);
    long m = 1 + rng() % 4;
    CHECK((a * b).substitute_power(m) == a.substitute_power(m) * b.substitute_power(m));
    CHECK((a + b).substitute_power(m) == a.substitute_power(m) + b.substitute_power(m));
  }
}

TEST_CASE("laurent text format round-trips") {
  SymLaurent ch3 = SymLaurent::symmetric_term(3, 1) + SymLaurent::symmetric_term(1, 1);
  CHECK(ch3.to_string() == "t^3 + t + t^-1 + t^-3");
  CHECK(SymLaurent::parse("t^3 + t + t^-1 + t^-3") == ch3);
  CHECK(SymLaurent::parse("2*t + 2*t^-1") == SymLaurent::symmetric_term(1, 2));
  CHECK(SymLaurent{}.to_string() == "0");
  CHECK(SymLaurent::parse("0").is_zero());
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    SymLaurent a = rand_laurent(rng, 7, 40);
    CHECK(SymLaurent::parse(a.to_string()) == a);
  }
  CHECK_THROWS_AS(SymLaurent::parse("t^2 + 1"), std::invalid_argument);  // asymmetric
}
