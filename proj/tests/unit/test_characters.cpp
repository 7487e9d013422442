#include "doctest.h"
#include "k0ring/characters.hpp"
#include "test_helpers.hpp"

using namespace k0ring;

TEST_CASE("char_sym examples") {
  CHECK(char_sym(0) == SymLaurent::constant(1));
  CHECK(char_sym(1) == SymLaurent::symmetric_term(1, 1));
  CHECK(char_sym(3).to_string() == "t^3 + t + t^-1 + t^-3");
  CHECK(char_sym(-1).is_zero());
  CHECK(char_sym(-5) == -char_sym(3));
}

TEST_CASE("char_of_vector examples") {
  auto F22 = GroundField::make(2, 2);
  SteinbergVector std_rep(F22);
  std_rep.set(1, 1);
  CHECK(char_of_vector(std_rep) == char_sym(1));
  SteinbergVector fro(F22);
  fro.set(2, 1);  // tuple (0,1)
  CHECK(char_of_vector(fro) == SymLaurent::symmetric_term(2, 1));
  auto F31 = GroundField::make(3, 1);
  SteinbergVector dbl(F31);
  dbl.set(1, 2);
  CHECK(char_of_vector(dbl) == SymLaurent::symmetric_term(1, 2));
}

TEST_CASE("char_of_elt examples") {
  auto F31 = GroundField::make(3, 1);
  CHECK(char_of_elt(sym_class(3, F31)).to_string() == "2*t + 2*t^-1");
  CHECK(char_of_elt(RingElt::zero(F31)).is_zero());
  auto F21 = GroundField::make(2, 1);
  CHECK(char_of_elt(sym_class(2, F21)) == char_sym(1) + char_sym(0));
}

TEST_CASE("brauer_equal examples") {
  auto F31 = GroundField::make(3, 1);
  // (Sigma)'s instance at character level: M_1 = M_q - M_{q-2}
  CHECK(brauer_equal(char_sym(3), char_sym(1) + char_sym(1), *F31));
  CHECK(brauer_equal(char_sym(5), char_sym(5), *F31));
  CHECK(!brauer_equal(char_sym(1), char_sym(0), *F31));
}

TEST_CASE("brauer modulus shape") {
  // odd q: (t^(q-1)-1)(t^(q+1)-1)/(t^2-1); even q: divided by (t-1)
  CHECK(brauer_modulus(3) == IntPoly::parse("x^4 - 1"));
  IntPoly d4 = brauer_modulus(4);
  CHECK(d4.is_monic());
  CHECK(d4.degree() == 7);
  CHECK(divmod_monic(IntPoly::parse("x^3 - 1"), IntPoly::parse("x - 1")).second.is_zero());
}

TEST_CASE("oracle equivalence on random pairs with near misses") {
  for (auto [p, g] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
    auto F = GroundField::make(p, g);
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 30; ++iter) {
      SteinbergVector va(F), vb(F);
      for (int s = 0; s < 3; ++s) {
        va.add(static_cast<long>(rng() % F->q()), static_cast<long>(rng() % 7) - 3);
        vb.add(static_cast<long>(rng() % F->q()), static_cast<long>(rng() % 7) - 3);
      }
      if (iter % 5 == 0) vb = va;
      RingElt a = compose(va), b = compose(vb);
      CHECK((a == b) == brauer_equal(char_of_elt(a), char_of_elt(b), *F));
      // near miss: differ by p * one basis class
      RingElt bump = RingElt::from_reduced(
          F, basis_poly_by_ordinal(F, static_cast<long>(rng() % F->q())).scaled(p));
      CHECK(!brauer_equal(char_of_elt(a), char_of_elt(a + bump), *F));
    }
  }
}

TEST_CASE("char_of_elt is multiplicative up to the Brauer kernel") {
  auto F = GroundField::make(3, 2);
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 12; ++iter) {
    SteinbergVector va(F), vb(F);
    va.add(static_cast<long>(rng() % F->q()), 1 + static_cast<long>(rng() % 2));
    vb.add(static_cast<long>(rng() % F->q()), 1 + static_cast<long>(rng() % 2));
    RingElt a = compose(va), b = compose(vb);
    CHECK(brauer_equal(char_of_elt(a * b), char_of_elt(a) * char_of_elt(b), *F));
  }
}

TEST_CASE("twisted character is the p^i-th power mod p") {
  // At the formal-character level the twist dilates exponents by p^i, and
  // dilation is congruent to the p^i-th power coefficientwise mod p.
  for (auto [p, g] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}}) {
    auto F = GroundField::make(p, g);
    for (long n = 0; n < F->q(); ++n) {
      SteinbergVector unit(F);
      unit.set(n, 1);
      SymLaurent ch = char_of_vector(unit);
      long scale = 1;
      for (long i = 1; i <= 2; ++i) {
        scale *= p;
        SymLaurent lhs = ch.substitute_power(scale);
        SymLaurent power = SymLaurent::constant(1);
        for (long t = 0; t < scale; ++t) power = power * ch;
        SymLaurent diff = lhs - power;
        for (const auto& [e, v] : diff.coeffs()) CHECK(v % p == 0);
      }
    }
  }
}

TEST_CASE("dimension consistency between residue and character") {
  auto F = GroundField::make(2, 3);
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 15; ++iter) {
    SteinbergVector v(F);
    for (int s = 0; s < 4; ++s)
      v.add(static_cast<long>(rng() % F->q()), static_cast<long>(rng() % 5) - 2);
    RingElt a = compose(v);
    CHECK(char_of_elt(a).eval_at_one() == dim_class(a));
  }
}
