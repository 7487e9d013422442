#include "doctest.h"
#include "k0ring/ring.hpp"
#include "test_helpers.hpp"

using namespace k0ring;
using k0ring::testing::rand_poly;

TEST_CASE("reduce examples") {
  auto F21 = GroundField::make(2, 1);  // modulus x^2 - x - 2
  CHECK(reduce(IntPoly::parse("x^2"), F21).residue() == IntPoly::parse("x + 2"));
  CHECK(reduce(IntPoly::x(), F21).residue() == IntPoly::x());
  auto F31 = GroundField::make(3, 1);  // modulus x^3 - 4x
  CHECK(reduce(IntPoly::parse("x^3 - 2*x"), F31).residue() == IntPoly::parse("2*x"));
}

TEST_CASE("ring operations examples") {
  auto F21 = GroundField::make(2, 1);
  RingElt x = RingElt::generator(F21);
  CHECK((x * x).residue() == IntPoly::parse("x + 2"));
  CHECK(RingElt::one(F21) * x == x);
  auto F31 = GroundField::make(3, 1);
  CHECK((sym_class(2, F31) * sym_class(1, F31)).residue() == IntPoly::parse("3*x"));
}

TEST_CASE("field mismatch is rejected") {
  auto F21 = GroundField::make(2, 1);
  auto F31 = GroundField::make(3, 1);
  CHECK_THROWS_AS(RingElt::generator(F21) + RingElt::generator(F31), std::invalid_argument);
  CHECK_THROWS_AS(elt_congruent_mod_p(RingElt::generator(F21), RingElt::generator(F31)),
                  std::invalid_argument);
}

TEST_CASE("ground field validation") {
  CHECK_THROWS_WITH_AS(GroundField::make(6, 1), "p must be prime", std::invalid_argument);
  CHECK_THROWS_AS(GroundField::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(GroundField::make(2, 60), std::invalid_argument);  // beyond kMaxQ
}

TEST_CASE("frobenius twist examples") {
  auto F22 = GroundField::make(2, 2);
  CHECK(frobenius_twist(RingElt::generator(F22), 1).residue() == IntPoly::parse("x^2 - 2"));
  std::mt19937_64 rng(5);
  RingElt a = reduce(rand_poly(rng, 6, 24), F22);
  CHECK(frobenius_twist(a, 0) == a);
  CHECK(frobenius_twist(RingElt::generator(F22), 2) == RingElt::generator(F22));
  CHECK(frobenius_twist(RingElt::generator(F22), -1) ==
        frobenius_twist(RingElt::generator(F22), 1));
}

TEST_CASE("sym_class examples and sign rule") {
  auto F21 = GroundField::make(2, 1);
  CHECK(sym_class(-1, F21).is_zero());
  CHECK(sym_class(2, F21).residue() == IntPoly::parse("x + 1"));
  auto F31 = GroundField::make(3, 1);
  CHECK(sym_class(-5, F31) == -sym_class(3, F31));
}

TEST_CASE("identity examples from the small fields") {
  auto F31 = GroundField::make(3, 1);
  auto rep = verify_identity(Identity::kSigma, 1, 0, F31);
  CHECK(rep.holds);
  CHECK(rep.lhs == rep.rhs);
  // M_1 = M_q - M_{q-2} is the rearranged instance
  CHECK(sym_class(1, F31) == sym_class(3, F31) - sym_class(1, F31));

  auto F22 = GroundField::make(2, 2);
  CHECK(verify_identity(Identity::kPi, 1, 1, F22).holds);
  for (long p : {2L, 3L, 5L}) {
    auto F = GroundField::make(p, 1);
    CHECK(verify_identity(Identity::kPhi, p, 0, F).holds);
    // M_p = M_1^[1] + M_{p-2}
    CHECK(sym_class(p, F) ==
          frobenius_twist(sym_class(1, F), 1) + sym_class(p - 2, F));
  }
  CHECK(!verify_identity(Identity::kDelta, 3, 0, F22).note.empty());
}

TEST_CASE("identities hold densely on small fields") {
  for (auto [p, g] : std::vector<std::pair<long, long>>{{2, 1}, {2, 2}, {2, 3}, {3, 1},
                                                        {3, 2}, {5, 1}, {7, 1}}) {
    auto F = GroundField::make(p, g);
    long q = F->q();
    for (long k = -2 * q; k <= 2 * q; k += std::max(1L, q / 3)) {
      for (long h = -q; h <= q; h += std::max(1L, q / 2)) {
        for (Identity id :
             {Identity::kDelta, Identity::kSigma, Identity::kPi, Identity::kPhi}) {
          CAPTURE(p); CAPTURE(g); CAPTURE(k); CAPTURE(h);
          CHECK(verify_identity(id, k, h, F).holds);
        }
      }
    }
  }
}

TEST_CASE("quotient ring axioms on random triples") {
  auto F = GroundField::make(3, 2);
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 25; ++iter) {
    RingElt a = reduce(rand_poly(rng, 12, 48), F);
    RingElt b = reduce(rand_poly(rng, 12, 48), F);
    RingElt c = reduce(rand_poly(rng, 12, 48), F);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("twist is a ring endomorphism of period g") {
  for (auto [p, g] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}, {5, 2}}) {
    auto F = GroundField::make(p, g);
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 12; ++iter) {
      RingElt a = reduce(rand_poly(rng, 10, 32), F);
      RingElt b = reduce(rand_poly(rng, 10, 32), F);
      long i = 1 + static_cast<long>(rng() % g);
      CHECK(frobenius_twist(a * b, i) == frobenius_twist(a, i) * frobenius_twist(b, i));
      CHECK(frobenius_twist(a + b, i) == frobenius_twist(a, i) + frobenius_twist(b, i));
      CHECK(frobenius_twist(a, g) == a);
    }
  }
}

TEST_CASE("mod-p congruence predicate") {
  auto F21 = GroundField::make(2, 1);
  RingElt x = RingElt::generator(F21);
  CHECK(elt_congruent_mod_p(reduce(IntPoly::parse("x + 2"), F21), x));
  CHECK(elt_congruent_mod_p(x, x));
  CHECK(!elt_congruent_mod_p(x, RingElt::one(F21)));
}

TEST_CASE("twist against p-th powers, elementwise") {
  for (auto [p, g] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
    auto F = GroundField::make(p, g);
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 10; ++iter) {
      RingElt a = reduce(rand_poly(rng, 8, 16), F);
      for (long i = 0; i <= g; ++i) {
        unsigned long e = 1;
        for (long t = 0; t < i; ++t) e *= p;
        CAPTURE(p); CAPTURE(g); CAPTURE(i);
        CHECK(elt_congruent_mod_p(frobenius_twist(a, i), pow(a, e)));
      }
    }
  }
}
