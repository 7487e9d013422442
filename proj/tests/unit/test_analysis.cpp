#include "doctest.h"
#include "k0ring/analysis.hpp"
#include "k0ring/family.hpp"

using namespace k0ring;

TEST_CASE("small rational roots examples") {
  IntPoly a5 = f_base(5) - IntPoly::x();  // x^5 - 5x^3 + 4x = x(x^2-1)(x^2-4)
  CHECK(small_rational_roots(a5, 2) == std::vector<long>{-2, -1, 0, 1, 2});
  IntPoly a3 = f_base(3) - IntPoly::x();  // x^3 - 4x
  CHECK(small_rational_roots(a3, 2) == std::vector<long>{-2, 0, 2});
  CHECK(small_rational_roots(IntPoly::parse("x^2 + 1"), 10).empty());
  CHECK_THROWS_AS(small_rational_roots(IntPoly::zero(), 2), std::invalid_argument);
}

TEST_CASE("sturm real root counts") {
  CHECK(sturm_real_count(IntPoly::parse("x^5 - 5*x^3 + 4*x")) == 5);
  CHECK(sturm_real_count(IntPoly::parse("x^2 + 1")) == 0);
  CHECK(sturm_real_count(IntPoly::parse("x^3 - 4*x")) == 3);
  CHECK(sturm_real_count(IntPoly::parse("x^2 - 2")) == 2);
  CHECK(sturm_real_count(IntPoly::parse("x - 7")) == 1);
  CHECK(sturm_real_count(IntPoly::parse("5")) == 0);
}

TEST_CASE("sturm rejects repeated roots with a witness") {
  IntPoly sq = IntPoly::parse("x^2 - 2*x + 1");  // (x-1)^2
  CHECK_THROWS_AS(sturm_real_count(sq), std::invalid_argument);
  try {
    sturm_real_count(sq);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x - 1") != std::string::npos);
  }
}

TEST_CASE("integer gcd over Z") {
  IntPoly a = IntPoly::parse("x^2 - 1") * IntPoly::parse("x - 3");
  IntPoly b = IntPoly::parse("x^2 - 1") * IntPoly::parse("x + 5");
  CHECK(poly_gcd_z(a, b) == IntPoly::parse("x^2 - 1"));
  CHECK(poly_gcd_z(a, IntPoly::zero()) == a);
  CHECK(poly_gcd_z(IntPoly::parse("2*x + 2"), IntPoly::parse("4*x + 4")) ==
        IntPoly::parse("2*x + 2"));
  CHECK(poly_gcd_z(IntPoly::parse("x"), IntPoly::parse("x + 1")).degree() == 0);
}

TEST_CASE("roots report for f(x) - x") {
  RootReport r5 = roots_report(5);
  CHECK(r5.rational_roots == std::vector<long>{-2, -1, 0, 1, 2});
  CHECK(r5.real_root_count == 5);
  CHECK(r5.all_real);
  RootReport r3 = roots_report(3);
  CHECK(r3.rational_roots == std::vector<long>{-2, 0, 2});
  CHECK(r3.real_root_count == 3);
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    RootReport r = roots_report(p);
    CHECK(r.real_root_count == p);
    CHECK(r.all_real);
  }
}

TEST_CASE("f - x is odd for odd p, so roots pair up around zero") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    IntPoly a = f_base(p) - IntPoly::x();
    for (std::size_t i = 0; i < a.size(); i += 2) CHECK(a.coeff(i) == 0);
  }
}

TEST_CASE("special values of m_n at 2 and 1") {
  SpecialValuesReport rep = special_values_report(1000);
  CHECK(rep.ok);
  CHECK(rep.first_bad == -1);
  // spot checks against the closed forms
  CHECK(m_recur(7).eval(2) == 8);
  CHECK(m_recur(7).eval(1) == 1);
  CHECK(m_recur(5).eval(1) == 0);
  CHECK(m_recur(4).eval(1) == -1);
}
