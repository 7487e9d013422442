#pragma once

#include <vector>

#include "k0ring/int_poly.hpp"

namespace k0ring {

/// All integers r with |r| <= bound and a(r) = 0, ascending, by exact
/// evaluation. Throws on the zero polynomial.
std::vector<long> small_rational_roots(const IntPoly& a, long bound);

/// Gcd over Z via the primitive polynomial remainder sequence; result has
/// positive leading coefficient (content included).
IntPoly poly_gcd_z(const IntPoly& a, const IntPoly& b);

/// Number of distinct real roots of a square-free polynomial, by a Sturm
/// chain over exact integer arithmetic with primitive-part normalization.
/// Non-square-free input throws with the gcd as witness.
long sturm_real_count(const IntPoly& a);

struct RootReport {
  long p = 0;
  long degree = 0;
  std::vector<long> rational_roots;
  long real_root_count = 0;
  bool all_real = false;
};

/// Root analysis of f(x) - x for the given prime.
RootReport roots_report(long p);

struct SpecialValuesReport {
  long n_max = 0;
  bool ok = false;
  long first_bad = -1;  // -1 when every n passed
};

/// Checks m_n(2) = n+1 and the six-periodic table of m_n(1)
/// (1, 1, 0, -1, -1, 0 for n = 0..5 mod 6) for 0 <= n <= n_max.
SpecialValuesReport special_values_report(long n_max);

}  // namespace k0ring
