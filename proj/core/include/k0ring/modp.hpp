#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "k0ring/fp_poly.hpp"
#include "k0ring/int_poly.hpp"
#include "k0ring/ring.hpp"

namespace k0ring {

/// Coefficientwise reduction mod p.
FpPoly to_fp(const IntPoly& a, std::uint32_t p);

/// f^[g](x) - x == x^q - x in F_p[x].
/// The GroundField form reduces the cached Z[x] modulus directly; the (p, g)
/// form computes the mod-p image with the rolling recurrence (m_q - m_{q-2})
/// and works far beyond the exact-construction cap. The two routes agree
/// wherever both apply (tested).
bool verify_xq_congruence(const GroundField& F);
bool verify_xq_congruence(long p, long g);

/// Number of monic irreducible polynomials of degree d over F_p:
/// (1/d) * sum_{e|d} mu(e) p^(d/e).
long psi_count(long p, long d);

/// Distinct-degree factorization of a square-free polynomial: counts of
/// irreducible factors per degree. Throws std::invalid_argument("input must
/// be square-free") when gcd(a, a') is nonconstant.
std::map<long, long> ddf_degrees(const FpPoly& a);

struct FiberReport {
  long p = 0, g = 0, q = 0;
  std::vector<std::pair<long, long>> pairs;  // (d, psi(d)) for d | g
  bool congruence_ok = false;     // modulus image == x^q - x
  bool ddf_match = false;         // ddf counts == {d -> psi(d) : d | g}
  bool dimension_sum_ok = false;  // sum d*psi(d) == q
  std::map<long, long> ddf;
  bool all_ok() const { return congruence_ok && ddf_match && dimension_sum_ok; }
};

/// The special/generic fiber structure: both fibers are split products of
/// psi(d) field factors of degree d over the divisors d of g.
FiberReport fiber_report(long p, long g);
FiberReport fiber_report(const GroundField& F);

/// f^[i] == x^(p^i) in F_p[x], 0 <= i <= g.
bool twist_power_congruence(long p, long g, long i);
bool twist_power_congruence(const GroundField& F, long i);

long mobius(long n);

}  // namespace k0ring
