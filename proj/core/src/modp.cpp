#include "k0ring/modp.hpp"

#include <stdexcept>

namespace k0ring {

using u32 = std::uint32_t;

FpPoly to_fp(const IntPoly& a, u32 p) {
  if (p < 2) throw std::invalid_argument("to_fp requires p >= 2");
  FpPoly r{p, {}};
  r.c.resize(a.size());
  BigInt tmp;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_mod_ui(tmp.get_mpz_t(), a.coeffs()[i].get_mpz_t(), p);
    r.c[i] = static_cast<u32>(tmp.get_ui());
  }
  r.trim();
  return r;
}

static FpPoly xq_minus_x(u32 p, long q) {
  FpPoly r{p, {}};
  r.c.assign(q + 1, 0);
  r.c[1] = p - 1;
  r.c[q] = 1;
  return r;
}

bool verify_xq_congruence(const GroundField& F) {
  return to_fp(F.modulus(), static_cast<u32>(F.p())) ==
         xq_minus_x(static_cast<u32>(F.p()), F.q());
}

static long checked_pow(long p, long g, long cap) {
  long q = 1;
  for (long i = 0; i < g; ++i) {
    if (q > cap / p) throw std::invalid_argument("p^g exceeds the supported range");
    q *= p;
  }
  return q;
}

bool verify_xq_congruence(long p, long g) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  long q = checked_pow(p, g, 1L << 20);
  FpPoly image = fp_m_diff_image(static_cast<u32>(p), q);  // f^[g] mod p
  FpPoly shifted = fp_sub(image, FpPoly::x(static_cast<u32>(p)));
  return shifted == xq_minus_x(static_cast<u32>(p), q);
}

long mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius requires n >= 1");
  long result = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

long psi_count(long p, long d) {
  if (d < 1) throw std::invalid_argument("psi_count requires d >= 1");
  BigInt sum = 0;
  for (long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long m = mobius(e);
    if (m == 0) continue;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, d / e);
    sum += m * pw;
  }
  BigInt res = sum / d;
  if (!res.fits_slong_p()) throw std::overflow_error("psi_count overflow");
  return res.get_si();
}

std::map<long, long> ddf_degrees(const FpPoly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("ddf_degrees requires a nonconstant polynomial");
  FpPoly sf_witness = fp_gcd(a, fp_derivative(a));
  if (sf_witness.degree() > 0) throw std::invalid_argument("input must be square-free");

  std::map<long, long> counts;
  FpPoly rest = a;
  if (rest.c.back() != 1) rest = fp_scale(rest, fp_inv(rest.c.back(), rest.p));
  FpPoly h = FpPoly::x(a.p);  // x^(p^d) mod rest, maintained across stages
  for (long d = 1; !rest.is_zero() && rest.degree() > 0; ++d) {
    if (2 * d > rest.degree()) {
      // Whatever remains is a single irreducible factor.
      counts[rest.degree()] += 1;
      break;
    }
    h = fp_frobenius_dilate(h);
    if (h.degree() >= rest.degree()) h = fp_mod(h, rest);
    FpPoly probe = fp_sub(h, FpPoly::x(a.p));
    FpPoly g = probe.is_zero() ? rest : fp_gcd(rest, probe);
    if (g.degree() > 0) {
      counts[d] += g.degree() / d;
      rest = fp_divmod(rest, g).first;
      if (h.degree() >= rest.degree() && rest.degree() > 0) h = fp_mod(h, rest);
    }
  }
  return counts;
}

FiberReport fiber_report(long p, long g) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (g < 1) throw std::invalid_argument("g must be a positive integer");
  FiberReport rep;
  rep.p = p;
  rep.g = g;
  rep.q = checked_pow(p, g, 1L << 20);

  long dim_sum = 0;
  for (long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    long psi = psi_count(p, d);
    rep.pairs.emplace_back(d, psi);
    dim_sum += d * psi;
  }
  rep.dimension_sum_ok = dim_sum == rep.q;

  FpPoly image = fp_m_diff_image(static_cast<u32>(p), rep.q);  // f^[g] mod p
  FpPoly modulus_image = fp_sub(image, FpPoly::x(static_cast<u32>(p)));
  rep.congruence_ok = modulus_image == xq_minus_x(static_cast<u32>(p), rep.q);

  rep.ddf = ddf_degrees(modulus_image);
  std::map<long, long> expected;
  for (const auto& [d, psi] : rep.pairs) expected[d] = psi;
  rep.ddf_match = rep.ddf == expected;
  return rep;
}

FiberReport fiber_report(const GroundField& F) {
  FiberReport rep = fiber_report(F.p(), F.g());
  // With the exact modulus available, cross-check the recurrence image
  // against the literal coefficientwise reduction.
  FpPoly literal = to_fp(F.modulus(), static_cast<u32>(F.p()));
  FpPoly image = fp_sub(fp_m_diff_image(static_cast<u32>(F.p()), F.q()),
                        FpPoly::x(static_cast<u32>(F.p())));
  if (!(literal == image)) throw std::logic_error("mod-p image mismatch between routes");
  rep.congruence_ok = rep.congruence_ok && verify_xq_congruence(F);
  return rep;
}

bool twist_power_congruence(long p, long g, long i) {
  if (i < 0 || i > g) throw std::invalid_argument("twist_power_congruence requires 0 <= i <= g");
  long pi = checked_pow(p, i, 1L << 20);
  if (i == 0) return true;  // f^[0] = x = x^(p^0)
  FpPoly image = fp_m_diff_image(static_cast<u32>(p), pi);
  return image == FpPoly::monomial(static_cast<u32>(p), pi);
}

bool twist_power_congruence(const GroundField& F, long i) {
  if (i < 0 || i > F.g())
    throw std::invalid_argument("twist_power_congruence requires 0 <= i <= g");
  FpPoly literal = to_fp(F.f_iterate(i), static_cast<u32>(F.p()));
  bool lit = literal == FpPoly::monomial(static_cast<u32>(F.p()),
                                         static_cast<std::size_t>(F.f_iterate(i).degree()));
  bool rec = twist_power_congruence(F.p(), F.g(), i);
  if (lit != rec) throw std::logic_error("mod-p twist image mismatch between routes");
  return lit;
}

}  // namespace k0ring
