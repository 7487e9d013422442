#include "k0ring/analysis.hpp"

#include <stdexcept>

#include "k0ring/family.hpp"

namespace k0ring {

std::vector<long> small_rational_roots(const IntPoly& a, long bound) {
  if (a.is_zero()) throw std::invalid_argument("small_rational_roots requires a nonzero polynomial");
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  std::vector<long> roots;
  for (long r = -bound; r <= bound; ++r)
    if (a.eval(r) == 0) roots.push_back(r);
  return roots;
}

namespace {

int sign_of(const BigInt& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Pseudo-remainder scaled so that the input is only ever multiplied by the
// positive quantity |lc(B)|; Sturm sign data survives untouched.
IntPoly positive_pseudo_rem(IntPoly A, const IntPoly& B) {
  const int db = B.degree();
  BigInt lcb_abs = abs(B.leading());
  const int lcb_sign = sign_of(B.leading());
  while (!A.is_zero() && A.degree() >= db) {
    BigInt c = A.leading() * lcb_sign;
    A = A.scaled(lcb_abs) - B.scaled(c).shifted_up(A.degree() - db);
  }
  return A;
}

IntPoly normalize_positive(const IntPoly& a) {
  return (!a.is_zero() && a.leading() < 0) ? -a : a;
}

}  // namespace

IntPoly poly_gcd_z(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return normalize_positive(b);
  if (b.is_zero()) return normalize_positive(a);
  BigInt c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly A = a.primitive_part(), B = b.primitive_part();
  while (!B.is_zero()) {
    if (B.degree() == 0) {
      A = IntPoly::one();
      break;
    }
    IntPoly R = positive_pseudo_rem(A, B).primitive_part();
    A = std::move(B);
    B = std::move(R);
  }
  return normalize_positive(A).scaled(c);
}

long sturm_real_count(const IntPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("sturm_real_count requires a nonzero polynomial");
  if (a.degree() == 0) return 0;
  IntPoly witness = poly_gcd_z(a, a.derivative());
  if (witness.degree() >= 1)
    throw std::invalid_argument("input must be square-free; gcd witness: " + witness.to_string());

  std::vector<IntPoly> chain;
  chain.push_back(a.primitive_part());
  chain.push_back(a.derivative().primitive_part());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly next = -positive_pseudo_rem(chain[chain.size() - 2], chain.back());
    chain.push_back(next.primitive_part());
  }
  if (chain.back().is_zero()) chain.pop_back();

  auto variations = [&](bool at_plus_infinity) {
    int count = 0, prev = 0;
    for (const IntPoly& s : chain) {
      int sg = sign_of(s.leading());
      if (!at_plus_infinity && s.degree() % 2 == 1) sg = -sg;
      if (prev != 0 && sg != 0 && sg != prev) ++count;
      if (sg != 0) prev = sg;
    }
    return count;
  };
  return variations(false) - variations(true);
}

RootReport roots_report(long p) {
  RootReport rep;
  rep.p = p;
  IntPoly a = f_base(p) - IntPoly::x();
  rep.degree = a.degree();
  rep.rational_roots = small_rational_roots(a, 2);
  rep.real_root_count = sturm_real_count(a);
  rep.all_real = rep.real_root_count == rep.degree;
  return rep;
}

SpecialValuesReport special_values_report(long n_max) {
  SpecialValuesReport rep;
  rep.n_max = n_max;
  rep.ok = true;
  static const long kTable1[6] = {1, 1, 0, -1, -1, 0};  // m_n(1) by n mod 6
  long a2 = 1, b2 = 2;  // m_0(2), m_1(2)
  long a1 = 1, b1 = 1;  // m_0(1), m_1(1)
  for (long n = 0; n <= n_max; ++n) {
    long v2 = n == 0 ? a2 : (n == 1 ? b2 : 0);
    long v1 = n == 0 ? a1 : (n == 1 ? b1 : 0);
    if (n >= 2) {
      v2 = 2 * b2 - a2;
      a2 = b2;
      b2 = v2;
      v1 = 1 * b1 - a1;
      a1 = b1;
      b1 = v1;
    }
    if (v2 != n + 1 || v1 != kTable1[n % 6]) {
      rep.ok = false;
      rep.first_bad = n;
      break;
    }
  }
  return rep;
}

}  // namespace k0ring
