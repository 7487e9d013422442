#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace k0ring {

/// Dense polynomial over F_p, p a prime below 2^31. Coefficients are kept
/// reduced in [0, p) and trailing zeros trimmed; the zero polynomial is the
/// empty vector (degree() == -1, used only as an emptiness marker here).
struct FpPoly {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const FpPoly& o) const = default;
  std::string to_string() const;

  static FpPoly zero(std::uint32_t p) { return FpPoly{p, {}}; }
  static FpPoly one(std::uint32_t p) { return FpPoly{p, {1}}; }
  static FpPoly x(std::uint32_t p) { return FpPoly{p, {0, 1}}; }
  static FpPoly monomial(std::uint32_t p, std::size_t deg, std::uint32_t coeff = 1);
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, std::uint32_t s);

/// Division with remainder; the divisor may have any nonzero leading
/// coefficient (it is inverted mod p). The inner loop walks only the
/// divisor's nonzero terms, so sparse divisors cost what they should.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);

/// Monic gcd (zero if both inputs are zero).
FpPoly fp_gcd(FpPoly a, FpPoly b);

FpPoly fp_derivative(const FpPoly& a);

/// The p-th power map: sum a_i x^i  ->  sum a_i x^(p*i). Exact in F_p[x].
FpPoly fp_frobenius_dilate(const FpPoly& a);

std::uint32_t fp_eval(const FpPoly& a, std::uint32_t x);

/// Horner composition outer(inner) in F_p[x].
FpPoly fp_compose(const FpPoly& outer, const FpPoly& inner);

/// Image of m_n in F_p[x] via the rolling three-term recurrence.
FpPoly fp_m_image(std::uint32_t p, long n);

/// Image of m_e - m_{e-2} in F_p[x] (e >= 2) in one rolling walk; with
/// e = p^i this is the mod-p image of the i-fold composite f^[i].
FpPoly fp_m_diff_image(std::uint32_t p, long e);

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace k0ring
