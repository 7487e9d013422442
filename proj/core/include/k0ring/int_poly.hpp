#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k0ring/bigint.hpp"

namespace k0ring {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
///
/// Coefficient i is the coefficient of x^i; trailing zeros are trimmed, so
/// the zero polynomial is the empty sequence and otherwise the last
/// coefficient is nonzero. Values are immutable in spirit: every operation
/// returns a fresh polynomial, so instances can be shared across threads.
class IntPoly {
 public:
  /// degree() of the zero polynomial. A sentinel, never valid in arithmetic.
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly one() { return constant(1); }
  static IntPoly x() { return monomial(1, 1); }
  static IntPoly constant(BigInt v);
  static IntPoly monomial(BigInt coeff, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  /// Number of stored coefficients (degree + 1, or 0 for the zero poly).
  std::size_t size() const { return c_.size(); }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

  /// Coefficient of x^i (zero beyond the stored range).
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly scaled(const BigInt& s) const;
  /// Multiplication by x^k.
  IntPoly shifted_up(std::size_t k) const;

  BigInt eval(const BigInt& point) const;
  IntPoly derivative() const;

  /// Gcd of all coefficients, normalized nonnegative; 0 for the zero poly.
  BigInt content() const;
  IntPoly primitive_part() const;

  std::size_t max_coeff_bits() const;
  BigInt l1_norm() const;

  /// Human form, e.g. "x^4 - 4*x^2 + 2"; "0" for zero.
  std::string to_string() const;
  /// List form "[c0,c1,...,cd]" with decimal literals; "[]" for zero.
  std::string to_list_string() const;
  /// Accepts both the human form and the list form.
  static IntPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact division with remainder by a monic divisor of degree >= 1:
/// a = q*m + r with degree(r) < degree(m).
/// Throws std::invalid_argument("divisor must be monic nonconstant") otherwise.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& m);

/// outer evaluated at inner (Horner over IntPoly arithmetic).
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

}  // namespace k0ring
