#pragma once

#include <map>
#include <string>
#include <string_view>

#include "k0ring/bigint.hpp"
#include "k0ring/int_poly.hpp"

namespace k0ring {

/// Symmetric Laurent polynomial over Z: invariant under t -> 1/t.
///
/// Formal characters of SL2 classes live here (the weight lattice is Z and
/// the Weyl group acts by negation). The exponent map stores both signs and
/// never stores zero coefficients; construction from asymmetric data throws.
class SymLaurent {
 public:
  SymLaurent() = default;

  /// Builds from an exponent -> coefficient map, checking the symmetry
  /// invariant. Throws std::invalid_argument on asymmetric input.
  static SymLaurent from_map(std::map<long, BigInt> coeffs);

  /// c * (t^e + t^-e) for e != 0, or the constant c for e = 0.
  static SymLaurent symmetric_term(long e, BigInt c);
  static SymLaurent constant(BigInt c) { return symmetric_term(0, std::move(c)); }

  bool is_zero() const { return c_.empty(); }
  const std::map<long, BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(long e) const;
  long max_exponent() const;

  SymLaurent operator-() const;
  SymLaurent operator+(const SymLaurent& o) const;
  SymLaurent operator-(const SymLaurent& o) const;
  SymLaurent operator*(const SymLaurent& o) const;
  SymLaurent& operator+=(const SymLaurent& o) { return *this = *this + o; }
  SymLaurent scaled(const BigInt& s) const;
  bool operator==(const SymLaurent& o) const { return c_ == o.c_; }
  bool operator!=(const SymLaurent& o) const { return c_ != o.c_; }

  /// Exponent dilation t^e -> t^(m*e); the Frobenius action on characters.
  SymLaurent substitute_power(long m) const;

  /// Multiplies by t^N with N = -(minimum exponent) and returns the result
  /// as an ordinary polynomial in t; zero maps to zero.
  IntPoly clear_to_poly() const;

  /// Sum of all coefficients (the value at t = 1; dimension of a character).
  BigInt eval_at_one() const;

  /// e.g. "t^3 + t + t^-1 + t^-3"; parser accepts the same grammar.
  std::string to_string() const;
  static SymLaurent parse(std::string_view text);

 private:
  std::map<long, BigInt> c_;
  void prune();
};

}  // namespace k0ring
