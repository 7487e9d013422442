#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace k0ring {

/// Arbitrary-precision signed integer. All coefficient arithmetic in the
/// library is exact; nothing here ever rounds.
using BigInt = mpz_class;

inline std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace k0ring
