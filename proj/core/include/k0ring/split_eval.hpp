#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "k0ring/ring.hpp"

namespace k0ring {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Exact equality checking of identities among the classes M_n by
/// evaluation at the full root set of the presentation modulus in split
/// prime fields.
///
/// For a prime ell == 1 (mod lcm(q-1, q+1)), F_ell contains the (q-1)-th
/// and (q+1)-th roots of unity; the values lambda + lambda^-1 give q
/// elements that are verified at construction to be distinct roots of
/// f^[g](x) - x mod ell, so the modulus splits into distinct linear factors
/// there. A residue of degree < q that vanishes at all q roots is therefore
/// zero mod ell, and combining enough primes that their product exceeds
/// twice a proven coefficient bound turns per-root equalities into exact
/// equality over Z. The values sigma_n(v) follow the plain three-term
/// recurrence s_n = v*s_{n-1} - s_{n-2} because the modulus vanishes at v.
class SplitEvaluator {
 public:
  /// bound_bits: proven bound so that every compared coefficient difference
  /// has absolute value < 2^bound_bits. Primes are accumulated until their
  /// product exceeds 2^(bound_bits + 1).
  SplitEvaluator(const GroundField& F, std::size_t bound_bits, std::uint64_t seed);

  std::size_t prime_count() const { return ells_.size(); }
  const std::vector<std::uint64_t>& primes() const { return ells_; }

  struct View {
    std::uint64_t ell;
    const std::vector<std::uint64_t>& roots;  // size q
    const std::vector<std::uint64_t>& f_at;   // f(v) per root
    /// sigma_n values at all roots; n must be one of the requested indices.
    const std::vector<std::uint64_t>& s(long n) const;

    View(std::uint64_t e, const std::vector<std::uint64_t>& r,
         const std::vector<std::uint64_t>& f,
         const std::vector<std::pair<long, std::vector<std::uint64_t>>>& rows)
        : ell(e), roots(r), f_at(f), rows_(rows) {}

   private:
    const std::vector<std::pair<long, std::vector<std::uint64_t>>>& rows_;
  };

  /// Walks the recurrence once per prime up to max(needed), retaining the
  /// rows for `needed` (ascending, unique, nonnegative), and hands each
  /// prime's tables to fn.
  void for_each_prime(const std::vector<long>& needed,
                      const std::function<void(const View&)>& fn) const;

 private:
  struct SplitPrime {
    std::uint64_t ell;
    std::vector<std::uint64_t> roots;
    std::vector<std::uint64_t> f_at;
  };

  long q_;
  std::vector<std::uint64_t> ells_;
  std::vector<SplitPrime> primes_;
};

}  // namespace k0ring
