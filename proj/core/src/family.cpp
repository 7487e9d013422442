#include "k0ring/family.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace k0ring {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Session memo for small indices; larger ones are computed with a rolling
// pair so the cache cannot grow without bound.
constexpr long kMemoCap = 1024;
std::mutex g_m_mutex;
std::vector<IntPoly> g_m_cache;

IntPoly m_step(const IntPoly& prev, const IntPoly& prev2) {
  return prev.shifted_up(1) - prev2;
}

}  // namespace

IntPoly m_recur(long n) {
  if (n < 0) throw std::invalid_argument("use sym_class for negative indices");
  {
    std::lock_guard<std::mutex> lock(g_m_mutex);
    if (g_m_cache.empty()) {
      g_m_cache.push_back(IntPoly::one());
      g_m_cache.push_back(IntPoly::x());
    }
    long target = std::min(n, kMemoCap);
    while (static_cast<long>(g_m_cache.size()) <= target) {
      std::size_t k = g_m_cache.size();
      g_m_cache.push_back(m_step(g_m_cache[k - 1], g_m_cache[k - 2]));
    }
    if (n <= kMemoCap) return g_m_cache[n];
  }
  IntPoly prev2 = m_recur(kMemoCap - 1), prev = m_recur(kMemoCap);
  for (long k = kMemoCap + 1; k <= n; ++k) {
    IntPoly next = m_step(prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

IntPoly m_closed(long n) {
  if (n < 0) throw std::invalid_argument("use sym_class for negative indices");
  std::vector<BigInt> c(n + 1);
  for (long j = 0; 2 * j <= n; ++j) {
    BigInt b = binomial(n - j, j);
    c[n - 2 * j] = (j % 2 == 0) ? b : -b;
  }
  return IntPoly{std::move(c)};
}

IntPoly m_diff_closed(long n) {
  if (n < 2) throw std::invalid_argument("m_diff_closed requires n >= 2");
  std::vector<BigInt> c(n + 1);
  // coeff(j) = n * (n-j-1)! / (j! * (n-2j)!), maintained incrementally:
  // numerator N_j = n*(n-j-1)!, denominator D_j = j!*(n-2j)!.
  BigInt num;
  mpz_fac_ui(num.get_mpz_t(), n - 1);
  num *= n;
  BigInt den;
  mpz_fac_ui(den.get_mpz_t(), n);
  for (long j = 0; 2 * j <= n; ++j) {
    if (j > 0) {
      mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), n - j);
      den *= j;
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), n - 2 * j + 1);
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), n - 2 * j + 2);
    }
    BigInt coeff;
    assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
    mpz_divexact(coeff.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    c[n - 2 * j] = (j % 2 == 0) ? coeff : -coeff;
  }
  return IntPoly{std::move(c)};
}

IntPoly f_base(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  return m_diff_closed(p);
}

IntPoly f_iter(long p, long i) {
  if (i < 0) throw std::invalid_argument("f_iter requires i >= 0");
  IntPoly result = IntPoly::x();
  if (i == 0) return result;
  IntPoly f = f_base(p);
  result = f;
  for (long k = 2; k <= i; ++k) result = compose(f, result);
  return result;
}

IntPoly f_g_closed(long p, long g) {
  if (g < 1) throw std::invalid_argument("f_g_closed requires g >= 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  long q = 1;
  for (long k = 0; k < g; ++k) {
    if (q > (1L << 40) / p) throw std::invalid_argument("p^g too large");
    q *= p;
  }
  return m_diff_closed(q);
}

}  // namespace k0ring
