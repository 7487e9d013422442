#include "k0ring/split_eval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k0ring {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases decide primality for every n < 3.3 * 10^24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> fs;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Element of multiplicative order exactly r in F_ell (r | ell-1), or 0 if
// the seeded attempts fail (caller then skips the prime).
u64 element_of_order(u64 ell, long r, u64& state) {
  if (r == 1) return 1;
  std::vector<long> fs = prime_factors(r);
  for (int attempt = 0; attempt < 64; ++attempt) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    u64 a = 2 + state % (ell - 3);
    u64 c = powmod_u64(a, (ell - 1) / r, ell);
    if (c == 1) continue;
    bool exact = true;
    for (long f : fs) {
      if (powmod_u64(c, r / f, ell) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return c;
  }
  return 0;
}

}  // namespace

SplitEvaluator::SplitEvaluator(const GroundField& F, std::size_t bound_bits, u64 seed) {
  q_ = F.q();
  const long q = q_;
  const u64 L = std::lcm<u64>(q - 1 > 0 ? q - 1 : 1, q + 1);

  // f's coefficients are tiny; reduced per prime below.
  const IntPoly& f = F.f();

  u64 rng_state = seed ^ 0x9e3779b97f4a7c15ull;
  std::size_t bits_collected = 0;
  u64 k = ((u64(1) << 62) - 1) / L;
  while (bits_collected < bound_bits + 2 && k > 1) {
    const u64 ell = k * L + 1;
    --k;
    if (!is_prime_u64(ell)) continue;

    SplitPrime sp;
    sp.ell = ell;
    u64 lambda = element_of_order(ell, q - 1 > 0 ? q - 1 : 1, rng_state);
    u64 eta = element_of_order(ell, q + 1, rng_state);
    if (lambda == 0 || eta == 0) continue;

    std::vector<u64> vals;
    vals.reserve(2 * q + 2);
    auto push_orbit = [&](u64 zeta, long order) {
      u64 fwd = 1, bwd = 1;
      u64 inv = powmod_u64(zeta, ell - 2, ell);
      for (long j = 0; j < order; ++j) {
        u64 v = fwd + bwd;
        if (v >= ell) v -= ell;
        vals.push_back(v);
        fwd = mulmod_u64(fwd, zeta, ell);
        bwd = mulmod_u64(bwd, inv, ell);
      }
    };
    push_orbit(lambda, q - 1 > 0 ? q - 1 : 1);
    push_orbit(eta, q + 1);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (static_cast<long>(vals.size()) != q) continue;  // collision; skip prime

    // Verify each candidate is a fixed point of the g-fold f-iteration,
    // i.e. a root of the modulus mod ell.
    std::vector<u64> f_ell(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      BigInt c = f.coeffs()[i] % BigInt(static_cast<unsigned long>(ell));
      if (c < 0) c += static_cast<unsigned long>(ell);
      f_ell[i] = c.get_ui();
    }
    auto eval_f = [&](u64 x) {
      u64 acc = 0;
      for (std::size_t i = f_ell.size(); i-- > 0;) {
        acc = mulmod_u64(acc, x, ell);
        acc += f_ell[i];
        if (acc >= ell) acc -= ell;
      }
      return acc;
    };
    bool all_fixed = true;
    sp.f_at.resize(q);
    for (long r = 0; r < q; ++r) {
      u64 v = vals[r];
      u64 w = v;
      for (long i = 0; i < F.g(); ++i) {
        w = eval_f(w);
        if (i == 0) sp.f_at[r] = w;
      }
      if (w != v) {
        all_fixed = false;
        break;
      }
    }
    if (!all_fixed) continue;

    sp.roots = std::move(vals);
    std::size_t b = 0;  // floor(log2(ell)): ell > 2^b, so the product bound adds b bits
    for (u64 t = ell; t > 1; t >>= 1) ++b;
    bits_collected += b;
    ells_.push_back(ell);
    primes_.push_back(std::move(sp));
  }
  if (bits_collected < bound_bits + 2)
    throw std::runtime_error("split prime search exhausted (q too large?)");
}

const std::vector<u64>& SplitEvaluator::View::s(long n) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), n,
                             [](const auto& row, long key) { return row.first < key; });
  if (it == rows_.end() || it->first != n) throw std::logic_error("sigma row not retained");
  return it->second;
}

void SplitEvaluator::for_each_prime(const std::vector<long>& needed,
                                    const std::function<void(const View&)>& fn) const {
  if (needed.empty()) return;
  const long n_max = needed.back();
  const long q = q_;
  for (const SplitPrime& sp : primes_) {
    const u64 ell = sp.ell;
    std::vector<std::pair<long, std::vector<u64>>> rows;
    rows.reserve(needed.size());
    std::vector<u64> prev(q, 1);      // sigma_0 = 1 at every root
    std::vector<u64> cur = sp.roots;  // sigma_1 = v
    std::size_t want = 0;
    auto retain = [&](long n, const std::vector<u64>& row) {
      while (want < needed.size() && needed[want] == n) {
        rows.emplace_back(n, row);
        ++want;
      }
    };
    retain(0, prev);
    if (n_max >= 1) retain(1, cur);
    for (long n = 2; n <= n_max; ++n) {
      for (long r = 0; r < q; ++r) {
        u64 t = mulmod_u64(sp.roots[r], cur[r], ell);
        u64 pv = prev[r];
        prev[r] = t >= pv ? t - pv : t + ell - pv;
      }
      prev.swap(cur);
      retain(n, cur);
    }
    View view(ell, sp.roots, sp.f_at, rows);
    fn(view);
  }
}

}  // namespace k0ring
