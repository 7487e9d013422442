#include "k0ring/fp_poly.hpp"

#include <stdexcept>

namespace k0ring {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

FpPoly FpPoly::monomial(u32 p, std::size_t deg, u32 coeff) {
  FpPoly r{p, {}};
  coeff %= p;
  if (coeff == 0) return r;
  r.c.assign(deg + 1, 0);
  r.c[deg] = coeff;
  return r;
}

std::string FpPoly::to_string() const {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

static void check_same_p(const FpPoly& a, const FpPoly& b) {
  if (a.p != b.p) throw std::invalid_argument("FpPoly characteristic mismatch");
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    u32 v = a.coeff(i) + b.coeff(i);
    r.c[i] = v >= a.p ? v - a.p : v;
  }
  r.trim();
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    u32 av = a.coeff(i), bv = b.coeff(i);
    r.c[i] = av >= bv ? av - bv : av + a.p - bv;
  }
  r.trim();
  return r;
}

FpPoly fp_scale(const FpPoly& a, u32 s) {
  s %= a.p;
  FpPoly r{a.p, {}};
  if (s == 0) return r;
  r.c.resize(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = static_cast<u32>(u64(a.c[i]) * s % a.p);
  r.trim();
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  FpPoly r{a.p, {}};
  if (a.is_zero() || b.is_zero()) return r;
  const u64 p = a.p;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  if (p < 65536) {
    // (p-1)^2 < 2^32, so a u64 accumulator cannot overflow for any degree
    // this library touches; reduce once per output coefficient.
    std::vector<u64> acc(r.c.size(), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      const u64 av = a.c[i];
      for (std::size_t j = 0; j < b.c.size(); ++j)
        if (b.c[j]) acc[i + j] += av * b.c[j];
    }
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = static_cast<u32>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      const u64 av = a.c[i];
      for (std::size_t j = 0; j < b.c.size(); ++j)
        if (b.c[j]) r.c[i + j] = static_cast<u32>((r.c[i + j] + av * b.c[j]) % p);
    }
  }
  r.trim();
  return r;
}

u32 fp_inv(u32 a, u32 p) {
  // Extended Euclid.
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("fp_inv: not invertible");
  if (t < 0) t += p;
  return static_cast<u32>(t);
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  if (b.is_zero()) throw std::invalid_argument("fp_divmod: division by zero");
  const u64 p = a.p;
  if (a.degree() < b.degree()) return {FpPoly::zero(a.p), a};
  std::vector<std::pair<std::size_t, u32>> bnz;
  for (std::size_t j = 0; j + 1 < b.c.size(); ++j)
    if (b.c[j]) bnz.emplace_back(j, b.c[j]);
  const u32 lc_inv = fp_inv(b.c.back(), a.p);
  const std::size_t bd = b.c.size() - 1;
  std::vector<u32> rem = a.c;
  FpPoly quo{a.p, std::vector<u32>(rem.size() - bd, 0)};
  for (std::size_t i = rem.size(); i-- > bd;) {
    if (rem[i] == 0) continue;
    const u32 qc = static_cast<u32>(u64(rem[i]) * lc_inv % p);
    quo.c[i - bd] = qc;
    rem[i] = 0;
    for (const auto& [j, bc] : bnz) {
      u64 sub = u64(qc) * bc % p;
      u32& slot = rem[i - bd + j];
      slot = slot >= sub ? slot - static_cast<u32>(sub) : slot + a.p - static_cast<u32>(sub);
    }
  }
  rem.resize(bd);
  FpPoly r{a.p, std::move(rem)};
  r.trim();
  quo.trim();
  return {std::move(quo), std::move(r)};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.c.back() != 1) a = fp_scale(a, fp_inv(a.c.back(), a.p));
  return a;
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly r{a.p, {}};
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = static_cast<u32>(u64(a.c[i]) * (i % a.p) % a.p);
  r.trim();
  return r;
}

FpPoly fp_frobenius_dilate(const FpPoly& a) {
  FpPoly r{a.p, {}};
  if (a.is_zero()) return r;
  r.c.assign((a.c.size() - 1) * a.p + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * a.p] = a.c[i];
  return r;
}

u32 fp_eval(const FpPoly& a, u32 x) {
  u64 acc = 0;
  const u64 p = a.p;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = (acc * x + a.c[i]) % p;
  return static_cast<u32>(acc);
}

FpPoly fp_compose(const FpPoly& outer, const FpPoly& inner) {
  FpPoly acc = FpPoly::zero(outer.p);
  for (std::size_t i = outer.c.size(); i-- > 0;) {
    acc = fp_mul(acc, inner);
    if (outer.c[i]) acc = fp_add(acc, FpPoly{outer.p, {outer.c[i]}});
  }
  return acc;
}

FpPoly fp_m_image(u32 p, long n) {
  if (n < 0) throw std::invalid_argument("fp_m_image requires n >= 0");
  if (n == 0) return FpPoly::one(p);
  std::vector<u32> prev2(n + 1, 0), prev(n + 1, 0), next(n + 1, 0);
  prev2[0] = 1;  // m_0
  prev[1] = 1;   // m_1
  for (long k = 2; k <= n; ++k) {
    // next = x*prev - prev2, degree k
    next[0] = prev2[0] ? p - prev2[0] : 0;
    for (long i = 1; i <= k; ++i) {
      u32 av = prev[i - 1], bv = prev2[i];
      next[i] = av >= bv ? av - bv : av + p - bv;
    }
    std::swap(prev2, prev);
    std::swap(prev, next);
  }
  FpPoly r{p, std::move(prev)};
  r.trim();
  return r;
}

FpPoly fp_m_diff_image(u32 p, long e) {
  if (e < 2) throw std::invalid_argument("fp_m_diff_image requires e >= 2");
  std::vector<u32> prev2(e + 1, 0), prev(e + 1, 0), next(e + 1, 0);
  prev2[0] = 1;
  prev[1] = 1;
  for (long k = 2; k <= e; ++k) {
    next[0] = prev2[0] ? p - prev2[0] : 0;
    for (long i = 1; i <= k; ++i) {
      u32 av = prev[i - 1], bv = prev2[i];
      next[i] = av >= bv ? av - bv : av + p - bv;
    }
    std::swap(prev2, prev);
    std::swap(prev, next);
  }
  // prev = m_e, prev2 = m_{e-1}, next = m_{e-2}
  FpPoly r{p, {}};
  r.c.resize(e + 1);
  for (long i = 0; i <= e; ++i) {
    u32 av = prev[i], bv = next[i];
    r.c[i] = av >= bv ? av - bv : av + p - bv;
  }
  r.trim();
  return r;
}

}  // namespace k0ring
