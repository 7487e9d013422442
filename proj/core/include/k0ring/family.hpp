#pragma once

#include "k0ring/int_poly.hpp"

namespace k0ring {

/// m_0 = 1, m_1 = x, m_2 = x^2 - 1, m_n = x*m_{n-1} - m_{n-2}.
/// Monic of degree n. Throws on negative n ("use sym_class for negative
/// indices"): the signed extension lives in the ring module.
IntPoly m_recur(long n);

/// Closed form m_n = sum_j (-1)^j C(n-j, j) x^(n-2j).
IntPoly m_closed(long n);

/// m_n - m_{n-2} = sum_j (-1)^j (n/(n-j)) C(n-j, j) x^(n-2j), n >= 2.
/// Coefficients are computed as n*(n-j-1)!/(j!*(n-2j)!) with exact
/// factorials and exact division; no rational arithmetic.
IntPoly m_diff_closed(long n);

/// The monic degree-p polynomial f = m_p - m_{p-2} (Dickson D_p(x,1)).
/// Throws std::invalid_argument("p must be prime") on composite input.
IntPoly f_base(long p);

/// i-fold self-composition of f_base(p); f^[0] = x. Monic of degree p^i.
IntPoly f_iter(long p, long i);

/// Closed form of the g-fold composite: the degree-q sum with q = p^g.
/// Equals f_iter(p, g) coefficient for coefficient.
IntPoly f_g_closed(long p, long g);

bool is_prime(long p);

}  // namespace k0ring
