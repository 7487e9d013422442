#pragma once

#include "k0ring/ring.hpp"
#include "k0ring/steinberg.hpp"
#include "k0ring/sym_laurent.hpp"

namespace k0ring {

/// Formal character of Sym^k: sum_{j=0..k} t^(k-2j) for k >= 0, zero for
/// k = -1, and -char_sym(-k-2) for k <= -2 (same sign rule as sym_class).
SymLaurent char_sym(long k);

/// sum over tuples of mult * prod_i char_sym(k_i) with exponents scaled by
/// p^i at level i (the Frobenius action on characters).
SymLaurent char_of_vector(const SteinbergVector& v);

/// char_of_vector(decompose(a)).
SymLaurent char_of_elt(const RingElt& a);

/// D(t) = (t^(q-1) - 1)(t^(q+1) - 1) / (t^gcd(q-1,q+1) - 1): the monic
/// polynomial whose roots are the eigenvalue parameters of the p-regular
/// classes of SL2(F_q), each exactly once.
IntPoly brauer_modulus(long q);

/// Brauer-character equality: true iff c - d, cleared to an ordinary
/// polynomial, is divisible by brauer_modulus(q) — equivalently, c - d
/// vanishes at every (q-1)-th and (q+1)-th root of unity. Exact polynomial
/// divisibility; no numeric evaluation anywhere.
bool brauer_equal(const SymLaurent& c, const SymLaurent& d, const GroundField& F);

}  // namespace k0ring
