#include "k0ring/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace k0ring {

SymLaurent char_sym(long k) {
  if (k == -1) return SymLaurent{};
  if (k < 0) return -char_sym(-k - 2);
  std::map<long, BigInt> c;
  for (long j = 0; j <= k; ++j) c[k - 2 * j] += 1;
  return SymLaurent::from_map(std::move(c));
}

SymLaurent char_of_vector(const SteinbergVector& v) {
  const GroundField& F = *v.field();
  SymLaurent total;
  for (long n = 0; n < v.q(); ++n) {
    if (v.at(n) == 0) continue;
    SymLaurent tuple_char = SymLaurent::constant(1);
    long rest = n, scale = 1;
    for (long i = 0; i < F.g(); ++i) {
      long d = rest % F.p();
      rest /= F.p();
      if (d != 0) tuple_char = tuple_char * char_sym(d).substitute_power(scale);
      scale *= F.p();
    }
    total += tuple_char.scaled(v.at(n));
  }
  return total;
}

SymLaurent char_of_elt(const RingElt& a) { return char_of_vector(decompose(a)); }

IntPoly brauer_modulus(long q) {
  if (q < 2) throw std::invalid_argument("brauer_modulus requires q >= 2");
  // (t^(q-1) - 1)(t^(q+1) - 1) = t^2q - t^(q+1) - t^(q-1) + 1
  std::vector<BigInt> c(2 * q + 1);
  c[0] = 1;
  c[q - 1] = -1;
  c[q + 1] += -1;
  c[2 * q] = 1;
  IntPoly prod{std::move(c)};
  long gcd = std::gcd(q - 1, q + 1);  // 2 for odd q, 1 for even q
  IntPoly divisor = IntPoly::monomial(1, gcd) - IntPoly::one();
  auto [quo, rem] = divmod_monic(prod, divisor);
  if (!rem.is_zero()) throw std::logic_error("brauer_modulus: inexact division");
  return quo;
}

bool brauer_equal(const SymLaurent& c, const SymLaurent& d, const GroundField& F) {
  SymLaurent diff = c - d;
  if (diff.is_zero()) return true;
  IntPoly cleared = diff.clear_to_poly();
  IntPoly D = brauer_modulus(F.q());
  if (cleared.degree() < D.degree()) return false;
  return divmod_monic(cleared, D).second.is_zero();
}

}  // namespace k0ring
