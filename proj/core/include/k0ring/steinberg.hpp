#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "k0ring/ring.hpp"

namespace k0ring {

/// Digit tuple (k_0,...,k_{g-1}), 0 <= k_i <= p-1, indexing the irreducible
/// tensor-of-twisted-symmetric-powers modules. Bijective with {0,...,q-1}
/// via n = sum k_i p^i, which is also the degree of the basis polynomial.
struct SteinbergIndex {
  std::vector<int> k;

  static SteinbergIndex from_ordinal(long n, long p, long g);
  long ordinal(long p) const;
  /// "k0,k1,...,k{g-1}"
  std::string key() const;
  /// Digit rotation induced by one Frobenius twist: (k_{g-1}, k_0, ..., k_{g-2}).
  SteinbergIndex cyclic_shift() const;
};

/// Integer multiplicity vector over the Steinberg basis, length q, indexed
/// in base-p digit order.
class SteinbergVector {
 public:
  explicit SteinbergVector(FieldPtr F);

  const FieldPtr& field() const { return F_; }
  long q() const { return static_cast<long>(m_.size()); }
  const BigInt& at(long ordinal) const { return m_.at(ordinal); }
  void set(long ordinal, BigInt v) { m_.at(ordinal) = std::move(v); }
  void add(long ordinal, const BigInt& v) { m_.at(ordinal) += v; }
  const std::vector<BigInt>& mult() const { return m_; }

  SteinbergVector operator+(const SteinbergVector& o) const;
  bool operator==(const SteinbergVector& o) const;

  /// Map from tuple key to multiplicity, zeros omitted.
  std::map<std::string, BigInt> serialize() const;

 private:
  FieldPtr F_;
  std::vector<BigInt> m_;
};

/// Residue polynomial of the basis element with the given digits:
/// prod_i m_{k_i}(f^[i]); monic of degree sum k_i p^i < q, hence already
/// canonical. Throws on digits outside [0, p-1].
IntPoly basis_poly(const SteinbergIndex& idx, const FieldPtr& F);

/// Table access by ordinal; built and cached lazily per (p, g).
const IntPoly& basis_poly_by_ordinal(const FieldPtr& F, long ordinal);

/// The factor m_d(f^[level]), cached with the basis table.
const IntPoly& basis_factor(const FieldPtr& F, long level, long digit);

/// Unique integer coordinates over the basis: back-substitution along the
/// degree filtration (the change-of-basis matrix is unitriangular over Z).
SteinbergVector decompose(const RingElt& a);

/// Inverse of decompose: sum of mult[idx] * basis_poly(idx).
RingElt compose(const SteinbergVector& v);

/// Jordan-Hoelder multiplicities of Sym^k, k >= 0. Verifies nonnegativity
/// and the dimension identity sum mult * prod(k_i + 1) == k + 1 and throws
/// std::logic_error on violation (an implementation bug, not bad input).
SteinbergVector jh_sym(long k, const FieldPtr& F);

/// Evaluation of the residue at 2: the dimension homomorphism.
BigInt dim_class(const RingElt& a);

/// prod (k_i + 1) for the tuple with the given ordinal.
BigInt tuple_dimension(const GroundField& F, long ordinal);

/// Drops all cached basis tables (the per-field tables can be large).
void release_steinberg_cache();

}  // namespace k0ring
