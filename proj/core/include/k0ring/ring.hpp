#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "k0ring/family.hpp"
#include "k0ring/int_poly.hpp"

namespace k0ring {

class GroundField;
using FieldPtr = std::shared_ptr<const GroundField>;

/// The data of F_q with q = p^g: the base polynomial f, its iterates f^[i],
/// and the presentation modulus f^[g](x) - x of K0(SL2(F_q)).
/// Immutable after construction; freely shared across threads.
class GroundField : public std::enable_shared_from_this<GroundField> {
 public:
  /// Hard cap on q for exact Z[x] materialization of the modulus. The mod-p
  /// analyses accept much larger q through their (p, g) entry points.
  static constexpr long kMaxQ = 8192;

  static FieldPtr make(long p, long g);

  long p() const { return p_; }
  long g() const { return g_; }
  long q() const { return q_; }
  const IntPoly& f() const { return iters_[1]; }
  /// f^[i] for 0 <= i <= g.
  const IntPoly& f_iterate(long i) const;
  /// f^[g](x) - x, monic of degree q.
  const IntPoly& modulus() const { return modulus_; }

  /// Canonical residue of m_n for n >= 0 (cached; thread-safe).
  IntPoly sigma_residue(long n) const;

  bool same_field(const GroundField& o) const { return p_ == o.p_ && g_ == o.g_; }
  std::string tag() const;  // "[p=..,g=..]"

 private:
  GroundField(long p, long g, std::vector<IntPoly> iters);

  long p_, g_, q_;
  std::vector<IntPoly> iters_;
  IntPoly modulus_;

  static constexpr long kSigmaCacheCap = 512;
  mutable std::mutex mu_;
  mutable std::vector<IntPoly> sigma_;
};

/// A class in K0(SL2(F_q)) in canonical form: the unique residue of degree
/// < q representing it in Z[x]/(f^[g](x) - x).
class RingElt {
 public:
  RingElt() = default;

  static RingElt zero(FieldPtr F) { return RingElt(std::move(F), IntPoly::zero()); }
  static RingElt one(FieldPtr F) { return RingElt(std::move(F), IntPoly::one()); }
  /// The generator X (residue x).
  static RingElt generator(FieldPtr F) { return RingElt(std::move(F), IntPoly::x()); }
  /// Wraps an already-reduced polynomial (degree < q required).
  static RingElt from_reduced(FieldPtr F, IntPoly residue);

  const FieldPtr& field() const { return F_; }
  const IntPoly& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }

  RingElt operator-() const { return RingElt(F_, -r_); }
  RingElt operator+(const RingElt& o) const;
  RingElt operator-(const RingElt& o) const;
  RingElt operator*(const RingElt& o) const;
  bool operator==(const RingElt& o) const;
  bool operator!=(const RingElt& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  RingElt(FieldPtr F, IntPoly r) : F_(std::move(F)), r_(std::move(r)) {}
  friend RingElt reduce(const IntPoly&, const FieldPtr&);

  FieldPtr F_;
  IntPoly r_;
};

/// Projection Z[x] -> Z[x]/(f^[g](x) - x), canonical residue.
RingElt reduce(const IntPoly& a, const FieldPtr& F);

/// The class of M_k for any integer k: m_k for k >= 0, 0 for k = -1, and
/// -M_{-k-2} for k <= -2 (the sign convention under which M_k = -M_{-k-2}
/// holds identically; see verify_identity's note output).
RingElt sym_class(long k, const FieldPtr& F);

/// Frobenius twist: substitute x -> f^[i mod g] into the residue and reduce.
/// Implemented as i successive substitutions of f^[1], which compose to
/// f^[i]; any integer i is accepted and normalized mod g.
RingElt frobenius_twist(const RingElt& a, long i);

RingElt pow(const RingElt& a, unsigned long e);

/// True iff every coefficient of residue(a) - residue(b) is divisible by p.
bool elt_congruent_mod_p(const RingElt& a, const RingElt& b);

enum class Identity { kDelta, kSigma, kPi, kPhi };
const char* identity_name(Identity id);
std::optional<Identity> identity_from_name(const std::string& name);

struct IdentityReport {
  Identity which;
  long k = 0, h = 0;
  bool holds = false;
  RingElt lhs, rhs;
  std::string note;
};

/// Builds both sides of the selected identity from sym_class /
/// frobenius_twist and compares canonical residues. h is ignored except for
/// the product identity.
IdentityReport verify_identity(Identity which, long k, long h, const FieldPtr& F);

}  // namespace k0ring
