#include "k0ring/ring.hpp"

#include <stdexcept>

namespace k0ring {

GroundField::GroundField(long p, long g, std::vector<IntPoly> iters)
    : p_(p), g_(g), iters_(std::move(iters)) {
  q_ = 1;
  for (long i = 0; i < g_; ++i) q_ *= p_;
  modulus_ = iters_[g_] - IntPoly::x();
  if (!modulus_.is_monic() || modulus_.degree() != q_)
    throw std::logic_error("modulus construction failed");
}

FieldPtr GroundField::make(long p, long g) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (g < 1) throw std::invalid_argument("g must be a positive integer");
  long q = 1;
  for (long i = 0; i < g; ++i) {
    if (q > kMaxQ / p)
      throw std::invalid_argument(
          "p^g too large for exact Z[x] construction (max q = 8192); "
          "the modp analyses accept larger q");
    q *= p;
  }
  std::vector<IntPoly> iters;
  iters.reserve(g + 1);
  iters.push_back(IntPoly::x());
  IntPoly f = f_base(p);
  iters.push_back(f);
  for (long i = 2; i <= g; ++i) iters.push_back(compose(f, iters.back()));
  return FieldPtr(new GroundField(p, g, std::move(iters)));
}

const IntPoly& GroundField::f_iterate(long i) const {
  if (i < 0 || i > g_) throw std::invalid_argument("f_iterate index out of range");
  return iters_[i];
}

std::string GroundField::tag() const {
  return "[p=" + std::to_string(p_) + ",g=" + std::to_string(g_) + "]";
}

IntPoly GroundField::sigma_residue(long n) const {
  if (n < 0) throw std::invalid_argument("use sym_class for negative indices");

  // One reduction step suffices per recurrence step: x*prev has degree <= q.
  auto step = [this](const IntPoly& prev, const IntPoly& prev2) {
    IntPoly next = prev.shifted_up(1);
    if (next.degree() == q_) next = next - modulus_.scaled(next.leading());
    return next - prev2;
  };

  std::lock_guard<std::mutex> lock(mu_);
  if (sigma_.empty()) {
    sigma_.push_back(IntPoly::one());
    if (q_ >= 2) sigma_.push_back(IntPoly::x());
  }
  long target = std::min(n, kSigmaCacheCap);
  while (static_cast<long>(sigma_.size()) <= target)
    sigma_.push_back(step(sigma_[sigma_.size() - 1], sigma_[sigma_.size() - 2]));
  if (n < static_cast<long>(sigma_.size())) return sigma_[n];

  IntPoly prev2 = sigma_[sigma_.size() - 2], prev = sigma_.back();
  for (long k = sigma_.size(); k <= n; ++k) {
    IntPoly next = step(prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

RingElt RingElt::from_reduced(FieldPtr F, IntPoly residue) {
  if (residue.degree() >= F->q())
    throw std::invalid_argument("from_reduced: residue degree not below q");
  return RingElt(std::move(F), std::move(residue));
}

static void require_same_field(const RingElt& a, const RingElt& b) {
  if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
    throw std::invalid_argument("ring elements belong to different ground fields");
}

RingElt RingElt::operator+(const RingElt& o) const {
  require_same_field(*this, o);
  return RingElt(F_, r_ + o.r_);
}

RingElt RingElt::operator-(const RingElt& o) const {
  require_same_field(*this, o);
  return RingElt(F_, r_ - o.r_);
}

RingElt RingElt::operator*(const RingElt& o) const {
  require_same_field(*this, o);
  return reduce(r_ * o.r_, F_);
}

bool RingElt::operator==(const RingElt& o) const {
  require_same_field(*this, o);
  return r_ == o.r_;
}

std::string RingElt::to_string() const {
  return r_.to_string() + " " + (F_ ? F_->tag() : "[?]");
}

RingElt reduce(const IntPoly& a, const FieldPtr& F) {
  return RingElt(F, divmod_monic(a, F->modulus()).second);
}

RingElt sym_class(long k, const FieldPtr& F) {
  if (k >= 0) return RingElt::from_reduced(F, F->sigma_residue(k));
  if (k == -1) return RingElt::zero(F);
  return -sym_class(-k - 2, F);
}

RingElt frobenius_twist(const RingElt& a, long i) {
  const FieldPtr& F = a.field();
  long g = F->g();
  long r = ((i % g) + g) % g;
  if (r == 0) return a;
  const IntPoly& f = F->f();
  RingElt out = a;
  for (long t = 0; t < r; ++t) {
    // Horner substitution x -> f with reduction after each step; the i-fold
    // single substitution composes to x -> f^[i].
    const IntPoly& src = out.residue();
    IntPoly acc;
    for (std::size_t j = src.size(); j-- > 0;) {
      acc = acc * f;
      acc += IntPoly::constant(src.coeffs()[j]);
      if (acc.degree() >= F->q()) acc = divmod_monic(acc, F->modulus()).second;
    }
    out = RingElt::from_reduced(F, std::move(acc));
  }
  return out;
}

RingElt pow(const RingElt& a, unsigned long e) {
  RingElt result = RingElt::one(a.field());
  RingElt base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool elt_congruent_mod_p(const RingElt& a, const RingElt& b) {
  require_same_field(a, b);
  IntPoly d = a.residue() - b.residue();
  const BigInt p = a.field()->p();
  for (const auto& c : d.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) return false;
  return true;
}

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::kDelta: return "delta";
    case Identity::kSigma: return "sigma";
    case Identity::kPi: return "pi";
    case Identity::kPhi: return "phi";
  }
  return "?";
}

std::optional<Identity> identity_from_name(const std::string& name) {
  if (name == "delta") return Identity::kDelta;
  if (name == "sigma") return Identity::kSigma;
  if (name == "pi") return Identity::kPi;
  if (name == "phi") return Identity::kPhi;
  return std::nullopt;
}

IdentityReport verify_identity(Identity which, long k, long h, const FieldPtr& F) {
  IdentityReport rep;
  rep.which = which;
  rep.k = k;
  rep.h = h;
  const long q = F->q(), p = F->p();
  switch (which) {
    case Identity::kDelta:
      rep.lhs = sym_class(k, F);
      rep.rhs = -sym_class(-k - 2, F);
      rep.note =
          "sign convention: M_k := -M_{-k-2} for k <= -2, so that this "
          "identity holds on the nose";
      break;
    case Identity::kSigma:
      rep.lhs = sym_class(k, F) - sym_class(k - (q + 1), F);
      rep.rhs = sym_class(k - (q - 1), F) - sym_class(k - 2 * q, F);
      break;
    case Identity::kPi:
      rep.lhs = sym_class(k, F) * sym_class(h, F);
      rep.rhs = sym_class(k + h, F) + sym_class(k - 1, F) * sym_class(h - 1, F);
      break;
    case Identity::kPhi:
      rep.lhs = sym_class(k, F);
      rep.rhs = sym_class(k - p, F) * frobenius_twist(sym_class(1, F), 1) -
                sym_class(k - 2 * p, F);
      break;
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace k0ring
