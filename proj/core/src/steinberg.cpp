#include "k0ring/steinberg.hpp"

#include <mutex>
#include <stdexcept>

namespace k0ring {

SteinbergIndex SteinbergIndex::from_ordinal(long n, long p, long g) {
  if (n < 0) throw std::invalid_argument("ordinal out of range");
  SteinbergIndex idx;
  idx.k.resize(g);
  for (long i = 0; i < g; ++i) {
    idx.k[i] = static_cast<int>(n % p);
    n /= p;
  }
  if (n != 0) throw std::invalid_argument("ordinal out of range");
  return idx;
}

long SteinbergIndex::ordinal(long p) const {
  long n = 0;
  for (std::size_t i = k.size(); i-- > 0;) {
    if (k[i] < 0 || k[i] >= p) throw std::invalid_argument("digit outside [0, p-1]");
    n = n * p + k[i];
  }
  return n;
}

std::string SteinbergIndex::key() const {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s;
}

SteinbergIndex SteinbergIndex::cyclic_shift() const {
  SteinbergIndex r;
  r.k.resize(k.size());
  for (std::size_t i = 0; i + 1 < k.size(); ++i) r.k[i + 1] = k[i];
  r.k[0] = k.back();
  return r;
}

SteinbergVector::SteinbergVector(FieldPtr F) : F_(std::move(F)), m_(F_->q()) {}

SteinbergVector SteinbergVector::operator+(const SteinbergVector& o) const {
  if (!F_->same_field(*o.F_)) throw std::invalid_argument("field mismatch");
  SteinbergVector r(F_);
  for (long n = 0; n < q(); ++n) r.m_[n] = m_[n] + o.m_[n];
  return r;
}

bool SteinbergVector::operator==(const SteinbergVector& o) const {
  return F_->same_field(*o.F_) && m_ == o.m_;
}

std::map<std::string, BigInt> SteinbergVector::serialize() const {
  std::map<std::string, BigInt> out;
  for (long n = 0; n < q(); ++n)
    if (m_[n] != 0) out[SteinbergIndex::from_ordinal(n, F_->p(), F_->g()).key()] = m_[n];
  return out;
}

namespace {

// Per-(p,g) basis table. factors[i][d] = m_d(f^[i]); basis polynomials are
// filled lazily in ordinal order, each as one product of an already-built
// entry with one factor.
struct BasisTable {
  std::mutex mu;
  std::vector<std::vector<IntPoly>> factors;
  std::vector<IntPoly> basis;
};

std::mutex g_tables_mu;
std::map<std::pair<long, long>, std::shared_ptr<BasisTable>> g_tables;

std::shared_ptr<BasisTable> table_for(const GroundField& F) {
  std::lock_guard<std::mutex> lock(g_tables_mu);
  auto key = std::make_pair(F.p(), F.g());
  auto& slot = g_tables[key];
  if (!slot) {
    slot = std::make_shared<BasisTable>();
    slot->factors.resize(F.g());
    for (long i = 0; i < F.g(); ++i) {
      auto& row = slot->factors[i];
      row.reserve(F.p());
      row.push_back(IntPoly::one());
      if (F.p() >= 2) row.push_back(F.f_iterate(i));
      for (long d = 2; d < F.p(); ++d)
        row.push_back(F.f_iterate(i) * row[d - 1] - row[d - 2]);
    }
    // Stable storage: entries are handed out by reference while later ones
    // are still being appended.
    slot->basis.reserve(F.q());
    slot->basis.push_back(IntPoly::one());
  }
  return slot;
}

void build_to(BasisTable& t, const GroundField& F, long ordinal) {
  const long p = F.p();
  while (static_cast<long>(t.basis.size()) <= ordinal) {
    long n = static_cast<long>(t.basis.size());
    long level = 0, rest = n, pw = 1;
    while (rest >= p) {
      rest /= p;
      ++level;
      pw *= p;
    }
    // n = rest*p^level + low with top digit `rest` at `level`.
    long low = n - rest * pw;
    t.basis.push_back(t.basis[low] * t.factors[level][rest]);
  }
}

}  // namespace

const IntPoly& basis_poly_by_ordinal(const FieldPtr& F, long ordinal) {
  if (ordinal < 0 || ordinal >= F->q()) throw std::invalid_argument("ordinal out of range");
  auto t = table_for(*F);
  std::lock_guard<std::mutex> lock(t->mu);
  build_to(*t, *F, ordinal);
  return t->basis[ordinal];
}

const IntPoly& basis_factor(const FieldPtr& F, long level, long digit) {
  if (level < 0 || level >= F->g() || digit < 0 || digit >= F->p())
    throw std::invalid_argument("basis_factor index out of range");
  auto t = table_for(*F);
  return t->factors[level][digit];
}

IntPoly basis_poly(const SteinbergIndex& idx, const FieldPtr& F) {
  if (static_cast<long>(idx.k.size()) != F->g())
    throw std::invalid_argument("tuple length must equal g");
  return basis_poly_by_ordinal(F, idx.ordinal(F->p()));
}

SteinbergVector decompose(const RingElt& a) {
  const FieldPtr& F = a.field();
  SteinbergVector v(F);
  if (a.is_zero()) return v;
  auto t = table_for(*F);
  std::lock_guard<std::mutex> lock(t->mu);
  build_to(*t, *F, a.residue().degree());
  std::vector<BigInt> rem(a.residue().coeffs());
  for (std::size_t d = rem.size(); d-- > 0;) {
    if (rem[d] == 0) continue;
    BigInt c = std::move(rem[d]);
    rem[d] = 0;
    const IntPoly& b = t->basis[d];
    // b is monic of degree d: subtract c * (lower part of b).
    for (std::size_t j = 0; j < d; ++j)
      if (b.coeffs()[j] != 0)
        mpz_submul(rem[j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    v.set(static_cast<long>(d), std::move(c));
  }
  return v;
}

RingElt compose(const SteinbergVector& v) {
  const FieldPtr& F = v.field();
  auto t = table_for(*F);
  std::lock_guard<std::mutex> lock(t->mu);
  std::vector<BigInt> acc(F->q());
  for (long n = 0; n < v.q(); ++n) {
    if (v.at(n) == 0) continue;
    build_to(*t, *F, n);
    const IntPoly& b = t->basis[n];
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.coeffs()[j] != 0)
        mpz_addmul(acc[j].get_mpz_t(), v.at(n).get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  return RingElt::from_reduced(F, IntPoly{std::move(acc)});
}

BigInt tuple_dimension(const GroundField& F, long ordinal) {
  BigInt dim = 1;
  long n = ordinal;
  for (long i = 0; i < F.g(); ++i) {
    dim *= (n % F.p()) + 1;
    n /= F.p();
  }
  return dim;
}

SteinbergVector jh_sym(long k, const FieldPtr& F) {
  if (k < 0) throw std::invalid_argument("jh_sym requires k >= 0");
  SteinbergVector v = decompose(sym_class(k, F));
  BigInt dim = 0;
  for (long n = 0; n < v.q(); ++n) {
    if (v.at(n) < 0)
      throw std::logic_error("internal consistency: negative multiplicity in jh_sym(" +
                             std::to_string(k) + ")");
    if (v.at(n) != 0) dim += v.at(n) * tuple_dimension(*F, n);
  }
  if (dim != k + 1)
    throw std::logic_error("internal consistency: dimension identity failed in jh_sym(" +
                           std::to_string(k) + ")");
  return v;
}

BigInt dim_class(const RingElt& a) { return a.residue().eval(2); }

void release_steinberg_cache() {
  std::lock_guard<std::mutex> lock(g_tables_mu);
  g_tables.clear();
}

}  // namespace k0ring
