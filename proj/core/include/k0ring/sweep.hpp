#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k0ring/modp.hpp"
#include "k0ring/ring.hpp"

namespace k0ring {

/// Cell selection and determinism knobs shared by the sweep drivers.
/// Randomized trials are seeded; every record carries the seed it used.
struct SweepConfig {
  std::vector<long> primes{2, 3, 5, 7, 11, 13};
  std::vector<long> g_values;  // empty: all g >= 1 with p^g <= q_cap
  long q_cap = 100000;
  std::uint64_t seed = 987654321;
  long trials = 200;
  int threads = 0;  // 0: hardware concurrency
};

struct CellId {
  long p = 0, g = 0, q = 0;
};

struct GridSelection {
  std::vector<CellId> cells;    // deterministic (p asc, g asc) order
  std::vector<CellId> skipped;  // requested but beyond q_cap
};
GridSelection grid_cells(const SweepConfig& cfg);
std::vector<long> primes_up_to(long bound);

std::uint64_t derive_seed(std::uint64_t base, long p, long g, std::uint64_t salt);
int resolve_threads(int requested);

struct IdentityCounterexample {
  std::string identity;
  long k = 0, h = 0;
  std::string lhs, rhs;
};

struct IdentityCellReport {
  CellId cell;
  long trials = 0;
  std::uint64_t seed = 0;
  std::string engine;  // "exact" or "split-eval"
  bool identities_ok = false;
  bool pre_reduction_pi_ok = false;
  bool pre_reduction_phi_ok = false;
  bool sigma_pre_reduction_fails = false;  // expected true: quotient-only identity
  std::optional<IdentityCounterexample> counterexample;
  double seconds = 0;
  bool ok() const {
    return identities_ok && pre_reduction_pi_ok && pre_reduction_phi_ok &&
           sigma_pre_reduction_fails;
  }
};

/// Randomized verification of the four K0 identities with
/// (k, h) in [-3q, 3q]^2 per cell, plus the pre-reduction polynomial
/// checks. Small fields run on exact ring arithmetic; larger ones on the
/// split-prime evaluator (see split_eval.hpp), which is equally exact.
std::vector<IdentityCellReport> identity_sweep(const SweepConfig& cfg);

struct OracleCellReport {
  CellId cell;
  long pairs = 0, near_misses = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

/// Residue equality vs Brauer-character equality on random element pairs,
/// including engineered near-misses differing by p times a basis class.
std::vector<OracleCellReport> oracle_sweep(const SweepConfig& cfg, long pairs, long near_misses);

struct CongruenceCellReport {
  CellId cell;
  long trials = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

/// twist(a, i) == a^(p^i) mod p for random a, verified in F_p[x]/(modulus
/// mod p); equivalent to the Z-level congruence because reduction mod p
/// commutes with division by the monic modulus.
std::vector<CongruenceCellReport> element_congruence_sweep(const SweepConfig& cfg);

struct ModpCellReport {
  CellId cell;
  FiberReport fiber;
  bool twist_powers_ok = false;  // f^[i] == x^(p^i) mod p for 0 <= i <= g
  double seconds = 0;
  bool ok() const { return fiber.all_ok() && twist_powers_ok; }
};

/// Fiber structure and mod-p congruences over the (p, g) grid; works far
/// beyond the exact-construction cap via the F_p[x] recurrences.
std::vector<ModpCellReport> modp_sweep(const SweepConfig& cfg);

}  // namespace k0ring
