#include "doctest.h"
#include "k0ring/split_eval.hpp"
#include "k0ring/sweep.hpp"

using namespace k0ring;

TEST_CASE("grid selection honors the q cap and reports skips") {
  SweepConfig cfg;
  cfg.primes = {2, 3};
  cfg.q_cap = 30;
  GridSelection sel = grid_cells(cfg);
  CHECK(sel.cells.size() == 7);  // 2,4,8,16 and 3,9,27
  CHECK(sel.skipped.empty());
  cfg.g_values = {1, 4};
  sel = grid_cells(cfg);
  CHECK(sel.cells.size() == 3);  // (2,1), (2,4), (3,1)
  CHECK(sel.skipped.size() == 1);
  CHECK(sel.skipped[0].p == 3);
}

TEST_CASE("identity sweep reports are deterministic for a fixed seed") {
  SweepConfig cfg;
  cfg.primes = {2, 3};
  cfg.q_cap = 100;
  cfg.trials = 30;
  auto a = identity_sweep(cfg);
  auto b = identity_sweep(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ok());
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].engine == b[i].engine);
    CHECK(a[i].cell.q == b[i].cell.q);
  }
}

TEST_CASE("exact and split engines agree and both engines run") {
  SweepConfig cfg;
  cfg.primes = {2, 3, 5};
  cfg.q_cap = 700;
  cfg.trials = 25;
  auto reports = identity_sweep(cfg);
  bool saw_exact = false, saw_split = false;
  for (const auto& r : reports) {
    CHECK(r.ok());
    saw_exact |= r.engine == "exact";
    saw_split |= r.engine == "split-eval";
  }
  CHECK(saw_exact);
  CHECK(saw_split);
}

TEST_CASE("split evaluator detects false identities") {
  auto F = GroundField::make(3, 3);  // q = 27
  SplitEvaluator ev(*F, 200, 7);
  REQUIRE(ev.prime_count() >= 1);
  std::vector<long> needed{4, 5, 6, 9, 20};
  bool wrong_product_detected = false, wrong_shift_detected = false;
  ev.for_each_prime(needed, [&](const SplitEvaluator::View& view) {
    for (long r = 0; r < F->q(); ++r) {
      // M_4 * M_5 != M_9 (the Clebsch-Gordan tail is missing)
      if (mulmod_u64(view.s(4)[r], view.s(5)[r], view.ell) != view.s(9)[r])
        wrong_product_detected = true;
      // M_20 != M_6
      if (view.s(20)[r] != view.s(6)[r]) wrong_shift_detected = true;
    }
  });
  CHECK(wrong_product_detected);
  CHECK(wrong_shift_detected);
}

TEST_CASE("split evaluator values match exact residues at a rational root") {
  // For p = 5, g = 1 the modulus x^5 - 5x^3 + 4x has integer roots; sigma
  // values at those roots mod ell must match exact evaluation of residues.
  auto F = GroundField::make(5, 1);
  SplitEvaluator ev(*F, 64, 3);
  std::vector<long> needed{0, 1, 2, 3, 7, 11};
  ev.for_each_prime(needed, [&](const SplitEvaluator::View& view) {
    BigInt ell_big(static_cast<unsigned long>(view.ell));
    for (long n : needed) {
      IntPoly residue = F->sigma_residue(n);
      for (long r = 0; r < F->q(); ++r) {
        BigInt expected = residue.eval(BigInt(static_cast<unsigned long>(view.roots[r])));
        BigInt got(static_cast<unsigned long>(view.s(n)[r]));
        CHECK((expected - got) % ell_big == 0);
      }
    }
  });
}

TEST_CASE("primality helper") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64((1ull << 62) - 1));
  CHECK(!is_prime_u64(561));  // Carmichael
}

TEST_CASE("oracle sweep on a small grid") {
  SweepConfig cfg;
  cfg.primes = {2, 3};
  cfg.q_cap = 30;
  auto reports = oracle_sweep(cfg, 32, 8);
  for (const auto& r : reports) {
    CAPTURE(r.cell.p); CAPTURE(r.cell.g); CAPTURE(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("element congruence sweep on a small grid") {
  SweepConfig cfg;
  cfg.primes = {2, 3, 5};
  cfg.q_cap = 130;
  cfg.trials = 20;
  auto reports = element_congruence_sweep(cfg);
  for (const auto& r : reports) {
    CAPTURE(r.cell.p); CAPTURE(r.cell.g); CAPTURE(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("modp sweep on a small grid") {
  SweepConfig cfg;
  cfg.primes = {2, 3, 5, 7};
  cfg.q_cap = 2500;
  auto reports = modp_sweep(cfg);
  for (const auto& r : reports) {
    CAPTURE(r.cell.p); CAPTURE(r.cell.g);
    CHECK(r.ok());
  }
}
