#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riordan/central.hpp"

namespace riordan {

enum class CheckStatus { pass, fail, skipped };

// Outcome of one identity check: `detail` carries a recognized closed form
// on PASS (when one exists), the first discrepant coefficient on FAIL, or
// the reason on SKIPPED.
struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

// Runs every identity the library asserts against `a`: oracle equivalence of
// the factorized central array against brute-force extraction, the
// factorization itself, A-sequence squaring, the Z closed form plus the
// column-0 recurrence, production-matrix round trips, group inverses, both
// inverse-argument readings, both transitions with reconstruction, the
// conjugation identity, the reverted-multiplier identity, central-column
// extraction, Lagrange inversion, and integrality.  Shift-dependent checks
// run for s in 0..shift_max; `rows` bounds the triangle comparisons and is
// clamped to what the array's order certifies.
std::vector<CheckResult> run_identity_suite(const RiordanArray& a,
                                            int shift_max, int rows);

bool all_passed(const std::vector<CheckResult>& results);

// Which checks each fuzz trial runs.  `core` is the randomized-oracle set:
// oracle equivalence of the factorization against brute-force extraction at
// every shift, integrality, production round trip, the reverted-multiplier
// identity, a Lagrange-inversion probe, and the group axioms.  `full` runs
// the entire identity suite (everything cmd-level verification runs) plus
// the pairwise group checks; it is several times more expensive per trial.
enum class FuzzSuite { core, full };

struct FuzzConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    int max_coeff = 5;
    int order = 16;
    int shift_max = 3;
    FuzzSuite suite = FuzzSuite::full;
};

struct TrialFailure {
    std::uint64_t seed = 0;
    int trial = 0;
    std::string identity;
    std::string detail;
};

struct FuzzOutcome {
    int trials_run = 0;
    std::vector<TrialFailure> failures; // ascending by trial index
};

// Randomized sweep: each trial derives its own generator deterministically
// from (seed, trial), draws random integer arrays (degree <= 4 numerators,
// constant term 1, remaining coefficients uniform in [-max_coeff,
// max_coeff]), and runs the identity suite plus pairwise product and group
// checks.  Trials evaluate in parallel; results merge by trial index, so a
// given config always yields the same outcome.  trials < 1 -> UsageError.
FuzzOutcome run_fuzz(const FuzzConfig& config);

} // namespace riordan
