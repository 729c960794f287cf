#pragma once

// The two drivers. solve_knockout finds a minimum-weight knockout set giving
// the surviving problem a desired property by pooling successive optima and
// finishing with an exact set cover over the property-violating pool.
// solve_cardinality maximises the surviving optimum under an exact knockout
// budget by pooling until the budgeted subproblem goes infeasible.

#include <optional>

#include "knockout/core.hpp"
#include "knockout/oracle.hpp"

namespace knockout {

struct EngineOptions {
  long long max_iterations = 100000;        // oracle solves per run
  std::optional<long long> time_limit_ms;   // wall clock, unlimited if absent
  bool ensure_survivor = false;             // value-threshold mode only
};

// Throws ResourceLimitError (cap hit, with partial trace), InternalError
// (oracle repeated a support), NoSurvivorCoverError (ensure_survivor and no
// cover leaves a survivor).
KnockoutResult solve_knockout(SubproblemOracle& oracle, const KnockoutWeights& weights,
                              const PropertySpec& spec, const EngineOptions& options = {});

// Throws InputError (budget outside [0, n]), InfeasibleBudgetError (not even
// the first budgeted subproblem is feasible), ResourceLimitError.
CardinalityResult solve_cardinality(SubproblemOracle& oracle, int budget,
                                    const EngineOptions& options = {});

// Re-solve the base problem with the result's knockout set removed and check
// the claim; records the outcome in result.verified. A false return means a
// solver bug (or a tampered result), never a tolerable condition.
bool verify(KnockoutResult& result, SubproblemOracle& oracle, const PropertySpec& spec,
            bool ensure_survivor = false);
bool verify(CardinalityResult& result, SubproblemOracle& oracle);

}  // namespace knockout
