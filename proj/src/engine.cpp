#include "knockout/engine.hpp"

#include <chrono>
#include <utility>

#include "knockout/setcover.hpp"

namespace knockout {

namespace {

using Clock = std::chrono::steady_clock;

class RunState {
 public:
  explicit RunState(const EngineOptions& options) : options_(options) {}

  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_)
        .count();
  }

  SubproblemAnswer solve(SubproblemOracle& oracle, const SolutionPool& pool,
                         std::optional<int> budget) {
    if (solves_ >= options_.max_iterations)
      throw ResourceLimitError("iteration cap of " +
                                   std::to_string(options_.max_iterations) + " reached",
                               trace);
    if (options_.time_limit_ms && elapsed_ms() > *options_.time_limit_ms)
      throw ResourceLimitError("time limit of " +
                                   std::to_string(*options_.time_limit_ms) +
                                   " ms reached",
                               trace);
    ++solves_;
    SubproblemAnswer answer = oracle.solve({pool, budget});
    if (answer.feasible())
      trace.push_back({static_cast<int>(solves_), answer.solution->value,
                       static_cast<int>(answer.solution->support.size()),
                       elapsed_ms()});
    return answer;
  }

  std::vector<TraceRecord> trace;

 private:
  const EngineOptions& options_;
  Clock::time_point start_ = Clock::now();
  long long solves_ = 0;
};

std::optional<Value> outcome_of(const SubproblemAnswer& answer) {
  if (!answer.feasible()) return std::nullopt;
  return answer.solution->value;
}

}  // namespace

KnockoutResult solve_knockout(SubproblemOracle& oracle, const KnockoutWeights& weights,
                              const PropertySpec& spec, const EngineOptions& options) {
  const int n = oracle.variable_count();
  validate(weights, n);

  RunState state(options);
  SolutionPool pool;
  SubproblemAnswer answer = state.solve(oracle, pool, std::nullopt);
  while (!property_holds(spec, outcome_of(answer))) {
    pool.push(*answer.solution);
    answer = state.solve(oracle, pool, std::nullopt);
  }

  KnockoutResult result;
  result.pool_size = pool.size();
  if (!pool.empty()) {
    CoverInstance instance{n, pool_supports(pool), weights};
    const bool want_survivor =
        options.ensure_survivor && spec.kind == PropertySpec::Kind::kValueAtLeast;
    if (want_survivor) {
      auto cover = exact_cover_if(instance, [&](const std::vector<int>& candidate) {
        return oracle.solve_with_knockout(candidate).has_value();
      });
      if (!cover)
        throw NoSurvivorCoverError("no cover leaves a feasible surviving solution");
      result.knockout_set = cover->cover;
      result.weight = cover->weight;
    } else {
      CoverResult cover = exact_cover(instance);
      result.knockout_set = cover.cover;
      result.weight = cover.weight;
    }
  }

  if (std::optional<Solution> survivor = oracle.solve_with_knockout(result.knockout_set))
    result.surviving_value = survivor->value;
  result.trace = std::move(state.trace);
  return result;
}

CardinalityResult solve_cardinality(SubproblemOracle& oracle, int budget,
                                    const EngineOptions& options) {
  const int n = oracle.variable_count();
  if (budget < 0 || budget > n)
    throw InputError("budget outside [0, " + std::to_string(n) + "]");

  RunState state(options);
  SolutionPool pool;
  std::optional<SubproblemAnswer> last_feasible;
  while (true) {
    SubproblemAnswer answer = state.solve(oracle, pool, budget);
    if (!answer.feasible()) break;
    pool.push(*answer.solution);
    last_feasible = std::move(answer);
  }
  if (!last_feasible)
    throw InfeasibleBudgetError(
        "no knockout of exactly " + std::to_string(budget) +
        " variables leaves the problem feasible");

  CardinalityResult result;
  result.budget = budget;
  result.knockout_set = last_feasible->witness;
  result.optimal_value = last_feasible->solution->value;
  result.pool_size = pool.size();
  result.trace = std::move(state.trace);
  return result;
}

bool verify(KnockoutResult& result, SubproblemOracle& oracle, const PropertySpec& spec,
            bool ensure_survivor) {
  std::optional<Solution> survivor = oracle.solve_with_knockout(result.knockout_set);
  std::optional<Value> outcome;
  if (survivor) outcome = survivor->value;

  bool ok = property_holds(spec, outcome);
  if (ensure_survivor && spec.kind == PropertySpec::Kind::kValueAtLeast)
    ok = ok && survivor.has_value();
  if (result.surviving_value != outcome) ok = false;
  result.verified = ok;
  return ok;
}

bool verify(CardinalityResult& result, SubproblemOracle& oracle) {
  bool ok = static_cast<int>(result.knockout_set.size()) == result.budget;
  std::optional<Solution> survivor = oracle.solve_with_knockout(result.knockout_set);
  ok = ok && survivor.has_value() && survivor->value == result.optimal_value;
  result.verified = ok;
  return ok;
}

}  // namespace knockout
