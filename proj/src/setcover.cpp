#include "knockout/setcover.hpp"

#include <algorithm>
#include <limits>

namespace knockout {

namespace {

constexpr Value kInfWeight = std::numeric_limits<Value>::max();

bool is_subset(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Keep only sets not containing another kept set (covering one covers both);
// equal sets keep the earliest. Preserves both the optimum and its lex tie.
std::vector<std::vector<int>> drop_dominated(const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> kept;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (j == i) continue;
      if (is_subset(sets[j], sets[i]) && (sets[j] != sets[i] || j < i))
        dominated = true;
    }
    if (!dominated) kept.push_back(sets[i]);
  }
  return kept;
}

// Min over all base-feasible supports disjoint from `removed`; nullopt when
// none exists. With first_only the scan stops at the first feasible support.
std::optional<Value> restricted_optimum(const BinaryProgram& program,
                                        const std::vector<int>& removed,
                                        bool first_only) {
  if (program.n > 24)
    throw CapacityError("survivor enumeration is limited to 24 variables");
  std::vector<char> blocked(static_cast<size_t>(program.n), 0);
  for (int i : removed) blocked[static_cast<size_t>(i)] = 1;
  std::vector<int> allowed;
  for (int i = 0; i < program.n; ++i)
    if (!blocked[static_cast<size_t>(i)]) allowed.push_back(i);

  std::optional<Value> best;
  std::vector<int> support;
  auto visit = [&](const auto& self, size_t next) -> bool {
    Evaluation eval = evaluate(program, support);
    if (eval.feasible) {
      if (!best || eval.value < *best) best = eval.value;
      if (first_only) return true;
    }
    for (size_t k = next; k < allowed.size(); ++k) {
      support.push_back(allowed[k]);
      bool done = self(self, k + 1);
      support.pop_back();
      if (done) return true;
    }
    return false;
  };
  visit(visit, 0);
  return best;
}

}  // namespace

void validate(const CoverInstance& instance) {
  if (instance.universe_size < 0) throw InputError("negative universe size");
  validate(instance.weights, instance.universe_size);
  for (const auto& set : instance.sets) {
    if (set.empty()) throw InputError("cover instance contains an empty set");
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end())
      throw InputError("cover sets must be strictly increasing index lists");
    for (int e : set)
      if (e < 0 || e >= instance.universe_size)
        throw InputError("cover set index out of range");
  }
}

std::vector<int> greedy_cover(const CoverInstance& instance) {
  validate(instance);
  const int n = instance.universe_size;
  const auto& sets = instance.sets;
  std::vector<std::vector<int>> sets_of(static_cast<size_t>(n));
  for (size_t s = 0; s < sets.size(); ++s)
    for (int e : sets[s]) sets_of[static_cast<size_t>(e)].push_back(static_cast<int>(s));

  std::vector<char> covered(sets.size(), 0);
  size_t uncovered = sets.size();
  std::vector<char> taken(static_cast<size_t>(n), 0);
  std::vector<int> cover;

  auto hits = [&](int e) {
    int count = 0;
    for (int s : sets_of[static_cast<size_t>(e)])
      if (!covered[static_cast<size_t>(s)]) ++count;
    return count;
  };
  auto take = [&](int e) {
    taken[static_cast<size_t>(e)] = 1;
    cover.push_back(e);
    for (int s : sets_of[static_cast<size_t>(e)]) {
      if (!covered[static_cast<size_t>(s)]) {
        covered[static_cast<size_t>(s)] = 1;
        --uncovered;
      }
    }
  };

  for (int e = 0; e < n && uncovered > 0; ++e)
    if (instance.weights.d[static_cast<size_t>(e)] == 0 && hits(e) > 0) take(e);

  while (uncovered > 0) {
    int best = -1;
    Value best_w = 0;
    int best_h = 0;
    for (int e = 0; e < n; ++e) {
      if (taken[static_cast<size_t>(e)]) continue;
      int h = hits(e);
      if (h == 0) continue;
      Value w = instance.weights.d[static_cast<size_t>(e)];
      // minimise w/h: cross-multiplied, ties to the lower index
      if (best == -1 || w * best_h < best_w * h) {
        best = e;
        best_w = w;
        best_h = h;
      }
    }
    take(best);  // nonempty sets guarantee a hitting element exists
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

Value detail::disjoint_sets_bound(const CoverInstance& instance,
                                  const std::vector<char>& covered,
                                  const std::vector<char>& excluded) {
  std::vector<char> used(static_cast<size_t>(instance.universe_size), 0);
  Value bound = 0;
  for (size_t s = 0; s < instance.sets.size(); ++s) {
    if (covered[s]) continue;
    Value min_w = kInfWeight;
    bool overlaps = false;
    for (int e : instance.sets[s]) {
      if (excluded[static_cast<size_t>(e)]) continue;
      if (used[static_cast<size_t>(e)]) overlaps = true;
      min_w = std::min(min_w, instance.weights.d[static_cast<size_t>(e)]);
    }
    if (min_w == kInfWeight) return kUncoverable;
    if (overlaps) continue;
    bound += min_w;
    for (int e : instance.sets[s])
      if (!excluded[static_cast<size_t>(e)]) used[static_cast<size_t>(e)] = 1;
  }
  return bound;
}

std::optional<CoverResult> exact_cover_if(
    const CoverInstance& instance,
    const std::function<bool(const std::vector<int>&)>& accept) {
  validate(instance);
  const int n = instance.universe_size;

  CoverInstance reduced{n, drop_dominated(instance.sets), instance.weights};
  const auto& sets = reduced.sets;

  if (sets.empty()) {
    std::vector<int> empty;
    if (!accept || accept(empty)) return CoverResult{{}, 0};
    return std::nullopt;
  }

  std::vector<std::vector<int>> sets_of(static_cast<size_t>(n));
  for (size_t s = 0; s < sets.size(); ++s)
    for (int e : sets[s]) sets_of[static_cast<size_t>(e)].push_back(static_cast<int>(s));

  std::optional<CoverResult> incumbent;
  auto offer = [&](std::vector<int> cover, Value weight) {
    std::sort(cover.begin(), cover.end());
    if (accept && !accept(cover)) return;
    if (!incumbent || weight < incumbent->weight ||
        (weight == incumbent->weight &&
         std::lexicographical_compare(cover.begin(), cover.end(),
                                      incumbent->cover.begin(), incumbent->cover.end())))
      incumbent = CoverResult{std::move(cover), weight};
  };

  {
    std::vector<int> seed = greedy_cover(reduced);
    offer(seed, weight_of(instance.weights, seed));
  }

  std::vector<int> cover_count(sets.size(), 0);
  std::vector<char> covered(sets.size(), 0);
  std::vector<char> excluded(static_cast<size_t>(n), 0);
  std::vector<int> chosen;
  Value weight = 0;

  auto search = [&](const auto& self) -> void {
    int target = -1;
    for (size_t s = 0; s < sets.size(); ++s)
      if (cover_count[s] == 0) {
        target = static_cast<int>(s);
        break;
      }
    if (target == -1) {
      offer(chosen, weight);
      return;
    }
    Value remaining = detail::disjoint_sets_bound(reduced, covered, excluded);
    if (remaining == detail::kUncoverable) return;
    // strict comparison: equal-weight covers stay reachable for the lex tie
    if (incumbent && weight + remaining > incumbent->weight) return;

    std::vector<int> locally_excluded;
    for (int e : sets[static_cast<size_t>(target)]) {
      if (excluded[static_cast<size_t>(e)]) continue;
      chosen.push_back(e);
      weight += instance.weights.d[static_cast<size_t>(e)];
      for (int s : sets_of[static_cast<size_t>(e)]) {
        if (cover_count[static_cast<size_t>(s)]++ == 0) covered[static_cast<size_t>(s)] = 1;
      }
      self(self);
      for (int s : sets_of[static_cast<size_t>(e)]) {
        if (--cover_count[static_cast<size_t>(s)] == 0) covered[static_cast<size_t>(s)] = 0;
      }
      weight -= instance.weights.d[static_cast<size_t>(e)];
      chosen.pop_back();
      excluded[static_cast<size_t>(e)] = 1;
      locally_excluded.push_back(e);
    }
    for (int e : locally_excluded) excluded[static_cast<size_t>(e)] = 0;
  };
  search(search);
  return incumbent;
}

CoverResult exact_cover(const CoverInstance& instance) {
  auto result = exact_cover_if(instance, nullptr);
  if (!result) throw InternalError("unfiltered cover search found no cover");
  return *result;
}

SurvivorCover cover_with_survivor(const CoverInstance& instance,
                                  const BinaryProgram& program,
                                  const PropertySpec& spec) {
  if (spec.kind != PropertySpec::Kind::kValueAtLeast)
    throw InputError("survivor-guaranteed covering applies to value thresholds only");
  validate(program);
  if (program.n != instance.universe_size)
    throw InputError("cover universe and program variable count differ");

  auto survivor_exists = [&](const std::vector<int>& cover) {
    return restricted_optimum(program, cover, /*first_only=*/true).has_value();
  };
  auto result = exact_cover_if(instance, survivor_exists);
  if (!result)
    throw NoSurvivorCoverError("no cover leaves a feasible surviving solution");
  Value survivor = *restricted_optimum(program, result->cover, /*first_only=*/false);
  return {result->cover, result->weight, survivor};
}

}  // namespace knockout
