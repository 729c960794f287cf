#include "knockout/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>

#include "knockout/setcover.hpp"

namespace knockout {

namespace {

std::vector<int> mask_to_support(std::uint32_t mask, int n) {
  std::vector<int> support;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) support.push_back(i);
  return support;
}

struct OrderedSupport {
  Value value;
  std::uint32_t mask;
};

// All subsets of [0, n), ordered by (value, lexicographic sorted-index
// sequence). The generation order is the lexicographic one; a stable sort by
// value keeps it as the tie order.
std::vector<OrderedSupport> support_order(const BinaryProgram& program) {
  std::vector<OrderedSupport> order;
  order.reserve(1u << program.n);
  auto gen = [&](const auto& self, std::uint32_t mask, Value value, int next) -> void {
    order.push_back({value, mask});
    for (int i = next; i < program.n; ++i)
      self(self, mask | (1u << i), value + program.costs[static_cast<size_t>(i)], i + 1);
  };
  gen(gen, 0, 0, 0);
  std::stable_sort(order.begin(), order.end(),
                   [](const OrderedSupport& a, const OrderedSupport& b) {
                     return a.value < b.value;
                   });
  return order;
}

bool mask_feasible(const BinaryProgram& program, std::uint32_t mask) {
  for (const ConstraintRow& row : program.rows) {
    Value lhs = 0;
    for (const auto& [index, coeff] : row.coeffs)
      if (mask >> index & 1u) lhs += coeff;
    if (lhs < row.rhs) return false;
  }
  return true;
}

// Is there a hitting set of size <= limit for the (nonzero) difference masks?
bool hitting_within(const std::vector<std::uint32_t>& diffs, int limit) {
  {
    int disjoint = 0;
    std::uint32_t used = 0;
    for (std::uint32_t d : diffs)
      if ((d & used) == 0) {
        ++disjoint;
        used |= d;
      }
    if (disjoint > limit) return false;
  }
  auto rec = [&](const auto& self, std::uint32_t chosen, int count) -> bool {
    std::uint32_t target = 0;
    for (std::uint32_t d : diffs)
      if ((d & chosen) == 0) {
        target = d;
        break;
      }
    if (target == 0) return true;
    if (count == limit) return false;
    while (target != 0) {
      std::uint32_t bit = target & (~target + 1);
      if (self(self, chosen | bit, count + 1)) return true;
      target &= target - 1;
    }
    return false;
  };
  return rec(rec, 0u, 0);
}

bool hitting_within_vectors(const std::vector<std::vector<int>>& diffs, int limit, int n) {
  {
    std::vector<char> used(static_cast<size_t>(n), 0);
    int disjoint = 0;
    for (const auto& d : diffs) {
      bool overlap = false;
      for (int e : d)
        if (used[static_cast<size_t>(e)]) {
          overlap = true;
          break;
        }
      if (!overlap) {
        ++disjoint;
        for (int e : d) used[static_cast<size_t>(e)] = 1;
      }
    }
    if (disjoint > limit) return false;
  }
  std::vector<char> chosen(static_cast<size_t>(n), 0);
  auto rec = [&](const auto& self, int count) -> bool {
    const std::vector<int>* target = nullptr;
    for (const auto& d : diffs) {
      bool hit = false;
      for (int e : d)
        if (chosen[static_cast<size_t>(e)]) {
          hit = true;
          break;
        }
      if (!hit) {
        target = &d;
        break;
      }
    }
    if (target == nullptr) return true;
    if (count == limit) return false;
    for (int e : *target) {
      chosen[static_cast<size_t>(e)] = 1;
      bool ok = self(self, count + 1);
      chosen[static_cast<size_t>(e)] = 0;
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// Lex-smallest minimum-cardinality hitting set for the pooled supports minus
// the chosen support, padded with the smallest free indices when an exact
// budget is required. Caller guarantees feasibility.
std::vector<int> minimal_witness(const std::vector<std::vector<int>>& pooled,
                                 const std::vector<int>& support,
                                 std::optional<int> budget, int n) {
  std::vector<std::vector<int>> diffs;
  diffs.reserve(pooled.size());
  for (const auto& f : pooled) {
    std::vector<int> diff;
    std::set_difference(f.begin(), f.end(), support.begin(), support.end(),
                        std::back_inserter(diff));
    if (diff.empty())
      throw InternalError("witness requested for a support containing a pooled set");
    diffs.push_back(std::move(diff));
  }
  std::vector<int> witness;
  if (!diffs.empty()) {
    CoverInstance instance{n, std::move(diffs), KnockoutWeights::unit(n)};
    witness = exact_cover(instance).cover;
  }
  if (budget) {
    std::vector<char> blocked(static_cast<size_t>(n), 0);
    for (int i : support) blocked[static_cast<size_t>(i)] = 1;
    for (int i : witness) blocked[static_cast<size_t>(i)] = 1;
    for (int i = 0; i < n && static_cast<int>(witness.size()) < *budget; ++i)
      if (!blocked[static_cast<size_t>(i)]) witness.push_back(i);
    if (static_cast<int>(witness.size()) != *budget)
      throw InternalError("witness padding ran out of free indices");
    std::sort(witness.begin(), witness.end());
  }
  return witness;
}

void check_budget(std::optional<int> budget, int n) {
  if (budget && (*budget < 0 || *budget > n))
    throw InputError("budget outside [0, n]");
}

std::vector<std::vector<int>> checked_pool_supports(const SolutionPool& pool, int n) {
  auto sets = pool_supports(pool);
  for (const auto& f : sets)
    for (int i : f)
      if (i < 0 || i >= n) throw InputError("pooled support index out of range");
  return sets;
}

}  // namespace

bool cover_exists(const SolutionPool& pool, const std::vector<int>& support,
                  std::optional<int> budget, int n) {
  check_budget(budget, n);
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("support contains a repeated index");
  for (int i : sorted)
    if (i < 0 || i >= n) throw InputError("support index out of range");

  std::vector<std::vector<int>> diffs;
  for (const Solution& s : pool.entries()) {
    std::vector<int> diff;
    std::set_difference(s.support.begin(), s.support.end(), sorted.begin(),
                        sorted.end(), std::back_inserter(diff));
    if (diff.empty()) return false;  // this pooled support cannot be escaped
    diffs.push_back(std::move(diff));
  }
  if (!budget) return true;
  if (n - static_cast<int>(sorted.size()) < *budget) return false;
  if (diffs.empty()) return true;
  return hitting_within_vectors(diffs, *budget, n);
}

SubproblemAnswer exhaustive_solve(const BinaryProgram& program,
                                  const SubproblemQuery& query) {
  validate(program);
  if (program.n > 24)
    throw CapacityError("exhaustive enumeration is limited to 24 variables");
  const int n = program.n;
  check_budget(query.budget, n);

  std::vector<std::uint32_t> pooled_masks;
  for (const Solution& s : query.pool.entries()) {
    std::uint32_t mask = 0;
    for (int i : s.support) {
      if (i < 0 || i >= n) throw InputError("pooled support index out of range");
      mask |= 1u << i;
    }
    pooled_masks.push_back(mask);
  }

  const auto order = support_order(program);
  std::vector<std::uint32_t> diffs;
  for (const OrderedSupport& entry : order) {
    diffs.clear();
    bool escapable = true;
    for (std::uint32_t f : pooled_masks) {
      std::uint32_t d = f & ~entry.mask;
      if (d == 0) {
        escapable = false;
        break;
      }
      diffs.push_back(d);
    }
    if (!escapable) continue;
    if (query.budget) {
      if (n - std::popcount(entry.mask) < *query.budget) continue;
      if (!hitting_within(diffs, *query.budget)) continue;
    }
    if (!mask_feasible(program, entry.mask)) continue;

    std::vector<int> support = mask_to_support(entry.mask, n);
    std::vector<int> witness =
        minimal_witness(pool_supports(query.pool), support, query.budget, n);
    return {Solution{std::move(support), entry.value}, std::move(witness)};
  }
  return {std::nullopt, {}};
}

namespace {

struct PathCandidate {
  Value length = 0;
  std::vector<int> seq;  // arc indices in travel order
};

struct CandidateOrder {
  bool operator()(const PathCandidate& a, const PathCandidate& b) const {
    if (a.length != b.length) return a.length < b.length;
    return std::lexicographical_compare(a.seq.begin(), a.seq.end(), b.seq.begin(),
                                        b.seq.end());
  }
};

// Next-shortest loopless path enumeration (Yen/Lawler) in (length, arc
// sequence) order until a path contains no pooled support.
SubproblemAnswer solve_unbudgeted(const PathFinder& finder,
                                  const std::vector<std::vector<int>>& pooled) {
  const DirectedGraph& g = finder.graph();
  const int m = g.arc_count();

  auto contains_pooled = [&](const std::vector<int>& sorted_arcs) {
    for (const auto& f : pooled)
      if (std::includes(sorted_arcs.begin(), sorted_arcs.end(), f.begin(), f.end()))
        return true;
    return false;
  };

  std::vector<char> no_arcs(static_cast<size_t>(m), 0);
  std::optional<PathSolution> first = finder.find(no_arcs);
  if (!first) return {std::nullopt, {}};

  std::set<PathCandidate, CandidateOrder> frontier;
  std::set<std::vector<int>> enqueued;
  auto enqueue = [&](Value length, std::vector<int> seq) {
    if (enqueued.insert(seq).second) frontier.insert({length, std::move(seq)});
  };
  enqueue(first->length, first->arc_indices);

  std::vector<PathCandidate> accepted;
  std::vector<char> forbidden(static_cast<size_t>(m), 0);
  std::vector<char> banned(static_cast<size_t>(g.node_count) + 1, 0);

  while (!frontier.empty()) {
    PathCandidate current = *frontier.begin();
    frontier.erase(frontier.begin());

    std::vector<int> sorted_arcs = current.seq;
    std::sort(sorted_arcs.begin(), sorted_arcs.end());
    if (!contains_pooled(sorted_arcs)) {
      std::vector<int> witness = minimal_witness(pooled, sorted_arcs, std::nullopt, m);
      return {Solution{std::move(sorted_arcs), current.length}, std::move(witness)};
    }
    accepted.push_back(current);

    // Deviations: at each spur position forbid the next arc of every accepted
    // path sharing the root, ban the root's interior nodes, re-route.
    std::vector<size_t> sharing(accepted.size());
    std::iota(sharing.begin(), sharing.end(), size_t{0});
    std::vector<int> banned_nodes;
    Value root_length = 0;
    int spur_node = g.origin;
    for (size_t i = 0; i < current.seq.size(); ++i) {
      std::vector<int> spur_forbidden;
      for (size_t idx : sharing) {
        const auto& seq = accepted[idx].seq;
        if (seq.size() > i) spur_forbidden.push_back(seq[i]);
      }
      for (int a : spur_forbidden) forbidden[static_cast<size_t>(a)] = 1;
      std::optional<PathSolution> spur = finder.find_from(spur_node, forbidden, banned);
      for (int a : spur_forbidden) forbidden[static_cast<size_t>(a)] = 0;
      if (spur) {
        std::vector<int> seq(current.seq.begin(),
                             current.seq.begin() + static_cast<long>(i));
        seq.insert(seq.end(), spur->arc_indices.begin(), spur->arc_indices.end());
        enqueue(root_length + spur->length, std::move(seq));
      }

      const int arc = current.seq[i];
      std::vector<size_t> still_sharing;
      for (size_t idx : sharing) {
        const auto& seq = accepted[idx].seq;
        if (seq.size() > i && seq[i] == arc) still_sharing.push_back(idx);
      }
      sharing.swap(still_sharing);
      banned[static_cast<size_t>(spur_node)] = 1;
      banned_nodes.push_back(spur_node);
      root_length += g.arcs[static_cast<size_t>(arc)].length;
      spur_node = g.arcs[static_cast<size_t>(arc)].head;
    }
    for (int v : banned_nodes) banned[static_cast<size_t>(v)] = 0;
  }
  return {std::nullopt, {}};
}

// Branch-and-bound over partial knockout sets; the surviving shortest path is
// both the node bound and the leaf candidate.
SubproblemAnswer solve_budgeted(const PathFinder& finder,
                                const std::vector<std::vector<int>>& pooled,
                                int budget) {
  const DirectedGraph& g = finder.graph();
  const int m = g.arc_count();

  struct Incumbent {
    Value value = 0;
    std::vector<int> path_seq;
    std::vector<int> support;  // sorted path arcs
    std::vector<int> witness;  // sorted, size == budget
  };
  std::optional<Incumbent> incumbent;

  auto offer = [&](const PathSolution& path, std::vector<int> witness) {
    std::vector<int> support = path.arc_indices;
    std::sort(support.begin(), support.end());
    bool better = false;
    if (!incumbent || path.length < incumbent->value) {
      better = true;
    } else if (path.length == incumbent->value) {
      if (path.arc_indices < incumbent->path_seq) {
        better = true;
      } else if (path.arc_indices == incumbent->path_seq &&
                 witness < incumbent->witness) {
        better = true;
      }
    }
    if (better)
      incumbent = Incumbent{path.length, path.arc_indices, std::move(support),
                            std::move(witness)};
  };

  std::vector<char> knocked(static_cast<size_t>(m), 0);
  std::vector<int> knocked_list;
  std::set<std::vector<int>> visited;

  auto search = [&](const auto& self) -> void {
    std::vector<int> key = knocked_list;
    std::sort(key.begin(), key.end());
    if (!visited.insert(std::move(key)).second) return;

    std::optional<PathSolution> sp = finder.find(knocked);
    if (!sp) return;  // deeper knockouts stay disconnected
    if (incumbent && sp->length > incumbent->value) return;

    int target = -1;
    for (size_t s = 0; s < pooled.size(); ++s) {
      bool hit = false;
      for (int a : pooled[s])
        if (knocked[static_cast<size_t>(a)]) {
          hit = true;
          break;
        }
      if (!hit) {
        target = static_cast<int>(s);
        break;
      }
    }

    auto branch_on = [&](const std::vector<int>& arcs) {
      for (int a : arcs) {
        knocked[static_cast<size_t>(a)] = 1;
        knocked_list.push_back(a);
        self(self);
        knocked_list.pop_back();
        knocked[static_cast<size_t>(a)] = 0;
      }
    };

    if (target >= 0) {
      if (static_cast<int>(knocked_list.size()) == budget) return;
      branch_on(pooled[static_cast<size_t>(target)]);
      return;
    }

    // Every pooled support is hit; pad up to the exact budget with the
    // smallest arcs off the candidate path.
    const int need = budget - static_cast<int>(knocked_list.size());
    std::vector<char> on_path(static_cast<size_t>(m), 0);
    for (int a : sp->arc_indices) on_path[static_cast<size_t>(a)] = 1;
    std::vector<int> padding;
    for (int a = 0; a < m && static_cast<int>(padding.size()) < need; ++a)
      if (!knocked[static_cast<size_t>(a)] && !on_path[static_cast<size_t>(a)])
        padding.push_back(a);
    if (static_cast<int>(padding.size()) == need) {
      std::vector<int> witness = knocked_list;
      witness.insert(witness.end(), padding.begin(), padding.end());
      std::sort(witness.begin(), witness.end());
      offer(*sp, std::move(witness));
      return;
    }
    // Not enough arcs off this path: any exact-budget completion must knock
    // part of it, so branch on its arcs.
    if (static_cast<int>(knocked_list.size()) < budget) {
      std::vector<int> arcs = sp->arc_indices;
      std::sort(arcs.begin(), arcs.end());
      branch_on(arcs);
    }
  };
  search(search);

  if (!incumbent) return {std::nullopt, {}};
  return {Solution{std::move(incumbent->support), incumbent->value},
          std::move(incumbent->witness)};
}

SubproblemAnswer solve_interdiction(const PathFinder& finder,
                                    const SubproblemQuery& query) {
  const int m = finder.graph().arc_count();
  check_budget(query.budget, m);
  auto pooled = checked_pool_supports(query.pool, m);
  if (query.budget) return solve_budgeted(finder, pooled, *query.budget);
  return solve_unbudgeted(finder, pooled);
}

}  // namespace

SubproblemAnswer sp_interdiction_solve(const DirectedGraph& g,
                                       const SubproblemQuery& query) {
  validate(g);
  PathFinder finder(g);
  return solve_interdiction(finder, query);
}

ExhaustiveOracle::ExhaustiveOracle(BinaryProgram program)
    : program_(std::move(program)) {
  validate(program_);
  if (program_.n > 24)
    throw CapacityError("exhaustive oracle is limited to 24 variables");
}

SubproblemAnswer ExhaustiveOracle::solve(const SubproblemQuery& query) {
  return exhaustive_solve(program_, query);
}

std::optional<Solution> ExhaustiveOracle::solve_with_knockout(
    const std::vector<int>& knocked_out) {
  std::uint32_t removed = 0;
  for (int i : knocked_out) {
    if (i < 0 || i >= program_.n) throw InputError("knockout index out of range");
    removed |= 1u << i;
  }
  for (const OrderedSupport& entry : support_order(program_)) {
    if (entry.mask & removed) continue;
    if (mask_feasible(program_, entry.mask))
      return Solution{mask_to_support(entry.mask, program_.n), entry.value};
  }
  return std::nullopt;
}

ShortestPathOracle::ShortestPathOracle(DirectedGraph graph)
    : graph_(std::move(graph)), finder_(graph_) {
  validate(graph_);
}

SubproblemAnswer ShortestPathOracle::solve(const SubproblemQuery& query) {
  return solve_interdiction(finder_, query);
}

std::optional<Solution> ShortestPathOracle::solve_with_knockout(
    const std::vector<int>& knocked_out) {
  std::vector<char> flags(static_cast<size_t>(graph_.arc_count()), 0);
  for (int i : knocked_out) {
    if (i < 0 || i >= graph_.arc_count())
      throw InputError("knockout index out of range");
    flags[static_cast<size_t>(i)] = 1;
  }
  std::optional<PathSolution> path = finder_.find(flags);
  if (!path) return std::nullopt;
  std::vector<int> support = path->arc_indices;
  std::sort(support.begin(), support.end());
  return Solution{std::move(support), path->length};
}

}  // namespace knockout
