#pragma once

// Subproblem oracles for the knockout loop body: minimise the base objective
// over solutions x for which some knockout assignment exists that hits every
// pooled support while avoiding x (and, when budgeted, has exactly K
// members). Two implementations share the contract: total enumeration over
// the canonical binary program, and a branch-and-bound specialised to
// shortest-path arc interdiction.

#include <optional>
#include <vector>

#include "knockout/core.hpp"
#include "knockout/graph.hpp"

namespace knockout {

struct SubproblemQuery {
  const SolutionPool& pool;
  std::optional<int> budget;  // exact knockout size K, when constrained
};

struct SubproblemAnswer {
  std::optional<Solution> solution;  // nullopt: no qualifying solution exists
  std::vector<int> witness;          // sorted knockout assignment, when feasible

  bool feasible() const { return solution.has_value(); }
};

// Feasibility kernel shared by the oracles: can some knockout assignment
// disjoint from `support` hit every pooled support? Without a budget this is
// "no pooled support is contained in `support`"; with budget K it also needs
// a hitting set of size <= K and K spare indices outside the support.
bool cover_exists(const SolutionPool& pool, const std::vector<int>& support,
                  std::optional<int> budget, int n);

// Reference implementation by total enumeration in increasing
// (value, lexicographic-support) order. Hard guard: n <= 24.
SubproblemAnswer exhaustive_solve(const BinaryProgram& program,
                                  const SubproblemQuery& query);

// Interdiction implementation: identical value/feasibility contract to
// exhaustive_solve over to_binary_program(g). Unbudgeted queries enumerate
// next-shortest loopless paths until one avoids containing every pooled
// support; budgeted queries run branch-and-bound over partial knockout sets
// bounded by the surviving shortest path.
SubproblemAnswer sp_interdiction_solve(const DirectedGraph& g,
                                       const SubproblemQuery& query);

// Engine-facing contract. Oracles are stateless between calls; concurrent
// calls on shared immutable inputs are safe.
class SubproblemOracle {
 public:
  virtual ~SubproblemOracle() = default;

  virtual int variable_count() const = 0;
  virtual SubproblemAnswer solve(const SubproblemQuery& query) = 0;

  // Base optimum with the given variables forced to zero; nullopt when the
  // restricted problem is infeasible. Used for covering with a survivor
  // guarantee and post-hoc verification.
  virtual std::optional<Solution> solve_with_knockout(
      const std::vector<int>& knocked_out) = 0;
};

class ExhaustiveOracle : public SubproblemOracle {
 public:
  explicit ExhaustiveOracle(BinaryProgram program);

  int variable_count() const override { return program_.n; }
  SubproblemAnswer solve(const SubproblemQuery& query) override;
  std::optional<Solution> solve_with_knockout(const std::vector<int>& knocked_out) override;

  const BinaryProgram& program() const { return program_; }

 private:
  BinaryProgram program_;
};

class ShortestPathOracle : public SubproblemOracle {
 public:
  explicit ShortestPathOracle(DirectedGraph graph);

  int variable_count() const override { return graph_.arc_count(); }
  SubproblemAnswer solve(const SubproblemQuery& query) override;
  std::optional<Solution> solve_with_knockout(const std::vector<int>& knocked_out) override;

  const DirectedGraph& graph() const { return graph_; }

 private:
  DirectedGraph graph_;
  PathFinder finder_;
};

}  // namespace knockout
