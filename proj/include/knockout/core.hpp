#pragma once

// Shared problem/solution vocabulary for the knockout solvers: the binary
// program under attack, recorded solution pools, desired-property
// specifications, and the result records produced by the engine.
//
// Canonical problem form, integer data throughout:
//   min  sum_i c_i x_i   s.t.  sum_j a_ij x_j >= b_i  (i = 1..m),  x binary.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knockout {

using Value = long long;

// --- error taxonomy --------------------------------------------------------

// Bad caller-supplied data: indices out of range, inconsistent sizes, ...
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance text that does not conform to the native format.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Problem exceeds an exhaustive method's hard size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver produced something that violates its own contract.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// cover_with_survivor: no cover leaves a feasible survivor behind.
class NoSurvivorCoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cardinality solve: even the first budgeted subproblem is infeasible.
class InfeasibleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceRecord {
  int iteration = 0;         // 1-based solve counter
  Value value = 0;           // objective of the recorded solution
  int support_size = 0;
  long long elapsed_ms = 0;  // cumulative since the run started
};

// Iteration or wall-clock cap hit; carries the trace collected so far.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& message, std::vector<TraceRecord> partial)
      : std::runtime_error(message), trace_(std::move(partial)) {}
  const std::vector<TraceRecord>& trace() const { return trace_; }

 private:
  std::vector<TraceRecord> trace_;
};

// --- problem data ----------------------------------------------------------

// One >=-row: sum over coeffs of a_j * x_j >= rhs.
struct ConstraintRow {
  std::map<int, Value> coeffs;
  Value rhs = 0;
};

// Rows with other senses must be pre-normalised into >= form by the caller.
struct BinaryProgram {
  int n = 0;
  std::vector<Value> costs;
  std::vector<ConstraintRow> rows;
  std::vector<std::string> variable_names;  // optional; empty or size n

  int constraint_count() const { return static_cast<int>(rows.size()); }
};

void validate(const BinaryProgram& program);  // throws InputError

// Per-variable knockout cost d_i >= 0; all-ones asks for a minimum-size set.
struct KnockoutWeights {
  std::vector<Value> d;

  static KnockoutWeights unit(int n) { return {std::vector<Value>(static_cast<size_t>(n), 1)}; }
};

void validate(const KnockoutWeights& weights, int n);

Value weight_of(const KnockoutWeights& weights, const std::vector<int>& indices);

// What the surviving problem must look like after knockout.
struct PropertySpec {
  enum class Kind { kValueAtLeast, kMustBeInfeasible };

  Kind kind = Kind::kValueAtLeast;
  Value threshold = 0;  // meaningful for kValueAtLeast only

  static PropertySpec value_at_least(Value threshold) {
    return {Kind::kValueAtLeast, threshold};
  }
  static PropertySpec must_be_infeasible() { return {Kind::kMustBeInfeasible, 0}; }
};

struct Solution {
  std::vector<int> support;  // strictly increasing indices of variables at 1
  Value value = 0;           // objective over the support

  bool operator==(const Solution&) const = default;
};

// Solutions recorded by an engine run, in discovery order. Values must be
// nondecreasing and supports distinct; a violation means the oracle that
// produced them is broken.
class SolutionPool {
 public:
  void push(Solution solution);  // throws InternalError on invariant breach
  const std::vector<Solution>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Solution> entries_;
};

std::vector<std::vector<int>> pool_supports(const SolutionPool& pool);

struct KnockoutResult {
  std::vector<int> knockout_set;        // sorted variable indices forced to 0
  Value weight = 0;                     // d-sum over knockout_set
  int pool_size = 0;                    // solutions recorded before covering
  std::optional<Value> surviving_value; // optimum after knockout, if any survivor
  std::vector<TraceRecord> trace;
  bool verified = false;
};

struct CardinalityResult {
  int budget = 0;
  std::vector<int> knockout_set;  // exactly `budget` indices
  Value optimal_value = 0;        // maximised surviving optimum
  int pool_size = 0;
  std::vector<TraceRecord> trace;
  bool verified = false;
};

struct Evaluation {
  bool feasible = false;
  Value value = 0;
};

// Objective and row feasibility of a support. Pure; throws InputError on an
// index outside [0, n) or a duplicated index.
Evaluation evaluate(const BinaryProgram& program, const std::vector<int>& support);

// Termination test: does `outcome` (nullopt = surviving problem infeasible)
// satisfy the spec? An absent outcome satisfies any value threshold.
bool property_holds(const PropertySpec& spec, std::optional<Value> outcome);

}  // namespace knockout
