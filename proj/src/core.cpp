#include "knockout/core.hpp"

#include <algorithm>

namespace knockout {

void validate(const BinaryProgram& program) {
  if (program.n < 1) throw InputError("program needs at least one variable");
  if (static_cast<int>(program.costs.size()) != program.n)
    throw InputError("cost vector size does not match variable count");
  if (!program.variable_names.empty() &&
      static_cast<int>(program.variable_names.size()) != program.n)
    throw InputError("variable_names must be empty or have one entry per variable");
  for (size_t i = 0; i < program.rows.size(); ++i) {
    for (const auto& [index, coeff] : program.rows[i].coeffs) {
      (void)coeff;
      if (index < 0 || index >= program.n)
        throw InputError("row " + std::to_string(i) + " references variable " +
                         std::to_string(index) + " outside [0, " +
                         std::to_string(program.n) + ")");
    }
  }
}

void validate(const KnockoutWeights& weights, int n) {
  if (static_cast<int>(weights.d.size()) != n)
    throw InputError("knockout weights must have one entry per variable");
  for (Value w : weights.d)
    if (w < 0) throw InputError("knockout weights must be nonnegative");
}

Value weight_of(const KnockoutWeights& weights, const std::vector<int>& indices) {
  Value total = 0;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(weights.d.size()))
      throw InputError("weight index out of range");
    total += weights.d[static_cast<size_t>(i)];
  }
  return total;
}

void SolutionPool::push(Solution solution) {
  if (!std::is_sorted(solution.support.begin(), solution.support.end()) ||
      std::adjacent_find(solution.support.begin(), solution.support.end()) !=
          solution.support.end())
    throw InternalError("pooled support is not a strictly increasing index set");
  if (!entries_.empty() && solution.value < entries_.back().value)
    throw InternalError("pooled solution value decreased; oracle is broken");
  for (const Solution& existing : entries_)
    if (existing.support == solution.support)
      throw InternalError("duplicate support pooled; oracle is broken");
  entries_.push_back(std::move(solution));
}

std::vector<std::vector<int>> pool_supports(const SolutionPool& pool) {
  std::vector<std::vector<int>> sets;
  sets.reserve(pool.entries().size());
  for (const Solution& s : pool.entries()) sets.push_back(s.support);
  return sets;
}

Evaluation evaluate(const BinaryProgram& program, const std::vector<int>& support) {
  std::vector<char> selected(static_cast<size_t>(program.n), 0);
  Value value = 0;
  for (int i : support) {
    if (i < 0 || i >= program.n)
      throw InputError("support index " + std::to_string(i) + " outside [0, " +
                       std::to_string(program.n) + ")");
    if (selected[static_cast<size_t>(i)])
      throw InputError("support index " + std::to_string(i) + " repeated");
    selected[static_cast<size_t>(i)] = 1;
    value += program.costs[static_cast<size_t>(i)];
  }
  bool feasible = true;
  for (const ConstraintRow& row : program.rows) {
    Value lhs = 0;
    for (const auto& [index, coeff] : row.coeffs)
      if (selected[static_cast<size_t>(index)]) lhs += coeff;
    if (lhs < row.rhs) {
      feasible = false;
      break;
    }
  }
  return {feasible, value};
}

bool property_holds(const PropertySpec& spec, std::optional<Value> outcome) {
  switch (spec.kind) {
    case PropertySpec::Kind::kValueAtLeast:
      return !outcome.has_value() || *outcome >= spec.threshold;
    case PropertySpec::Kind::kMustBeInfeasible:
      return !outcome.has_value();
  }
  return false;  // unreachable
}

}  // namespace knockout
