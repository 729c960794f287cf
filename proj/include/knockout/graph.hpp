#pragma once

// Directed networks for the arc-interdiction instantiation: shortest paths
// with forbidden arcs, instance I/O in a DIMACS-flavoured text format, seeded
// instance generation, and conversion to the canonical binary-program form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knockout/core.hpp"

namespace knockout {

struct Arc {
  int tail = 0;
  int head = 0;
  Value length = 0;

  bool operator==(const Arc&) const = default;
};

// Node ids are 1-based. The 0-based position of an arc in `arcs` is the
// variable index used by all knockout machinery.
struct DirectedGraph {
  int node_count = 0;
  std::vector<Arc> arcs;
  int origin = 0;
  int destination = 0;

  int arc_count() const { return static_cast<int>(arcs.size()); }
  bool operator==(const DirectedGraph&) const = default;
};

void validate(const DirectedGraph& g);  // throws InputError

struct PathSolution {
  std::vector<int> arc_indices;  // in travel order, origin to destination
  Value length = 0;

  bool operator==(const PathSolution&) const = default;
};

// Minimum-length origin->destination path avoiding the forbidden arcs, or
// nullopt if none exists. Ties are broken toward the lexicographically
// smallest arc-index sequence; the result is always a simple path.
std::optional<PathSolution> shortest_path(const DirectedGraph& g,
                                          const std::vector<int>& forbidden);

// Native instance format (line-oriented, `c` lines are comments):
//   p ko <node_count> <arc_count>
//   a <tail> <head> <length>     (arc_count lines; file order = arc index)
//   s <origin> <destination>
DirectedGraph parse_instance(const std::string& text);  // throws ParseError
std::string write_instance(const DirectedGraph& g);

// Seeded generator: a spanning backbone path from origin to destination plus
// random extra arcs, no self-loops, no duplicate (tail, head) pairs. Fully
// deterministic in the seed.
DirectedGraph random_instance(int node_count, int arc_count, Value min_length,
                              Value max_length, std::uint64_t seed);

// One binary variable per arc (cost = length); flow-conservation equalities
// normalised into >=-pairs, plus a row capping the number of selected arcs at
// node_count - 1 so zero-length cycles cannot enter optimal supports.
BinaryProgram to_binary_program(const DirectedGraph& g);

// Reusable shortest-path core: adjacency is indexed once, individual queries
// take arc/node exclusion flags. Used heavily by the interdiction oracle.
class PathFinder {
 public:
  explicit PathFinder(const DirectedGraph& g);

  const DirectedGraph& graph() const { return *g_; }

  // forbidden_arcs: size arc_count, nonzero = unusable. Empty = none.
  std::optional<PathSolution> find(const std::vector<char>& forbidden_arcs) const;

  // As above, starting from `start`, additionally skipping banned nodes
  // (size node_count + 1). `start` and the destination must not be banned.
  std::optional<PathSolution> find_from(int start,
                                        const std::vector<char>& forbidden_arcs,
                                        const std::vector<char>& banned_nodes) const;

 private:
  const DirectedGraph* g_;
  std::vector<std::vector<int>> out_arcs_;  // per node, ascending arc index
  std::vector<std::vector<int>> in_arcs_;
};

}  // namespace knockout
