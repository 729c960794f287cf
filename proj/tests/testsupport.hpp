#pragma once

// Independent reference implementations used to check the solvers: plain
// subset enumeration, simple-path enumeration, and a unit-capacity max-flow.
// Nothing here shares search code with the library.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "knockout/core.hpp"
#include "knockout/graph.hpp"
#include "knockout/setcover.hpp"

namespace kotest {

inline constexpr knockout::Value kInf = std::numeric_limits<knockout::Value>::max();

// Four nodes, five arcs: two parallel two-arc routes plus one long direct arc.
knockout::DirectedGraph diamond_graph();

struct SimplePath {
  std::uint32_t mask = 0;  // arc-index bitmask
  knockout::Value length = 0;
  std::vector<int> seq;  // travel order
};

// Every simple origin->destination path, by depth-first search over ascending
// arc indices. Requires arc_count <= 31.
std::vector<SimplePath> all_simple_paths(const knockout::DirectedGraph& g);

// table[D] = surviving shortest-path length after removing arc set D (as a
// bitmask), kInf when no path survives. Size 1 << arc_count; arc_count <= 20.
std::vector<knockout::Value> min_surviving_table(const knockout::DirectedGraph& g);

// Minimum knockout weight over all arc subsets whose removal gives the
// required property. A disconnected outcome satisfies any value threshold.
knockout::Value brute_min_knockout_weight(const std::vector<knockout::Value>& table,
                                          const knockout::KnockoutWeights& weights,
                                          const knockout::PropertySpec& spec);

// Max surviving shortest-path length over knockout sets of exactly `budget`
// arcs that leave some path alive; nullopt when every such set disconnects.
std::optional<knockout::Value> brute_max_min_value(
    const std::vector<knockout::Value>& table, int arc_count, int budget);

// Maximum number of pairwise arc-disjoint origin->destination paths
// (unit-capacity max flow).
int max_disjoint_paths(const knockout::DirectedGraph& g);

// Minimum-weight cover by enumeration of all index subsets, ties broken by
// the lexicographically smallest sorted sequence. universe_size <= 20.
knockout::CoverResult brute_min_cover(const knockout::CoverInstance& instance);

// Does a knockout assignment disjoint from `support` hit every pooled set,
// with exactly `budget` members when budgeted? By enumeration; n <= 20.
bool brute_cover_exists(const std::vector<std::vector<int>>& pooled,
                        const std::vector<int>& support, std::optional<int> budget,
                        int n);

// Minimum base objective over all (x, alpha) pairs where x is base-feasible,
// alpha avoids x, hits every pooled set, and has exactly `budget` members
// when budgeted. By enumeration; n <= 12.
std::optional<knockout::Value> brute_min_joint_value(
    const knockout::BinaryProgram& program,
    const std::vector<std::vector<int>>& pooled, std::optional<int> budget);

// Deterministic small random graph family shared by the property suites:
// 2..10 nodes, up to 12 arcs, lengths 1..10.
knockout::DirectedGraph corpus_graph(int index);

}  // namespace kotest
