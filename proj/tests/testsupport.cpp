#include "testsupport.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <random>

namespace kotest {

using knockout::BinaryProgram;
using knockout::CoverInstance;
using knockout::CoverResult;
using knockout::DirectedGraph;
using knockout::KnockoutWeights;
using knockout::PropertySpec;
using knockout::Value;

DirectedGraph diamond_graph() {
  DirectedGraph g;
  g.node_count = 4;
  g.arcs = {{1, 2, 1}, {2, 4, 1}, {1, 3, 1}, {3, 4, 1}, {1, 4, 5}};
  g.origin = 1;
  g.destination = 4;
  return g;
}

std::vector<SimplePath> all_simple_paths(const DirectedGraph& g) {
  if (g.arc_count() > 31) throw std::runtime_error("too many arcs to enumerate");
  std::vector<std::vector<int>> out(static_cast<size_t>(g.node_count) + 1);
  for (int i = 0; i < g.arc_count(); ++i)
    out[static_cast<size_t>(g.arcs[static_cast<size_t>(i)].tail)].push_back(i);

  std::vector<SimplePath> paths;
  std::vector<char> visited(static_cast<size_t>(g.node_count) + 1, 0);
  SimplePath current;
  std::function<void(int)> walk = [&](int node) {
    if (node == g.destination) {
      paths.push_back(current);
      return;
    }
    for (int ai : out[static_cast<size_t>(node)]) {
      const auto& a = g.arcs[static_cast<size_t>(ai)];
      if (visited[static_cast<size_t>(a.head)]) continue;
      visited[static_cast<size_t>(a.head)] = 1;
      current.mask |= 1u << ai;
      current.length += a.length;
      current.seq.push_back(ai);
      walk(a.head);
      current.seq.pop_back();
      current.length -= a.length;
      current.mask &= ~(1u << ai);
      visited[static_cast<size_t>(a.head)] = 0;
    }
  };
  visited[static_cast<size_t>(g.origin)] = 1;
  walk(g.origin);
  return paths;
}

std::vector<Value> min_surviving_table(const DirectedGraph& g) {
  if (g.arc_count() > 20) throw std::runtime_error("too many arcs to tabulate");
  const auto paths = all_simple_paths(g);
  std::vector<Value> table(size_t{1} << g.arc_count(), kInf);
  for (std::uint32_t removed = 0; removed < table.size(); ++removed) {
    Value best = kInf;
    for (const SimplePath& p : paths)
      if ((p.mask & removed) == 0) best = std::min(best, p.length);
    table[removed] = best;
  }
  return table;
}

Value brute_min_knockout_weight(const std::vector<Value>& table,
                                const KnockoutWeights& weights,
                                const PropertySpec& spec) {
  const int m = static_cast<int>(weights.d.size());
  Value best = kInf;
  for (std::uint32_t removed = 0; removed < table.size(); ++removed) {
    std::optional<Value> outcome;
    if (table[removed] != kInf) outcome = table[removed];
    if (!knockout::property_holds(spec, outcome)) continue;
    Value weight = 0;
    for (int i = 0; i < m; ++i)
      if (removed >> i & 1u) weight += weights.d[static_cast<size_t>(i)];
    best = std::min(best, weight);
  }
  return best;
}

std::optional<Value> brute_max_min_value(const std::vector<Value>& table,
                                         int arc_count, int budget) {
  std::optional<Value> best;
  for (std::uint32_t removed = 0; removed < table.size(); ++removed) {
    if (std::popcount(removed) != budget) continue;
    if (table[removed] == kInf) continue;
    if (!best || table[removed] > *best) best = table[removed];
  }
  (void)arc_count;
  return best;
}

int max_disjoint_paths(const DirectedGraph& g) {
  // unit-capacity max flow (shortest augmenting paths)
  const int m = g.arc_count();
  std::vector<int> capacity(static_cast<size_t>(2 * m));
  std::vector<std::vector<int>> incident(static_cast<size_t>(g.node_count) + 1);
  for (int i = 0; i < m; ++i) {
    capacity[static_cast<size_t>(2 * i)] = 1;      // forward
    capacity[static_cast<size_t>(2 * i + 1)] = 0;  // residual
    incident[static_cast<size_t>(g.arcs[static_cast<size_t>(i)].tail)].push_back(2 * i);
    incident[static_cast<size_t>(g.arcs[static_cast<size_t>(i)].head)].push_back(2 * i + 1);
  }
  auto edge_head = [&](int e) {
    const auto& a = g.arcs[static_cast<size_t>(e / 2)];
    return e % 2 == 0 ? a.head : a.tail;
  };

  int flow = 0;
  while (true) {
    std::vector<int> via(static_cast<size_t>(g.node_count) + 1, -1);
    std::deque<int> queue{g.origin};
    via[static_cast<size_t>(g.origin)] = -2;
    while (!queue.empty() && via[static_cast<size_t>(g.destination)] == -1) {
      int node = queue.front();
      queue.pop_front();
      for (int e : incident[static_cast<size_t>(node)]) {
        int next = edge_head(e);
        if (capacity[static_cast<size_t>(e)] > 0 && via[static_cast<size_t>(next)] == -1) {
          via[static_cast<size_t>(next)] = e;
          queue.push_back(next);
        }
      }
    }
    if (via[static_cast<size_t>(g.destination)] == -1) break;
    for (int node = g.destination; node != g.origin;) {
      int e = via[static_cast<size_t>(node)];
      capacity[static_cast<size_t>(e)] -= 1;
      capacity[static_cast<size_t>(e ^ 1)] += 1;
      node = e % 2 == 0 ? g.arcs[static_cast<size_t>(e / 2)].tail
                        : g.arcs[static_cast<size_t>(e / 2)].head;
    }
    ++flow;
  }
  return flow;
}

CoverResult brute_min_cover(const CoverInstance& instance) {
  const int n = instance.universe_size;
  if (n > 20) throw std::runtime_error("universe too large to enumerate");
  std::optional<CoverResult> best;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool covers = true;
    for (const auto& set : instance.sets) {
      bool hit = false;
      for (int e : set)
        if (subset >> e & 1u) {
          hit = true;
          break;
        }
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    std::vector<int> cover;
    Value weight = 0;
    for (int e = 0; e < n; ++e)
      if (subset >> e & 1u) {
        cover.push_back(e);
        weight += instance.weights.d[static_cast<size_t>(e)];
      }
    if (!best || weight < best->weight ||
        (weight == best->weight &&
         std::lexicographical_compare(cover.begin(), cover.end(), best->cover.begin(),
                                      best->cover.end())))
      best = CoverResult{std::move(cover), weight};
  }
  return *best;
}

bool brute_cover_exists(const std::vector<std::vector<int>>& pooled,
                        const std::vector<int>& support, std::optional<int> budget,
                        int n) {
  if (n > 20) throw std::runtime_error("universe too large to enumerate");
  std::uint32_t support_mask = 0;
  for (int i : support) support_mask |= 1u << i;
  for (std::uint32_t alpha = 0; alpha < (1u << n); ++alpha) {
    if (alpha & support_mask) continue;
    if (budget && std::popcount(alpha) != *budget) continue;
    bool hits_all = true;
    for (const auto& f : pooled) {
      bool hit = false;
      for (int e : f)
        if (alpha >> e & 1u) {
          hit = true;
          break;
        }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) return true;
  }
  return false;
}

std::optional<Value> brute_min_joint_value(const BinaryProgram& program,
                                           const std::vector<std::vector<int>>& pooled,
                                           std::optional<int> budget) {
  const int n = program.n;
  if (n > 12) throw std::runtime_error("program too large to enumerate pairs");
  std::optional<Value> best;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (x >> i & 1u) support.push_back(i);
    knockout::Evaluation eval = knockout::evaluate(program, support);
    if (!eval.feasible) continue;
    if (best && eval.value >= *best) continue;
    if (brute_cover_exists(pooled, support, budget, n)) best = eval.value;
  }
  return best;
}

DirectedGraph corpus_graph(int index) {
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(index));
  int nodes = 2 + static_cast<int>(rng() % 9);  // 2..10
  long long capacity = static_cast<long long>(nodes) * (nodes - 1);
  int max_arcs = static_cast<int>(std::min<long long>(12, capacity));
  int min_arcs = nodes - 1;
  int arcs = min_arcs + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                             max_arcs - min_arcs + 1));
  return knockout::random_instance(nodes, arcs, 1, 10,
                                   static_cast<std::uint64_t>(index) * 7919 + 13);
}

}  // namespace kotest
