#include "knockout/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace knockout {

namespace {

constexpr Value kInf = std::numeric_limits<Value>::max();

long long uniform_in(std::mt19937_64& rng, long long lo, long long hi) {
  // modulo draw: deterministic across platforms, bias irrelevant here
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

long long parse_integer(const std::string& token, int line_no) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line_no, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

void validate(const DirectedGraph& g) {
  if (g.node_count < 2) throw InputError("graph needs at least two nodes");
  auto check_node = [&](int v, const char* what) {
    if (v < 1 || v > g.node_count)
      throw InputError(std::string(what) + " node id " + std::to_string(v) +
                       " outside [1, " + std::to_string(g.node_count) + "]");
  };
  check_node(g.origin, "origin");
  check_node(g.destination, "destination");
  if (g.origin == g.destination)
    throw InputError("origin and destination must differ");
  for (const Arc& a : g.arcs) {
    check_node(a.tail, "arc tail");
    check_node(a.head, "arc head");
    if (a.length < 0) throw InputError("arc lengths must be nonnegative");
  }
}

PathFinder::PathFinder(const DirectedGraph& g)
    : g_(&g),
      out_arcs_(static_cast<size_t>(g.node_count) + 1),
      in_arcs_(static_cast<size_t>(g.node_count) + 1) {
  for (int i = 0; i < g.arc_count(); ++i) {
    out_arcs_[static_cast<size_t>(g.arcs[static_cast<size_t>(i)].tail)].push_back(i);
    in_arcs_[static_cast<size_t>(g.arcs[static_cast<size_t>(i)].head)].push_back(i);
  }
}

std::optional<PathSolution> PathFinder::find(const std::vector<char>& forbidden_arcs) const {
  return find_from(g_->origin, forbidden_arcs, {});
}

std::optional<PathSolution> PathFinder::find_from(
    int start, const std::vector<char>& forbidden_arcs,
    const std::vector<char>& banned_nodes) const {
  const DirectedGraph& g = *g_;
  auto arc_forbidden = [&](int i) {
    return !forbidden_arcs.empty() && forbidden_arcs[static_cast<size_t>(i)];
  };
  auto node_banned = [&](int v) {
    return !banned_nodes.empty() && banned_nodes[static_cast<size_t>(v)];
  };
  if (node_banned(start) || node_banned(g.destination)) return std::nullopt;

  // Distance from every node to the destination over the allowed subgraph.
  std::vector<Value> rdist(static_cast<size_t>(g.node_count) + 1, kInf);
  using Entry = std::pair<Value, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  rdist[static_cast<size_t>(g.destination)] = 0;
  heap.push({0, g.destination});
  while (!heap.empty()) {
    auto [dist, node] = heap.top();
    heap.pop();
    if (dist != rdist[static_cast<size_t>(node)]) continue;
    for (int ai : in_arcs_[static_cast<size_t>(node)]) {
      if (arc_forbidden(ai)) continue;
      const Arc& a = g.arcs[static_cast<size_t>(ai)];
      if (node_banned(a.tail)) continue;
      Value candidate = dist + a.length;
      if (candidate < rdist[static_cast<size_t>(a.tail)]) {
        rdist[static_cast<size_t>(a.tail)] = candidate;
        heap.push({candidate, a.tail});
      }
    }
  }

  const Value total = rdist[static_cast<size_t>(start)];
  if (total == kInf) return std::nullopt;

  // Walk the tight arcs depth-first in ascending index order; the first
  // simple completion is the lexicographically smallest shortest path.
  // Backtracking only ever happens around zero-length cycles.
  std::vector<char> on_path(static_cast<size_t>(g.node_count) + 1, 0);
  std::vector<int> sequence;
  std::function<bool(int, Value)> extend = [&](int node, Value acc) -> bool {
    if (node == g.destination) return true;
    for (int ai : out_arcs_[static_cast<size_t>(node)]) {
      if (arc_forbidden(ai)) continue;
      const Arc& a = g.arcs[static_cast<size_t>(ai)];
      if (node_banned(a.head) || on_path[static_cast<size_t>(a.head)]) continue;
      Value tail_to_dest = rdist[static_cast<size_t>(a.head)];
      if (tail_to_dest == kInf || acc + a.length + tail_to_dest != total) continue;
      on_path[static_cast<size_t>(a.head)] = 1;
      sequence.push_back(ai);
      if (extend(a.head, acc + a.length)) return true;
      sequence.pop_back();
      on_path[static_cast<size_t>(a.head)] = 0;
    }
    return false;
  };
  on_path[static_cast<size_t>(start)] = 1;
  if (!extend(start, 0))
    throw InternalError("tight-arc walk failed despite a finite distance");
  return PathSolution{std::move(sequence), total};
}

std::optional<PathSolution> shortest_path(const DirectedGraph& g,
                                          const std::vector<int>& forbidden) {
  validate(g);
  std::vector<char> flags(static_cast<size_t>(g.arc_count()), 0);
  for (int i : forbidden) {
    if (i < 0 || i >= g.arc_count())
      throw InputError("forbidden arc index " + std::to_string(i) + " out of range");
    flags[static_cast<size_t>(i)] = 1;
  }
  return PathFinder(g).find(flags);
}

DirectedGraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  enum class Phase { kHeader, kArcs, kEndpoints, kDone };
  Phase phase = Phase::kHeader;
  DirectedGraph g;
  int expected_arcs = 0;

  auto check_node = [&](long long v, int ln) {
    if (v < 1 || v > g.node_count)
      throw ParseError(ln, "node id " + std::to_string(v) + " outside [1, " +
                               std::to_string(g.node_count) + "]");
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    switch (phase) {
      case Phase::kHeader: {
        if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "ko")
          throw ParseError(line_no, "expected header 'p ko <node_count> <arc_count>'");
        long long nodes = parse_integer(tokens[2], line_no);
        long long arcs = parse_integer(tokens[3], line_no);
        if (nodes < 1 || nodes > 1000000)
          throw ParseError(line_no, "node count out of range");
        if (arcs < 0 || arcs > 10000000)
          throw ParseError(line_no, "arc count out of range");
        g.node_count = static_cast<int>(nodes);
        expected_arcs = static_cast<int>(arcs);
        g.arcs.reserve(static_cast<size_t>(expected_arcs));
        phase = expected_arcs > 0 ? Phase::kArcs : Phase::kEndpoints;
        break;
      }
      case Phase::kArcs: {
        if (tokens[0] != "a" || tokens.size() != 4)
          throw ParseError(line_no, "expected 'a <tail> <head> <length>' (" +
                                        std::to_string(g.arc_count()) + " of " +
                                        std::to_string(expected_arcs) + " arcs read)");
        long long tail = parse_integer(tokens[1], line_no);
        long long head = parse_integer(tokens[2], line_no);
        long long length = parse_integer(tokens[3], line_no);
        check_node(tail, line_no);
        check_node(head, line_no);
        if (length < 0) throw ParseError(line_no, "arc length must be nonnegative");
        g.arcs.push_back({static_cast<int>(tail), static_cast<int>(head), length});
        if (g.arc_count() == expected_arcs) phase = Phase::kEndpoints;
        break;
      }
      case Phase::kEndpoints: {
        if (tokens[0] != "s" || tokens.size() != 3)
          throw ParseError(line_no, "expected 's <origin> <destination>'");
        long long origin = parse_integer(tokens[1], line_no);
        long long destination = parse_integer(tokens[2], line_no);
        check_node(origin, line_no);
        check_node(destination, line_no);
        if (origin == destination)
          throw ParseError(line_no, "origin and destination must differ");
        g.origin = static_cast<int>(origin);
        g.destination = static_cast<int>(destination);
        phase = Phase::kDone;
        break;
      }
      case Phase::kDone:
        throw ParseError(line_no, "unexpected content after the 's' line");
    }
  }

  if (phase != Phase::kDone) {
    std::string missing = phase == Phase::kHeader ? "'p ko' header"
                          : phase == Phase::kArcs ? "arc lines"
                                                  : "'s' line";
    throw ParseError(line_no + 1, "unexpected end of input: missing " + missing);
  }
  validate(g);
  return g;
}

std::string write_instance(const DirectedGraph& g) {
  validate(g);
  std::ostringstream out;
  out << "p ko " << g.node_count << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs)
    out << "a " << a.tail << ' ' << a.head << ' ' << a.length << '\n';
  out << "s " << g.origin << ' ' << g.destination << '\n';
  return out.str();
}

DirectedGraph random_instance(int node_count, int arc_count, Value min_length,
                              Value max_length, std::uint64_t seed) {
  if (node_count < 2) throw InputError("need at least two nodes");
  if (min_length > max_length) throw InputError("empty length range");
  if (min_length < 0) throw InputError("lengths must be nonnegative");
  if (arc_count < node_count - 1)
    throw InputError("need at least node_count - 1 arcs for a spanning backbone");
  const long long capacity =
      static_cast<long long>(node_count) * (node_count - 1);
  if (arc_count > capacity)
    throw InputError("arc count exceeds the number of distinct (tail, head) pairs");

  std::mt19937_64 rng(seed);

  std::vector<int> order(static_cast<size_t>(node_count));
  for (int i = 0; i < node_count; ++i) order[static_cast<size_t>(i)] = i + 1;
  for (int i = node_count - 1; i > 0; --i)
    std::swap(order[static_cast<size_t>(i)],
              order[static_cast<size_t>(uniform_in(rng, 0, i))]);

  DirectedGraph g;
  g.node_count = node_count;
  g.origin = order.front();
  g.destination = order.back();

  std::set<std::pair<int, int>> used;
  for (int i = 0; i + 1 < node_count; ++i) {
    int tail = order[static_cast<size_t>(i)];
    int head = order[static_cast<size_t>(i + 1)];
    used.insert({tail, head});
    g.arcs.push_back({tail, head, uniform_in(rng, min_length, max_length)});
  }

  int extra = arc_count - (node_count - 1);
  if (extra > 0) {
    std::vector<std::pair<int, int>> free_pairs;
    free_pairs.reserve(static_cast<size_t>(capacity) - used.size());
    for (int tail = 1; tail <= node_count; ++tail)
      for (int head = 1; head <= node_count; ++head)
        if (tail != head && !used.count({tail, head}))
          free_pairs.push_back({tail, head});
    // partial Fisher-Yates: the first `extra` entries become the sample
    for (int i = 0; i < extra; ++i) {
      long long j = uniform_in(rng, i, static_cast<long long>(free_pairs.size()) - 1);
      std::swap(free_pairs[static_cast<size_t>(i)], free_pairs[static_cast<size_t>(j)]);
    }
    for (int i = 0; i < extra; ++i) {
      auto [tail, head] = free_pairs[static_cast<size_t>(i)];
      g.arcs.push_back({tail, head, uniform_in(rng, min_length, max_length)});
    }
  }
  validate(g);
  return g;
}

BinaryProgram to_binary_program(const DirectedGraph& g) {
  validate(g);
  if (g.arc_count() == 0) throw InputError("graph has no arcs");

  BinaryProgram program;
  program.n = g.arc_count();
  program.costs.reserve(static_cast<size_t>(program.n));
  program.variable_names.reserve(static_cast<size_t>(program.n));
  for (const Arc& a : g.arcs) {
    program.costs.push_back(a.length);
    program.variable_names.push_back(std::to_string(a.tail) + "->" +
                                     std::to_string(a.head));
  }

  // One unit of flow from origin to destination; each equality becomes a
  // >=-pair.
  for (int node = 1; node <= g.node_count; ++node) {
    std::map<int, Value> balance;  // outflow minus inflow
    for (int i = 0; i < g.arc_count(); ++i) {
      const Arc& a = g.arcs[static_cast<size_t>(i)];
      if (a.tail == node) balance[i] += 1;
      if (a.head == node) balance[i] -= 1;
    }
    std::erase_if(balance, [](const auto& entry) { return entry.second == 0; });
    Value supply = node == g.origin ? 1 : node == g.destination ? -1 : 0;
    ConstraintRow forward{balance, supply};
    ConstraintRow backward;
    for (const auto& [index, coeff] : balance) backward.coeffs[index] = -coeff;
    backward.rhs = -supply;
    program.rows.push_back(std::move(forward));
    program.rows.push_back(std::move(backward));
  }

  ConstraintRow cardinality;
  for (int i = 0; i < g.arc_count(); ++i) cardinality.coeffs[i] = -1;
  cardinality.rhs = -(static_cast<Value>(g.node_count) - 1);
  program.rows.push_back(std::move(cardinality));

  validate(program);
  return program;
}

}  // namespace knockout
