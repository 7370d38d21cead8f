#pragma once

// Shared helpers for the test suite: deterministic random connected graphs.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "phononet/graph.hpp"

namespace test_support {

/// Random connected graph on n vertices: a random attachment spanning tree
/// plus `extra` random non-parallel edges.  Deterministic per seed.
inline phononet::Graph random_connected_graph(int n, int extra, unsigned seed) {
  std::mt19937 rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.insert({pick(rng), v});
  }
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  std::uniform_int_distribution<int> any(0, n - 1);
  while (extra > 0 && static_cast<long long>(edges.size()) < max_edges) {
    int u = any(rng), v = any(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (edges.insert({u, v}).second) --extra;
  }
  return phononet::Graph(n, {edges.begin(), edges.end()});
}

}  // namespace test_support
