#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phononet/errors.hpp"

namespace phononet {

/// Undirected simple graph on vertices 0..n-1.
///
/// Vertices are 0-based in memory; the edge-list text format and all error
/// messages use 1-based labels. Instances are immutable after construction
/// and safe to share across threads.
class Graph {
public:
  using Edge = std::pair<int, int>;  // normalized: first < second

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n));
      if (!seen.insert({u, v}).second)
        throw std::invalid_argument("duplicate edge {" + std::to_string(u + 1) + "," +
                                    std::to_string(v + 1) + "}");
    }
    edges_.assign(seen.begin(), seen.end());
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> degrees() const {
    std::vector<int> d(n_, 0);
    for (auto [u, v] : edges_) {
      ++d[u];
      ++d[v];
    }
    return d;
  }

  std::vector<std::vector<int>> adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

private:
  int n_;
  std::vector<Edge> edges_;
};

enum class GraphKind { path, cycle, complete, circulant };

/// Parameters for the built-in graph families. `l` is the number of
/// neighbours on each side and applies to circulant only (requires 2l < n).
struct GeneratorSpec {
  GraphKind kind;
  int n;
  int l = 0;
};

inline void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("vertex count must be positive");
  switch (spec.kind) {
    case GraphKind::path:
    case GraphKind::complete:
      break;
    case GraphKind::cycle:
      if (spec.n < 3) throw std::invalid_argument("cycle requires n >= 3");
      break;
    case GraphKind::circulant:
      if (spec.l < 1) throw std::invalid_argument("circulant requires l >= 1");
      if (2 * spec.l >= spec.n)
        throw std::invalid_argument("circulant requires 2l < n (got n=" +
                                    std::to_string(spec.n) + ", l=" + std::to_string(spec.l) +
                                    ")");
      break;
  }
}

inline Graph generate(const GeneratorSpec& spec) {
  validate(spec);
  const int n = spec.n;
  std::vector<Graph::Edge> edges;
  switch (spec.kind) {
    case GraphKind::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphKind::cycle:
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case GraphKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case GraphKind::circulant:
      // vertex i adjacent to i+s and i-s (mod n) for s = 1..l; with 2l < n
      // the forward edges alone enumerate each pair exactly once
      for (int i = 0; i < n; ++i)
        for (int s = 1; s <= spec.l; ++s) edges.emplace_back(i, (i + s) % n);
      break;
  }
  return Graph(n, std::move(edges));
}

inline bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  auto adj = g.adjacency_lists();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

/// Laplacian L = D - A: degrees on the diagonal, -1 at adjacent pairs.
/// Positive semidefinite; row sums are exactly zero.
inline Eigen::MatrixXd laplacian(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    L(u, u) += 1.0;
    L(v, v) += 1.0;
    L(u, v) -= 1.0;
    L(v, u) -= 1.0;
  }
  return L;
}

namespace detail {

inline std::string_view strip(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  long long v = 0;
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
    if (i == s.size()) return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000'000LL) return false;
  }
  out = static_cast<int>(neg ? -v : v);
  return true;
}

}  // namespace detail

/// Parse the edge-list text format:
///   n=<int>
///   <i> <j>        (1 <= i,j <= n, one edge per line)
/// `#` starts a comment; blank lines are skipped; LF or CRLF.
inline Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Graph::Edge> edges;
  std::set<Graph::Edge> seen;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::strip(line);
    if (line.empty()) continue;

    if (n < 0) {
      if (line.substr(0, 2) != "n=" || !detail::parse_int(detail::strip(line.substr(2)), n) || n < 1)
        throw parse_error(lineno, "expected header 'n=<positive integer>'");
      continue;
    }

    size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw parse_error(lineno, "expected '<i> <j>'");
    int i = 0, j = 0;
    if (!detail::parse_int(detail::strip(line.substr(0, sp)), i) ||
        !detail::parse_int(detail::strip(line.substr(sp)), j))
      throw parse_error(lineno, "expected '<i> <j>'");
    if (i < 1 || i > n || j < 1 || j > n)
      throw parse_error(lineno, "vertex out of range 1.." + std::to_string(n));
    if (i == j) throw parse_error(lineno, "self-loop at vertex " + std::to_string(i));
    Graph::Edge e{std::min(i, j) - 1, std::max(i, j) - 1};
    if (!seen.insert(e).second)
      throw parse_error(lineno, "duplicate edge {" + std::to_string(std::min(i, j)) + "," +
                                    std::to_string(std::max(i, j)) + "}");
    edges.push_back(e);
  }
  if (n < 0) throw parse_error("missing header 'n=<int>'");
  return Graph(n, std::move(edges));
}

}  // namespace phononet
