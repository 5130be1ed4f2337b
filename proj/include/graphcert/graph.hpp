// Copyright 2026 The graphcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphcert {

// Error codes shared by the whole library. Every thrown error carries one.
enum class errc {
  out_of_range,
  loop_in_simple,
  parallel_in_simple,
  cap_exceeded,
  bad_params,
  empty_family,
  missing,
  already_present,
  empty_set,
  not_a_tree,
  bad_code,
  disconnected,
  not_graphical,
  not_connected_realizable,
  not_three_connected,
  too_small,
  adjacent_endpoints,
  isolated_vertex,
  infeasible_degrees,
  wrong_class,
  not_planar,
  swap_exhausted,
  parse_error,
  bad_rotation,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::out_of_range: return "OutOfRange";
    case errc::loop_in_simple: return "LoopInSimple";
    case errc::parallel_in_simple: return "ParallelInSimple";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::bad_params: return "BadParams";
    case errc::empty_family: return "EmptyFamily";
    case errc::missing: return "Missing";
    case errc::already_present: return "AlreadyPresent";
    case errc::empty_set: return "EmptySet";
    case errc::not_a_tree: return "NotATree";
    case errc::bad_code: return "BadCode";
    case errc::disconnected: return "Disconnected";
    case errc::not_graphical: return "NotGraphical";
    case errc::not_connected_realizable: return "NotConnectedRealizable";
    case errc::not_three_connected: return "NotThreeConnected";
    case errc::too_small: return "TooSmall";
    case errc::adjacent_endpoints: return "AdjacentEndpoints";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::infeasible_degrees: return "InfeasibleDegrees";
    case errc::wrong_class: return "WrongClass";
    case errc::not_planar: return "NotPlanar";
    case errc::swap_exhausted: return "SwapExhausted";
    case errc::parse_error: return "ParseError";
    case errc::bad_rotation: return "BadRotation";
  }
  return "Unknown";
}

class gc_error : public std::runtime_error {
 public:
  gc_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw gc_error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Undirected edge, stored with u <= v.
using Edge = std::pair<int, int>;

inline Edge mk_edge(int u, int v) { return u <= v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
// Immutable after construction; all operations on it are pure.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    require(n >= 0, errc::bad_params, "vertex count must be non-negative");
    for (auto& e : edges) {
      require(e.first >= 0 && e.first < n && e.second >= 0 && e.second < n, errc::out_of_range,
              "edge endpoint out of range");
      require(e.first != e.second, errc::loop_in_simple, "loop not allowed in a simple graph");
      e = mk_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
      require(edges[i] != edges[i - 1], errc::parallel_in_simple,
              "parallel edge not allowed in a simple graph");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  int min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Multigraph (allow_loops = false) / pseudograph (allow_loops = true).
// Edges form a multiset; a loop contributes 2 to its endpoint's degree.
class MultiGraph {
 public:
  MultiGraph() = default;

  MultiGraph(int n, std::vector<Edge> edges, bool allow_loops)
      : n_(n), allow_loops_(allow_loops) {
    require(n >= 0, errc::bad_params, "vertex count must be non-negative");
    for (auto& e : edges) {
      require(e.first >= 0 && e.first < n && e.second >= 0 && e.second < n, errc::out_of_range,
              "edge endpoint out of range");
      if (!allow_loops_)
        require(e.first != e.second, errc::loop_in_simple, "loop not allowed in a multigraph");
      e = mk_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    deg_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
      deg_[u] += (u == v) ? 2 : 1;
      if (u != v) deg_[v] += 1;
    }
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool allow_loops() const { return allow_loops_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const { return deg_[v]; }

  int multiplicity(int u, int v) const {
    Edge e = mk_edge(u, v);
    auto r = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<int>(r.second - r.first);
  }

  bool is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].first == edges_[i].second) return false;
      if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  bool allow_loops_ = false;
  std::vector<Edge> edges_;
  std::vector<int> deg_;
};

enum class GraphMode { simple, multi, pseudo };

inline Graph build_simple(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline MultiGraph build_multi(int n, std::vector<Edge> edges, bool allow_loops = false) {
  return MultiGraph(n, std::move(edges), allow_loops);
}

// Degree machinery of one graph: d(v), delta, Delta, N(v), N(S), boundary(S).
struct DegreeView {
  std::vector<int> degree;
  int delta = 0;   // minimum degree
  int Delta = 0;   // maximum degree
  long long degree_sum = 0;
  int odd_count = 0;
};

inline DegreeView degree_profile(const Graph& g) {
  DegreeView dv;
  dv.degree.resize(g.n());
  for (int v = 0; v < g.n(); ++v) dv.degree[v] = g.degree(v);
  dv.delta = g.min_degree();
  dv.Delta = g.max_degree();
  for (int d : dv.degree) {
    dv.degree_sum += d;
    dv.odd_count += d & 1;
  }
  return dv;
}

inline DegreeView degree_profile(const MultiGraph& g) {
  DegreeView dv;
  dv.degree.resize(g.n());
  for (int v = 0; v < g.n(); ++v) dv.degree[v] = g.degree(v);
  dv.delta = dv.degree.empty() ? 0 : *std::min_element(dv.degree.begin(), dv.degree.end());
  dv.Delta = dv.degree.empty() ? 0 : *std::max_element(dv.degree.begin(), dv.degree.end());
  for (int d : dv.degree) {
    dv.degree_sum += d;
    dv.odd_count += d & 1;
  }
  return dv;
}

// N_G(S): vertices outside S adjacent to some vertex of S.
inline std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_s(g.n(), 0), seen(g.n(), 0);
  for (int v : s) in_s[v] = 1;
  std::vector<int> out;
  for (int v : s)
    for (int u : g.adj(v))
      if (!in_s[u] && !seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// boundary(S): edges with exactly one endpoint in S.
inline std::vector<Edge> boundary(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_s(g.n(), 0);
  for (int v : s) in_s[v] = 1;
  std::vector<Edge> out;
  for (const auto& [u, v] : g.edges())
    if (in_s[u] != in_s[v]) out.push_back({u, v});
  return out;
}

// Adjacency matrix A(G) and incidence matrix B(G), columns in edge order.
struct Matrices {
  std::vector<std::vector<int>> adjacency;  // n x n, 0/1, zero diagonal
  std::vector<std::vector<int>> incidence;  // n x m, each column has two 1s
};

inline Matrices matrices(const Graph& g) {
  Matrices mm;
  mm.adjacency.assign(g.n(), std::vector<int>(g.n(), 0));
  for (const auto& [u, v] : g.edges()) mm.adjacency[u][v] = mm.adjacency[v][u] = 1;
  mm.incidence.assign(g.n(), std::vector<int>(g.m(), 0));
  for (int j = 0; j < g.m(); ++j) {
    mm.incidence[g.edges()[j].first][j] = 1;
    mm.incidence[g.edges()[j].second][j] = 1;
  }
  return mm;
}

// Induced subgraph on the sorted vertex list s; vertices are relabeled 0..|s|-1.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> id(g.n(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) id[s[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const auto& [u, v] : g.edges())
    if (id[u] >= 0 && id[v] >= 0) es.push_back(mk_edge(id[u], id[v]));
  return Graph(static_cast<int>(s.size()), std::move(es));
}

// Spanning subgraph with the given edge subset.
inline Graph spanning_subgraph(const Graph& g, const std::vector<Edge>& es) {
  for (const auto& e : es)
    require(g.has_edge(e.first, e.second), errc::missing, "edge not in graph");
  return Graph(g.n(), es);
}

}  // namespace graphcert
