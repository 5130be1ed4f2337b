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

#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "graphcert/bipartite.hpp"
#include "graphcert/enumerate.hpp"

namespace graphcert {

// ---------------------------------------------------------------------------
// Named generators
// ---------------------------------------------------------------------------

inline Graph complete_graph(int n) {
  require(n >= 0, errc::bad_params, "K_n needs n >= 0");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), errc::bad_params, "need at least one part");
  int n = 0;
  for (int p : parts) {
    require(p >= 1, errc::bad_params, "part sizes must be positive");
    n += p;
  }
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) es.push_back({u, v});
  return Graph(n, std::move(es));
}

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

inline Graph path_graph(int n) {
  require(n >= 1, errc::bad_params, "P_n needs n >= 1");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
  require(n >= 3, errc::bad_params, "C_n needs n >= 3");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.push_back(mk_edge(v, (v + 1) % n));
  return Graph(n, std::move(es));
}

inline Graph hypercube(int d) {
  require(d >= 0 && d <= 20, errc::bad_params, "Q_d needs 0 <= d <= 20");
  int n = 1 << d;
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) es.push_back({v, v | (1 << b)});
  return Graph(n, std::move(es));
}

// Star K_{1,n}: center 0 plus n leaves.
inline Graph star_graph(int n) {
  require(n >= 0, errc::bad_params, "star needs n >= 0 leaves");
  std::vector<Edge> es;
  for (int v = 1; v <= n; ++v) es.push_back({0, v});
  return Graph(n + 1, std::move(es));
}

// Wheel on n vertices: hub 0 joined to the cycle 1..n-1.
inline Graph wheel_graph(int n) {
  require(n >= 4, errc::bad_params, "W_n needs n >= 4");
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) {
    es.push_back({0, v});
    es.push_back(mk_edge(v, v == n - 1 ? 1 : v + 1));
  }
  return Graph(n, std::move(es));
}

// Outer cycle 0..4, inner pentagram 5..9, spokes i -> i+5.
inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(mk_edge(i, (i + 1) % 5));
    es.push_back(mk_edge(5 + i, 5 + (i + 2) % 5));
    es.push_back({i, i + 5});
  }
  return Graph(10, std::move(es));
}

// LCF [5,-5]^7: 14-cycle plus alternating +-5 chords.
inline Graph heawood_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 14; ++i) es.push_back(mk_edge(i, (i + 1) % 14));
  for (int i = 0; i < 14; i += 2) es.push_back(mk_edge(i, (i + 5) % 14));
  return Graph(14, std::move(es));
}

// Turan graph: complete r-partite, the n mod r largest parts get ceil(n/r).
inline Graph turan_graph(int n, int r) {
  require(n >= 1 && r >= 1 && r <= n, errc::bad_params, "T(n,r) needs 1 <= r <= n");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return complete_multipartite(parts);
}

// k-th power of the cycle: i ~ j iff circular distance <= k; 1 <= k < n/2.
inline Graph cycle_power(int n, int k) {
  require(n >= 3 && k >= 1 && 2 * k < n, errc::bad_params, "C_n^k needs 1 <= k < n/2");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    for (int d = 1; d <= k; ++d) es.push_back(mk_edge(v, (v + d) % n));
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(n, std::move(es));
}

// Hamming graph: vertices are tuples, adjacent iff they differ in exactly one
// coordinate (the cartesian product of complete graphs).
inline Graph hamming_graph(const std::vector<int>& dims) {
  require(!dims.empty(), errc::bad_params, "Hamming graph needs >= 1 dimension");
  long long n = 1;
  for (int d : dims) {
    require(d >= 1, errc::bad_params, "Hamming dimensions must be positive");
    n *= d;
    require(n <= 100000, errc::bad_params, "Hamming graph too large");
  }
  auto decode = [&](int v) {
    std::vector<int> t(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      t[i] = v % dims[i];
      v /= dims[i];
    }
    return t;
  };
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    auto tu = decode(u);
    for (int v = u + 1; v < n; ++v) {
      auto tv = decode(v);
      int diff = 0;
      for (std::size_t i = 0; i < dims.size(); ++i) diff += tu[i] != tv[i];
      if (diff == 1) es.push_back({u, v});
    }
  }
  return Graph(static_cast<int>(n), std::move(es));
}

// Cubic graph with exactly three bridges and no perfect matching: a center
// vertex joined to three blocks, each a K4 with one edge subdivided.
inline Graph sylvester_graph() {
  std::vector<Edge> es;
  const int center = 15;
  for (int b = 0; b < 3; ++b) {
    int a0 = 5 * b, a1 = a0 + 1, a2 = a0 + 2, a3 = a0 + 3, x = a0 + 4;
    es.push_back({a0, a2});
    es.push_back({a0, a3});
    es.push_back({a1, a2});
    es.push_back({a1, a3});
    es.push_back({a2, a3});
    es.push_back({a0, x});
    es.push_back({a1, x});
    es.push_back({x, center});
  }
  return Graph(16, std::move(es));
}

// Fixed 11-vertex edge list (the Mycielski graph of C_5): cycle 0..4,
// shadow vertices 5..9 with 5+i adjacent to the C_5 neighbors of i, apex 10.
inline Graph grotzsch_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(mk_edge(i, (i + 1) % 5));
    es.push_back(mk_edge(5 + i, (i + 1) % 5));
    es.push_back(mk_edge(5 + i, (i + 4) % 5));
    es.push_back({5 + i, 10});
  }
  return Graph(11, std::move(es));
}

enum class FamilyTag {
  complete,
  complete_bipartite,
  complete_multipartite,
  path,
  cycle,
  hypercube,
  star,
  wheel,
  petersen,
  heawood,
  turan,
  cycle_power,
  hamming,
  grotzsch,
  sylvester,
};

struct FamilySpec {
  FamilyTag tag;
  std::vector<int> params;
};

inline Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto want = [&](std::size_t k) {
    require(p.size() == k, errc::bad_params, "wrong number of family parameters");
  };
  switch (spec.tag) {
    case FamilyTag::complete: want(1); return complete_graph(p[0]);
    case FamilyTag::complete_bipartite: want(2); return complete_bipartite(p[0], p[1]);
    case FamilyTag::complete_multipartite: return complete_multipartite(p);
    case FamilyTag::path: want(1); return path_graph(p[0]);
    case FamilyTag::cycle: want(1); return cycle_graph(p[0]);
    case FamilyTag::hypercube: want(1); return hypercube(p[0]);
    case FamilyTag::star: want(1); return star_graph(p[0]);
    case FamilyTag::wheel: want(1); return wheel_graph(p[0]);
    case FamilyTag::petersen: want(0); return petersen_graph();
    case FamilyTag::heawood: want(0); return heawood_graph();
    case FamilyTag::turan: want(2); return turan_graph(p[0], p[1]);
    case FamilyTag::cycle_power: want(2); return cycle_power(p[0], p[1]);
    case FamilyTag::hamming: return hamming_graph(p);
    case FamilyTag::grotzsch: want(0); return grotzsch_graph();
    case FamilyTag::sylvester: want(0); return sylvester_graph();
  }
  fail(errc::bad_params, "unknown family tag");
}

// ---------------------------------------------------------------------------
// Extremal numbers (Mantel, Turan, Reiman) and tiny exact ex(n, F)
// ---------------------------------------------------------------------------

// First triangle in lexicographic vertex order, empty if none.
inline std::vector<int> find_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    for (int w : g.adj(u))
      if (w != v && g.has_edge(v, w)) {
        std::vector<int> t = {u, v, w};
        std::sort(t.begin(), t.end());
        return t;
      }
  return {};
}

// First clique of size k (backtracking over sorted candidates), empty if none.
inline std::vector<int> find_clique(const Graph& g, int k) {
  std::vector<int> cur;
  std::vector<int> found;
  std::function<bool(int)> dfs = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      found = cur;
      return true;
    }
    for (int v = lo; v < g.n(); ++v) {
      bool ok = true;
      for (int u : cur)
        if (!g.has_edge(u, v)) ok = false;
      if (!ok) continue;
      cur.push_back(v);
      if (dfs(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  dfs(0);
  return found;
}

// First 4-cycle as two length-2 paths with shared endpoints, empty if none.
inline std::vector<int> find_c4(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int w = u + 1; w < g.n(); ++w) {
      int first = -1;
      for (int x : g.adj(u)) {
        if (x == w || !g.has_edge(w, x)) continue;
        if (first < 0)
          first = x;
        else
          return {u, first, w, x};  // cycle u-first-w-x
      }
    }
  return {};
}

struct ExtremalReport {
  int n = 0;
  std::string forbidden;        // "K_3", "C_4", "K_{r+1}"
  long long bound = 0;          // the theorem bound on |E|
  bool bound_holds = false;
  std::vector<int> witness_subgraph;  // forbidden pattern found in the input
  Graph extremal_witness;       // bound-attaining graph when constructed
  long long ex_value = -1;      // exact value when brute-forced
};

// Mantel / Turan report for a concrete graph: detects K_{r+1} and compares
// m against |E(T_{n,r})|.
inline ExtremalReport mantel_turan_report(const Graph& g, int r = 2) {
  require(r >= 1, errc::bad_params, "r >= 1");
  ExtremalReport rep;
  rep.n = g.n();
  rep.forbidden = "K_" + std::to_string(r + 1);
  rep.bound = turan_graph(std::max(g.n(), 1), std::min(r, std::max(g.n(), 1))).m();
  if (g.n() >= 1 && r <= g.n()) rep.bound = turan_graph(g.n(), r).m();
  rep.witness_subgraph = (r == 2) ? find_triangle(g) : find_clique(g, r + 1);
  rep.bound_holds = g.m() <= rep.bound;
  return rep;
}

// Parameter form: the Turan bound itself plus the extremal witness T_{n,r}.
inline ExtremalReport mantel_turan_bound(int n, int r) {
  require(n >= 1 && r >= 1 && r <= n, errc::bad_params, "need 1 <= r <= n");
  ExtremalReport rep;
  rep.n = n;
  rep.forbidden = "K_" + std::to_string(r + 1);
  rep.extremal_witness = turan_graph(n, r);
  rep.bound = rep.extremal_witness.m();
  rep.bound_holds = true;
  if (r == 2) rep.bound = static_cast<long long>(n) * n / 4;  // Mantel closed form
  return rep;
}

// Reiman: if sum C(d(v),2) > C(n,2) a C_4 exists; bound m <= n(1+sqrt(4n-3))/4
// decided in exact integer arithmetic by squaring.
struct ReimanReport {
  bool criterion_fires = false;     // sum C(d,2) > C(n,2)
  std::vector<int> c4_witness;      // 4-cycle when found
  bool bound_holds = false;         // m <= n/4 (1 + sqrt(4n-3))
  long long path_pair_sum = 0;      // sum C(d(v),2)
};

inline ReimanReport reiman_c4_report(const Graph& g) {
  ReimanReport rep;
  long long n = g.n(), m = g.m();
  for (int v = 0; v < g.n(); ++v) {
    long long d = g.degree(v);
    rep.path_pair_sum += d * (d - 1) / 2;
  }
  rep.criterion_fires = rep.path_pair_sum > n * (n - 1) / 2;
  rep.c4_witness = find_c4(g);
  // m <= (n/4)(1+sqrt(4n-3))  <=>  4m - n <= n sqrt(4n-3)
  long long lhs = 4 * m - n;
  rep.bound_holds = lhs <= 0 || lhs * lhs <= n * n * (4 * n - 3);
  return rep;
}

// Exact ex(n, F) for F in {K_3, C_4, K_4} by exhaustive enumeration, n <= 7.
inline ExtremalReport ex_bruteforce(int n, const std::string& pattern) {
  require(n >= 1 && n <= 7, errc::cap_exceeded, "ex brute force limited to n <= 7");
  require(pattern == "K_3" || pattern == "C_4" || pattern == "K_4", errc::bad_params,
          "pattern must be K_3, C_4 or K_4");
  ExtremalReport rep;
  rep.n = n;
  rep.forbidden = pattern;
  long long best = -1;
  std::uint64_t best_mask = 0;
  for_each_labeled_mask(n, [&](std::uint64_t mask) {
    int edges = __builtin_popcountll(mask);
    if (edges <= best) return;
    Graph g = graph_from_mask(n, mask);
    bool has;
    if (pattern == "K_3")
      has = !find_triangle(g).empty();
    else if (pattern == "C_4")
      has = !find_c4(g).empty();
    else
      has = !find_clique(g, 4).empty();
    if (!has) {
      best = edges;
      best_mask = mask;
    }
  });
  rep.ex_value = best;
  rep.bound = best;
  rep.bound_holds = true;
  rep.extremal_witness = graph_from_mask(n, best_mask);
  return rep;
}

// ---------------------------------------------------------------------------
// Set-system graphs
// ---------------------------------------------------------------------------

// Incidence graph of (S, F): element vertices 0..u-1, set vertices u..u+|F|-1.
inline Graph incidence_graph(int universe, const std::vector<std::vector<int>>& family) {
  require(!family.empty(), errc::empty_family, "family must be nonempty");
  std::vector<Edge> es;
  for (std::size_t j = 0; j < family.size(); ++j)
    for (int x : family[j]) {
      require(x >= 0 && x < universe, errc::out_of_range, "set element out of universe");
      es.push_back({x, universe + static_cast<int>(j)});
    }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(universe + static_cast<int>(family.size()), std::move(es));
}

// Intersection graph: one vertex per set, edges between intersecting pairs.
inline Graph intersection_graph(const std::vector<std::vector<int>>& family) {
  require(!family.empty(), errc::empty_family, "family must be nonempty");
  std::vector<std::vector<int>> sorted = family;
  for (auto& s : sorted) std::sort(s.begin(), s.end());
  int m = static_cast<int>(family.size());
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> tmp;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(tmp));
      if (!tmp.empty()) es.push_back({i, j});
    }
  return Graph(m, std::move(es));
}

// Interval graph of closed intervals: i ~ j iff the intervals overlap.
inline Graph interval_graph(const std::vector<std::pair<double, double>>& iv) {
  require(!iv.empty(), errc::empty_family, "interval family must be nonempty");
  int m = static_cast<int>(iv.size());
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i) {
    require(iv[i].first <= iv[i].second, errc::bad_params, "interval endpoints out of order");
    for (int j = i + 1; j < m; ++j)
      if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) es.push_back({i, j});
  }
  return Graph(m, std::move(es));
}

// Marczewski family: F_i = {v_i} + incident edges. Ground set elements are
// 0..n-1 for vertices, n..n+m-1 for edges; the intersection graph of the
// returned family equals g under the identity labeling.
inline std::vector<std::vector<int>> marczewski_family(const Graph& g) {
  std::vector<std::vector<int>> fam(g.n());
  for (int v = 0; v < g.n(); ++v) fam[v].push_back(v);
  for (int j = 0; j < g.m(); ++j) {
    fam[g.edges()[j].first].push_back(g.n() + j);
    fam[g.edges()[j].second].push_back(g.n() + j);
  }
  return fam;
}

}  // namespace graphcert
