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

#include <boost/multiprecision/cpp_int.hpp>
#include <queue>

#include "graphcert/metrics.hpp"
#include "graphcert/walks.hpp"

namespace graphcert {

using bigint = boost::multiprecision::cpp_int;

// Either a proper 2-coloring (every edge crossing) or an odd simple cycle.
// Exactly one of the two is populated. Side 0 holds the least vertex of each
// component.
struct BipartitionResult {
  bool bipartite = false;
  std::vector<int> side;        // per-vertex 0/1 when bipartite
  std::vector<int> part[2];     // the two classes, sorted
  std::vector<int> odd_cycle;   // closed vertex sequence when not bipartite
};

inline BipartitionResult bipartition(const Graph& g) {
  BipartitionResult r;
  std::vector<int> color(g.n(), -1), parent(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          parent[u] = v;
          q.push(u);
        } else if (color[u] == color[v]) {
          // odd closed walk: path(s..v) + edge vu + path(u..s), then reduce
          std::vector<int> pv, pu;
          for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
          for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
          std::reverse(pv.begin(), pv.end());  // s .. v
          std::vector<int> walk = pv;          // s..v, u..s of total odd length
          for (int x : pu) walk.push_back(x);
          r.odd_cycle = extract_odd_cycle(g, walk);
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  r.side = color;
  for (int v = 0; v < g.n(); ++v) r.part[color[v]].push_back(v);
  return r;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

// Integer determinant via Bareiss fraction-free elimination.
inline bigint int_determinant(std::vector<std::vector<bigint>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  bigint prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Total-unimodularity check of the incidence matrix B(G): every square
// submatrix has determinant 0 or +-1. Exhaustive up to size_cap; a violating
// submatrix (|det| = 2 arising from an odd cycle) is reported when found.
struct TUResult {
  bool totally_unimodular = true;
  bool exhausted = true;         // false when the cap cut the enumeration
  std::vector<int> bad_rows, bad_cols;
  bigint bad_det = 0;
  long long minors_checked = 0;
};

inline TUResult unimodularity_check(const Graph& g, int size_cap = -1,
                                    long long minor_budget = 2'000'000) {
  Matrices mm = matrices(g);
  int n = g.n(), m = g.m();
  int kmax = std::min(n, m);
  if (size_cap >= 0) kmax = std::min(kmax, size_cap);
  TUResult res;

  std::vector<int> rows, cols;
  // enumerate k-subsets of rows and columns
  for (int k = 1; k <= kmax; ++k) {
    rows.assign(k, 0);
    for (int i = 0; i < k; ++i) rows[i] = i;
    for (;;) {
      cols.assign(k, 0);
      for (int j = 0; j < k; ++j) cols[j] = j;
      for (;;) {
        if (res.minors_checked >= minor_budget) {
          res.exhausted = false;
          return res;
        }
        ++res.minors_checked;
        std::vector<std::vector<bigint>> sub(k, std::vector<bigint>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = mm.incidence[rows[i]][cols[j]];
        bigint det = int_determinant(sub);
        if (det > 1 || det < -1) {
          res.totally_unimodular = false;
          res.bad_rows = rows;
          res.bad_cols = cols;
          res.bad_det = det;
          return res;
        }
        // next column subset
        int j = k - 1;
        while (j >= 0 && cols[j] == m - k + j) --j;
        if (j < 0) break;
        ++cols[j];
        for (int t = j + 1; t < k; ++t) cols[t] = cols[t - 1] + 1;
      }
      int i = k - 1;
      while (i >= 0 && rows[i] == n - k + i) --i;
      if (i < 0) break;
      ++rows[i];
      for (int t = i + 1; t < k; ++t) rows[t] = rows[t - 1] + 1;
    }
  }
  return res;
}

// Spanning bipartite subgraph with at least half the edges; local moves stop
// only when every vertex keeps at least half its degree (the maximal-cut
// stopping condition).
struct BipartiteSubgraphResult {
  Graph subgraph;
  std::vector<int> side;  // the partition that generated it
};

inline BipartiteSubgraphResult large_bipartite_subgraph(const Graph& g) {
  std::vector<int> side(g.n(), 0);
  auto cross_deg = [&](int v) {
    int c = 0;
    for (int u : g.adj(v)) c += side[u] != side[v];
    return c;
  };
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < g.n(); ++v)
      if (2 * cross_deg(v) < g.degree(v)) {
        side[v] ^= 1;
        moved = true;
      }
  }
  std::vector<Edge> cut;
  for (const auto& [u, v] : g.edges())
    if (side[u] != side[v]) cut.push_back({u, v});
  return {Graph(g.n(), cut), side};
}

inline bigint binom2_power(int k) {
  // 2^C(k,2)
  if (k <= 1) return 1;
  bigint one = 1;
  return one << (static_cast<long long>(k) * (k - 1) / 2);
}

// Counts of labeled graphs on n vertices and of those with all degrees even.
inline std::pair<bigint, bigint> enumeration_counts(int n) {
  require(n >= 1, errc::bad_params, "n must be positive");
  return {binom2_power(n), binom2_power(n - 1)};
}

}  // namespace graphcert
