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

#include <queue>

#include "graphcert/graph.hpp"

namespace graphcert {

// Sentinel for unreachable / undefined distances and infinite radius/diameter.
inline constexpr int kInfDist = -1;

// BFS distances from src; -1 means unreachable.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n(), kInfDist);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.adj(v))
      if (dist[u] == kInfDist) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

// Connected components as sorted vertex lists ordered by least vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    comp[s] = id;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      out[id].push_back(v);
      for (int u : g.adj(v))
        if (comp[u] < 0) {
          comp[u] = id;
          q.push(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

inline bool is_connected(const Graph& g) { return g.n() <= 1 || component_count(g) == 1; }

struct Metrics {
  std::vector<std::vector<int>> dist;  // -1 = infinite
  std::vector<int> ecc;                // -1 when the graph is disconnected
  int radius = kInfDist;
  int diameter = kInfDist;
  std::vector<int> center;             // empty when disconnected
  std::vector<std::vector<int>> comps;
  int component_cnt = 0;
  long long cyclomatic = 0;            // m - n + c
  bool connected = false;
};

// Radius, diameter and center follow the book convention: they are defined for
// connected graphs only; a disconnected graph reports the infinite sentinel
// and an empty center.
inline Metrics metrics(const Graph& g) {
  Metrics mt;
  mt.dist.resize(g.n());
  for (int v = 0; v < g.n(); ++v) mt.dist[v] = bfs_distances(g, v);
  mt.comps = components(g);
  mt.component_cnt = static_cast<int>(mt.comps.size());
  mt.connected = g.n() <= 1 || mt.component_cnt == 1;
  mt.cyclomatic = static_cast<long long>(g.m()) - g.n() + mt.component_cnt;
  mt.ecc.assign(g.n(), kInfDist);
  if (mt.connected) {
    for (int v = 0; v < g.n(); ++v) {
      int e = 0;
      for (int u = 0; u < g.n(); ++u) e = std::max(e, mt.dist[v][u]);
      mt.ecc[v] = e;
    }
    mt.radius = g.n() == 0 ? kInfDist : *std::min_element(mt.ecc.begin(), mt.ecc.end());
    mt.diameter = g.n() == 0 ? kInfDist : *std::max_element(mt.ecc.begin(), mt.ecc.end());
    for (int v = 0; v < g.n(); ++v)
      if (mt.ecc[v] == mt.radius) mt.center.push_back(v);
  }
  return mt;
}

inline int distance(const Graph& g, int u, int v) { return bfs_distances(g, u)[v]; }

// Shortest u->v path as a vertex list, empty if unreachable. BFS parents with
// least-vertex tie break keep this deterministic.
inline std::vector<int> shortest_path(const Graph& g, int u, int v) {
  std::vector<int> par(g.n(), -2);
  std::queue<int> q;
  par[u] = -1;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == v) break;
    for (int y : g.adj(x))
      if (par[y] == -2) {
        par[y] = x;
        q.push(y);
      }
  }
  if (par[v] == -2) return {};
  std::vector<int> path;
  for (int x = v; x != -1; x = par[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace graphcert
