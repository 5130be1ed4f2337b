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

#include "graphcert/graph.hpp"

namespace graphcert {

// Local edits. Deleting a vertex relabels the tail to keep ids dense.
inline Graph delete_vertex(const Graph& g, int v) {
  require(v >= 0 && v < g.n(), errc::missing, "vertex not in graph");
  std::vector<Edge> es;
  auto relabel = [&](int x) { return x > v ? x - 1 : x; };
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) es.push_back(mk_edge(relabel(a), relabel(b)));
  return Graph(g.n() - 1, std::move(es));
}

inline Graph add_vertex(const Graph& g) { return Graph(g.n() + 1, g.edges()); }

inline Graph delete_edge(const Graph& g, int u, int v) {
  require(g.has_edge(u, v), errc::missing, "edge not in graph");
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (e != mk_edge(u, v)) es.push_back(e);
  return Graph(g.n(), std::move(es));
}

inline Graph add_edge(const Graph& g, int u, int v) {
  require(u >= 0 && u < g.n() && v >= 0 && v < g.n(), errc::out_of_range, "endpoint out of range");
  require(u != v, errc::loop_in_simple, "cannot add a loop");
  require(!g.has_edge(u, v), errc::already_present, "edge already present");
  std::vector<Edge> es = g.edges();
  es.push_back(mk_edge(u, v));
  return Graph(g.n(), std::move(es));
}

// Subdivide edge uv: new vertex w = n, edges uw and wv replace uv.
inline Graph subdivide_edge(const Graph& g, int u, int v) {
  require(g.has_edge(u, v), errc::missing, "edge not in graph");
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (e != mk_edge(u, v)) es.push_back(e);
  es.push_back({u, g.n()});
  es.push_back({v, g.n()});
  return Graph(g.n() + 1, std::move(es));
}

// Simple-graph contraction of the vertex set H into one new vertex (placed
// last); loops and parallels are dropped.
inline Graph contract(const Graph& g, const std::vector<int>& h) {
  require(!h.empty(), errc::empty_set, "contraction set must be nonempty");
  std::vector<char> in_h(g.n(), 0);
  for (int v : h) {
    require(v >= 0 && v < g.n(), errc::out_of_range, "vertex out of range");
    in_h[v] = 1;
  }
  std::vector<int> id(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!in_h[v]) id[v] = next++;
  int w = next;  // the merged vertex
  std::vector<Edge> es;
  for (const auto& [a, b] : g.edges()) {
    int x = in_h[a] ? w : id[a];
    int y = in_h[b] ? w : id[b];
    if (x != y) es.push_back(mk_edge(x, y));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(next + 1, std::move(es));
}

inline Graph contract_edge(const Graph& g, int u, int v) {
  require(g.has_edge(u, v), errc::missing, "edge not in graph");
  return contract(g, {u, v});
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) es.push_back({u, v});
  return Graph(g.n(), std::move(es));
}

// Disjoint union; h's vertices are shifted by g.n().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> es = g.edges();
  for (const auto& [u, v] : h.edges()) es.push_back({u + g.n(), v + g.n()});
  return Graph(g.n() + h.n(), std::move(es));
}

// Join: disjoint union plus all cross edges.
inline Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> es = g.edges();
  for (const auto& [u, v] : h.edges()) es.push_back({u + g.n(), v + g.n()});
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < h.n(); ++v) es.push_back({u, g.n() + v});
  return Graph(g.n() + h.n(), std::move(es));
}

enum class ProductKind { cartesian, tensor, strong, lexicographic };

// Vertex (i,j) of a product maps to index i*|V(h)| + j.
inline Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  int nh = h.n();
  auto idx = [&](int i, int j) { return i * nh + j; };
  std::vector<Edge> es;
  for (int i1 = 0; i1 < g.n(); ++i1)
    for (int j1 = 0; j1 < nh; ++j1)
      for (int i2 = i1; i2 < g.n(); ++i2)
        for (int j2 = 0; j2 < nh; ++j2) {
          if (idx(i2, j2) <= idx(i1, j1)) continue;
          bool ge = g.has_edge(i1, i2), he = h.has_edge(j1, j2);
          bool gi = i1 == i2, hi = j1 == j2;
          bool take = false;
          switch (kind) {
            case ProductKind::cartesian: take = (gi && he) || (hi && ge); break;
            case ProductKind::tensor: take = ge && he; break;
            case ProductKind::strong: take = (gi && he) || (hi && ge) || (ge && he); break;
            case ProductKind::lexicographic: take = ge || (gi && he); break;
          }
          if (take) es.push_back({idx(i1, j1), idx(i2, j2)});
        }
  return Graph(g.n() * nh, std::move(es));
}

// Line graph L(G): one vertex per edge, adjacency = edge adjacency in G.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> es;
  for (int i = 0; i < g.m(); ++i)
    for (int j = i + 1; j < g.m(); ++j) {
      const auto& [a, b] = g.edges()[i];
      const auto& [c, d] = g.edges()[j];
      if (a == c || a == d || b == c || b == d) es.push_back({i, j});
    }
  return Graph(g.m(), std::move(es));
}

// Total graph T(G): vertices V + E (edge j becomes vertex n+j); edges are
// G's edges, L(G)'s edges, and vertex-edge incidences.
inline Graph total_graph(const Graph& g) {
  std::vector<Edge> es = g.edges();
  Graph lg = line_graph(g);
  for (const auto& [i, j] : lg.edges()) es.push_back({g.n() + i, g.n() + j});
  for (int j = 0; j < g.m(); ++j) {
    es.push_back({g.edges()[j].first, g.n() + j});
    es.push_back({g.edges()[j].second, g.n() + j});
  }
  return Graph(g.n() + g.m(), std::move(es));
}

// Mycielski construction: shadow vertex n+i copies the neighborhood of i,
// apex 2n is joined to every shadow vertex.
inline Graph mycielski(const Graph& g) {
  int n = g.n();
  std::vector<Edge> es = g.edges();
  for (const auto& [u, v] : g.edges()) {
    es.push_back(mk_edge(n + u, v));
    es.push_back(mk_edge(u, n + v));
  }
  for (int i = 0; i < n; ++i) es.push_back({n + i, 2 * n});
  return Graph(2 * n + 1, std::move(es));
}

}  // namespace graphcert
