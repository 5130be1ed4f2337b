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

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "graphcert/graph.hpp"

namespace graphcert {

// Exhaustive morphism search. Deterministic: vertices of g are assigned in id
// order and images are tried ascending, so the first hit is the
// lexicographically least map. Degree and neighbor-degree-multiset filters
// prune the isomorphism search.

inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
  if (g.n() != h.n() || static_cast<int>(f.size()) != g.n()) return false;
  std::vector<char> hit(h.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (f[v] < 0 || f[v] >= h.n() || hit[f[v]]) return false;
    hit[f[v]] = 1;
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v) != h.has_edge(f[u], f[v])) return false;
  return true;
}

inline bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (f[v] < 0 || f[v] >= h.n()) return false;
  for (const auto& [u, v] : g.edges())
    if (!h.has_edge(f[u], f[v])) return false;
  return true;
}

namespace detail {

inline std::vector<std::vector<int>> neighbor_degree_multisets(const Graph& g) {
  std::vector<std::vector<int>> nd(g.n());
  for (int v = 0; v < g.n(); ++v) {
    for (int u : g.adj(v)) nd[v].push_back(g.degree(u));
    std::sort(nd[v].begin(), nd[v].end());
  }
  return nd;
}

}  // namespace detail

// Isomorphism g -> h, or nullopt after exhausting the pruned search.
inline std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h,
                                                  int cap = 10) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  require(g.n() <= cap, errc::cap_exceeded, "isomorphism search beyond cap");
  // global invariants first
  std::vector<int> dg(g.n()), dh(h.n());
  for (int v = 0; v < g.n(); ++v) dg[v] = g.degree(v);
  for (int v = 0; v < h.n(); ++v) dh[v] = h.degree(v);
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  auto ndg = detail::neighbor_degree_multisets(g);
  auto ndh = detail::neighbor_degree_multisets(h);
  {
    auto a = ndg, b = ndh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> f(g.n(), -1);
  std::vector<char> used(h.n(), 0);
  std::function<bool(int)> dfs = [&](int v) {
    if (v == g.n()) return true;
    for (int w = 0; w < h.n(); ++w) {
      if (used[w] || dg[v] != dh[w] || ndg[v] != ndh[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != h.has_edge(f[u], w)) ok = false;
      if (!ok) continue;
      f[v] = w;
      used[w] = 1;
      if (dfs(v + 1)) return true;
      used[w] = 0;
      f[v] = -1;
    }
    return false;
  };
  if (dfs(0)) return f;
  return std::nullopt;
}

// Homomorphism g -> h, lexicographically least, or nullopt.
inline std::optional<std::vector<int>> homomorphism(const Graph& g, const Graph& h,
                                                    long long node_budget = 50'000'000) {
  if (g.n() > 0 && h.n() == 0) return std::nullopt;
  if (g.m() > 0 && h.m() == 0) return std::nullopt;
  std::vector<int> f(g.n(), -1);
  long long nodes = 0;
  std::function<bool(int)> dfs = [&](int v) {
    if (v == g.n()) return true;
    for (int w = 0; w < h.n(); ++w) {
      if (++nodes > node_budget) fail(errc::cap_exceeded, "homomorphism search budget");
      bool ok = true;
      for (int u : g.adj(v))
        if (u < v && !h.has_edge(f[u], w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[v] = w;
      if (dfs(v + 1)) return true;
      f[v] = -1;
    }
    return false;
  };
  if (g.n() == 0) return std::vector<int>{};
  if (dfs(0)) return f;
  return std::nullopt;
}

// The full automorphism list, in lexicographic order of the permutations.
inline std::vector<std::vector<int>> automorphisms(const Graph& g, int cap = 10) {
  require(g.n() <= cap, errc::cap_exceeded, "automorphism enumeration beyond cap");
  std::vector<int> dg(g.n());
  for (int v = 0; v < g.n(); ++v) dg[v] = g.degree(v);
  auto nd = detail::neighbor_degree_multisets(g);
  std::vector<std::vector<int>> out;
  std::vector<int> f(g.n(), -1);
  std::vector<char> used(g.n(), 0);
  std::function<void(int)> dfs = [&](int v) {
    if (v == g.n()) {
      out.push_back(f);
      return;
    }
    for (int w = 0; w < g.n(); ++w) {
      if (used[w] || dg[v] != dg[w] || nd[v] != nd[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != g.has_edge(f[u], w)) ok = false;
      if (!ok) continue;
      f[v] = w;
      used[w] = 1;
      dfs(v + 1);
      used[w] = 0;
      f[v] = -1;
    }
  };
  dfs(0);
  return out;
}

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool asymmetric = false;
  std::size_t automorphism_count = 0;
};

// Computed from the orbit partition of the automorphism group.
inline TransitivityReport transitivity(const Graph& g, int cap = 10) {
  auto auts = automorphisms(g, cap);
  TransitivityReport rep;
  rep.automorphism_count = auts.size();
  rep.asymmetric = auts.size() == 1;
  // vertex orbits
  std::vector<int> orbit(g.n());
  for (int v = 0; v < g.n(); ++v) orbit[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
    return x;
  };
  for (const auto& f : auts)
    for (int v = 0; v < g.n(); ++v) {
      int a = find(v), b = find(f[v]);
      if (a != b) orbit[std::max(a, b)] = std::min(a, b);
    }
  std::set<int> vorbits;
  for (int v = 0; v < g.n(); ++v) vorbits.insert(find(v));
  rep.vertex_transitive = vorbits.size() <= 1;
  // edge orbits
  std::map<Edge, int> eid;
  for (int j = 0; j < g.m(); ++j) eid[g.edges()[j]] = j;
  std::vector<int> eorbit(g.m());
  for (int j = 0; j < g.m(); ++j) eorbit[j] = j;
  std::function<int(int)> efind = [&](int x) {
    while (eorbit[x] != x) x = eorbit[x] = eorbit[eorbit[x]];
    return x;
  };
  for (const auto& f : auts)
    for (int j = 0; j < g.m(); ++j) {
      Edge im = mk_edge(f[g.edges()[j].first], f[g.edges()[j].second]);
      int a = efind(j), b = efind(eid.at(im));
      if (a != b) eorbit[std::max(a, b)] = std::min(a, b);
    }
  std::set<int> eorbits;
  for (int j = 0; j < g.m(); ++j) eorbits.insert(efind(j));
  rep.edge_transitive = eorbits.size() <= 1;
  return rep;
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& f) {
  std::vector<int> inv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace graphcert
