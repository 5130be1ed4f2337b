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

#include <unordered_set>

#include "graphcert/metrics.hpp"

namespace graphcert {

// Exhaustive enumeration of small graphs, used by brute-force oracles.
// Labeled graphs are adjacency bitmasks over the C(n,2) vertex pairs in
// lexicographic order; one-per-isomorphism-class lists come from incremental
// extension plus canonical-code deduplication.

inline std::vector<Edge> vertex_pairs(int n) {
  std::vector<Edge> ps;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) ps.push_back({u, v});
  return ps;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if (mask >> idx & 1) es.push_back({u, v});
  return Graph(n, std::move(es));
}

inline std::uint64_t mask_from_graph(const Graph& g) {
  std::uint64_t mask = 0;
  int idx = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v, ++idx)
      if (g.has_edge(u, v)) mask |= std::uint64_t{1} << idx;
  return mask;
}

template <class F>
void for_each_labeled_mask(int n, F&& f) {
  require(pair_count(n) <= 30, errc::cap_exceeded, "labeled enumeration limited to C(n,2) <= 30");
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) f(mask);
}

namespace detail {

// Maximum packed adjacency code over all vertex orderings. Row k (k bits,
// adjacency of position k to positions 0..k-1) is appended most significant
// first, so a prefix comparison against the incumbent prunes exactly.
class CanonicalCoder {
 public:
  explicit CanonicalCoder(const Graph& g) : g_(g), n_(g.n()) {
    require(pair_count(n_) <= 62, errc::cap_exceeded, "canonical code limited to n <= 11");
    total_bits_ = pair_count(n_);
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
  }

  std::uint64_t run() {
    best_ = 0;
    have_best_ = false;
    chosen_.assign(n_, -1);
    used_.assign(n_, 0);
    dfs(0, 0, 0);
    return best_;
  }

 private:
  void dfs(int k, std::uint64_t partial, int bits) {
    if (k == n_) {
      if (!have_best_ || partial > best_) best_ = partial;
      have_best_ = true;
      return;
    }
    for (int vi = 0; vi < n_; ++vi) {
      int v = order_[vi];
      if (used_[v]) continue;
      std::uint64_t row = 0;
      for (int i = 0; i < k; ++i) row = (row << 1) | (g_.has_edge(v, chosen_[i]) ? 1 : 0);
      std::uint64_t next = (partial << k) | row;
      int nbits = bits + k;
      if (have_best_ && nbits > 0) {
        std::uint64_t incumbent_prefix = best_ >> (total_bits_ - nbits);
        if (next < incumbent_prefix) continue;
      }
      used_[v] = 1;
      chosen_[k] = v;
      dfs(k + 1, next, nbits);
      used_[v] = 0;
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_ = 0;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  std::vector<int> chosen_;
  std::vector<int> order_;
  std::vector<char> used_;
};

}  // namespace detail

// Canonical form: graphs are isomorphic iff their codes (and orders) match.
inline std::uint64_t canonical_code(const Graph& g) {
  return detail::CanonicalCoder(g).run();
}

// One representative per isomorphism class, built level by level: every
// (k+1)-vertex graph arises from a k-vertex graph by attaching a new vertex
// to some neighborhood subset.
inline std::vector<Graph> graphs_upto_iso(int n) {
  require(n >= 1 && n <= 8, errc::cap_exceeded, "class enumeration limited to n <= 8");
  std::vector<Graph> level = {Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& g : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        std::vector<Edge> es = g.edges();
        for (int v = 0; v < k - 1; ++v)
          if (nb >> v & 1) es.push_back({v, k - 1});
        Graph h(k, std::move(es));
        std::uint64_t code = canonical_code(h);
        if (seen.insert(code).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

// Connected representatives only.
inline std::vector<Graph> connected_graphs_upto_iso(int n) {
  std::vector<Graph> out;
  for (Graph& g : graphs_upto_iso(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace graphcert
