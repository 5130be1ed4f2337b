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

#include <catch2/catch_amalgamated.hpp>

#include "graphcert/bipartite.hpp"
#include "graphcert/enumerate.hpp"
#include "graphcert/metrics.hpp"
#include "graphcert/walks.hpp"
#include "test_support.hpp"

using namespace graphcert;
using gct::from1;

TEST_CASE("build validates input") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 5);
  REQUIRE(g.has_edge(3, 1));
  REQUIRE_FALSE(g.has_edge(0, 2));

  REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), gc_error);
  try {
    Graph(3, {{0, 0}});
  } catch (const gc_error& e) {
    REQUIRE(e.code() == errc::loop_in_simple);
  }
  try {
    Graph(3, {{0, 1}, {1, 0}});
  } catch (const gc_error& e) {
    REQUIRE(e.code() == errc::parallel_in_simple);
  }
  try {
    Graph(3, {{0, 5}});
  } catch (const gc_error& e) {
    REQUIRE(e.code() == errc::out_of_range);
  }

  MultiGraph mg(4, {{0, 1}, {0, 1}, {1, 2}}, false);
  REQUIRE(mg.m() == 3);
  REQUIRE(mg.multiplicity(0, 1) == 2);
  REQUIRE_THROWS_AS(MultiGraph(3, {{0, 0}}, false), gc_error);
  MultiGraph pg(3, {{0, 0}}, true);
  REQUIRE(pg.degree(0) == 2);
}

TEST_CASE("matrices match the printed 7x7 example") {
  Graph g = gct::two_block_graph();
  Matrices mm = matrices(g);
  std::vector<std::vector<int>> want = {
      {0, 1, 0, 1, 0, 0, 0}, {1, 0, 1, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0},
      {1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 0, 1},
      {0, 0, 0, 0, 1, 1, 0}};
  REQUIRE(mm.adjacency == want);
  // every incidence column has exactly two 1s and columns are pairwise distinct
  for (int j = 0; j < g.m(); ++j) {
    int s = 0;
    for (int i = 0; i < g.n(); ++i) s += mm.incidence[i][j];
    REQUIRE(s == 2);
  }
  for (int j = 0; j < g.m(); ++j)
    for (int k = j + 1; k < g.m(); ++k) {
      bool same = true;
      for (int i = 0; i < g.n(); ++i)
        if (mm.incidence[i][j] != mm.incidence[i][k]) same = false;
      REQUIRE_FALSE(same);
    }

  Matrices k1 = matrices(Graph(1, {}));
  REQUIRE(k1.adjacency == std::vector<std::vector<int>>{{0}});
  REQUIRE(k1.incidence == std::vector<std::vector<int>>{{}});

  // C_3: incidence rows and columns each sum to 2
  Matrices c3 = matrices(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  for (int i = 0; i < 3; ++i) {
    int r = 0;
    for (int j = 0; j < 3; ++j) r += c3.incidence[i][j];
    REQUIRE(r == 2);
  }
}

TEST_CASE("degree profile") {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  DegreeView dv = degree_profile(k4);
  REQUIRE(dv.degree == std::vector<int>{3, 3, 3, 3});
  REQUIRE(dv.delta == 3);
  REQUIRE(dv.Delta == 3);
  REQUIRE(dv.degree_sum == 2 * k4.m());

  // pseudograph with d(v1) = 8: loops count twice
  MultiGraph pg = MultiGraph(
      4,
      {{0, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 3}, {1, 3}, {1, 3}, {2, 2}},
      true);
  DegreeView pv = degree_profile(pg);
  REQUIRE(pv.degree[0] == 8);
  REQUIRE(pv.degree_sum == 2 * pg.m());
}

TEST_CASE("neighborhood and boundary") {
  Graph g = gct::two_block_graph();
  REQUIRE(neighborhood(g, {1}) == std::vector<int>{0, 2, 3});
  REQUIRE(neighborhood(g, {0, 1}) == std::vector<int>{2, 3});
  REQUIRE(boundary(g, {0, 1}).size() == 3);
}

TEST_CASE("walk classification follows the book examples") {
  Graph g = gct::walk_example_graph();
  auto seq = [](std::vector<int> v) {
    for (auto& x : v) --x;
    return v;
  };
  WalkClass a = classify_walk(g, seq({1, 3, 2, 4, 3, 2, 4, 3, 5}));
  REQUIRE(a.kind == WalkKind::walk);
  REQUIRE(a.length == 8);
  REQUIRE(classify_walk(g, seq({3, 1, 4, 2, 3, 5})).kind == WalkKind::not_a_walk);
  REQUIRE(classify_walk(g, seq({1, 3, 2, 4, 3, 5})).kind == WalkKind::trail);
  REQUIRE(classify_walk(g, seq({1, 3, 4, 5})).kind == WalkKind::path);
  REQUIRE(classify_walk(g, seq({3, 2, 1, 3, 5, 4, 3})).kind == WalkKind::cycle);
  REQUIRE(classify_walk(g, seq({1, 3, 4, 2, 1})).kind == WalkKind::simple_cycle);
  REQUIRE(classify_walk(g, {0}).kind == WalkKind::path);

  // Lemma-style reductions return verified witnesses
  auto p = reduce_to_simple_path(g, seq({1, 3, 2, 4, 3, 5}));
  REQUIRE(classify_walk(g, p).kind == WalkKind::path);
  REQUIRE(p.front() == 0);
  REQUIRE(p.back() == 4);

  auto c = extract_odd_cycle(g, seq({1, 2, 4, 3, 2, 1}));  // closed walk of length 5
  REQUIRE((c.size() - 1) % 2 == 1);
  REQUIRE(classify_walk(g, c).kind == WalkKind::simple_cycle);
}

TEST_CASE("walk classification agrees with a definition-literal checker on random sequences") {
  Graph g = gct::walk_example_graph();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 9), vtx(0, g.n() - 1);
  for (int it = 0; it < 1000; ++it) {
    std::vector<int> s(len(rng));
    for (auto& x : s) x = vtx(rng);
    WalkClass got = classify_walk(g, s);
    // literal re-derivation
    bool walk = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (!g.has_edge(s[i], s[i + 1])) walk = false;
    if (!walk) {
      REQUIRE(got.kind == WalkKind::not_a_walk);
      continue;
    }
    bool closed = s.size() >= 2 && s.front() == s.back();
    std::set<Edge> es;
    bool trail = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (!es.insert(mk_edge(s[i], s[i + 1])).second) trail = false;
    std::set<int> vs(s.begin(), s.end());
    bool distinct = vs.size() == s.size();
    bool ends_only = closed && vs.size() == s.size() - 1;
    WalkKind want;
    if (s.size() == 1)
      want = WalkKind::path;
    else if (!closed)
      want = distinct ? WalkKind::path : (trail ? WalkKind::trail : WalkKind::walk);
    else
      want = trail ? (ends_only ? WalkKind::simple_cycle : WalkKind::cycle) : WalkKind::closed_walk;
    REQUIRE(got.kind == want);
  }
}

TEST_CASE("metrics on the radius-2 diameter-3 example") {
  Graph g = gct::radius2_diameter3_graph();
  Metrics mt = metrics(g);
  REQUIRE(mt.connected);
  REQUIRE(mt.radius == 2);
  REQUIRE(mt.diameter == 3);
  REQUIRE(mt.center == std::vector<int>{8, 9, 10, 11});
  for (int v = 0; v < 8; ++v) REQUIRE(mt.ecc[v] == 3);
  for (int v = 8; v < 12; ++v) REQUIRE(mt.ecc[v] == 2);
}

TEST_CASE("metrics of complete and disconnected graphs") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    Metrics mt = metrics(Graph(n, es));
    REQUIRE(mt.radius == 1);
    REQUIRE(mt.diameter == 1);
    REQUIRE((int)mt.center.size() == n);
  }
  Metrics d = metrics(Graph(2, {}));
  REQUIRE_FALSE(d.connected);
  REQUIRE(d.diameter == kInfDist);
  REQUIRE(d.radius == kInfDist);
  REQUIRE(d.center.empty());
  REQUIRE(d.component_cnt == 2);
}

TEST_CASE("metric axioms hold on all connected graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_upto_iso(n)) {
      Metrics mt = metrics(g);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          REQUIRE(mt.dist[u][v] >= 0);
          REQUIRE((mt.dist[u][v] == 0) == (u == v));
          REQUIRE(mt.dist[u][v] == mt.dist[v][u]);
          for (int w = 0; w < n; ++w)
            REQUIRE(mt.dist[u][v] <= mt.dist[u][w] + mt.dist[w][v]);
        }
    }
  }
}

TEST_CASE("bipartition returns the book partitions") {
  // Q_3 splits by parity of ones
  std::vector<Edge> q3;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (__builtin_popcount(a ^ b) == 1) q3.push_back({a, b});
  BipartitionResult r = bipartition(Graph(8, q3));
  REQUIRE(r.bipartite);
  for (int v = 0; v < 8; ++v)
    REQUIRE(r.side[v] == (__builtin_popcount(v) % 2));

  // C_5: odd cycle witness of length 5
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  BipartitionResult c = bipartition(c5);
  REQUIRE_FALSE(c.bipartite);
  REQUIRE(c.odd_cycle.size() == 6);
  REQUIRE(classify_walk(c5, c.odd_cycle).kind == WalkKind::simple_cycle);

  // nine-vertex tree splits exactly as listed
  BipartitionResult t = bipartition(gct::nine_vertex_tree());
  REQUIRE(t.bipartite);
  REQUIRE(t.part[0] == std::vector<int>{0, 4, 5, 6, 7});
  REQUIRE(t.part[1] == std::vector<int>{1, 2, 3, 8});
}

TEST_CASE("bipartition dichotomy is exhaustive on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graphs_upto_iso(n)) {
      BipartitionResult r = bipartition(g);
      if (r.bipartite) {
        REQUIRE(r.odd_cycle.empty());
        for (const auto& [u, v] : g.edges()) REQUIRE(r.side[u] != r.side[v]);
      } else {
        REQUIRE((r.odd_cycle.size() - 1) % 2 == 1);
        REQUIRE(classify_walk(g, r.odd_cycle).kind == WalkKind::simple_cycle);
      }
    }
  }
}

TEST_CASE("total unimodularity of incidence matrices") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  TUResult r4 = unimodularity_check(c4);
  REQUIRE(r4.exhausted);
  REQUIRE(r4.totally_unimodular);

  Graph c3(3, {{0, 1}, {1, 2}, {0, 2}});
  TUResult r3 = unimodularity_check(c3);
  REQUIRE_FALSE(r3.totally_unimodular);
  REQUIRE((r3.bad_det == 2 || r3.bad_det == -2));
  REQUIRE(r3.bad_rows.size() == 3);

  TUResult r1 = unimodularity_check(Graph(1, {}));
  REQUIRE(r1.totally_unimodular);

  // TU <=> bipartite on every graph up to 5 vertices
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_upto_iso(n)) {
      TUResult r = unimodularity_check(g);
      REQUIRE(r.exhausted);
      REQUIRE(r.totally_unimodular == is_bipartite(g));
    }
}

TEST_CASE("large bipartite subgraph keeps at least half the edges") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  auto r = large_bipartite_subgraph(k3);
  REQUIRE(r.subgraph.m() == 2);

  Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  REQUIRE(large_bipartite_subgraph(c6).subgraph.m() == 6);

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto r4 = large_bipartite_subgraph(k4);
  REQUIRE(r4.subgraph.m() == 4);  // K_{2,2}

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_upto_iso(n)) {
      auto rr = large_bipartite_subgraph(g);
      REQUIRE(is_bipartite(rr.subgraph));
      REQUIRE(2 * rr.subgraph.m() >= g.m());
      for (int v = 0; v < n; ++v)
        REQUIRE(2 * rr.subgraph.degree(v) >= g.degree(v));
    }
}

TEST_CASE("enumeration counts cross-checked by exhaustive generation") {
  auto [g3, e3] = enumeration_counts(3);
  REQUIRE(g3 == 8);
  REQUIRE(e3 == 2);
  auto [g4, e4] = enumeration_counts(4);
  REQUIRE(g4 == 64);
  REQUIRE(e4 == 8);
  auto [g1, e1] = enumeration_counts(1);
  REQUIRE(g1 == 1);
  REQUIRE(e1 == 1);

  for (int n = 1; n <= 5; ++n) {
    long long total = 0, even = 0;
    for_each_labeled_mask(n, [&](std::uint64_t mask) {
      ++total;
      Graph g = graph_from_mask(n, mask);
      bool all_even = true;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2) all_even = false;
      if (all_even) ++even;
    });
    auto [cg, ce] = enumeration_counts(n);
    REQUIRE(cg == total);
    REQUIRE(ce == even);
  }
}

TEST_CASE("handshake identity on random graphs and multigraphs") {
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    Graph g = gct::random_graph(9, 0.4, rng);
    DegreeView dv = degree_profile(g);
    REQUIRE(dv.degree_sum == 2LL * g.m());
    REQUIRE(dv.odd_count % 2 == 0);
  }
  std::uniform_int_distribution<int> vtx(0, 5);
  for (int it = 0; it < 50; ++it) {
    std::vector<Edge> es;
    for (int k = 0; k < 9; ++k) es.push_back({vtx(rng), vtx(rng)});
    MultiGraph mg(6, es, true);
    DegreeView dv = degree_profile(mg);
    REQUIRE(dv.degree_sum == 2LL * mg.m());
    REQUIRE(dv.odd_count % 2 == 0);
  }
}

TEST_CASE("cyclomatic number detects acyclic and unicyclic graphs") {
  // cyc = 0 iff acyclic, cyc = 1 iff exactly one cycle, on all connected
  // graphs up to 6 vertices; the cycle-count oracle enumerates vertex subsets
  // inducing a cycle cover... simpler: count simple cycles by DFS.
  auto count_cycles = [](const Graph& g) {
    // counts simple cycles (each once, by least vertex + orientation)
    long long cnt = 0;
    int n = g.n();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int, int)> dfs = [&](int start, int v) {
      for (int u : g.adj(v)) {
        if (u == start && path.size() >= 3) {
          // normalize orientation: second vertex < last vertex
          if (path[1] < path.back()) ++cnt;
        } else if (u > start && !used[u]) {
          used[u] = 1;
          path.push_back(u);
          dfs(start, u);
          path.pop_back();
          used[u] = 0;
        }
      }
    };
    for (int s = 0; s < n; ++s) {
      used.assign(n, 0);
      used[s] = 1;
      path = {s};
      dfs(s, s);
    }
    return cnt;
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_upto_iso(n)) {
      long long cyc = metrics(g).cyclomatic;
      long long cycles = count_cycles(g);
      REQUIRE(cyc >= 0);
      REQUIRE((cyc == 0) == (cycles == 0));
      REQUIRE((cyc == 1) == (cycles == 1));
    }
}

TEST_CASE("isomorphism class counts match the known table") {
  const long long want[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    REQUIRE((long long)graphs_upto_iso(n).size() == want[n - 1]);
}
