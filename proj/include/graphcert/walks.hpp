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

#include <map>
#include <set>

#include "graphcert/graph.hpp"

namespace graphcert {

// Walk taxonomy. A trail repeats no edge; a path repeats no vertex; a cycle is
// a closed trail; a simple cycle repeats only its first/last vertex.
enum class WalkKind {
  not_a_walk,
  walk,
  closed_walk,
  trail,
  path,
  cycle,
  simple_cycle,
};

inline const char* walk_kind_name(WalkKind k) {
  switch (k) {
    case WalkKind::not_a_walk: return "not-a-walk";
    case WalkKind::walk: return "walk";
    case WalkKind::closed_walk: return "closed-walk";
    case WalkKind::trail: return "trail";
    case WalkKind::path: return "path";
    case WalkKind::cycle: return "cycle";
    case WalkKind::simple_cycle: return "simple-cycle";
  }
  return "?";
}

struct WalkClass {
  WalkKind kind = WalkKind::not_a_walk;
  int length = 0;  // edge count
};

// Classifies a vertex sequence into the most specific class it satisfies.
// A single vertex counts as a (trivial) simple path of length 0.
inline WalkClass classify_walk(const Graph& g, const std::vector<int>& seq) {
  require(!seq.empty(), errc::bad_params, "walk sequence must be nonempty");
  for (int v : seq)
    require(v >= 0 && v < g.n(), errc::out_of_range, "walk vertex out of range");
  WalkClass wc;
  wc.length = static_cast<int>(seq.size()) - 1;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[i + 1])) return wc;  // kind stays not_a_walk

  bool closed = seq.size() >= 2 && seq.front() == seq.back();
  std::set<Edge> edges_seen;
  bool edge_repeats = false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!edges_seen.insert(mk_edge(seq[i], seq[i + 1])).second) edge_repeats = true;

  std::map<int, int> vertex_count;
  for (int v : seq) ++vertex_count[v];
  bool vertices_distinct = true;
  for (auto& [v, c] : vertex_count)
    if (c > 1) vertices_distinct = false;
  // closed case: only the first/last vertex may repeat, exactly twice
  bool only_ends_repeat = closed;
  if (closed)
    for (auto& [v, c] : vertex_count) {
      int allowed = (v == seq.front()) ? 2 : 1;
      if (c > allowed) only_ends_repeat = false;
    }

  if (!closed) {
    if (!edge_repeats && vertices_distinct)
      wc.kind = WalkKind::path;
    else if (!edge_repeats)
      wc.kind = WalkKind::trail;
    else
      wc.kind = WalkKind::walk;
  } else if (seq.size() == 1) {
    wc.kind = WalkKind::path;  // trivial
  } else {
    if (!edge_repeats && only_ends_repeat)
      wc.kind = WalkKind::simple_cycle;
    else if (!edge_repeats)
      wc.kind = WalkKind::cycle;
    else
      wc.kind = WalkKind::closed_walk;
  }
  return wc;
}

// From any (u,v)-walk with u != v extracts a simple (u,v)-path by repeatedly
// splicing out the segment between two occurrences of a repeated vertex.
inline std::vector<int> reduce_to_simple_path(const Graph& g, std::vector<int> seq) {
  require(seq.size() >= 1, errc::bad_params, "empty sequence");
  require(seq.front() != seq.back(), errc::bad_params, "endpoints must differ");
  require(classify_walk(g, seq).kind != WalkKind::not_a_walk, errc::bad_params, "not a walk");
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, std::size_t> first_pos;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto it = first_pos.find(seq[i]);
      if (it != first_pos.end()) {
        seq.erase(seq.begin() + it->second, seq.begin() + i);
        changed = true;
        break;
      }
      first_pos[seq[i]] = i;
    }
  }
  return seq;
}

// From any closed walk of odd length extracts a simple cycle of odd length
// (the Lemma 1.2.2-style recursion: split at a repeated vertex, recurse into
// the odd half).
inline std::vector<int> extract_odd_cycle(const Graph& g, std::vector<int> seq) {
  require(seq.size() >= 2 && seq.front() == seq.back(), errc::bad_params, "walk must be closed");
  require((seq.size() - 1) % 2 == 1, errc::bad_params, "walk length must be odd");
  require(classify_walk(g, seq).kind != WalkKind::not_a_walk, errc::bad_params, "not a walk");
  for (;;) {
    // find an inner repeat (other than the matching endpoints)
    std::map<int, std::size_t> pos;
    std::size_t ri = 0, rj = 0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < seq.size() && !found; ++i) {
      auto it = pos.find(seq[i]);
      if (it != pos.end()) {
        ri = it->second;
        rj = i;
        found = true;
      } else {
        pos[seq[i]] = i;
      }
    }
    if (!found) return seq;  // simple odd cycle
    // split into seq[0..ri] + seq[rj..] and seq[ri..rj]; keep the odd one
    std::vector<int> inner(seq.begin() + ri, seq.begin() + rj + 1);
    std::vector<int> outer(seq.begin(), seq.begin() + ri + 1);
    outer.insert(outer.end(), seq.begin() + rj + 1, seq.end());
    if ((inner.size() - 1) % 2 == 1)
      seq = std::move(inner);
    else
      seq = std::move(outer);
  }
}

}  // namespace graphcert
