// Copyright 2026 The popmatch Authors
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

#ifndef POPMATCH_BIPARTITE_GRAPH_H_
#define POPMATCH_BIPARTITE_GRAPH_H_

#include <vector>

#include "popmatch/instance.h"

namespace popmatch {

// Bipartite graph with left vertices (applicants) and right vertices (posts).
// Adjacency lists keep insertion order, which fixes the output of every
// algorithm below.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int num_left, int num_right)
      : num_right_(num_right), adjacency_(num_left) {}

  // Throws std::invalid_argument on out-of-range endpoints or parallel edges.
  void AddEdge(int left, int right);

  int num_left() const { return static_cast<int>(adjacency_.size()); }
  int num_right() const { return num_right_; }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int left) const {
    return adjacency_[left];
  }
  bool HasEdge(int left, int right) const;

  // Right-to-left adjacency, built on demand.
  std::vector<std::vector<int>> ReverseAdjacency() const;

 private:
  int num_right_ = 0;
  int num_edges_ = 0;
  std::vector<std::vector<int>> adjacency_;
};

// Hopcroft-Karp. BFS layers start from all free left vertices, DFS follows
// adjacency order.
Matching MaxMatching(const BipartiteGraph& g);

// Runs Hopcroft-Karp phases starting from `m` (which must only use edges of
// g). Vertices matched in `m` stay matched.
Matching AugmentToMaximum(const BipartiteGraph& g, Matching m);

// Konig cover X = (L \ Z) + (R & Z), where Z is reachable from free left
// vertices by alternating paths. `m` must be a maximum matching of g.
struct VertexCover {
  std::vector<bool> left;
  std::vector<bool> right;
  int size() const;
};
VertexCover MinVertexCover(const BipartiteGraph& g, const Matching& m);

// Same construction with alternating reachability launched from free right
// vertices: X = (L & Z') + (R \ Z'). Generally a different minimum cover.
VertexCover MinVertexCoverFromRight(const BipartiteGraph& g, const Matching& m);

bool Covers(const BipartiteGraph& g, const VertexCover& x);

enum class Eou { kEven, kOdd, kUnreachable };

// Gallai-Edmonds style labels relative to a maximum matching. A vertex is
// kEven iff some maximum matching leaves it free.
struct EouLabels {
  std::vector<Eou> left;
  std::vector<Eou> right;
};
EouLabels EouClassify(const BipartiteGraph& g, const Matching& m);

}  // namespace popmatch

#endif  // POPMATCH_BIPARTITE_GRAPH_H_
