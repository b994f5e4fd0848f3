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

#include "popmatch/bipartite_graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace popmatch {
namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, Matching m)
      : g_(g), m_(std::move(m)), dist_(g.num_left()), next_(g.num_left()) {}

  Matching Run() && {
    while (BuildLayers()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int u = 0; u < g_.num_left(); ++u) {
        if (m_.PostOf(u) == kUnmatched) Augment(u);
      }
    }
    return std::move(m_);
  }

 private:
  // Layers alternating paths from free left vertices. Returns true iff some
  // free right vertex is reachable; free_layer_ is the length of the
  // shortest augmenting path (counted in left layers).
  bool BuildLayers() {
    std::deque<int> queue;
    for (int u = 0; u < g_.num_left(); ++u) {
      if (m_.PostOf(u) == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInfinity;
      }
    }
    free_layer_ = kInfinity;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (dist_[u] >= free_layer_) continue;
      for (int v : g_.neighbors(u)) {
        const int w = m_.ApplicantOf(v);
        if (w == kUnmatched) {
          free_layer_ = std::min(free_layer_, dist_[u] + 1);
        } else if (dist_[w] == kInfinity) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return free_layer_ != kInfinity;
  }

  // Iterative layered DFS from `root`; flips the path on success.
  bool Augment(int root) {
    std::vector<int>& stack = stack_;
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      const std::vector<int>& adj = g_.neighbors(u);
      if (next_[u] == static_cast<int>(adj.size())) {
        dist_[u] = kInfinity;
        stack.pop_back();
        if (!stack.empty()) ++next_[stack.back()];
        continue;
      }
      const int v = adj[next_[u]];
      const int w = m_.ApplicantOf(v);
      if (w == kUnmatched) {
        if (dist_[u] + 1 == free_layer_) {
          for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
            const int left = stack[i];
            const int right = g_.neighbors(left)[next_[left]];
            m_.RemoveLeft(left);
            const int previous = m_.ApplicantOf(right);
            if (previous != kUnmatched) m_.RemoveLeft(previous);
            m_.Add(left, right);
          }
          return true;
        }
        ++next_[u];
      } else if (dist_[w] == dist_[u] + 1 && w != u) {
        stack.push_back(w);
      } else {
        ++next_[u];
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  Matching m_;
  std::vector<int> dist_;
  std::vector<int> next_;
  std::vector<int> stack_;
  int free_layer_ = kInfinity;
};

std::vector<bool> ReachableFromFreeLeft(const BipartiteGraph& g,
                                        const Matching& m,
                                        std::vector<bool>& right_reached) {
  std::vector<bool> left_reached(g.num_left(), false);
  right_reached.assign(g.num_right(), false);
  std::deque<int> queue;
  for (int u = 0; u < g.num_left(); ++u) {
    if (m.PostOf(u) == kUnmatched) {
      left_reached[u] = true;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (right_reached[v] || m.PostOf(u) == v) continue;
      right_reached[v] = true;
      const int w = m.ApplicantOf(v);
      if (w != kUnmatched && !left_reached[w]) {
        left_reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  return left_reached;
}

}  // namespace

void BipartiteGraph::AddEdge(int left, int right) {
  if (left < 0 || left >= num_left() || right < 0 || right >= num_right_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (HasEdge(left, right)) throw std::invalid_argument("parallel edge");
  adjacency_[left].push_back(right);
  ++num_edges_;
}

bool BipartiteGraph::HasEdge(int left, int right) const {
  const std::vector<int>& adj = adjacency_[left];
  return std::find(adj.begin(), adj.end(), right) != adj.end();
}

std::vector<std::vector<int>> BipartiteGraph::ReverseAdjacency() const {
  std::vector<std::vector<int>> reverse(num_right_);
  for (int u = 0; u < num_left(); ++u) {
    for (int v : adjacency_[u]) reverse[v].push_back(u);
  }
  return reverse;
}

Matching MaxMatching(const BipartiteGraph& g) {
  return AugmentToMaximum(g, Matching(g.num_left(), g.num_right()));
}

Matching AugmentToMaximum(const BipartiteGraph& g, Matching m) {
  return HopcroftKarp(g, std::move(m)).Run();
}

int VertexCover::size() const {
  return static_cast<int>(std::count(left.begin(), left.end(), true) +
                          std::count(right.begin(), right.end(), true));
}

VertexCover MinVertexCover(const BipartiteGraph& g, const Matching& m) {
  VertexCover x;
  std::vector<bool> right_reached;
  const std::vector<bool> left_reached = ReachableFromFreeLeft(g, m, right_reached);
  x.left.resize(g.num_left());
  for (int u = 0; u < g.num_left(); ++u) x.left[u] = !left_reached[u];
  x.right = std::move(right_reached);
  return x;
}

VertexCover MinVertexCoverFromRight(const BipartiteGraph& g,
                                    const Matching& m) {
  const std::vector<std::vector<int>> reverse = g.ReverseAdjacency();
  std::vector<bool> left_reached(g.num_left(), false);
  std::vector<bool> right_reached(g.num_right(), false);
  std::deque<int> queue;
  for (int v = 0; v < g.num_right(); ++v) {
    if (m.ApplicantOf(v) == kUnmatched) {
      right_reached[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : reverse[v]) {
      if (left_reached[u] || m.ApplicantOf(v) == u) continue;
      left_reached[u] = true;
      const int w = m.PostOf(u);
      if (w != kUnmatched && !right_reached[w]) {
        right_reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  VertexCover x;
  x.left = std::move(left_reached);
  x.right.resize(g.num_right());
  for (int v = 0; v < g.num_right(); ++v) x.right[v] = !right_reached[v];
  return x;
}

bool Covers(const BipartiteGraph& g, const VertexCover& x) {
  for (int u = 0; u < g.num_left(); ++u) {
    if (x.left[u]) continue;
    for (int v : g.neighbors(u)) {
      if (!x.right[v]) return false;
    }
  }
  return true;
}

EouLabels EouClassify(const BipartiteGraph& g, const Matching& m) {
  const std::vector<std::vector<int>> reverse = g.ReverseAdjacency();
  EouLabels labels;
  labels.left.assign(g.num_left(), Eou::kUnreachable);
  labels.right.assign(g.num_right(), Eou::kUnreachable);
  // Queue entries: vertex index, with right vertices offset by num_left.
  std::deque<int> queue;
  for (int u = 0; u < g.num_left(); ++u) {
    if (m.PostOf(u) == kUnmatched) {
      labels.left[u] = Eou::kEven;
      queue.push_back(u);
    }
  }
  for (int v = 0; v < g.num_right(); ++v) {
    if (m.ApplicantOf(v) == kUnmatched) {
      labels.right[v] = Eou::kEven;
      queue.push_back(g.num_left() + v);
    }
  }
  while (!queue.empty()) {
    const int item = queue.front();
    queue.pop_front();
    if (item < g.num_left()) {
      const int u = item;
      if (labels.left[u] == Eou::kEven) {
        for (int v : g.neighbors(u)) {
          if (m.PostOf(u) == v || labels.right[v] != Eou::kUnreachable) {
            continue;
          }
          labels.right[v] = Eou::kOdd;
          queue.push_back(g.num_left() + v);
        }
      } else {
        const int v = m.PostOf(u);
        if (v != kUnmatched && labels.right[v] == Eou::kUnreachable) {
          labels.right[v] = Eou::kEven;
          queue.push_back(g.num_left() + v);
        }
      }
    } else {
      const int v = item - g.num_left();
      if (labels.right[v] == Eou::kEven) {
        for (int u : reverse[v]) {
          if (m.ApplicantOf(v) == u || labels.left[u] != Eou::kUnreachable) {
            continue;
          }
          labels.left[u] = Eou::kOdd;
          queue.push_back(u);
        }
      } else {
        const int u = m.ApplicantOf(v);
        if (u != kUnmatched && labels.left[u] == Eou::kUnreachable) {
          labels.left[u] = Eou::kEven;
          queue.push_back(u);
        }
      }
    }
  }
  return labels;
}

}  // namespace popmatch
