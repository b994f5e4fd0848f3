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

#ifndef POPMATCH_POPULAR_STRUCTURE_H_
#define POPMATCH_POPULAR_STRUCTURE_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "popmatch/bipartite_graph.h"
#include "popmatch/instance.h"

namespace popmatch {

// Signals a broken internal invariant (an implementation bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Derived structure of an instance: first posts f(a), second posts s(a),
// the set P1 of posts matched by every maximum matching of G1, and the
// graphs G1 (E1 = f-edges) and G2 (E2 = f- and s-edges).
struct PopularStructure {
  const Instance* instance = nullptr;
  std::vector<std::vector<int>> f;
  std::vector<std::vector<int>> s;
  std::vector<bool> in_p1;
  BipartiteGraph g1;
  BipartiteGraph g2;
  // A maximum matching of G1 and the Even/Odd/Unreachable labels it induces.
  Matching m1;
  EouLabels g1_labels;
  int k1_star = 0;

  bool InE1(int a, int p) const { return g1.HasEdge(a, p); }
  bool InE2(int a, int p) const { return g2.HasEdge(a, p); }
  int num_applicants() const { return g1.num_left(); }
  int num_posts() const { return g1.num_right(); }
};

// The instance must outlive the returned structure.
PopularStructure BuildStructure(const Instance& instance);

// Existence test: starts from the maximum matching of G1, drops the G1 edges
// joining an odd vertex to an odd or unreachable vertex, adds the s-edges and
// augments to a maximum matching. Returns the matching when it is
// applicant-complete.
std::optional<Matching> FindPopularMatching(const PopularStructure& ps);

// |m & E1| == k1* and m is a subset of E2. Throws std::invalid_argument when
// m is not an applicant-complete matching over E.
bool IsPopularThm1(const PopularStructure& ps, const Matching& m);

// |A| * |m & E1| + |m|. Throws std::invalid_argument when m is not inside E2.
long long MpValue(const PopularStructure& ps, const Matching& m);

// Checks that m is an applicant-complete matching over the acceptable pairs.
void RequireApplicantComplete(const Instance& instance, const Matching& m);

}  // namespace popmatch

#endif  // POPMATCH_POPULAR_STRUCTURE_H_
