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

#ifndef POPMATCH_CHARACTERIZATION_H_
#define POPMATCH_CHARACTERIZATION_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "popmatch/bipartite_graph.h"
#include "popmatch/popular_structure.h"

namespace popmatch {

class NoPopularMatching : public std::runtime_error {
 public:
  NoPopularMatching() : std::runtime_error("instance has no popular matching") {}
};

// Vertex prices for the dual of the weighted matching problem on G2:
//   y(a) + y(p) >= |A| + 1 on E1,  y(a) + y(p) >= 1 on E2 \ E1,  y >= 0.
struct DualVector {
  std::vector<long long> applicant;
  std::vector<long long> post;

  long long Objective() const;
};

// Popular matchings are exactly the applicant-complete matchings that use
// only admissible edges and match every required post.
class Characterization {
 public:
  const PopularStructure& structure() const { return *ps_; }
  const VertexCover& cover() const { return cover_; }
  const DualVector& dual() const { return dual_; }
  int k1_star() const { return ps_->k1_star; }

  bool IsRequired(int p) const { return required_[p]; }
  const std::vector<int>& required_posts() const { return required_list_; }

  // Admissible edges per applicant, in G2 adjacency order.
  const BipartiteGraph& admissible() const { return admissible_; }
  bool IsAdmissible(int a, int p) const { return admissible_.HasEdge(a, p); }
  std::vector<Edge> AdmissibleEdges() const;

 private:
  friend Characterization BuildCharacterization(const PopularStructure&,
                                                const VertexCover&);
  const PopularStructure* ps_ = nullptr;
  VertexCover cover_;
  std::vector<bool> required_;
  std::vector<int> required_list_;
  BipartiteGraph admissible_;
  DualVector dual_;
};

// Uses the canonical cover of G1 (alternating reachability from free
// applicants). Throws NoPopularMatching when no popular matching exists.
// `ps` must outlive the result.
Characterization Characterize(const PopularStructure& ps);

// Same, for a caller-chosen minimum cover of G1. Throws std::invalid_argument
// if `x` is not a cover of size k1*, NoPopularMatching as above, and
// InternalError if the cover formula and the tight edges of the dual disagree.
Characterization BuildCharacterization(const PopularStructure& ps,
                                       const VertexCover& x);

// y = |A|+1 on covered applicants, 1 on other applicants, |A| on covered
// posts and 0 elsewhere. Throws std::invalid_argument if x misses an E1 edge.
DualVector DualCertificate(const PopularStructure& ps, const VertexCover& x);

bool VerifyDual(const PopularStructure& ps, const DualVector& y);

// Tight edges of y: E1 edges with y(a)+y(p) = |A|+1 and E2 \ E1 edges with
// y(a)+y(p) = 1, in G2 adjacency order.
std::vector<Edge> TightEdges(const PopularStructure& ps, const DualVector& y);

// m inside the admissible edges and every required post matched. Throws
// std::invalid_argument when m is not an applicant-complete matching over E.
bool IsPopularChar(const Characterization& ch, const Matching& m);

struct SlacknessViolation {
  enum class Kind {
    kOutsideE2,       // pair is not an E2 edge
    kLooseE1Edge,     // matched E1 edge with y(a)+y(p) > |A|+1
    kLooseE2Edge,     // matched E2 \ E1 edge with y(a)+y(p) > 1
    kPricedFreePost,  // unmatched post with y(p) > 0
  };
  Kind kind;
  int applicant = kUnmatched;
  int post = kUnmatched;
  long long slack = 0;
};

// Complementary slackness between matching m and dual y. Empty iff m and y
// certify each other's optimality.
std::vector<SlacknessViolation> ComplementarySlacknessReport(
    const PopularStructure& ps, const DualVector& y, const Matching& m);

std::string DescribeViolation(const Instance& instance,
                              const SlacknessViolation& v);

}  // namespace popmatch

#endif  // POPMATCH_CHARACTERIZATION_H_
