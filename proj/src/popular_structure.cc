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

#include "popmatch/popular_structure.h"

#include <algorithm>
#include <string>

namespace popmatch {

PopularStructure BuildStructure(const Instance& instance) {
  const int num_applicants = instance.num_applicants();
  const int num_posts = instance.num_posts();
  PopularStructure ps;
  ps.instance = &instance;
  ps.f.resize(num_applicants);
  ps.s.resize(num_applicants);
  ps.g1 = BipartiteGraph(num_applicants, num_posts);
  for (int a = 0; a < num_applicants; ++a) {
    ps.f[a] = instance.groups(a).front();
    for (int p : ps.f[a]) ps.g1.AddEdge(a, p);
  }
  ps.m1 = MaxMatching(ps.g1);
  ps.k1_star = ps.m1.size();
  ps.g1_labels = EouClassify(ps.g1, ps.m1);
  ps.in_p1.resize(num_posts);
  for (int p = 0; p < num_posts; ++p) {
    ps.in_p1[p] = ps.g1_labels.right[p] != Eou::kEven;
  }
  ps.g2 = BipartiteGraph(num_applicants, num_posts);
  for (int a = 0; a < num_applicants; ++a) {
    for (const std::vector<int>& group : instance.groups(a)) {
      for (int p : group) {
        if (!ps.in_p1[p]) ps.s[a].push_back(p);
      }
      if (!ps.s[a].empty()) break;
    }
    for (int p : ps.f[a]) ps.g2.AddEdge(a, p);
    for (int p : ps.s[a]) {
      if (!ps.g2.HasEdge(a, p)) ps.g2.AddEdge(a, p);
    }
  }
  return ps;
}

std::optional<Matching> FindPopularMatching(const PopularStructure& ps) {
  const EouLabels& labels = ps.g1_labels;
  BipartiteGraph reduced(ps.num_applicants(), ps.num_posts());
  for (int a = 0; a < ps.num_applicants(); ++a) {
    const Eou la = labels.left[a];
    for (int p : ps.f[a]) {
      const Eou lp = labels.right[p];
      const bool odd_edge = la != Eou::kEven && lp != Eou::kEven &&
                            (la == Eou::kOdd || lp == Eou::kOdd);
      if (!odd_edge) reduced.AddEdge(a, p);
    }
    for (int p : ps.s[a]) {
      if (!reduced.HasEdge(a, p) && !ps.InE1(a, p)) reduced.AddEdge(a, p);
    }
  }
  Matching m = AugmentToMaximum(reduced, ps.m1);
  if (!m.IsLeftComplete()) return std::nullopt;
  int in_e1 = 0;
  for (const Edge& e : m.Pairs()) in_e1 += ps.InE1(e.applicant, e.post);
  if (in_e1 != ps.k1_star) {
    throw InternalError("augmentation in G2 lost first-choice edges: " +
                        std::to_string(in_e1) + " != " +
                        std::to_string(ps.k1_star));
  }
  return m;
}

void RequireApplicantComplete(const Instance& instance, const Matching& m) {
  if (m.num_left() != instance.num_applicants() ||
      m.num_right() != instance.num_posts()) {
    throw std::invalid_argument("matching does not belong to the instance");
  }
  for (const Edge& e : m.Pairs()) {
    if (!instance.IsAcceptable(e.applicant, e.post)) {
      throw std::invalid_argument("matching uses an unacceptable pair");
    }
  }
  if (!m.IsLeftComplete()) {
    throw std::invalid_argument("matching is not applicant-complete");
  }
}

bool IsPopularThm1(const PopularStructure& ps, const Matching& m) {
  RequireApplicantComplete(*ps.instance, m);
  int in_e1 = 0;
  for (const Edge& e : m.Pairs()) {
    if (!ps.InE2(e.applicant, e.post)) return false;
    in_e1 += ps.InE1(e.applicant, e.post);
  }
  return in_e1 == ps.k1_star;
}

long long MpValue(const PopularStructure& ps, const Matching& m) {
  long long in_e1 = 0;
  for (const Edge& e : m.Pairs()) {
    if (!ps.InE2(e.applicant, e.post)) {
      throw std::invalid_argument("matching is not contained in E2");
    }
    in_e1 += ps.InE1(e.applicant, e.post);
  }
  return static_cast<long long>(ps.num_applicants()) * in_e1 + m.size();
}

}  // namespace popmatch
