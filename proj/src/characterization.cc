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

#include "popmatch/characterization.h"

#include <numeric>

namespace popmatch {

long long DualVector::Objective() const {
  return std::accumulate(applicant.begin(), applicant.end(), 0LL) +
         std::accumulate(post.begin(), post.end(), 0LL);
}

std::vector<Edge> Characterization::AdmissibleEdges() const {
  std::vector<Edge> edges;
  for (int a = 0; a < admissible_.num_left(); ++a) {
    for (int p : admissible_.neighbors(a)) edges.push_back({a, p});
  }
  return edges;
}

Characterization Characterize(const PopularStructure& ps) {
  return BuildCharacterization(ps, MinVertexCover(ps.g1, ps.m1));
}

Characterization BuildCharacterization(const PopularStructure& ps,
                                       const VertexCover& x) {
  if (!FindPopularMatching(ps)) throw NoPopularMatching();
  if (x.size() != ps.k1_star) {
    throw std::invalid_argument("cover size differs from k1*");
  }
  Characterization ch;
  ch.ps_ = &ps;
  ch.cover_ = x;
  ch.dual_ = DualCertificate(ps, x);
  ch.required_ = x.right;
  for (int p = 0; p < ps.num_posts(); ++p) {
    if (x.right[p]) ch.required_list_.push_back(p);
  }
  ch.admissible_ = BipartiteGraph(ps.num_applicants(), ps.num_posts());
  for (int a = 0; a < ps.num_applicants(); ++a) {
    for (int p : ps.g2.neighbors(a)) {
      const bool keep = ps.InE1(a, p) ? x.left[a] != x.right[p]
                                      : !x.left[a] && !x.right[p];
      if (keep) ch.admissible_.AddEdge(a, p);
    }
  }
  if (TightEdges(ps, ch.dual_) != ch.AdmissibleEdges()) {
    throw InternalError("admissible edges differ from the tight dual edges");
  }
  for (int p = 0; p < ps.num_posts(); ++p) {
    if ((ch.dual_.post[p] > 0) != ch.required_[p]) {
      throw InternalError("required posts differ from positively priced posts");
    }
  }
  return ch;
}

DualVector DualCertificate(const PopularStructure& ps, const VertexCover& x) {
  if (!Covers(ps.g1, x)) {
    throw std::invalid_argument("vertex set does not cover G1");
  }
  const long long n = ps.num_applicants();
  DualVector y;
  y.applicant.resize(ps.num_applicants());
  y.post.resize(ps.num_posts());
  for (int a = 0; a < ps.num_applicants(); ++a) {
    y.applicant[a] = x.left[a] ? n + 1 : 1;
  }
  for (int p = 0; p < ps.num_posts(); ++p) y.post[p] = x.right[p] ? n : 0;
  return y;
}

bool VerifyDual(const PopularStructure& ps, const DualVector& y) {
  if (static_cast<int>(y.applicant.size()) != ps.num_applicants() ||
      static_cast<int>(y.post.size()) != ps.num_posts()) {
    return false;
  }
  for (long long v : y.applicant) {
    if (v < 0) return false;
  }
  for (long long v : y.post) {
    if (v < 0) return false;
  }
  const long long first_bound = ps.num_applicants() + 1LL;
  for (int a = 0; a < ps.num_applicants(); ++a) {
    for (int p : ps.g2.neighbors(a)) {
      const long long bound = ps.InE1(a, p) ? first_bound : 1;
      if (y.applicant[a] + y.post[p] < bound) return false;
    }
  }
  return true;
}

std::vector<Edge> TightEdges(const PopularStructure& ps, const DualVector& y) {
  const long long first_bound = ps.num_applicants() + 1LL;
  std::vector<Edge> tight;
  for (int a = 0; a < ps.num_applicants(); ++a) {
    for (int p : ps.g2.neighbors(a)) {
      const long long bound = ps.InE1(a, p) ? first_bound : 1;
      if (y.applicant[a] + y.post[p] == bound) tight.push_back({a, p});
    }
  }
  return tight;
}

bool IsPopularChar(const Characterization& ch, const Matching& m) {
  RequireApplicantComplete(*ch.structure().instance, m);
  for (const Edge& e : m.Pairs()) {
    if (!ch.IsAdmissible(e.applicant, e.post)) return false;
  }
  for (int p : ch.required_posts()) {
    if (m.ApplicantOf(p) == kUnmatched) return false;
  }
  return true;
}

std::vector<SlacknessViolation> ComplementarySlacknessReport(
    const PopularStructure& ps, const DualVector& y, const Matching& m) {
  using Kind = SlacknessViolation::Kind;
  std::vector<SlacknessViolation> report;
  const long long first_bound = ps.num_applicants() + 1LL;
  for (const Edge& e : m.Pairs()) {
    if (!ps.InE2(e.applicant, e.post)) {
      report.push_back({Kind::kOutsideE2, e.applicant, e.post, 0});
      continue;
    }
    const bool first = ps.InE1(e.applicant, e.post);
    const long long slack = y.applicant[e.applicant] + y.post[e.post] -
                            (first ? first_bound : 1);
    if (slack != 0) {
      report.push_back({first ? Kind::kLooseE1Edge : Kind::kLooseE2Edge,
                        e.applicant, e.post, slack});
    }
  }
  for (int p = 0; p < ps.num_posts(); ++p) {
    if (m.ApplicantOf(p) == kUnmatched && y.post[p] != 0) {
      report.push_back({Kind::kPricedFreePost, kUnmatched, p, y.post[p]});
    }
  }
  return report;
}

std::string DescribeViolation(const Instance& instance,
                              const SlacknessViolation& v) {
  using Kind = SlacknessViolation::Kind;
  const std::string pair =
      v.applicant == kUnmatched
          ? std::string()
          : "(" + instance.applicant_id(v.applicant) + ", " +
                instance.post_id(v.post) + ")";
  switch (v.kind) {
    case Kind::kOutsideE2:
      return "pair " + pair + " is not an f- or s-edge";
    case Kind::kLooseE1Edge:
      return "first-choice pair " + pair + " has dual slack " +
             std::to_string(v.slack);
    case Kind::kLooseE2Edge:
      return "second-choice pair " + pair + " has dual slack " +
             std::to_string(v.slack);
    case Kind::kPricedFreePost:
      return "unmatched post " + instance.post_id(v.post) + " has price " +
             std::to_string(v.slack);
  }
  return {};
}

}  // namespace popmatch
