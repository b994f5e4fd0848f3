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

#include "popmatch/enumeration.h"

namespace popmatch {

PopularEnumerator::PopularEnumerator(const Characterization& ch,
                                     std::optional<uint64_t> limit)
    : ch_(ch),
      limit_(limit),
      current_(ch.structure().num_applicants(), ch.structure().num_posts()),
      option_(ch.structure().num_applicants(), 0) {}

bool PopularEnumerator::Feasible(int first_free_applicant) const {
  const BipartiteGraph& admissible = ch_.admissible();
  const int n = admissible.num_left();
  BipartiteGraph residual(n, admissible.num_right());
  BipartiteGraph required(n, admissible.num_right());
  int free_required = 0;
  for (int p : ch_.required_posts()) {
    free_required += current_.ApplicantOf(p) == kUnmatched;
  }
  for (int a = first_free_applicant; a < n; ++a) {
    for (int p : admissible.neighbors(a)) {
      if (current_.ApplicantOf(p) != kUnmatched) continue;
      residual.AddEdge(a, p);
      if (ch_.IsRequired(p)) required.AddEdge(a, p);
    }
  }
  // A matching saturating the free required posts, grown to a maximum one:
  // augmentation keeps those posts matched.
  Matching m = MaxMatching(required);
  if (m.size() < free_required) return false;
  m = AugmentToMaximum(residual, std::move(m));
  return m.size() == n - first_free_applicant;
}

void PopularEnumerator::Assign(int a, int p) { current_.Add(a, p); }

void PopularEnumerator::Unassign(int a) { current_.RemoveLeft(a); }

std::optional<Matching> PopularEnumerator::Next() {
  if (done_ || (limit_ && emitted_ >= *limit_)) return std::nullopt;
  const BipartiteGraph& admissible = ch_.admissible();
  const int n = admissible.num_left();
  if (!started_) {
    started_ = true;
    if (!Feasible(0)) {
      done_ = true;
      return std::nullopt;
    }
    if (n == 0) {
      done_ = true;
      ++emitted_;
      return current_;
    }
    depth_ = 0;
    option_[0] = 0;
  } else {
    depth_ = n - 1;
    Unassign(depth_);
    ++option_[depth_];
  }
  while (depth_ >= 0) {
    const int a = depth_;
    const std::vector<int>& posts = admissible.neighbors(a);
    if (option_[a] == static_cast<int>(posts.size())) {
      if (--depth_ >= 0) {
        Unassign(depth_);
        ++option_[depth_];
      }
      continue;
    }
    const int p = posts[option_[a]];
    if (current_.ApplicantOf(p) != kUnmatched) {
      ++option_[a];
      continue;
    }
    Assign(a, p);
    if (!Feasible(a + 1)) {
      Unassign(a);
      ++option_[a];
      continue;
    }
    if (a + 1 == n) {
      ++emitted_;
      return current_;
    }
    depth_ = a + 1;
    option_[depth_] = 0;
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Matching> EnumeratePopular(const Characterization& ch,
                                       std::optional<uint64_t> limit) {
  std::vector<Matching> out;
  PopularEnumerator enumerator(ch, limit);
  while (std::optional<Matching> m = enumerator.Next()) {
    out.push_back(std::move(*m));
  }
  return out;
}

uint64_t CountPopular(const Characterization& ch) {
  PopularEnumerator enumerator(ch);
  while (enumerator.Next()) {
  }
  return enumerator.emitted();
}

uint64_t CountPopular(const PopularStructure& ps) {
  try {
    return CountPopular(Characterize(ps));
  } catch (const NoPopularMatching&) {
    return 0;
  }
}

}  // namespace popmatch
