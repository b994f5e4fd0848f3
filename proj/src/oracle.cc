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

#include "popmatch/oracle.h"

#include <algorithm>
#include <cstdint>
#include <string>

namespace popmatch {
namespace {

void CheckGuard(const Instance& instance, OracleGuard guard) {
  if (instance.num_applicants() > guard.max_applicants ||
      instance.num_real_posts() > guard.max_real_posts) {
    throw InstanceTooLargeForOracle(
        "oracle limited to " + std::to_string(guard.max_applicants) +
        " applicants and " + std::to_string(guard.max_real_posts) +
        " real posts; instance has " +
        std::to_string(instance.num_applicants()) + " and " +
        std::to_string(instance.num_real_posts()));
  }
}

// Ranks of the assigned posts, one row per applicant-complete matching.
struct RankRows {
  int width = 0;
  int count = 0;
  std::vector<uint16_t> ranks;
  int rows() const { return count; }
  const uint16_t* row(int i) const { return ranks.data() + size_t{1} * i * width; }
};

RankRows ToRanks(const Instance& instance, const std::vector<Matching>& all) {
  RankRows rows;
  rows.width = instance.num_applicants();
  rows.count = static_cast<int>(all.size());
  rows.ranks.reserve(all.size() * rows.width);
  for (const Matching& m : all) {
    for (int a = 0; a < rows.width; ++a) {
      rows.ranks.push_back(
          static_cast<uint16_t>(instance.Rank(a, m.PostOf(a))));
    }
  }
  return rows;
}

// Positive when the challenger row beats the incumbent row.
int Margin(const uint16_t* challenger, const uint16_t* incumbent, int width) {
  int margin = 0;
  for (int a = 0; a < width; ++a) {
    margin += (challenger[a] < incumbent[a]) - (challenger[a] > incumbent[a]);
  }
  return margin;
}

void EnumerateComplete(const Instance& instance, int a,
                       std::vector<bool>& used, Matching& current,
                       std::vector<Matching>& out) {
  if (a == instance.num_applicants()) {
    out.push_back(current);
    return;
  }
  for (int p : instance.acceptable_posts(a)) {
    if (used[p]) continue;
    used[p] = true;
    current.Add(a, p);
    EnumerateComplete(instance, a + 1, used, current, out);
    current.RemoveLeft(a);
    used[p] = false;
  }
}

void EnumerateFirstChoice(const Instance& instance, int a,
                          std::vector<bool>& used, std::vector<int>& chosen,
                          int size, int& best,
                          std::vector<bool>& always_matched) {
  if (a == instance.num_applicants()) {
    if (size < best) return;
    std::vector<bool> matched(instance.num_posts(), false);
    for (int p : chosen) {
      if (p != kUnmatched) matched[p] = true;
    }
    if (size > best) {
      best = size;
      always_matched = matched;
    } else {
      for (int p = 0; p < instance.num_posts(); ++p) {
        always_matched[p] = always_matched[p] && matched[p];
      }
    }
    return;
  }
  for (int p : instance.groups(a).front()) {
    if (used[p]) continue;
    used[p] = true;
    chosen[a] = p;
    EnumerateFirstChoice(instance, a + 1, used, chosen, size + 1, best,
                         always_matched);
    used[p] = false;
  }
  chosen[a] = kUnmatched;
  EnumerateFirstChoice(instance, a + 1, used, chosen, size, best,
                       always_matched);
}

}  // namespace

int Compare(const Instance& instance, const Matching& m1, const Matching& m2) {
  int score = 0;
  for (int a = 0; a < instance.num_applicants(); ++a) {
    const int p1 = m1.PostOf(a);
    const int p2 = m2.PostOf(a);
    if (p1 == p2) continue;
    if (p2 == kUnmatched || (p1 != kUnmatched && instance.Prefers(a, p1, p2))) {
      ++score;
    } else if (p1 == kUnmatched || instance.Prefers(a, p2, p1)) {
      --score;
    }
  }
  return score;
}

std::vector<Matching> ApplicantCompleteMatchings(const Instance& instance,
                                                 OracleGuard guard) {
  CheckGuard(instance, guard);
  std::vector<Matching> out;
  std::vector<bool> used(instance.num_posts(), false);
  Matching current = EmptyMatching(instance);
  EnumerateComplete(instance, 0, used, current, out);
  return out;
}

std::vector<Matching> BruteForcePopular(const Instance& instance,
                                        OracleGuard guard) {
  std::vector<Matching> all = ApplicantCompleteMatchings(instance, guard);
  const RankRows rows = ToRanks(instance, all);
  std::vector<Matching> popular;
  // The last successful challenger tends to beat the next candidate as well.
  int last_winner = 0;
  for (int i = 0; i < rows.rows(); ++i) {
    bool beaten = Margin(rows.row(last_winner), rows.row(i), rows.width) > 0;
    for (int j = 0; j < rows.rows() && !beaten; ++j) {
      if (Margin(rows.row(j), rows.row(i), rows.width) > 0) {
        beaten = true;
        last_winner = j;
      }
    }
    if (!beaten) popular.push_back(std::move(all[i]));
  }
  return popular;
}

std::optional<Matching> FindMorePopular(const Instance& instance,
                                        const Matching& m,
                                        OracleGuard guard) {
  for (Matching& challenger : ApplicantCompleteMatchings(instance, guard)) {
    if (Compare(instance, challenger, m) > 0) return std::move(challenger);
  }
  return std::nullopt;
}

std::vector<int> BruteForceP1(const Instance& instance, OracleGuard guard) {
  CheckGuard(instance, guard);
  std::vector<bool> used(instance.num_posts(), false);
  std::vector<int> chosen(instance.num_applicants(), kUnmatched);
  std::vector<bool> always_matched(instance.num_posts(), false);
  int best = -1;
  EnumerateFirstChoice(instance, 0, used, chosen, 0, best, always_matched);
  std::vector<int> p1;
  for (int p = 0; p < instance.num_posts(); ++p) {
    if (always_matched[p]) p1.push_back(p);
  }
  return p1;
}

}  // namespace popmatch
