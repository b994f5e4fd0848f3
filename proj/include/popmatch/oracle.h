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

#ifndef POPMATCH_ORACLE_H_
#define POPMATCH_ORACLE_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "popmatch/instance.h"

namespace popmatch {

// Exhaustive ground truth for small instances. Nothing here is used on the
// production paths; it exists to check them.

struct OracleGuard {
  int max_applicants = 7;
  int max_real_posts = 7;
};

class InstanceTooLargeForOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (#applicants preferring m1) - (#applicants preferring m2).
int Compare(const Instance& instance, const Matching& m1, const Matching& m2);

// Every applicant-complete matching, in lexicographic order of the posts
// chosen along each applicant's list.
std::vector<Matching> ApplicantCompleteMatchings(const Instance& instance,
                                                 OracleGuard guard = {});

// All applicant-complete matchings that no applicant-complete matching beats.
std::vector<Matching> BruteForcePopular(const Instance& instance,
                                        OracleGuard guard = {});

// A matching more popular than m, if one exists (first in enumeration
// order). m must be a matching over E; it need not be applicant-complete.
std::optional<Matching> FindMorePopular(const Instance& instance,
                                        const Matching& m,
                                        OracleGuard guard = {});

// Posts matched in every maximum matching of the first-choice graph, found by
// enumerating all of its matchings. Sorted ascending.
std::vector<int> BruteForceP1(const Instance& instance, OracleGuard guard = {});

}  // namespace popmatch

#endif  // POPMATCH_ORACLE_H_
