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

#ifndef POPMATCH_ENUMERATION_H_
#define POPMATCH_ENUMERATION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "popmatch/characterization.h"

namespace popmatch {

// Streams every popular matching exactly once. Applicants are assigned in
// order, each trying its admissible posts in adjacency order; a branch is
// entered only if the remaining applicants can still be completed inside the
// admissible graph while covering the free required posts, so every branch
// ends in a solution. Single consumer; `ch` must outlive the enumerator.
class PopularEnumerator {
 public:
  explicit PopularEnumerator(const Characterization& ch,
                             std::optional<uint64_t> limit = std::nullopt);

  std::optional<Matching> Next();
  uint64_t emitted() const { return emitted_; }

 private:
  bool Feasible(int first_free_applicant) const;
  void Assign(int a, int p);
  void Unassign(int a);

  const Characterization& ch_;
  std::optional<uint64_t> limit_;
  Matching current_;
  std::vector<int> option_;
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  uint64_t emitted_ = 0;
};

std::vector<Matching> EnumeratePopular(
    const Characterization& ch, std::optional<uint64_t> limit = std::nullopt);

uint64_t CountPopular(const Characterization& ch);

// 0 when the instance has no popular matching.
uint64_t CountPopular(const PopularStructure& ps);

}  // namespace popmatch

#endif  // POPMATCH_ENUMERATION_H_
