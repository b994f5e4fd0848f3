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

#ifndef POPMATCH_GENERATOR_H_
#define POPMATCH_GENERATOR_H_

#include <cstdint>

#include "popmatch/instance.h"

namespace popmatch {

struct GeneratorOptions {
  int applicants = 10;
  int posts = 10;
  double tie_prob = 0.3;
  int list_len = 4;
  uint64_t seed = 1;
};

// Applicants "a1".."aN" each rank between 1 and list_len distinct posts drawn
// from "p1".."pM"; each post after the first joins the previous tie with
// probability tie_prob. Output depends only on the options.
Instance GenerateInstance(const GeneratorOptions& options);

// Random small instance for exhaustive checks: applicant and post counts are
// drawn uniformly from [1, max_applicants] and [1, max_posts].
struct SuiteOptions {
  int max_applicants = 6;
  int max_posts = 6;
  double tie_prob = 0.3;
  int list_len = 4;
};
Instance SuiteInstance(uint64_t seed, const SuiteOptions& options = {});

}  // namespace popmatch

#endif  // POPMATCH_GENERATOR_H_
