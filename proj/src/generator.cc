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

#include "popmatch/generator.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace popmatch {
namespace {

// std::mt19937_64 output is fixed by the standard; the distributions are not,
// so draws are derived from raw words.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }
  double UnitInterval() { return (engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Instance GenerateInstance(const GeneratorOptions& options) {
  Rng rng(options.seed);
  std::vector<PreferenceList> lists(std::max(options.applicants, 0));
  std::vector<int> pool(std::max(options.posts, 0));
  const int max_len = std::min(options.list_len, options.posts);
  for (int a = 0; a < options.applicants; ++a) {
    PreferenceList& list = lists[a];
    list.applicant = "a" + std::to_string(a + 1);
    if (max_len <= 0) continue;
    const int len = rng.Uniform(1, max_len);
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < len; ++i) {
      std::swap(pool[i], pool[rng.Uniform(i, options.posts - 1)]);
      const std::string post = "p" + std::to_string(pool[i]);
      if (i > 0 && rng.UnitInterval() < options.tie_prob) {
        list.groups.back().push_back(post);
      } else {
        list.groups.push_back({post});
      }
    }
  }
  return Instance::Create(std::move(lists));
}

Instance SuiteInstance(uint64_t seed, const SuiteOptions& options) {
  Rng rng(seed);
  GeneratorOptions gen;
  gen.applicants = rng.Uniform(1, options.max_applicants);
  gen.posts = rng.Uniform(1, options.max_posts);
  gen.tie_prob = options.tie_prob;
  gen.list_len = options.list_len;
  gen.seed = seed ^ 0x9e3779b97f4a7c15ULL;
  return GenerateInstance(gen);
}

}  // namespace popmatch
