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

#ifndef POPMATCH_MIN_COST_H_
#define POPMATCH_MIN_COST_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "popmatch/characterization.h"
#include "popmatch/instance.h"
#include "popmatch/popular_structure.h"

namespace popmatch {

using Cost = boost::multiprecision::cpp_int;

// Exact integer costs on E2 edges; unspecified edges cost 0.
class CostFunction {
 public:
  void Set(Edge e, Cost w);
  const Cost& operator()(int applicant, int post) const;
  const std::map<Edge, Cost>& entries() const { return costs_; }

 private:
  std::map<Edge, Cost> costs_;
};

// Reads "<applicant-id> <post-id> <integer>" lines. Throws InputError, with
// kind kNotInE2 naming the pair when it is not an f- or s-edge.
CostFunction ParseCosts(const PopularStructure& ps, std::istream& in);
CostFunction ParseCosts(const PopularStructure& ps, std::string_view text);

struct FlowResult {
  Cost cost;
  std::vector<bool> arc_used;
};

// Unit-capacity network for successive shortest paths. Arc costs may be
// negative as long as there is no negative cycle.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : out_(num_nodes) {}

  // Returns the arc index.
  int AddArc(int from, int to, Cost cost);

  int num_nodes() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return static_cast<int>(head_.size() / 2); }
  int tail(int arc) const { return head_[2 * arc + 1]; }
  int head(int arc) const { return head_[2 * arc]; }
  const Cost& cost(int arc) const { return cost_[arc]; }

 private:
  friend FlowResult SuccessiveShortestPaths(const FlowNetwork&, int, int, int);
  // Residual arc 2k is arc k, 2k+1 its reverse.
  std::vector<int> head_;
  std::vector<Cost> cost_;
  std::vector<std::vector<int>> out_;
};

class InfeasibleFlow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sends `units` units from source to sink along shortest augmenting paths.
// Each phase runs Dijkstra on potential-reduced costs, then augments along
// node-disjoint paths of zero reduced cost. Initial potentials come from a
// Bellman-Ford pass. Arithmetic is native when cost magnitudes allow.
// Throws InfeasibleFlow when fewer units can be sent.
FlowResult SuccessiveShortestPaths(const FlowNetwork& net, int source, int sink,
                                   int units);

struct MinCostResult {
  Matching matching;
  Cost cost;
};

// Minimum-cost popular matching. Required posts are forced by subtracting
// C = 1 + sum |w(e)| from their admissible edges; the unconstrained
// assignment optimum then covers them and C is added back per required post.
MinCostResult MinCostPopular(const Characterization& ch, const CostFunction& w);

enum class Criterion {
  kMaxCard,
  kMinCostMaxCard,
  kEgalitarian,
  kRankMax,
  kFair,
};

// Accepts "maxcard", "mincost-maxcard", "egalitarian", "rankmax" and "fair".
// Throws std::invalid_argument otherwise.
Criterion ParseCriterion(std::string_view name);
std::string_view CriterionName(Criterion criterion);

// Costs on E2 whose minimum-cost popular matching is optimal for the
// criterion. `user` supplies the secondary costs of kMinCostMaxCard.
CostFunction CriterionCosts(const PopularStructure& ps, Criterion criterion,
                            const CostFunction& user = {});

Cost MatchingCost(const CostFunction& w, const Matching& m);

}  // namespace popmatch

#endif  // POPMATCH_MIN_COST_H_
