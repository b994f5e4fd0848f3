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

#include "popmatch/min_cost.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

namespace popmatch {
namespace {

const Cost kZero = 0;

bool IsInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

Cost ParseInteger(std::string_view s) {
  const bool negative = s.front() == '-';
  if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
  Cost value(std::string{s});
  return negative ? Cost(-value) : value;
}

Cost Power(int base, int exponent) {
  Cost result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

void CostFunction::Set(Edge e, Cost w) { costs_[e] = std::move(w); }

const Cost& CostFunction::operator()(int applicant, int post) const {
  const auto it = costs_.find({applicant, post});
  return it == costs_.end() ? kZero : it->second;
}

CostFunction ParseCosts(const PopularStructure& ps, std::istream& in) {
  const Instance& instance = *ps.instance;
  CostFunction w;
  std::string line;
  std::vector<std::string_view> fields;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!SplitDataLine(line, fields)) continue;
    if (fields.size() != 3 || !IsInteger(fields[2])) {
      throw InputError(InputErrorKind::kSyntax, line_no,
                       "expected '<applicant-id> <post-id> <integer>'");
    }
    const std::optional<int> a = instance.FindApplicant(fields[0]);
    if (!a) {
      throw InputError(InputErrorKind::kUnknownApplicant, line_no,
                       "unknown applicant '" + std::string(fields[0]) + "'");
    }
    const std::optional<int> p = instance.FindPost(fields[1]);
    if (!p) {
      throw InputError(InputErrorKind::kUnknownPost, line_no,
                       "unknown post '" + std::string(fields[1]) + "'");
    }
    const std::string pair =
        "(" + std::string(fields[0]) + ", " + std::string(fields[1]) + ")";
    if (!ps.InE2(*a, *p)) {
      throw InputError(InputErrorKind::kNotInE2, line_no,
                       "cost on pair " + pair + " which is not in E2");
    }
    if (w.entries().contains({*a, *p})) {
      throw InputError(InputErrorKind::kSyntax, line_no,
                       "second cost for pair " + pair);
    }
    w.Set({*a, *p}, ParseInteger(fields[2]));
  }
  return w;
}

CostFunction ParseCosts(const PopularStructure& ps, std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseCosts(ps, in);
}

int FlowNetwork::AddArc(int from, int to, Cost cost) {
  const int arc = num_arcs();
  head_.push_back(to);
  head_.push_back(from);
  cost_.push_back(std::move(cost));
  out_[from].push_back(2 * arc);
  out_[to].push_back(2 * arc + 1);
  return arc;
}

namespace {

// Shortest-path phases with costs held in T. The caller guarantees that
// every potential and distance fits in T.
// `head` and `out` are the residual network of a FlowNetwork.
template <typename T>
std::vector<bool> SendUnits(const std::vector<int>& head,
                            const std::vector<std::vector<int>>& out,
                            const std::vector<T>& cost, int source, int sink,
                            int units) {
  const int num_nodes = static_cast<int>(out.size());
  std::vector<bool> flow(cost.size(), false);
  auto residual = [&](int r) { return flow[r / 2] == (r % 2 == 1); };
  auto arc_cost = [&](int r) -> T {
    return r % 2 == 0 ? cost[r / 2] : T(-cost[r / 2]);
  };

  // Bellman-Ford from the source; unreachable nodes never become reachable.
  std::vector<T> potential(num_nodes, T(0));
  std::vector<bool> reached(num_nodes, false);
  reached[source] = true;
  for (int pass = 0;; ++pass) {
    if (pass == num_nodes) throw InfeasibleFlow("negative cycle in network");
    bool changed = false;
    for (int u = 0; u < num_nodes; ++u) {
      if (!reached[u]) continue;
      for (int r : out[u]) {
        if (!residual(r)) continue;
        const int v = head[r];
        T candidate = potential[u] + arc_cost(r);
        if (!reached[v] || candidate < potential[v]) {
          reached[v] = true;
          potential[v] = std::move(candidate);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  // Potentials are stored relative to the sum of all phase limits, which
  // cancels in reduced costs: only nodes settled in a phase move.
  std::vector<T> dist(num_nodes, T(0));
  std::vector<bool> labeled(num_nodes, false);
  std::vector<bool> done(num_nodes, false);
  std::vector<int> touched;
  // Per-round DFS state for augmenting along zero reduced cost paths.
  std::vector<int> seen(num_nodes, -1);
  std::vector<size_t> next_arc(num_nodes, 0);
  std::vector<int> path;
  using Entry = std::pair<T, int>;
  for (int unit = 0, round = 0; unit < units; ++round) {
    for (int v : touched) labeled[v] = done[v] = false;
    touched.clear();
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    dist[source] = T(0);
    labeled[source] = true;
    touched.push_back(source);
    heap.emplace(T(0), source);
    while (!heap.empty()) {
      const int u = heap.top().second;
      heap.pop();
      if (done[u]) continue;
      done[u] = true;
      if (u == sink) break;
      for (int r : out[u]) {
        if (!residual(r)) continue;
        const int v = head[r];
        if (done[v]) continue;
        T reduced = arc_cost(r) + potential[u] - potential[v];
        if (reduced < 0) {
          throw InternalError("negative reduced cost in shortest path phase");
        }
        reduced += dist[u];
        if (!labeled[v] || reduced < dist[v]) {
          if (!labeled[v]) touched.push_back(v);
          labeled[v] = true;
          dist[v] = reduced;
          heap.emplace(std::move(reduced), v);
        }
      }
    }
    if (!done[sink]) {
      throw InfeasibleFlow("only " + std::to_string(unit) + " of " +
                           std::to_string(units) + " units can be sent");
    }
    const T limit = dist[sink];
    for (int v : touched) {
      if (done[v]) potential[v] += dist[v] - limit;
    }

    // Every source-sink path of zero reduced cost is now a shortest path.
    // Augment along node-disjoint ones until none is left; the path found
    // by Dijkstra guarantees at least one.
    seen[source] = round;
    next_arc[source] = 0;
    while (unit < units) {
      path.clear();
      int u = source;
      while (u != sink) {
        bool advanced = false;
        while (next_arc[u] < out[u].size()) {
          const int r = out[u][next_arc[u]++];
          const int v = head[r];
          if (seen[v] == round || !residual(r)) continue;
          if (arc_cost(r) + potential[u] - potential[v] != 0) continue;
          if (v != sink) {
            seen[v] = round;
            next_arc[v] = 0;
          }
          path.push_back(r);
          u = v;
          advanced = true;
          break;
        }
        if (advanced) continue;
        if (path.empty()) break;
        path.pop_back();
        u = path.empty() ? source : head[path.back()];
      }
      if (u != sink) break;
      for (int r : path) flow[r / 2] = r % 2 == 0;
      ++unit;
    }
  }
  return flow;
}

template <typename T>
std::vector<T> ConvertCosts(const std::vector<Cost>& costs) {
  std::vector<T> out;
  out.reserve(costs.size());
  for (const Cost& c : costs) out.push_back(static_cast<T>(c));
  return out;
}

}  // namespace

FlowResult SuccessiveShortestPaths(const FlowNetwork& net, int source,
                                   int sink, int units) {
  // Potentials, distances and their partial sums stay within a small
  // multiple of the total absolute arc cost. Native arithmetic is used
  // whenever that bound fits.
  Cost total = 0;
  for (const Cost& c : net.cost_) total += abs(c);
  const Cost bound = 16 * total + 16;
  std::vector<bool> flow;
  if (bound <= Cost(std::numeric_limits<int64_t>::max())) {
    flow = SendUnits(net.head_, net.out_, ConvertCosts<int64_t>(net.cost_),
                     source, sink, units);
  } else if (bound <= (Cost(1) << 126)) {
    flow = SendUnits(net.head_, net.out_, ConvertCosts<__int128>(net.cost_),
                     source, sink, units);
  } else {
    flow = SendUnits(net.head_, net.out_, net.cost_, source, sink, units);
  }
  FlowResult result;
  for (int k = 0; k < net.num_arcs(); ++k) {
    if (flow[k]) result.cost += net.cost_[k];
  }
  result.arc_used = std::move(flow);
  return result;
}

Cost MatchingCost(const CostFunction& w, const Matching& m) {
  Cost total = 0;
  for (const Edge& e : m.Pairs()) total += w(e.applicant, e.post);
  return total;
}

MinCostResult MinCostPopular(const Characterization& ch,
                             const CostFunction& w) {
  const PopularStructure& ps = ch.structure();
  const int num_applicants = ps.num_applicants();
  const int num_posts = ps.num_posts();
  const std::vector<Edge> edges = ch.AdmissibleEdges();
  Cost penalty = 1;
  for (const Edge& e : edges) penalty += abs(w(e.applicant, e.post));

  // Nodes: source, applicants, posts, sink.
  const int source = 0;
  const int sink = num_applicants + num_posts + 1;
  FlowNetwork net(sink + 1);
  for (int a = 0; a < num_applicants; ++a) net.AddArc(source, 1 + a, 0);
  const int first_edge_arc = net.num_arcs();
  for (const Edge& e : edges) {
    Cost cost = w(e.applicant, e.post);
    if (ch.IsRequired(e.post)) cost -= penalty;
    net.AddArc(1 + e.applicant, 1 + num_applicants + e.post, std::move(cost));
  }
  for (int p = 0; p < num_posts; ++p) {
    net.AddArc(1 + num_applicants + p, sink, 0);
  }

  FlowResult flow;
  try {
    flow = SuccessiveShortestPaths(net, source, sink, num_applicants);
  } catch (const InfeasibleFlow& e) {
    throw InternalError(std::string("admissible graph has no assignment: ") +
                        e.what());
  }
  MinCostResult result{Matching(num_applicants, num_posts), 0};
  for (size_t i = 0; i < edges.size(); ++i) {
    if (flow.arc_used[first_edge_arc + i]) {
      result.matching.Add(edges[i].applicant, edges[i].post);
    }
  }
  for (int p : ch.required_posts()) {
    if (result.matching.ApplicantOf(p) == kUnmatched) {
      throw InternalError("penalized optimum leaves a required post free");
    }
  }
  result.cost =
      flow.cost + penalty * static_cast<long long>(ch.required_posts().size());
  if (result.cost != MatchingCost(w, result.matching)) {
    throw InternalError("flow cost disagrees with matching cost");
  }
  return result;
}

Criterion ParseCriterion(std::string_view name) {
  if (name == "maxcard") return Criterion::kMaxCard;
  if (name == "mincost-maxcard") return Criterion::kMinCostMaxCard;
  if (name == "egalitarian") return Criterion::kEgalitarian;
  if (name == "rankmax") return Criterion::kRankMax;
  if (name == "fair") return Criterion::kFair;
  throw std::invalid_argument("unknown criterion '" + std::string(name) + "'");
}

std::string_view CriterionName(Criterion criterion) {
  switch (criterion) {
    case Criterion::kMaxCard:
      return "maxcard";
    case Criterion::kMinCostMaxCard:
      return "mincost-maxcard";
    case Criterion::kEgalitarian:
      return "egalitarian";
    case Criterion::kRankMax:
      return "rankmax";
    case Criterion::kFair:
      return "fair";
  }
  return "";
}

CostFunction CriterionCosts(const PopularStructure& ps, Criterion criterion,
                            const CostFunction& user) {
  const Instance& instance = *ps.instance;
  // Rank counts never exceed |A| < n + 1, so base n + 1 keeps rank profiles
  // lexicographic.
  const int base = instance.num_applicants() + instance.num_posts() + 1;
  int max_rank = 0;
  for (int a = 0; a < ps.num_applicants(); ++a) {
    for (int p : ps.g2.neighbors(a)) {
      max_rank = std::max(max_rank, instance.Rank(a, p));
    }
  }
  Cost user_scale = 1;
  for (const auto& [edge, cost] : user.entries()) user_scale += abs(cost);

  CostFunction w;
  for (int a = 0; a < ps.num_applicants(); ++a) {
    for (int p : ps.g2.neighbors(a)) {
      const int rank = instance.Rank(a, p);
      const bool last_resort = instance.IsLastResort(p);
      Cost cost;
      switch (criterion) {
        case Criterion::kMaxCard:
          cost = last_resort ? 1 : 0;
          break;
        case Criterion::kMinCostMaxCard:
          cost = user(a, p);
          if (last_resort) cost += user_scale;
          break;
        case Criterion::kEgalitarian:
          cost = rank;
          break;
        case Criterion::kRankMax:
          cost = -Power(base, max_rank - rank);
          break;
        case Criterion::kFair:
          cost = Power(base, rank - 1);
          break;
      }
      w.Set({a, p}, std::move(cost));
    }
  }
  return w;
}

}  // namespace popmatch
