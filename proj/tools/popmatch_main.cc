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

// Command-line front end: existence check, characterization, verification,
// minimum-cost popular matchings, enumeration, the exhaustive oracle and a
// seeded instance generator.
//
// Exit codes: 0 success, 1 negative answer (no popular matching / not
// popular), 2 input error, 3 oracle size guard.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "popmatch/characterization.h"
#include "popmatch/enumeration.h"
#include "popmatch/generator.h"
#include "popmatch/instance.h"
#include "popmatch/min_cost.h"
#include "popmatch/oracle.h"
#include "popmatch/popular_structure.h"

namespace popmatch {
namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2, kGuard = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

OracleGuard GuardFromEnvironment() {
  OracleGuard guard;
  if (const char* value = std::getenv("POPMATCH_ORACLE_GUARD")) {
    try {
      const int limit = std::stoi(value);
      guard.max_applicants = limit;
      guard.max_real_posts = limit;
    } catch (const std::exception&) {
      throw UsageError("POPMATCH_ORACLE_GUARD must be an integer");
    }
  }
  return guard;
}

std::string CostString(const Cost& c) { return c.str(); }

json InstanceSummary(const Instance& inst) {
  return {{"applicants", inst.num_applicants()},
          {"posts", inst.num_real_posts()},
          {"last_resorts", inst.num_applicants()},
          {"acceptable_pairs", inst.num_acceptable_pairs()}};
}

json PairsJson(const Instance& inst, const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) {
    out.push_back({inst.applicant_id(e.applicant), inst.post_id(e.post)});
  }
  return out;
}

json MatchingJson(const Instance& inst, const Matching& m) {
  return PairsJson(inst, m.Pairs());
}

void PrintJson(const json& report) { std::cout << report.dump(2) << "\n"; }

json Report(const Instance& inst, json result, json certificate = nullptr) {
  return {{"instance", InstanceSummary(inst)},
          {"result", std::move(result)},
          {"certificate", std::move(certificate)}};
}

json CertificateJson(const Instance& inst, const Characterization& ch) {
  const DualVector& y = ch.dual();
  json applicants = json::array();
  for (int a = 0; a < inst.num_applicants(); ++a) {
    applicants.push_back({inst.applicant_id(a), y.applicant[a]});
  }
  json posts = json::array();
  for (int p = 0; p < inst.num_posts(); ++p) {
    posts.push_back({inst.post_id(p), y.post[p]});
  }
  return {{"dual", {{"applicants", applicants}, {"posts", posts}}},
          {"objective", y.Objective()},
          {"feasible", VerifyDual(ch.structure(), y)}};
}

std::vector<std::string> CoverIds(const Instance& inst, const VertexCover& x) {
  std::vector<std::string> ids;
  for (int a = 0; a < inst.num_applicants(); ++a) {
    if (x.left[a]) ids.push_back(inst.applicant_id(a));
  }
  for (int p = 0; p < inst.num_posts(); ++p) {
    if (x.right[p]) ids.push_back(inst.post_id(p));
  }
  return ids;
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += " ";
    out += item;
  }
  return out;
}

struct CommonOptions {
  std::string instance_path;
  bool json = false;
};

int RunCheck(const CommonOptions& opt) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const PopularStructure ps = BuildStructure(inst);
  const std::optional<Matching> m = FindPopularMatching(ps);
  if (opt.json) {
    PrintJson(Report(inst, {{"exists", m.has_value()},
                            {"matching", m ? MatchingJson(inst, *m) : json()},
                            {"k1_star", ps.k1_star}}));
  } else {
    std::cout << (m ? FormatMatching(inst, *m) : "NONE\n");
  }
  return m ? kOk : kNegative;
}

int RunCharacterize(const CommonOptions& opt) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const PopularStructure ps = BuildStructure(inst);
  std::optional<Characterization> ch;
  try {
    ch.emplace(Characterize(ps));
  } catch (const NoPopularMatching&) {
    if (opt.json) {
      PrintJson(Report(inst, {{"exists", false}}));
    } else {
      std::cout << "NONE\n";
    }
    return kNegative;
  }
  std::vector<std::string> required;
  for (int p : ch->required_posts()) required.push_back(inst.post_id(p));
  const std::vector<Edge> admissible = ch->AdmissibleEdges();
  if (opt.json) {
    PrintJson(Report(inst,
                     {{"exists", true},
                      {"k1_star", ch->k1_star()},
                      {"cover", CoverIds(inst, ch->cover())},
                      {"required_posts", required},
                      {"admissible_edges", PairsJson(inst, admissible)}},
                     CertificateJson(inst, *ch)));
    return kOk;
  }
  std::cout << "k1*: " << ch->k1_star() << "\n";
  std::cout << "cover: " << Join(CoverIds(inst, ch->cover())) << "\n";
  std::cout << "required posts: " << Join(required) << "\n";
  std::cout << "admissible edges: " << admissible.size() << "\n";
  for (const Edge& e : admissible) {
    std::cout << "  " << inst.applicant_id(e.applicant) << " "
              << inst.post_id(e.post) << "\n";
  }
  std::cout << "dual:\n";
  const DualVector& y = ch->dual();
  for (int a = 0; a < inst.num_applicants(); ++a) {
    std::cout << "  " << inst.applicant_id(a) << " " << y.applicant[a] << "\n";
  }
  for (int p = 0; p < inst.num_posts(); ++p) {
    if (y.post[p] != 0) {
      std::cout << "  " << inst.post_id(p) << " " << y.post[p] << "\n";
    }
  }
  std::cout << "objective: " << y.Objective() << "\n";
  return kOk;
}

struct VerifyOptions {
  std::string matching_path;
  std::string method = "thm2";
};

int RunVerify(const CommonOptions& opt, const VerifyOptions& vopt) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const Matching m =
      CompleteWithLastResorts(inst, ParseMatching(inst, ReadFile(vopt.matching_path)));
  const PopularStructure ps = BuildStructure(inst);
  bool popular = false;
  std::vector<std::string> reasons;
  json witness = nullptr;
  if (vopt.method == "thm1") {
    popular = IsPopularThm1(ps, m);
    int in_e1 = 0;
    for (const Edge& e : m.Pairs()) {
      if (!ps.InE2(e.applicant, e.post)) {
        reasons.push_back("pair (" + inst.applicant_id(e.applicant) + ", " +
                          inst.post_id(e.post) + ") is not an f- or s-edge");
      }
      in_e1 += ps.InE1(e.applicant, e.post);
    }
    if (in_e1 != ps.k1_star) {
      reasons.push_back("uses " + std::to_string(in_e1) +
                        " first-choice edges; maximum is " +
                        std::to_string(ps.k1_star));
    }
  } else if (vopt.method == "thm2") {
    try {
      const Characterization ch = Characterize(ps);
      popular = IsPopularChar(ch, m);
      for (const Edge& e : m.Pairs()) {
        if (!ch.IsAdmissible(e.applicant, e.post)) {
          reasons.push_back("pair (" + inst.applicant_id(e.applicant) + ", " +
                            inst.post_id(e.post) + ") is not admissible");
        }
      }
      for (int p : ch.required_posts()) {
        if (m.ApplicantOf(p) == kUnmatched) {
          reasons.push_back("required post " + inst.post_id(p) +
                            " is unmatched");
        }
      }
    } catch (const NoPopularMatching&) {
      reasons.push_back("instance has no popular matching");
    }
  } else {
    const std::optional<Matching> better =
        FindMorePopular(inst, m, GuardFromEnvironment());
    popular = !better.has_value();
    if (better) {
      witness = MatchingJson(inst, *better);
      reasons.push_back("more popular by " +
                        std::to_string(Compare(inst, *better, m)));
    }
  }
  if (opt.json) {
    PrintJson(Report(inst, {{"method", vopt.method},
                            {"popular", popular},
                            {"matching", MatchingJson(inst, m)},
                            {"reasons", reasons},
                            {"witness", witness}}));
  } else {
    std::cout << (popular ? "POPULAR" : "NOT POPULAR") << "\n";
    for (const std::string& r : reasons) std::cout << "  " << r << "\n";
    if (!witness.is_null()) {
      std::cout << "witness:\n";
      for (const auto& pair : witness) {
        std::cout << "  " << pair[0].get<std::string>() << " "
                  << pair[1].get<std::string>() << "\n";
      }
    }
  }
  return popular ? kOk : kNegative;
}

struct MinCostOptions {
  std::string costs_path;
  std::string criterion;
};

int RunMinCost(const CommonOptions& opt, const MinCostOptions& mopt) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const PopularStructure ps = BuildStructure(inst);
  CostFunction user;
  if (!mopt.costs_path.empty()) user = ParseCosts(ps, ReadFile(mopt.costs_path));
  CostFunction w = user;
  if (!mopt.criterion.empty()) {
    Criterion criterion;
    try {
      criterion = ParseCriterion(mopt.criterion);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!mopt.costs_path.empty() && criterion != Criterion::kMinCostMaxCard) {
      throw UsageError("--costs combines only with --criterion mincost-maxcard");
    }
    w = CriterionCosts(ps, criterion, user);
  } else if (mopt.costs_path.empty()) {
    throw UsageError("mincost needs --costs or --criterion");
  }
  std::optional<MinCostResult> r;
  try {
    r.emplace(MinCostPopular(Characterize(ps), w));
  } catch (const NoPopularMatching&) {
    if (opt.json) {
      PrintJson(Report(inst, {{"exists", false}}));
    } else {
      std::cout << "NONE\n";
    }
    return kNegative;
  }
  int last_resorts = 0;
  for (const Edge& e : r->matching.Pairs()) {
    last_resorts += inst.IsLastResort(e.post);
  }
  if (opt.json) {
    json result = {{"exists", true},
                   {"matching", MatchingJson(inst, r->matching)},
                   {"cost", CostString(r->cost)},
                   {"last_resorts_used", last_resorts}};
    if (!mopt.criterion.empty()) result["criterion"] = mopt.criterion;
    PrintJson(Report(inst, std::move(result)));
  } else {
    std::cout << FormatMatching(inst, r->matching);
    std::cout << "cost: " << CostString(r->cost) << "\n";
    std::cout << "last resorts used: " << last_resorts << "\n";
  }
  return kOk;
}

int PrintMatchings(const Instance& inst, const std::vector<Matching>& all,
                   bool as_json) {
  if (as_json) {
    json list = json::array();
    for (const Matching& m : all) list.push_back(MatchingJson(inst, m));
    PrintJson(Report(inst, {{"count", all.size()}, {"matchings", list}}));
  } else {
    for (size_t i = 0; i < all.size(); ++i) {
      std::cout << "# matching " << i + 1 << "\n" << FormatMatching(inst, all[i]);
    }
    std::cout << "count: " << all.size() << "\n";
  }
  return all.empty() ? kNegative : kOk;
}

int RunEnumerate(const CommonOptions& opt, uint64_t limit) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  const PopularStructure ps = BuildStructure(inst);
  std::vector<Matching> all;
  try {
    const Characterization ch = Characterize(ps);
    all = EnumeratePopular(ch, limit > 0 ? std::optional<uint64_t>(limit)
                                         : std::nullopt);
  } catch (const NoPopularMatching&) {
  }
  return PrintMatchings(inst, all, opt.json);
}

int RunOracle(const CommonOptions& opt) {
  const Instance inst = ParseInstance(ReadFile(opt.instance_path));
  return PrintMatchings(inst, BruteForcePopular(inst, GuardFromEnvironment()),
                        opt.json);
}

int RunGen(const GeneratorOptions& gen, const std::string& out_path) {
  if (gen.applicants < 0 || gen.posts < 0 || gen.list_len < 0 ||
      gen.tie_prob < 0 || gen.tie_prob > 1) {
    throw UsageError("generator options out of range");
  }
  std::ostringstream text;
  text << "# popmatch gen --applicants " << gen.applicants << " --posts "
       << gen.posts << " --tie-prob " << gen.tie_prob << " --list-len "
       << gen.list_len << " --seed " << gen.seed << "\n"
       << SerializeInstance(GenerateInstance(gen));
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text.str();
  }
  return kOk;
}

// Exhaustive cross-check of every component against the oracle on seeded
// random instances. Workers pull instance indices from a shared counter;
// only order-independent totals are reported.
int RunSuite(int count, uint64_t seed, int threads) {
  std::atomic<int> next{0};
  std::atomic<long long> checked{0}, with_popular{0}, discrepancies{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      const Instance inst = SuiteInstance(seed + i);
      const PopularStructure ps = BuildStructure(inst);
      const std::vector<Matching> popular = BruteForcePopular(inst);
      long long bad = FindPopularMatching(ps).has_value() == popular.empty();
      if (!popular.empty()) {
        ++with_popular;
        const Characterization ch = Characterize(ps);
        for (const Matching& m : ApplicantCompleteMatchings(inst)) {
          const bool oracle =
              std::find(popular.begin(), popular.end(), m) != popular.end();
          bad += IsPopularThm1(ps, m) != oracle;
          bad += IsPopularChar(ch, m) != oracle;
          ++checked;
        }
        bad += CountPopular(ch) != popular.size();
      }
      discrepancies += bad;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(threads, 1); ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  std::cout << "instances: " << count << "\n"
            << "with popular matching: " << with_popular << "\n"
            << "matchings checked: " << checked << "\n"
            << "discrepancies: " << discrepancies << "\n";
  return discrepancies == 0 ? kOk : kNegative;
}

int Main(int argc, char** argv) {
  CLI::App app{"Popular matchings for one-sided preference lists with ties"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", common.instance_path, "Instance file")
        ->required();
    cmd->add_flag("--json", common.json, "Print a JSON report");
  };

  CLI::App* check = app.add_subcommand("check", "Find a popular matching");
  add_common(check);
  CLI::App* characterize = app.add_subcommand(
      "characterize", "Cover, required posts, admissible edges and dual");
  add_common(characterize);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "Test a matching for popularity");
  add_common(verify);
  verify->add_option("matching", vopt.matching_path, "Matching file")->required();
  verify->add_option("--method", vopt.method, "thm1, thm2 or oracle")
      ->check(CLI::IsMember({"thm1", "thm2", "oracle"}));

  MinCostOptions mopt;
  CLI::App* mincost = app.add_subcommand("mincost", "Minimum-cost popular matching");
  add_common(mincost);
  mincost->add_option("--costs", mopt.costs_path, "Cost file");
  mincost->add_option("--criterion", mopt.criterion,
                      "maxcard, mincost-maxcard, egalitarian, rankmax or fair");

  uint64_t limit = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List popular matchings");
  add_common(enumerate);
  enumerate->add_option("--limit", limit, "Stop after this many (0 = all)");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force popular matchings");
  add_common(oracle);

  GeneratorOptions gen;
  std::string gen_out;
  CLI::App* generate = app.add_subcommand("gen", "Generate a random instance");
  generate->add_option("--applicants", gen.applicants)->capture_default_str();
  generate->add_option("--posts", gen.posts)->capture_default_str();
  generate->add_option("--tie-prob", gen.tie_prob)->capture_default_str();
  generate->add_option("--list-len", gen.list_len)->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("-o,--output", gen_out, "Output file (default stdout)");

  int suite_count = 500;
  uint64_t suite_seed = 1;
  int suite_threads = static_cast<int>(std::thread::hardware_concurrency());
  CLI::App* suite = app.add_subcommand("suite", "");
  suite->group("");
  suite->add_option("--count", suite_count);
  suite->add_option("--seed", suite_seed);
  suite->add_option("--threads", suite_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return RunCheck(common);
    if (*characterize) return RunCharacterize(common);
    if (*verify) return RunVerify(common, vopt);
    if (*mincost) return RunMinCost(common, mopt);
    if (*enumerate) return RunEnumerate(common, limit);
    if (*oracle) return RunOracle(common);
    if (*generate) return RunGen(gen, gen_out);
    if (*suite) return RunSuite(suite_count, suite_seed, suite_threads);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InstanceTooLargeForOracle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  }
  return kInputError;
}

}  // namespace
}  // namespace popmatch

int main(int argc, char** argv) { return popmatch::Main(argc, argv); }
