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

#include "popmatch/instance.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace popmatch {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

bool IsDelimiter(char c) {
  return IsSpace(c) || c == '(' || c == ')' || c == '>';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void Fail(InputErrorKind kind, int line, const std::string& msg) {
  throw InputError(kind, line, msg);
}

// Tokens of a preference list body: "(", ")", ">" or an identifier.
std::vector<std::string_view> TokenizeList(std::string_view body) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (IsSpace(c)) {
      ++i;
    } else if (c == '(' || c == ')' || c == '>') {
      tokens.push_back(body.substr(i, 1));
      ++i;
    } else {
      size_t j = i;
      while (j < body.size() && !IsDelimiter(body[j])) ++j;
      tokens.push_back(body.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

PreferenceList ParseDataLine(std::string_view line, int line_no) {
  constexpr std::string_view kKeyword = "applicant";
  std::string_view rest = Trim(line);
  if (!rest.starts_with(kKeyword) || rest.size() == kKeyword.size() ||
      !IsSpace(rest[kKeyword.size()])) {
    Fail(InputErrorKind::kSyntax, line_no, "expected 'applicant <id> : ...'");
  }
  rest = Trim(rest.substr(kKeyword.size()));
  size_t id_end = 0;
  while (id_end < rest.size() && !IsDelimiter(rest[id_end]) &&
         rest[id_end] != ':') {
    ++id_end;
  }
  PreferenceList list;
  list.line = line_no;
  list.applicant = std::string(rest.substr(0, id_end));
  if (list.applicant.empty()) {
    Fail(InputErrorKind::kSyntax, line_no, "missing applicant id");
  }
  rest = Trim(rest.substr(id_end));
  if (rest.empty() || rest.front() != ':') {
    Fail(InputErrorKind::kSyntax, line_no,
         "expected ':' after applicant '" + list.applicant + "'");
  }
  const std::vector<std::string_view> tokens = TokenizeList(rest.substr(1));
  size_t pos = 0;
  while (pos < tokens.size()) {
    if (!list.groups.empty()) {
      if (tokens[pos] != ">") {
        Fail(InputErrorKind::kSyntax, line_no,
             "expected '>' before '" + std::string(tokens[pos]) + "'");
      }
      if (++pos == tokens.size()) {
        Fail(InputErrorKind::kSyntax, line_no, "dangling '>'");
      }
    }
    std::vector<std::string> group;
    if (tokens[pos] == "(") {
      ++pos;
      while (pos < tokens.size() && tokens[pos] != ")") {
        if (tokens[pos] == "(" || tokens[pos] == ">") {
          Fail(InputErrorKind::kSyntax, line_no,
               "unexpected '" + std::string(tokens[pos]) + "' inside a tie");
        }
        group.emplace_back(tokens[pos++]);
      }
      if (pos == tokens.size()) {
        Fail(InputErrorKind::kSyntax, line_no, "unterminated '('");
      }
      ++pos;
      if (group.empty()) Fail(InputErrorKind::kSyntax, line_no, "empty tie");
    } else if (tokens[pos] == ")" || tokens[pos] == ">") {
      Fail(InputErrorKind::kSyntax, line_no,
           "unexpected '" + std::string(tokens[pos]) + "'");
    } else {
      group.emplace_back(tokens[pos++]);
    }
    list.groups.push_back(std::move(group));
  }
  return list;
}

}  // namespace

InputError::InputError(InputErrorKind kind, int line,
                       const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      kind_(kind),
      line_(line) {}

Instance Instance::Create(std::vector<PreferenceList> lists) {
  Instance inst;
  std::unordered_map<std::string, int> first_line_of_post;
  for (const PreferenceList& list : lists) {
    if (list.applicant.empty()) {
      Fail(InputErrorKind::kSyntax, list.line, "empty applicant id");
    }
    if (!inst.applicant_index_
             .emplace(list.applicant, inst.num_applicants())
             .second) {
      Fail(InputErrorKind::kDuplicateApplicant, list.line,
           "duplicate applicant '" + list.applicant + "'");
    }
    inst.applicant_ids_.push_back(list.applicant);
  }
  // Real posts in order of first appearance.
  for (const PreferenceList& list : lists) {
    std::unordered_set<std::string_view> seen;
    for (const auto& group : list.groups) {
      if (group.empty()) Fail(InputErrorKind::kSyntax, list.line, "empty tie");
      for (const std::string& post : group) {
        if (post.empty()) {
          Fail(InputErrorKind::kSyntax, list.line, "empty post id");
        }
        if (post.starts_with(kLastResortPrefix)) {
          Fail(InputErrorKind::kReservedPrefix, list.line,
               "post id '" + post + "' uses the reserved prefix '" +
                   std::string(kLastResortPrefix) + "'");
        }
        if (!seen.insert(post).second) {
          Fail(InputErrorKind::kDuplicatePost, list.line,
               "post '" + post + "' listed twice by applicant '" +
                   list.applicant + "'");
        }
        if (inst.applicant_index_.contains(post)) {
          Fail(InputErrorKind::kIdentifierClash, list.line,
               "'" + post + "' is both an applicant and a post");
        }
        if (inst.post_index_.emplace(post, inst.num_posts()).second) {
          inst.post_ids_.push_back(post);
        }
      }
    }
  }
  for (const std::string& applicant : inst.applicant_ids_) {
    std::string id = std::string(kLastResortPrefix) + applicant;
    inst.post_index_.emplace(id, inst.num_posts());
    inst.post_ids_.push_back(std::move(id));
  }
  const int n = inst.num_applicants();
  inst.groups_.resize(n);
  inst.list_posts_.resize(n);
  inst.list_ranks_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto& groups = inst.groups_[a];
    for (const auto& group : lists[a].groups) {
      std::vector<int>& ids = groups.emplace_back();
      for (const std::string& post : group) {
        ids.push_back(inst.post_index_.at(post));
      }
    }
    groups.push_back({inst.last_resort(a)});
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
      for (int p : groups[g]) {
        inst.list_posts_[a].push_back(p);
        inst.list_ranks_[a].push_back(g + 1);
      }
    }
    inst.num_pairs_ += static_cast<int>(inst.list_posts_[a].size());
  }
  return inst;
}

std::optional<int> Instance::FindApplicant(std::string_view id) const {
  const auto it = applicant_index_.find(std::string(id));
  if (it == applicant_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::FindPost(std::string_view id) const {
  const auto it = post_index_.find(std::string(id));
  if (it == post_index_.end()) return std::nullopt;
  return it->second;
}

int Instance::Rank(int a, int p) const {
  const std::vector<int>& posts = list_posts_[a];
  for (size_t i = 0; i < posts.size(); ++i) {
    if (posts[i] == p) return list_ranks_[a][i];
  }
  return 0;
}

void Matching::Add(int left, int right) {
  if (right_of_[left] != kUnmatched || left_of_[right] != kUnmatched) {
    throw std::invalid_argument("matching endpoint already used");
  }
  right_of_[left] = right;
  left_of_[right] = left;
  ++size_;
}

void Matching::RemoveLeft(int left) {
  const int right = right_of_[left];
  if (right == kUnmatched) return;
  right_of_[left] = kUnmatched;
  left_of_[right] = kUnmatched;
  --size_;
}

std::vector<Edge> Matching::Pairs() const {
  std::vector<Edge> pairs;
  pairs.reserve(size_);
  for (int a = 0; a < num_left(); ++a) {
    if (right_of_[a] != kUnmatched) pairs.push_back({a, right_of_[a]});
  }
  return pairs;
}

Matching EmptyMatching(const Instance& instance) {
  return Matching(instance.num_applicants(), instance.num_posts());
}

Instance ParseInstance(std::istream& in) {
  std::vector<PreferenceList> lists;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    lists.push_back(ParseDataLine(body, line_no));
  }
  return Instance::Create(std::move(lists));
}

Instance ParseInstance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseInstance(in);
}

std::string SerializeInstance(const Instance& instance) {
  std::string out;
  for (int a = 0; a < instance.num_applicants(); ++a) {
    out += "applicant " + instance.applicant_id(a) + ":";
    const auto& groups = instance.groups(a);
    for (size_t g = 0; g + 1 < groups.size(); ++g) {
      out += g == 0 ? " " : " > ";
      if (groups[g].size() == 1) {
        out += instance.post_id(groups[g][0]);
        continue;
      }
      out += "(";
      for (size_t i = 0; i < groups[g].size(); ++i) {
        if (i > 0) out += " ";
        out += instance.post_id(groups[g][i]);
      }
      out += ")";
    }
    out += "\n";
  }
  return out;
}

std::vector<Edge> AcceptablePairs(const Instance& instance) {
  std::vector<Edge> pairs;
  pairs.reserve(instance.num_acceptable_pairs());
  for (int a = 0; a < instance.num_applicants(); ++a) {
    for (int p : instance.acceptable_posts(a)) pairs.push_back({a, p});
  }
  return pairs;
}

Matching CompleteWithLastResorts(const Instance& instance, Matching m) {
  for (int a = 0; a < instance.num_applicants(); ++a) {
    if (m.PostOf(a) == kUnmatched) m.Add(a, instance.last_resort(a));
  }
  return m;
}

bool SplitDataLine(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  const std::string_view body = Trim(line);
  if (body.empty() || body.front() == '#') return false;
  size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && IsSpace(body[i])) ++i;
    size_t j = i;
    while (j < body.size() && !IsSpace(body[j])) ++j;
    if (j > i) out.push_back(body.substr(i, j - i));
    i = j;
  }
  return true;
}

Matching ParseMatching(const Instance& instance, std::istream& in) {
  Matching m = EmptyMatching(instance);
  std::string line;
  std::vector<std::string_view> fields;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!SplitDataLine(line, fields)) continue;
    if (fields.size() != 2) {
      Fail(InputErrorKind::kSyntax, line_no,
           "expected '<applicant-id> <post-id>'");
    }
    const std::optional<int> a = instance.FindApplicant(fields[0]);
    if (!a) {
      Fail(InputErrorKind::kUnknownApplicant, line_no,
           "unknown applicant '" + std::string(fields[0]) + "'");
    }
    const std::optional<int> p = instance.FindPost(fields[1]);
    if (!p) {
      Fail(InputErrorKind::kUnknownPost, line_no,
           "unknown post '" + std::string(fields[1]) + "'");
    }
    if (!instance.IsAcceptable(*a, *p)) {
      Fail(InputErrorKind::kUnacceptablePair, line_no,
           "pair (" + std::string(fields[0]) + ", " + std::string(fields[1]) +
               ") is not acceptable");
    }
    if (m.PostOf(*a) != kUnmatched || m.ApplicantOf(*p) != kUnmatched) {
      Fail(InputErrorKind::kNotAMatching, line_no,
           "pair (" + std::string(fields[0]) + ", " + std::string(fields[1]) +
               ") reuses an applicant or a post");
    }
    m.Add(*a, *p);
  }
  return m;
}

Matching ParseMatching(const Instance& instance, std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseMatching(instance, in);
}

std::string FormatMatching(const Instance& instance, const Matching& m) {
  std::string out;
  for (const Edge& e : m.Pairs()) {
    out += instance.applicant_id(e.applicant) + " " +
           instance.post_id(e.post) + "\n";
  }
  return out;
}

}  // namespace popmatch
