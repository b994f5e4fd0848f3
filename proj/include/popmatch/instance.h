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

#ifndef POPMATCH_INSTANCE_H_
#define POPMATCH_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace popmatch {

// Identifiers of synthesized last-resort posts are "!lr:<applicant-id>".
inline constexpr std::string_view kLastResortPrefix = "!lr:";

inline constexpr int kUnmatched = -1;

// An (applicant, post) pair, both as dense indices into an Instance.
struct Edge {
  int applicant = 0;
  int post = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class InputErrorKind {
  kSyntax,
  kDuplicateApplicant,
  kDuplicatePost,
  kReservedPrefix,
  kIdentifierClash,
  kUnknownApplicant,
  kUnknownPost,
  kUnacceptablePair,
  kNotAMatching,
  kNotInE2,
};

// Raised for malformed instance, matching and cost files. `line()` is
// 1-based, or 0 when the error has no source location.
class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, int line, const std::string& message);
  InputErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  InputErrorKind kind_;
  int line_;
};

// One applicant's preference list as written by the user: tie groups of
// post identifiers, most preferred first. The last resort is not included.
struct PreferenceList {
  std::string applicant;
  std::vector<std::vector<std::string>> groups;
  int line = 0;
};

// A one-sided preference market with ties. Posts are numbered with the real
// posts first (in order of first appearance) followed by one last resort per
// applicant (in applicant order). Immutable after construction.
class Instance {
 public:
  Instance() = default;

  // Validates the lists and appends a last resort to each. Throws InputError.
  static Instance Create(std::vector<PreferenceList> lists);

  int num_applicants() const { return static_cast<int>(applicant_ids_.size()); }
  int num_posts() const { return static_cast<int>(post_ids_.size()); }
  int num_real_posts() const { return num_posts() - num_applicants(); }

  const std::string& applicant_id(int a) const { return applicant_ids_[a]; }
  const std::string& post_id(int p) const { return post_ids_[p]; }
  std::optional<int> FindApplicant(std::string_view id) const;
  std::optional<int> FindPost(std::string_view id) const;

  // Tie groups of post indices, best first; the last group is {last_resort(a)}.
  const std::vector<std::vector<int>>& groups(int a) const {
    return groups_[a];
  }
  int num_groups(int a) const { return static_cast<int>(groups_[a].size()); }
  int last_resort(int a) const { return num_real_posts() + a; }
  bool IsLastResort(int p) const { return p >= num_real_posts(); }

  // Posts on a's list in preference order (ties in input order).
  std::span<const int> acceptable_posts(int a) const { return list_posts_[a]; }

  // Dense rank of p on a's list starting at 1; 0 when (a, p) is not
  // acceptable.
  int Rank(int a, int p) const;
  bool IsAcceptable(int a, int p) const { return Rank(a, p) > 0; }
  // True iff a strictly prefers p to q (both acceptable to a).
  bool Prefers(int a, int p, int q) const { return Rank(a, p) < Rank(a, q); }

  int num_acceptable_pairs() const { return num_pairs_; }

 private:
  std::vector<std::string> applicant_ids_;
  std::vector<std::string> post_ids_;
  std::unordered_map<std::string, int> applicant_index_;
  std::unordered_map<std::string, int> post_index_;
  std::vector<std::vector<std::vector<int>>> groups_;
  std::vector<std::vector<int>> list_posts_;
  std::vector<std::vector<int>> list_ranks_;
  int num_pairs_ = 0;
};

// A set of pairs in which every applicant and every post occurs at most once.
// The two sides are generic so the same type also serves bipartite graphs.
class Matching {
 public:
  Matching() = default;
  Matching(int num_left, int num_right)
      : right_of_(num_left, kUnmatched), left_of_(num_right, kUnmatched) {}

  // Throws std::invalid_argument if either endpoint is already matched.
  void Add(int left, int right);
  // Unmatches `left` (no-op when already unmatched).
  void RemoveLeft(int left);

  int PostOf(int applicant) const { return right_of_[applicant]; }
  int ApplicantOf(int post) const { return left_of_[post]; }
  bool Contains(int left, int right) const {
    return right_of_[left] == right;
  }

  int num_left() const { return static_cast<int>(right_of_.size()); }
  int num_right() const { return static_cast<int>(left_of_.size()); }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool IsLeftComplete() const { return size_ == num_left(); }

  // Pairs ordered by left index.
  std::vector<Edge> Pairs() const;

  friend bool operator==(const Matching& x, const Matching& y) {
    return x.right_of_ == y.right_of_ && x.left_of_ == y.left_of_;
  }

 private:
  std::vector<int> right_of_;
  std::vector<int> left_of_;
  int size_ = 0;
};

Matching EmptyMatching(const Instance& instance);

// Parses the line-oriented instance format:
//   applicant <id> : <group> ( '>' <group> )*
// where <group> is a post id or a parenthesized, space separated tie.
Instance ParseInstance(std::istream& in);
Instance ParseInstance(std::string_view text);

// Inverse of ParseInstance; last resorts are omitted.
std::string SerializeInstance(const Instance& instance);

// All acceptable pairs, applicant by applicant, in list order.
std::vector<Edge> AcceptablePairs(const Instance& instance);

// Matches every unmatched applicant with its last resort.
Matching CompleteWithLastResorts(const Instance& instance, Matching m);

// Reads "<applicant-id> <post-id>" lines. Rejects unknown ids, unacceptable
// pairs and pairs that reuse an applicant or a post.
Matching ParseMatching(const Instance& instance, std::istream& in);
Matching ParseMatching(const Instance& instance, std::string_view text);

// One "<applicant-id> <post-id>" line per pair, in applicant order.
std::string FormatMatching(const Instance& instance, const Matching& m);

// Splits a line into whitespace separated fields, ignoring blank lines and
// '#' comments. Returns false for lines to skip.
bool SplitDataLine(std::string_view line, std::vector<std::string_view>& out);

}  // namespace popmatch

#endif  // POPMATCH_INSTANCE_H_
