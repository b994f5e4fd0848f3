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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace popmatch {
namespace {

namespace fs = std::filesystem;
using ::popmatch::testing::kExA;
using ::popmatch::testing::kExB;
using ::popmatch::testing::kExC;
using ::popmatch::testing::kExD;

struct Outcome {
  int status;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("popmatch_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string File(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  static Outcome Exec(const std::string& args, bool with_stderr = false) {
    const std::string cmd = std::string(POPMATCH_CLI) + " " + args +
                            (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof(buf), pipe)) > 0;) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  fs::path dir_;
};

TEST_F(CliTest, Check) {
  const Outcome b = Exec("check " + File("b.txt", kExB));
  EXPECT_EQ(b.status, 0);
  EXPECT_EQ(b.out, "a1 p1\na2 p2\n");
  const Outcome c = Exec("check " + File("c.txt", kExC));
  EXPECT_EQ(c.status, 1);
  EXPECT_EQ(c.out, "NONE\n");
  EXPECT_EQ(Exec("check " + File("bad.txt", "applicant a1 p1\n")).status, 2);
  EXPECT_EQ(Exec("check " + (dir_ / "missing.txt").string()).status, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Exec("").status, 2);
  EXPECT_EQ(Exec("frobnicate").status, 2);
  EXPECT_EQ(Exec("check").status, 2);
  EXPECT_EQ(Exec("mincost " + File("b.txt", kExB)).status, 2);
  EXPECT_EQ(Exec("mincost " + File("b.txt", kExB) + " --criterion bogus").status,
            2);
}

TEST_F(CliTest, Characterize) {
  const Outcome b = Exec("characterize " + File("b.txt", kExB));
  EXPECT_EQ(b.status, 0);
  EXPECT_NE(b.out.find("required posts: p1\n"), std::string::npos);
  EXPECT_NE(b.out.find("admissible edges: 4\n"), std::string::npos);
  EXPECT_NE(b.out.find("objective: 4\n"), std::string::npos);
  const Outcome d = Exec("characterize " + File("d.txt", kExD));
  EXPECT_EQ(d.status, 0);
  EXPECT_NE(d.out.find("required posts: \n"), std::string::npos);
  EXPECT_NE(d.out.find("admissible edges: 3\n"), std::string::npos);
  EXPECT_EQ(Exec("characterize " + File("c.txt", kExC)).status, 1);
}

TEST_F(CliTest, CharacterizeJson) {
  const Outcome b = Exec("characterize --json " + File("b.txt", kExB));
  EXPECT_EQ(b.status, 0);
  // Top-level keys appear in sorted order.
  const size_t cert = b.out.find("\"certificate\"");
  const size_t inst = b.out.find("\"instance\"");
  const size_t result = b.out.find("\"result\"");
  ASSERT_NE(cert, std::string::npos);
  ASSERT_NE(inst, std::string::npos);
  ASSERT_NE(result, std::string::npos);
  EXPECT_LT(cert, inst);
  EXPECT_LT(inst, result);
  EXPECT_NE(b.out.find("\"dual\""), std::string::npos);
  EXPECT_NE(b.out.find("\"objective\": 4"), std::string::npos);
  EXPECT_NE(b.out.find("\"feasible\": true"), std::string::npos);
}

TEST_F(CliTest, Verify) {
  const std::string b = File("b.txt", kExB);
  const std::string popular = File("m.txt", "a1 p1\na2 p2\n");
  for (const char* method : {"thm1", "thm2", "oracle"}) {
    SCOPED_TRACE(method);
    const Outcome r = Exec("verify " + b + " " + popular + " --method " + method);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "POPULAR\n");
  }

  const std::string a = File("a.txt", kExA);
  const std::string lr = File("lr.txt", "a1 !lr:a1\n");
  const Outcome w = Exec("verify " + a + " " + lr + " --method oracle");
  EXPECT_EQ(w.status, 1);
  EXPECT_EQ(w.out.rfind("NOT POPULAR\n", 0), 0u);
  EXPECT_NE(w.out.find("witness:\n  a1 p1\n"), std::string::npos);
  EXPECT_EQ(Exec("verify " + a + " " + lr + " --method thm1").status, 1);
  EXPECT_EQ(Exec("verify " + a + " " + lr + " --method thm2").status, 1);

  // A partial matching is completed with last resorts: a2 gets !lr:a2.
  const Outcome partial =
      Exec("verify " + b + " " + File("p.txt", "a1 p1\n") + " --method thm2");
  EXPECT_EQ(partial.status, 1);
  const Outcome partial_d =
      Exec("verify " + File("d.txt", kExD) + " " + File("pd.txt", "a2 p1\n"));
  EXPECT_EQ(partial_d.status, 1);

  EXPECT_EQ(Exec("verify " + b + " " + File("x.txt", "a1 p9\n")).status, 2);
  EXPECT_EQ(Exec("verify " + b + " " + File("y.txt", "a1 p1\na2 p1\n")).status,
            2);
  EXPECT_EQ(Exec("verify " + b + " " + popular + " --method bogus").status, 2);
}

TEST_F(CliTest, MinCost) {
  const std::string b = File("b.txt", kExB);
  const std::string costs =
      File("e.cost", "a1 p1 0\na1 p2 5\na2 p1 1\na2 p2 1\n");
  const Outcome e = Exec("mincost " + b + " --costs " + costs);
  EXPECT_EQ(e.status, 0);
  EXPECT_NE(e.out.find("cost: 1\n"), std::string::npos);

  const Outcome maxcard = Exec("mincost " + b + " --criterion maxcard");
  EXPECT_EQ(maxcard.status, 0);
  EXPECT_NE(maxcard.out.find("last resorts used: 0\n"), std::string::npos);

  const Outcome json = Exec("mincost --json " + b + " --costs " + costs);
  EXPECT_NE(json.out.find("\"cost\": \"1\""), std::string::npos);

  EXPECT_EQ(Exec("mincost " + File("c.txt", kExC) + " --criterion fair").status,
            1);

  const Outcome bad = Exec("mincost " + b + " --costs " +
                       File("bad.cost", "a2 !lr:a2 3\n"),
                       /*with_stderr=*/true);
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("(a2, !lr:a2)"), std::string::npos);
}

TEST_F(CliTest, EnumerateAndOracle) {
  const std::string b = File("b.txt", kExB);
  const Outcome e = Exec("enumerate " + b);
  EXPECT_EQ(e.status, 0);
  EXPECT_NE(e.out.find("count: 2\n"), std::string::npos);
  const Outcome limited = Exec("enumerate " + b + " --limit 1");
  EXPECT_NE(limited.out.find("count: 1\n"), std::string::npos);
  const Outcome o = Exec("oracle " + b);
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, e.out);
  EXPECT_EQ(Exec("enumerate " + File("c.txt", kExC)).status, 1);
}

TEST_F(CliTest, OracleGuard) {
  const std::string big = (dir_ / "big.txt").string();
  ASSERT_EQ(Exec("gen --applicants 20 --posts 20 --seed 3 -o " + big).status, 0);
  EXPECT_EQ(Exec("oracle " + big).status, 3);
  EXPECT_EQ(Exec("verify " + big + " " + File("m.txt", "") + " --method oracle")
                .status,
            3);
  const std::string b = File("b.txt", kExB);
  EXPECT_EQ(Exec("oracle " + b).status, 0);
  const std::string guarded = "POPMATCH_ORACLE_GUARD=1 " +
                              std::string(POPMATCH_CLI) + " oracle " + b +
                              " >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(guarded.c_str())), 3);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::string args =
      "gen --applicants 30 --posts 25 --tie-prob 0.4 --list-len 5 --seed 11";
  const Outcome first = Exec(args);
  const Outcome second = Exec(args);
  EXPECT_EQ(first.status, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out, Exec(args + "2").out);

  const std::string f1 = (dir_ / "g1.txt").string();
  const std::string f2 = (dir_ / "g2.txt").string();
  Exec(args + " -o " + f1);
  Exec(args + " -o " + f2);
  std::ifstream in1(f1, std::ios::binary), in2(f2, std::ios::binary);
  const std::string t1((std::istreambuf_iterator<char>(in1)), {});
  const std::string t2((std::istreambuf_iterator<char>(in2)), {});
  EXPECT_EQ(t1, first.out);
  EXPECT_EQ(t1, t2);
  // Generated files parse back.
  EXPECT_NE(Exec("characterize " + f1).status, 2);
}

TEST_F(CliTest, Suite) {
  const Outcome r = Exec("suite --count 100 --seed 1 --threads 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("discrepancies: 0\n"), std::string::npos);
  EXPECT_EQ(r.out, Exec("suite --count 100 --seed 1 --threads 1").out);
}

}  // namespace
}  // namespace popmatch
