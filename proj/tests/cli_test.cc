// Copyright 2026 The nsq Authors
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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "nsq/golay.h"
#include "nsq/search.h"

namespace nsq::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, SearchTextMatchesLibrary) {
  const Outcome o = RunCli({"search", "--n", "8", "--tag-golay"});
  ASSERT_EQ(o.code, kExitOk);
  std::string expected;
  for (const ClassRecord& r : EnumerateClasses(8).classes) {
    expected += std::to_string(r.index) + " " + r.p_code + " " + r.q_code + " " +
                (r.golay_type ? "G" : "S") + "\n";
  }
  EXPECT_EQ(o.out, expected);
  EXPECT_EQ(RunCli({"search", "--n", "7"}).out,
            "1 1660 6122\n2 6113 1623\n3 6160 1262\n4 6163 1261\n");
}

TEST(CliTest, SearchJsonIsStableAcrossThreads) {
  const Outcome one = RunCli({"search", "--n", "16", "--format", "json"});
  const Outcome four = RunCli({"search", "--n", "16", "--format", "json", "--threads", "4"});
  ASSERT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, four.out);
  const auto doc = nlohmann::json::parse(one.out);
  EXPECT_EQ(doc["n"], 16);
  ASSERT_EQ(doc["classes"].size(), 52u);
  EXPECT_EQ(doc["classes"][0]["index"], 1);
  EXPECT_EQ(doc["classes"][0]["p"], "11186366");
  EXPECT_EQ(doc["classes"][0]["q"], "66631811");
  EXPECT_EQ(doc["classes"][0]["golay"], true);
}

TEST(CliTest, ThreadsFromEnvironment) {
  setenv("NSQ_THREADS", "3", 1);
  EXPECT_EQ(RunCli({"search", "--n", "10"}).out, RunCli({"search", "--n", "10", "--threads", "1"}).out);
  setenv("NSQ_THREADS", "zero", 1);
  const Outcome bad = RunCli({"search", "--n", "10"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("zero"), std::string::npos);
  unsetenv("NSQ_THREADS");
}

TEST(CliTest, Summary) {
  const Outcome o = RunCli({"summary", "--from", "5", "--to", "8"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "n\tEqu\tGol\tSpo\n5\t1\t0\t1\n6\t0\t0\t0\n7\t4\t0\t4\n8\t7\t6\t1\n");
  EXPECT_NE(RunCli({"summary", "--from", "14", "--to", "14"}).out.find("three squares"),
            std::string::npos);
  EXPECT_EQ(RunCli({"summary", "--from", "9", "--to", "8"}).code, kExitUsage);
}

TEST(CliTest, Decode) {
  const Outcome o = RunCli({"decode", "160", "640"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out,
            "n = 5\nA = +++-+\nB = +++-+\nC = +++--\nD = +-++-\nnormal: yes\n");
  EXPECT_EQ(RunCli({"decode", "16", "61", "--n", "4"}).code, kExitOk);
}

TEST(CliTest, CanonReportsFormAndDistance) {
  const Outcome o = RunCli({"canon", "160", "650"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("canonical: 160 640\n"), std::string::npos);
  EXPECT_NE(o.out.find("transformations: 1\n"), std::string::npos);
  const Outcome two = RunCli({"canon", "6", "1"});
  EXPECT_NE(two.out.find("canonical: 1 6\n"), std::string::npos);
  const Outcome already = RunCli({"canon", "160", "640"});
  EXPECT_NE(already.out.find("transformations: 0\n"), std::string::npos);
}

TEST(CliTest, UsageErrorsNameTheToken) {
  const Outcome bad_code = RunCli({"decode", "160", "64x"});
  EXPECT_EQ(bad_code.code, kExitUsage);
  EXPECT_NE(bad_code.err.find("64x"), std::string::npos);
  const Outcome bad_seq = RunCli({"npaf", "+-?"});
  EXPECT_EQ(bad_seq.code, kExitUsage);
  EXPECT_NE(bad_seq.err.find("+-?"), std::string::npos);
  const Outcome bad_flag = RunCli({"search", "--n", "5", "--bogus"});
  EXPECT_EQ(bad_flag.code, kExitUsage);
  EXPECT_NE(bad_flag.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(RunCli({"search", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"search", "--n", "5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"canon", "110", "640"}).code, kExitUsage);  // not normal
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST(CliTest, Npaf) {
  EXPECT_EQ(RunCli({"npaf", "++-+"}).out, "n = 4\nN(0) = 4\nN(1) = -1\nN(2) = 0\nN(3) = 1\n");
  EXPECT_EQ(RunCli({"npaf", "+,+,-,+", "--format", "json"}).out,
            "{\"sequence\":\"++-+\",\"npaf\":[4,-1,0,1]}\n");
}

TEST(CliTest, VerifyTablesExitCodes) {
  // The printed n=32 listing carries findings beyond the allowlist.
  const Outcome o = RunCli({"verify-tables"});
  EXPECT_EQ(o.code, kExitFindings);
  EXPECT_NE(o.out.find("n=2 row 1: canonical: (i) at p_1 [known discrepancy]"),
            std::string::npos);
  EXPECT_NE(o.out.find("rows checked: 167"), std::string::npos);

  const std::string dir = ::testing::TempDir() + "/nsq_tables";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/ns_counts.txt") << "2;1;1;0\n7;4;0;4\n";
  std::ofstream(dir + "/ns_representatives.txt")
      << "2;1;6;1;?\n7;1;1660;6122;S\n7;2;6113;1623;S\n7;3;6160;1262;S\n7;4;6163;1261;S\n";
  const Outcome known_only = RunCli({"verify-tables", "--data", dir});
  EXPECT_EQ(known_only.code, kExitOk);
  EXPECT_NE(known_only.err.find("warning"), std::string::npos);

  std::ofstream(dir + "/empty_allowlist.txt") << "# nothing\n";
  EXPECT_EQ(RunCli({"verify-tables", "--data", dir, "--allowlist",
                    dir + "/empty_allowlist.txt"}).code,
            kExitFindings);
  EXPECT_EQ(RunCli({"verify-tables", "--data", dir + "/missing"}).code, kExitUsage);
}

TEST(CliTest, VerifyRelations) {
  const Outcome o = RunCli({"verify-relations", "--n", "6"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("n=6 even PASS sigma nu3 = nu4 sigma"), std::string::npos);
  EXPECT_NE(o.out.find("UNVERIFIABLE"), std::string::npos);
  EXPECT_NE(o.out.find("n=6 realized order"), std::string::npos);
}

TEST(CliTest, Golay) {
  const Outcome pairs = RunCli({"golay", "--n", "2"});
  ASSERT_EQ(pairs.code, kExitOk);
  std::string expected;
  for (const GolayPair& p : GolayPairs(2)) {
    expected += p.a.ToString() + " " + p.b.ToString() + "\n";
  }
  EXPECT_EQ(pairs.out, expected);
  EXPECT_EQ(RunCli({"golay", "--n", "8", "--count-classes"}).out, "6\n");
  EXPECT_EQ(RunCli({"golay", "--n", "26"}).code, kExitUsage);
}

}  // namespace
}  // namespace nsq::cli
