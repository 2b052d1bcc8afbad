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

#include "nsq/tables.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "nsq/quad_codec.h"

namespace nsq {
namespace {

const ReferenceTables& Tables() {
  static const ReferenceTables tables = LoadTables();
  return tables;
}

TEST(LoadTablesTest, Examples) {
  const ReferenceTables& t = Tables();
  EXPECT_EQ(t.counts.size(), 40u);
  EXPECT_EQ(t.counts.at(16), (TableCounts{52, 48, 4}));
  EXPECT_EQ(t.counts.at(32), (TableCounts{516, 480, 36}));
  EXPECT_EQ(t.counts.at(40), (TableCounts{304, 304, 0}));
  const auto rows29 = t.RowsFor(29);
  ASSERT_EQ(rows29.size(), 2u);
  EXPECT_EQ(rows29[0].q_code, "641414841515843");
  EXPECT_EQ(rows29[1].q_code, "641515851514853");
  EXPECT_EQ(t.RowsFor(32).size(), 36u);
  EXPECT_EQ(t.reps.size(), 167u);
}

TEST(LoadTablesTest, StructuralInvariants) {
  const ReferenceTables& t = Tables();
  for (const auto& [n, c] : t.counts) EXPECT_EQ(c.equ, c.gol + c.spo) << n;
  int table2 = 0, table3 = 0, table4 = 0;
  for (const TableRow& r : t.reps) {
    if (r.n <= 15) ++table2;
    else if (r.n == 32) ++table4;
    else ++table3;
    const std::size_t digits = static_cast<std::size_t>((r.n + 1) / 2);
    EXPECT_EQ(r.p_code.size(), digits);
    EXPECT_EQ(r.q_code.size(), digits);
  }
  EXPECT_EQ(table2, 35);
  EXPECT_EQ(table3, 96);
  EXPECT_EQ(table4, 36);
  for (const auto& [n, c] : t.counts) {
    const auto rows = static_cast<int>(t.RowsFor(n).size());
    if (n == 32) {
      EXPECT_EQ(rows, c.spo);
    } else if (n == 40) {
      EXPECT_EQ(rows, 0);
    } else if (n == 26) {
      EXPECT_EQ(rows, 0);  // counted but not listed
    } else if (n <= 29) {
      EXPECT_EQ(rows, c.equ) << n;
    }
  }
}

TEST(ParseTablesTest, MalformedInput) {
  EXPECT_THROW(ParseTables("1;1;1\n", ""), TableFormatError);
  EXPECT_THROW(ParseTables("1;2;1;0\n", ""), TableFormatError);
  EXPECT_THROW(ParseTables("1;1;1;0\n1;1;1;0\n", ""), TableFormatError);
  EXPECT_THROW(ParseTables("", "1;1;0;0\n"), TableFormatError);
  EXPECT_THROW(ParseTables("", "1;1;0;0;X\n"), TableFormatError);
  EXPECT_THROW(ParseTables("", "1;one;0;0;?\n"), TableFormatError);
  EXPECT_THROW(ParseTables("", "1;1;0;9;?\n"), TableFormatError);
  const ReferenceTables ok = ParseTables("# comment\n\n1;1;1;0\n", "1;1;0;0;?  # trailing\n");
  EXPECT_EQ(ok.reps.size(), 1u);
  EXPECT_EQ(ok.reps[0].tag, '?');
}

TEST(AllowlistTest, DefaultHoldsOnlyTheTwoEntry) {
  const auto allow = DefaultAllowlist();
  ASSERT_EQ(allow.size(), 1u);
  EXPECT_EQ(allow[0].n, 2);
  EXPECT_EQ(allow[0].index, 1);
  EXPECT_EQ(allow[0].condition, "(i)");
}

TEST(VerifyTablesTest, FindingsOnPrintedTables) {
  const TableReport report = VerifyTables(Tables(), DefaultAllowlist());
  EXPECT_EQ(report.rows_checked, 167);
  std::vector<std::string> unexpected;
  int known = 0;
  for (const Finding& f : report.findings) {
    if (f.allowlisted) {
      ++known;
      EXPECT_EQ(f.n, 2);
      EXPECT_EQ(f.check, "canonical");
      EXPECT_EQ(f.detail, "(i) at p_1");
    } else {
      unexpected.push_back(f.ToString());
    }
  }
  EXPECT_EQ(known, 1);
  // The n=32 listing holds two non-canonical rows, each equivalent to the
  // row printed just above it.
  EXPECT_EQ(unexpected, (std::vector<std::string>{
                            "n=32 row 21: canonical: (vii) at q_2",
                            "n=32 row 21: same-class: equivalent to row 20",
                            "n=32 row 23: canonical: (vii) at q_2",
                            "n=32 row 23: same-class: equivalent to row 22"}));
  for (const auto& [n, c] : report.computed) {
    if (n == 32) {
      EXPECT_EQ(c.gol, 0);
    } else {
      EXPECT_EQ(c, Tables().counts.at(n)) << n;
    }
  }
}

TEST(VerifyTablesTest, TwentyPassesInOrder) {
  ReferenceTables only;
  only.counts = Tables().counts;
  only.reps = Tables().RowsFor(20);
  const TableReport report = VerifyTables(only, {});
  EXPECT_EQ(report.rows_checked, 36);
  EXPECT_TRUE(report.findings.empty());
}

TEST(VerifyTablesTest, WithoutAllowlistTheTwoRowIsUnexpected) {
  ReferenceTables only;
  only.counts = Tables().counts;
  only.reps = Tables().RowsFor(2);
  EXPECT_EQ(VerifyTables(only, {}).unexpected(), 1);
  EXPECT_EQ(VerifyTables(only, DefaultAllowlist()).unexpected(), 0);
}

TEST(VerifyTablesTest, DetectsCorruptedRows) {
  ReferenceTables t;
  t.counts = Tables().counts;
  t.reps = Tables().RowsFor(7);
  std::swap(t.reps[0].p_code, t.reps[1].p_code);       // order, normality
  t.reps[2].q_code = "126";                            // wrong length
  t.reps[3].tag = 'G';                                 // wrong tag
  const TableReport report = VerifyTables(t, {});
  std::set<std::string> checks;
  for (const Finding& f : report.findings) checks.insert(f.check);
  EXPECT_TRUE(checks.count("decode"));
  EXPECT_TRUE(checks.count("normal"));
  EXPECT_TRUE(checks.count("golay-tag"));
  EXPECT_TRUE(checks.count("counts"));
}

TEST(DiffAgainstSearchTest, Examples) {
  const auto allow = DefaultAllowlist();
  const SearchDiff twelve = DiffAgainstSearch(12, Tables(), allow);
  EXPECT_TRUE(twelve.identical());
  EXPECT_EQ(twelve.search_count, 4);
  const SearchDiff eighteen = DiffAgainstSearch(18, Tables(), allow);
  EXPECT_TRUE(eighteen.identical());
  EXPECT_EQ(eighteen.search_count, 1);

  const SearchDiff two = DiffAgainstSearch(2, Tables(), allow);
  EXPECT_FALSE(two.identical());
  EXPECT_TRUE(two.acceptable());
  EXPECT_EQ(two.allowlisted, 1);
  EXPECT_EQ(two.extra, (std::vector<std::string>{"1 6"}));
  EXPECT_TRUE(two.missing.empty());

  const SearchDiff strict = DiffAgainstSearch(2, Tables(), {});
  EXPECT_FALSE(strict.acceptable());
  EXPECT_EQ(strict.missing, (std::vector<std::string>{"6 1"}));
}

TEST(DiffAgainstSearchTest, OrderMismatchIsReported) {
  std::vector<ClassRecord> shuffled = EnumerateClasses(8).classes;
  std::swap(shuffled[0], shuffled[1]);
  const SearchDiff d = DiffAgainstSearch(8, Tables(), {}, shuffled);
  EXPECT_TRUE(d.missing.empty());
  EXPECT_TRUE(d.extra.empty());
  EXPECT_FALSE(d.order_matches);
  EXPECT_FALSE(d.acceptable());
}

}  // namespace
}  // namespace nsq
