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

// Published class counts and class representatives, and a verifier for them.
//
// Data files (one record per line, '#' starts a comment):
//   ns_counts.txt           n;equ;gol;spo
//   ns_representatives.txt  n;index;pcode;qcode;G|S|?
//   known_discrepancies.txt n;index;condition
// A '?' tag means the Golay/sporadic split is not printed per row; the
// verifier computes it and checks the per-n totals. Copies of all three
// files are compiled into the library.

#ifndef NSQ_TABLES_H_
#define NSQ_TABLES_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsq/search.h"

namespace nsq {

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableCounts {
  int equ = 0;
  int gol = 0;
  int spo = 0;
  friend bool operator==(const TableCounts&, const TableCounts&) = default;
};

struct TableRow {
  int n = 0;
  int index = 0;
  std::string p_code;
  std::string q_code;
  char tag = '?';

  std::string Code() const { return p_code + " " + q_code; }
};

struct ReferenceTables {
  std::map<int, TableCounts> counts;  // n = 1..40
  std::vector<TableRow> reps;         // file order

  std::vector<TableRow> RowsFor(int n) const;
};

// Throws TableFormatError on a malformed line or when equ != gol + spo.
ReferenceTables ParseTables(std::string_view counts_text,
                        std::string_view reps_text);
ReferenceTables LoadTables();
// Reads ns_counts.txt and ns_representatives.txt from `directory`.
ReferenceTables LoadTables(const std::string& directory);

struct KnownDiscrepancy {
  int n = 0;
  int index = 0;
  std::string condition;  // roman numeral in parentheses, e.g. "(i)"
};

std::vector<KnownDiscrepancy> ParseAllowlist(std::string_view text);
std::vector<KnownDiscrepancy> DefaultAllowlist();
std::vector<KnownDiscrepancy> LoadAllowlist(const std::string& path);

struct Finding {
  int n = 0;
  int index = 0;       // 0 for per-n findings
  std::string check;   // "decode", "normal", "canonical", ...
  std::string detail;
  bool allowlisted = false;

  std::string ToString() const;
};

struct TableReport {
  int rows_checked = 0;
  std::vector<Finding> findings;
  std::map<int, TableCounts> computed;  // per n, from the rows

  int unexpected() const;
  int expected() const;
  bool ok() const { return unexpected() == 0; }
};

TableReport VerifyTables(const ReferenceTables& tables,
                         const std::vector<KnownDiscrepancy>& allowlist);

struct SearchDiff {
  int n = 0;
  int search_count = 0;
  int table_count = 0;
  std::vector<std::string> missing;  // printed, not found by search
  std::vector<std::string> extra;    // found by search, not printed
  bool order_matches = false;         // full lists equal, in order
  bool common_order_matches = false;  // rows on both sides appear in the same order
  // Printed rows on the allowlist that search does not reproduce. They are
  // not counted in `missing`; each may account for one `extra` row.
  int allowlisted = 0;

  bool identical() const { return order_matches && allowlisted == 0; }
  bool acceptable() const {
    return missing.empty() && static_cast<int>(extra.size()) <= allowlisted &&
           common_order_matches;
  }
};

SearchDiff DiffAgainstSearch(int n, const ReferenceTables& tables,
                             const std::vector<KnownDiscrepancy>& allowlist,
                             const SearchOptions& options = {});
SearchDiff DiffAgainstSearch(int n, const ReferenceTables& tables,
                             const std::vector<KnownDiscrepancy>& allowlist,
                             const std::vector<ClassRecord>& classes);

}  // namespace nsq

#endif  // NSQ_TABLES_H_
