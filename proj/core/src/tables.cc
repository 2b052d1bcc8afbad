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
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "nsq/equivalence.h"
#include "nsq/packed_quad.h"
#include "nsq/quad_codec.h"
#include "table_data.h"

namespace nsq {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Non-comment, non-blank lines split on ';', with their line numbers.
std::vector<std::pair<int, std::vector<std::string>>> Records(
    std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    while (true) {
      const auto semi = line.find(';');
      fields.emplace_back(Trim(line.substr(0, semi)));
      if (semi == std::string_view::npos) break;
      line = line.substr(semi + 1);
    }
    out.emplace_back(line_no, std::move(fields));
  }
  return out;
}

int ToInt(const std::string& field, int line_no, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw TableFormatError("line " + std::to_string(line_no) + ": bad " +
                           std::string(what) + " '" + field + "'");
  }
  return value;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableFormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool IsAllowlisted(const std::vector<KnownDiscrepancy>& allowlist, int n,
                   int index, const std::string& condition) {
  return std::any_of(allowlist.begin(), allowlist.end(),
                     [&](const KnownDiscrepancy& k) {
                       return k.n == n && k.index == index &&
                              (condition.empty() || k.condition == condition);
                     });
}

}  // namespace

std::vector<TableRow> ReferenceTables::RowsFor(int n) const {
  std::vector<TableRow> out;
  for (const TableRow& r : reps) {
    if (r.n == n) out.push_back(r);
  }
  return out;
}

ReferenceTables ParseTables(std::string_view counts_text,
                        std::string_view reps_text) {
  ReferenceTables tables;
  for (const auto& [line_no, f] : Records(counts_text)) {
    if (f.size() != 4) {
      throw TableFormatError("counts line " + std::to_string(line_no) +
                             ": expected n;equ;gol;spo");
    }
    const int n = ToInt(f[0], line_no, "n");
    const TableCounts c{ToInt(f[1], line_no, "equ"), ToInt(f[2], line_no, "gol"),
                        ToInt(f[3], line_no, "spo")};
    if (n < 1 || c.equ < 0 || c.gol < 0 || c.spo < 0) {
      throw TableFormatError("counts line " + std::to_string(line_no) +
                             ": negative value");
    }
    if (c.equ != c.gol + c.spo) {
      throw TableFormatError("counts line " + std::to_string(line_no) +
                             ": equ != gol + spo");
    }
    if (!tables.counts.emplace(n, c).second) {
      throw TableFormatError("counts line " + std::to_string(line_no) +
                             ": duplicate n=" + f[0]);
    }
  }
  for (const auto& [line_no, f] : Records(reps_text)) {
    if (f.size() != 5 || f[4].size() != 1 ||
        std::string_view("GS?").find(f[4][0]) == std::string_view::npos) {
      throw TableFormatError("representatives line " + std::to_string(line_no) +
                             ": expected n;index;pcode;qcode;G|S|?");
    }
    TableRow row{ToInt(f[0], line_no, "n"), ToInt(f[1], line_no, "index"), f[2],
                 f[3], f[4][0]};
    const auto digits = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
        return ch >= '0' && ch <= '8';
      });
    };
    if (row.n < 1 || row.index < 1 || !digits(row.p_code) || !digits(row.q_code)) {
      throw TableFormatError("representatives line " + std::to_string(line_no) +
                             ": malformed row");
    }
    tables.reps.push_back(std::move(row));
  }
  return tables;
}

ReferenceTables LoadTables() {
  return ParseTables(internal::kCountsText, internal::kRepresentativesText);
}

ReferenceTables LoadTables(const std::string& directory) {
  return ParseTables(ReadFile(directory + "/ns_counts.txt"),
                     ReadFile(directory + "/ns_representatives.txt"));
}

std::vector<KnownDiscrepancy> ParseAllowlist(std::string_view text) {
  std::vector<KnownDiscrepancy> out;
  for (const auto& [line_no, f] : Records(text)) {
    if (f.size() != 3) {
      throw TableFormatError("allowlist line " + std::to_string(line_no) +
                             ": expected n;index;condition");
    }
    out.push_back(KnownDiscrepancy{ToInt(f[0], line_no, "n"),
                                   ToInt(f[1], line_no, "index"), f[2]});
  }
  return out;
}

std::vector<KnownDiscrepancy> DefaultAllowlist() {
  return ParseAllowlist(internal::kAllowlistText);
}

std::vector<KnownDiscrepancy> LoadAllowlist(const std::string& path) {
  return ParseAllowlist(ReadFile(path));
}

std::string Finding::ToString() const {
  std::string out = "n=" + std::to_string(n);
  if (index > 0) out += " row " + std::to_string(index);
  out += ": " + check;
  if (!detail.empty()) out += ": " + detail;
  if (allowlisted) out += " [known discrepancy]";
  return out;
}

int TableReport::unexpected() const {
  return static_cast<int>(std::count_if(findings.begin(), findings.end(),
                                        [](const Finding& f) { return !f.allowlisted; }));
}

int TableReport::expected() const {
  return static_cast<int>(findings.size()) - unexpected();
}

TableReport VerifyTables(const ReferenceTables& tables,
                         const std::vector<KnownDiscrepancy>& allowlist) {
  TableReport report;
  auto add = [&](int n, int index, std::string check, std::string detail,
                 const std::string& condition = "") {
    const bool known = index > 0 && !condition.empty() &&
                       IsAllowlisted(allowlist, n, index, condition);
    report.findings.push_back(
        Finding{n, index, std::move(check), std::move(detail), known});
  };

  std::set<int> ns;
  for (const TableRow& r : tables.reps) ns.insert(r.n);

  for (const int n : ns) {
    const std::vector<TableRow> rows = tables.RowsFor(n);
    TableCounts computed;
    std::set<std::string> seen;
    std::map<PackedQuad, int> class_of;  // canonical form -> first row
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const TableRow& row = rows[k];
      ++report.rows_checked;
      if (row.index != static_cast<int>(k) + 1) {
        add(n, row.index, "index", "expected " + std::to_string(k + 1));
      }
      if (!seen.insert(row.Code()).second) {
        add(n, row.index, "distinct", "code repeated: " + row.Code());
      }
      if (k > 0 && !(std::pair(rows[k - 1].p_code, rows[k - 1].q_code) <
                     std::pair(row.p_code, row.q_code))) {
        add(n, row.index, "order", "not after row " + std::to_string(k));
      }

      std::optional<NormalQuadruple> decoded;
      try {
        const auto [p, q] = ParseCode(row.Code(), n);
        decoded = DecodeQuadruple(p, q);
        const auto [p2, q2] = EncodeQuadruple(*decoded);
        if (FormatCode(p2, q2) != row.Code()) {
          add(n, row.index, "round-trip", FormatCode(p2, q2));
        }
      } catch (const std::exception& e) {
        add(n, row.index, "decode", e.what());
        continue;
      }
      const NormalQuadruple& s = *decoded;
      if (!IsNormal(s)) {
        add(n, row.index, "normal", "NPAF sum is not a delta");
        continue;
      }
      const CanonicalCheck check = CheckCanonical(s);
      if (!check.ok()) {
        add(n, row.index, "canonical", check.ToString(),
            "(" + RomanNumeral(check.condition) + ")");
      }
      const PackedQuad packed = PackedQuad::From(s);
      if (const int count = CountCanonicalInOrbit(packed); count != 1) {
        add(n, row.index, "orbit", std::to_string(count) + " canonical members");
      } else if (const auto [first, inserted] =
                     class_of.emplace(Canonicalize(packed), row.index);
                 !inserted) {
        add(n, row.index, "same-class",
            "equivalent to row " + std::to_string(first->second));
      }
      const bool golay = IsGolayType(packed);
      ++(golay ? computed.gol : computed.spo);
      ++computed.equ;
      if ((row.tag == 'G' && !golay) || (row.tag == 'S' && golay)) {
        add(n, row.index, "golay-tag",
            std::string("tagged ") + row.tag + ", computed " + (golay ? "G" : "S"));
      }
    }
    report.computed[n] = computed;

    const auto it = tables.counts.find(n);
    if (it == tables.counts.end()) {
      add(n, 0, "counts", "no count row");
      continue;
    }
    const TableCounts& printed = it->second;
    const bool all_sporadic_listing =
        std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.tag == 'S'; });
    if (all_sporadic_listing) {
      // Only the sporadic classes are listed for this n.
      if (computed.equ != printed.spo || computed.gol != 0) {
        add(n, 0, "counts",
            std::to_string(computed.spo) + " sporadic rows of " +
                std::to_string(computed.equ) + ", expected " +
                std::to_string(printed.spo) + " sporadic");
      }
    } else if (computed.equ != printed.equ || computed.gol != printed.gol ||
               computed.spo != printed.spo) {
      add(n, 0, "counts",
          "rows give (" + std::to_string(computed.equ) + "," +
              std::to_string(computed.gol) + "," + std::to_string(computed.spo) +
              "), expected (" + std::to_string(printed.equ) + "," +
              std::to_string(printed.gol) + "," + std::to_string(printed.spo) + ")");
    }
  }
  return report;
}

SearchDiff DiffAgainstSearch(int n, const ReferenceTables& tables,
                             const std::vector<KnownDiscrepancy>& allowlist,
                             const SearchOptions& options) {
  return DiffAgainstSearch(n, tables, allowlist, EnumerateClasses(n, options).classes);
}

SearchDiff DiffAgainstSearch(int n, const ReferenceTables& tables,
                             const std::vector<KnownDiscrepancy>& allowlist,
                             const std::vector<ClassRecord>& classes) {
  SearchDiff diff;
  diff.n = n;
  std::vector<std::string> found;
  for (const ClassRecord& r : classes) found.push_back(r.p_code + " " + r.q_code);
  std::vector<std::string> printed;
  std::vector<int> printed_index;
  for (const TableRow& r : tables.RowsFor(n)) {
    printed.push_back(r.Code());
    printed_index.push_back(r.index);
  }
  diff.search_count = static_cast<int>(found.size());
  diff.table_count = static_cast<int>(printed.size());
  diff.order_matches = found == printed;

  const std::set<std::string> found_set(found.begin(), found.end());
  const std::set<std::string> printed_set(printed.begin(), printed.end());
  for (std::size_t k = 0; k < printed.size(); ++k) {
    if (found_set.count(printed[k])) continue;
    if (IsAllowlisted(allowlist, n, printed_index[k], "")) {
      ++diff.allowlisted;
    } else {
      diff.missing.push_back(printed[k]);
    }
  }
  for (const std::string& code : found) {
    if (!printed_set.count(code)) diff.extra.push_back(code);
  }
  std::vector<std::string> common_found, common_printed;
  for (const std::string& c : found) {
    if (printed_set.count(c)) common_found.push_back(c);
  }
  for (const std::string& c : printed) {
    if (found_set.count(c)) common_printed.push_back(c);
  }
  diff.common_order_matches = common_found == common_printed;
  return diff;
}

}  // namespace nsq
