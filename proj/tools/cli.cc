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

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsq/equivalence.h"
#include "nsq/golay.h"
#include "nsq/group.h"
#include "nsq/quad_codec.h"
#include "nsq/search.h"
#include "nsq/sequence.h"
#include "nsq/tables.h"

namespace nsq::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int from = 1;
  int to = 0;
  int threads = 0;  // 0: NSQ_THREADS or 1
  int max_n = kDefaultGolayBudget;
  std::string format = "text";
  bool tag_golay = false;
  bool count_classes = false;
  std::string data;
  std::string allowlist;
  std::string p_code;
  std::string q_code;
  std::string sequence;
};

int Threads(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("NSQ_THREADS"); env != nullptr && *env) {
    try {
      std::size_t used = 0;
      const int t = std::stoi(env, &used);
      if (used == std::string(env).size() && t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("NSQ_THREADS: invalid thread count '") + env + "'");
  }
  return 1;
}

std::pair<QuadCode, QuadCode> ParseCodeArgs(const Options& o) {
  const std::string text = o.p_code + " " + o.q_code;
  try {
    return o.n > 0 ? ParseCode(text, o.n) : ParseCode(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid code '" + text + "': " + e.what());
  }
}

std::string Glyphs(const BinarySeq& s) { return s.ToString(); }

int Search(const Options& o, std::ostream& out) {
  SearchOptions opts;
  opts.threads = Threads(o);
  const SearchResult result = EnumerateClasses(o.n, opts);
  if (o.format == "json") {
    json doc;
    doc["n"] = o.n;
    doc["classes"] = json::array();
    for (const ClassRecord& r : result.classes) {
      doc["classes"].push_back(
          {{"index", r.index}, {"p", r.p_code}, {"q", r.q_code}, {"golay", r.golay_type}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (const ClassRecord& r : result.classes) {
    out << r.index << ' ' << r.p_code << ' ' << r.q_code;
    if (o.tag_golay) out << ' ' << (r.golay_type ? 'G' : 'S');
    out << '\n';
  }
  return kExitOk;
}

int Summary(const Options& o, std::ostream& out) {
  if (o.to < o.from) throw UsageError("--to must be >= --from");
  SearchOptions opts;
  opts.threads = Threads(o);
  const std::vector<SummaryRow> rows = Summarize(o.from, o.to, opts);
  if (o.format == "json") {
    json doc = json::array();
    for (const SummaryRow& r : rows) {
      doc.push_back({{"n", r.n},
                     {"equ", r.equ},
                     {"gol", r.gol},
                     {"spo", r.spo},
                     {"three_squares", r.three_squares_short_circuit}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "n\tEqu\tGol\tSpo\n";
  for (const SummaryRow& r : rows) {
    out << r.n << '\t' << r.equ << '\t' << r.gol << '\t' << r.spo;
    if (r.three_squares_short_circuit) out << "\t(three squares)";
    out << '\n';
  }
  return kExitOk;
}

int Canon(const Options& o, std::ostream& out) {
  const auto [p, q] = ParseCodeArgs(o);
  const NormalQuadruple s = DecodeQuadruple(p, q);
  if (!s.valid()) {
    throw UsageError("'" + FormatCode(p, q) + "' is not a normal quadruple");
  }
  const PackedQuad packed = PackedQuad::From(s);
  std::vector<int> distance;
  const std::vector<PackedQuad> orbit = OrbitByClosure(packed, &distance);
  const PackedQuad canonical = Canonicalize(packed);
  const auto it = std::lower_bound(orbit.begin(), orbit.end(), canonical);
  const auto [cp, cq] = EncodeQuadruple(canonical.ToQuadruple());
  out << "input: " << FormatCode(p, q) << '\n';
  out << "canonical: " << FormatCode(cp, cq) << '\n';
  out << "transformations: " << distance[it - orbit.begin()] << '\n';
  out << "orbit size: " << orbit.size() << '\n';
  return kExitOk;
}

int Decode(const Options& o, std::ostream& out) {
  const auto [p, q] = ParseCodeArgs(o);
  const NormalQuadruple s = DecodeQuadruple(p, q);
  out << "n = " << s.n() << '\n';
  out << "A = " << Glyphs(s.a()) << '\n';
  out << "B = " << Glyphs(s.a()) << '\n';
  out << "C = " << Glyphs(s.c()) << '\n';
  out << "D = " << Glyphs(s.d()) << '\n';
  out << "normal: " << (s.valid() ? "yes" : "no") << '\n';
  return kExitOk;
}

int NpafCommand(const Options& o, std::ostream& out) {
  std::optional<BinarySeq> s;
  try {
    s = BinarySeq::Parse(o.sequence);
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid sequence '" + o.sequence + "': " + e.what());
  }
  const NpafTable t = Npaf(*s);
  if (o.format == "json") {
    json doc;
    doc["sequence"] = s->ToString();
    doc["npaf"] = t.values();
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "n = " << s->size() << '\n';
  for (int i = 0; i < s->size(); ++i) out << "N(" << i << ") = " << t[i] << '\n';
  return kExitOk;
}

int VerifyTablesCommand(const Options& o, std::ostream& out, std::ostream& err) {
  ReferenceTables tables;
  std::vector<KnownDiscrepancy> allowlist;
  try {
    tables = o.data.empty() ? LoadTables() : LoadTables(o.data);
    allowlist = o.allowlist.empty() ? DefaultAllowlist() : LoadAllowlist(o.allowlist);
  } catch (const TableFormatError& e) {
    throw UsageError(e.what());
  }
  const TableReport report = VerifyTables(tables, allowlist);
  for (const Finding& f : report.findings) out << f.ToString() << '\n';
  out << "rows checked: " << report.rows_checked << '\n';
  out << "findings: " << report.unexpected() << " new, " << report.expected()
      << " known\n";
  if (!report.ok()) return kExitFindings;
  if (report.expected() > 0) {
    err << "warning: " << report.expected()
        << " known discrepancy in the printed tables\n";
  }
  return kExitOk;
}

int VerifyRelationsCommand(const Options& o, std::ostream& out) {
  std::vector<int> ns;
  if (o.n > 0) {
    ns.push_back(o.n);
  } else {
    ns = {7, 8};
  }
  bool failed = false;
  for (const int n : ns) {
    for (const RelationResult& r : VerifyRelations(n)) {
      out << r.ToString() << '\n';
      failed |= r.status == RelationStatus::kFail;
    }
    out << "n=" << n << " realized order " << RealizedOrder(n) << '\n';
  }
  return failed ? kExitFindings : kExitOk;
}

int GolayCommand(const Options& o, std::ostream& out) {
  try {
    if (o.count_classes) {
      out << GolayTypeClassCount(o.n, o.max_n) << '\n';
      return kExitOk;
    }
    for (const GolayPair& p : GolayPairs(o.n, o.max_n)) {
      out << p.a.ToString() << ' ' << p.b.ToString() << '\n';
    }
  } catch (const BudgetExceeded& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Normal sequences: search, canonical forms, verification"};
  app.name("nsq");
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", o.n, "Sequence length")->check(CLI::Range(1, 64));
    if (required) opt->required();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (default NSQ_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* search = app.add_subcommand("search", "Enumerate the classes of NS(n)");
  add_n(search, true);
  add_threads(search);
  add_format(search);
  search->add_flag("--tag-golay", o.tag_golay, "Append G or S to each line");

  CLI::App* summary = app.add_subcommand("summary", "Class counts for a range of n");
  summary->add_option("--from", o.from, "First n")->check(CLI::Range(1, 64));
  summary->add_option("--to", o.to, "Last n")->required()->check(CLI::Range(1, 64));
  add_threads(summary);
  add_format(summary);

  CLI::App* canon = app.add_subcommand("canon", "Canonical form of a coded quadruple");
  canon->add_option("pcode", o.p_code)->required();
  canon->add_option("qcode", o.q_code)->required();
  add_n(canon, false);

  CLI::App* decode = app.add_subcommand("decode", "Decode a p-code and q-code");
  decode->add_option("pcode", o.p_code)->required();
  decode->add_option("qcode", o.q_code)->required();
  add_n(decode, false);

  CLI::App* npaf = app.add_subcommand("npaf", "NPAF of a +/- sequence");
  npaf->add_option("sequence", o.sequence)->required();
  add_format(npaf);

  CLI::App* verify_tables =
      app.add_subcommand("verify-tables", "Check every published representative");
  verify_tables->add_option("--data", o.data,
                            "Directory with ns_counts.txt and ns_representatives.txt");
  verify_tables->add_option("--allowlist", o.allowlist, "Known-discrepancy file");

  CLI::App* verify_relations =
      app.add_subcommand("verify-relations", "Check the group relations");
  add_n(verify_relations, false);

  CLI::App* golay = app.add_subcommand("golay", "Golay pairs of length n");
  add_n(golay, true);
  golay->add_flag("--count-classes", o.count_classes,
                  "Print the number of Golay-type classes of NS(n)");
  golay->add_option("--max-n", o.max_n, "Largest n attempted")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (search->parsed()) return Search(o, out);
    if (summary->parsed()) return Summary(o, out);
    if (canon->parsed()) return Canon(o, out);
    if (decode->parsed()) return Decode(o, out);
    if (npaf->parsed()) return NpafCommand(o, out);
    if (verify_tables->parsed()) return VerifyTablesCommand(o, out, err);
    if (verify_relations->parsed()) return VerifyRelationsCommand(o, out);
    if (golay->parsed()) return GolayCommand(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nsq::cli
