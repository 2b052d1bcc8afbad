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

#include "nsq/search.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nsq/bits.h"
#include "nsq/equivalence.h"
#include "nsq/pair_search.h"
#include "nsq/quad_codec.h"

namespace nsq {
namespace {

constexpr bool IsSymmetricLabel(int q) {
  return q == 1 || q == 2 || q == 7 || q == 8;
}

// q-side canonical conditions (vi)-(xii), applied while branching.
class CanonicalQFilter {
 public:
  struct State {
    bool symmetric = false;
    bool skew = false;
    bool seen_27 = false;
    bool seen_45 = false;
    bool has_1 = false;
    bool has_2 = false;
  };

  explicit CanonicalQFilter(int n) : n_(n) {}

  bool Quad(const State& s, int level, std::uint8_t label, State& next) const {
    if (n_ > 1 && level == 0 && label != 1 && label != 6) return false;
    next = s;
    if (IsSymmetricLabel(label)) {
      if (!s.symmetric && label != 1) return false;
      next.symmetric = true;
    } else {
      if (!s.skew && label != 6) return false;
      next.skew = true;
    }
    if (label == 2 || label == 7) {
      if (!s.seen_27 && label != 2) return false;
      next.seen_27 = true;
    }
    if (label == 4 || label == 5) {
      if (!s.seen_45 && label != 4) return false;
      next.seen_45 = true;
    }
    next.has_1 |= label == 1;
    next.has_2 |= label == 2;
    return true;
  }

  bool Central(const State& s, std::uint8_t label) const {
    if (!s.has_2 && label == 2) return false;
    if (!s.has_1 && label != 0) return false;
    return true;
  }

 private:
  int n_;
};

// Builds p-codes depth-first, pruning with conditions (i)-(iii); (iv) and
// (v) are checked on complete codes.
void WalkPCodes(int n, int level, std::vector<std::uint8_t>& labels,
                bool seen_symmetric, bool seen_skew,
                std::vector<std::uint64_t>& out) {
  const int m = n / 2;
  static constexpr std::uint8_t kAALabels[] = {1, 3, 6, 8};
  if (level == m) {
    auto emit = [&](int central) {
      if (!CheckCanonicalP(labels, central, n).ok()) return;
      std::uint64_t a = 0;
      for (int i = 0; i < m; ++i) {
        const QuadPattern p = QuadSymbol(labels[i]).pattern();
        a |= std::uint64_t{p & 1u} << i;
        a |= std::uint64_t{(p >> 1) & 1u} << (n - 1 - i);
      }
      if (central == 3) a |= std::uint64_t{1} << m;
      out.push_back(a);
    };
    if (n % 2 == 0) {
      emit(-1);
    } else {
      emit(0);
      emit(3);
    }
    return;
  }
  for (const std::uint8_t label : kAALabels) {
    if (level == 0) {
      if (n % 2 == 0 && label != 1) continue;
      if (n % 2 == 1 && label != 1 && label != 6) continue;
    }
    const bool symmetric = IsSymmetricLabel(label);
    if (symmetric && !seen_symmetric && label != 1) continue;
    if (!symmetric && !seen_skew && label != 6) continue;
    labels.push_back(label);
    WalkPCodes(n, level + 1, labels, seen_symmetric || symmetric,
               seen_skew || !symmetric, out);
    labels.pop_back();
  }
}

// Which r admit r = u^2 + v^2 with u, v of the given parity, for r <= limit.
std::vector<bool> TwoSquareTable(int limit, int parity) {
  std::vector<bool> table(static_cast<std::size_t>(limit) + 1, false);
  for (int u = parity; u * u <= limit; u += 2) {
    for (int v = parity; u * u + v * v <= limit; v += 2) {
      table[u * u + v * v] = true;
    }
  }
  return table;
}

// u1^2 + v1^2 + u2^2 + v2^2 with u's of parity pu and v's of parity pv.
std::vector<bool> FourSquareTable(int limit, int pu, int pv) {
  const std::vector<bool> uu = TwoSquareTable(limit, pu);
  const std::vector<bool> vv = TwoSquareTable(limit, pv);
  std::vector<bool> table(static_cast<std::size_t>(limit) + 1, false);
  for (int x = 0; x <= limit; ++x) {
    if (!uu[x]) continue;
    for (int y = 0; x + y <= limit; ++y) {
      if (vv[y]) table[x + y] = true;
    }
  }
  return table;
}

struct SpectralTables {
  explicit SpectralTables(int n)
      : two(TwoSquareTable(4 * n, n % 2)),
        four(FourSquareTable(4 * n, ((n + 1) / 2) % 2, (n / 2) % 2)) {}
  std::vector<bool> two;
  std::vector<bool> four;
};

bool SpectralFeasibleWith(std::uint64_t a, int n, const SpectralTables& t) {
  // z = 1 and z = -1: 2 A(z)^2 + C(z)^2 + D(z)^2 = 4n.
  const int at_one = bits::Sum(a, n);
  const int at_minus_one = bits::Sum(a ^ bits::AlternationMask(n), n);
  for (const int s : {at_one, at_minus_one}) {
    const int rest = 4 * n - 2 * s * s;
    if (rest < 0 || !t.two[rest]) return false;
  }
  // z = i: A(i) = (a_1 - a_3 + ...) + i (a_2 - a_4 + ...).
  const std::uint64_t odd_positions = 0x5555555555555555ULL & bits::Mask(n);
  const std::uint64_t quarter = 0x4444444444444444ULL & bits::Mask(n);
  const std::uint64_t flipped = a ^ quarter ^ (quarter << 1);
  const int odd_terms = (n + 1) / 2;
  const int even_terms = n / 2;
  const int re = odd_terms - 2 * std::popcount(flipped & odd_positions);
  const int im = even_terms - 2 * std::popcount(flipped & ~odd_positions & bits::Mask(n));
  const int rest = 4 * n - 2 * (re * re + im * im);
  return rest >= 0 && t.four[rest];
}

std::string CodeString(const QuadCode& code) { return code.ToString(); }

ClassRecord MakeRecord(const PackedQuad& q) {
  const auto [p, qc] = EncodeQuadruple(q.ToQuadruple());
  ClassRecord r;
  r.n = q.n;
  r.p_code = CodeString(p);
  r.q_code = CodeString(qc);
  r.golay_type = IsGolayType(q);
  return r;
}

}  // namespace

std::span<const QuadChoice> BsQuadChoices() {
  static const std::array<QuadChoice, 8> kChoices = [] {
    std::array<QuadChoice, 8> c{};
    for (int label = 1; label <= 8; ++label) {
      c[label - 1] = QuadChoice{QuadSymbol(label).pattern(),
                                static_cast<std::uint8_t>(label)};
    }
    return c;
  }();
  return kChoices;
}

std::span<const QuadChoice> AllQuadChoices() {
  static const std::array<QuadChoice, 16> kChoices = [] {
    std::array<QuadChoice, 16> c{};
    for (int pattern = 0; pattern < 16; ++pattern) {
      const auto s = QuadSymbol::FromPattern(static_cast<QuadPattern>(pattern));
      c[pattern] = QuadChoice{static_cast<QuadPattern>(pattern),
                              static_cast<std::uint8_t>(s ? s->label() : 0)};
    }
    return c;
  }();
  return kChoices;
}

std::span<const std::uint8_t> AllCentralChoices() {
  static constexpr std::array<std::uint8_t, 4> kChoices = {0, 1, 2, 3};
  return kChoices;
}

NormalQuadruple ClassRecord::Decode() const {
  const auto [p, q] = ParseCode(p_code + " " + q_code, n);
  return DecodeQuadruple(p, q);
}

NpafTable SearchTarget(const BinarySeq& a) {
  const NpafTable na = Npaf(a);
  std::vector<int> values(static_cast<std::size_t>(a.size()));
  values[0] = 2 * a.size();
  for (int i = 1; i < a.size(); ++i) values[i] = -2 * na[i];
  return NpafTable(std::move(values));
}

std::vector<std::uint64_t> CanonicalACandidates(int n) {
  if (n < 1 || n > kMaxPackedLength) {
    throw std::invalid_argument("search supports 1 <= n <= 64");
  }
  std::vector<std::uint64_t> out;
  std::vector<std::uint8_t> labels;
  WalkPCodes(n, 0, labels, false, false, out);
  return out;
}

std::vector<PackedQuad> EnumerateNormal(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("EnumerateNormal supports 1 <= n <= 30");
  }
  std::vector<PackedQuad> out;
  std::vector<int> target(static_cast<std::size_t>(n));
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    target[0] = 2 * n;
    for (int i = 1; i < n; ++i) target[i] = -2 * bits::Npaf(a, n, i);
    SearchPairs(PairTarget(n, target), AllQuadChoices(), AllCentralChoices(),
                AcceptAllFilter{}, [&](std::uint64_t c, std::uint64_t d) {
                  out.push_back(PackedQuad{a, c, d, n});
                });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SpectralFeasible(std::uint64_t a, int n) {
  return SpectralFeasibleWith(a, n, SpectralTables(n));
}

SearchResult EnumerateClasses(int n, const SearchOptions& options) {
  if (n < 1 || n > kMaxPackedLength) {
    throw std::invalid_argument("search supports 1 <= n <= 64, got " +
                                std::to_string(n));
  }
  if (options.threads < 1) throw std::invalid_argument("threads must be >= 1");
  SearchResult result;
  result.n = n;
  if (!ThreeSquaresFeasible(n)) {
    result.stats.three_squares_short_circuit = true;
    return result;
  }

  const std::vector<std::uint64_t> all = CanonicalACandidates(n);
  result.stats.a_candidates = all.size();
  std::vector<std::uint64_t> candidates;
  if (options.spectral_filter) {
    const SpectralTables tables(n);
    for (const std::uint64_t a : all) {
      if (SpectralFeasibleWith(a, n, tables)) candidates.push_back(a);
    }
  } else {
    candidates = all;
  }
  result.stats.a_searched = candidates.size();

  const CanonicalQFilter filter(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::vector<PackedQuad> found;

  auto worker = [&] {
    std::vector<PackedQuad> local;
    std::uint64_t local_nodes = 0;
    std::vector<int> target(static_cast<std::size_t>(n));
    for (std::size_t k = next.fetch_add(1); k < candidates.size();
         k = next.fetch_add(1)) {
      const std::uint64_t a = candidates[k];
      target[0] = 2 * n;
      for (int i = 1; i < n; ++i) target[i] = -2 * bits::Npaf(a, n, i);
      local_nodes += SearchPairs(
          PairTarget(n, target), BsQuadChoices(), AllCentralChoices(), filter,
          [&](std::uint64_t c, std::uint64_t d) {
            local.push_back(PackedQuad{a, c, d, n});
          });
    }
    std::lock_guard<std::mutex> lock(mu);
    found.insert(found.end(), local.begin(), local.end());
    nodes += local_nodes;
  };

  if (options.threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  }
  result.stats.nodes = nodes.load();

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const PackedQuad& q : found) {
    if (!q.IsNormal()) {
      throw std::logic_error("search emitted a non-normal quadruple: " +
                             q.ToQuadruple().ToString());
    }
    const CanonicalCheck check = CheckCanonical(q);
    if (!check.ok()) {
      throw std::logic_error("search emitted a non-canonical quadruple (" +
                             check.ToString() + ")");
    }
    if (Canonicalize(q) != q) {
      throw CanonicalFormError("canonical leaf is not its orbit's canonical member");
    }
    result.classes.push_back(MakeRecord(q));
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const ClassRecord& x, const ClassRecord& y) {
              if (x.p_code != y.p_code) return x.p_code < y.p_code;
              return x.q_code < y.q_code;
            });
  for (std::size_t k = 0; k < result.classes.size(); ++k) {
    result.classes[k].index = static_cast<int>(k) + 1;
  }
  return result;
}

std::vector<SummaryRow> Summarize(int n_lo, int n_hi,
                                  const SearchOptions& options) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
  std::vector<SummaryRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const SearchResult r = EnumerateClasses(n, options);
    SummaryRow row;
    row.n = n;
    row.equ = static_cast<int>(r.classes.size());
    for (const ClassRecord& c : r.classes) (c.golay_type ? row.gol : row.spo)++;
    row.three_squares_short_circuit = r.stats.three_squares_short_circuit;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nsq
