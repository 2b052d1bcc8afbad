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

#include "nsq/equivalence.h"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>

#include "nsq/bits.h"

namespace nsq {
namespace {

constexpr bool IsSymmetricLabel(int q) {
  return q == 1 || q == 2 || q == 7 || q == 8;
}

CanonicalCheck Fail(int condition, char code, int index) {
  return CanonicalCheck{condition, code, index};
}

void CheckPackable(int n) {
  if (n < 1 || n > kMaxPackedLength) {
    throw std::invalid_argument("equivalence supports 1 <= n <= 64, got " +
                                std::to_string(n));
  }
}

// p- and q-code labels of a packed quadruple; central is -1 for even n.
struct Labels {
  std::array<std::uint8_t, 32> p{};
  std::array<std::uint8_t, 32> q{};
  int p_central = -1;
  int q_central = -1;
};

// Pattern -> label, 0 for the non-BS patterns.
constexpr std::array<std::uint8_t, 16> kLabelOfPattern = [] {
  std::array<std::uint8_t, 16> table{};
  for (int pattern = 0; pattern < 16; ++pattern) {
    if (auto s = QuadSymbol::FromPattern(static_cast<QuadPattern>(pattern))) {
      table[pattern] = static_cast<std::uint8_t>(s->label());
    }
  }
  return table;
}();

inline int Bit(std::uint64_t x, int j) { return static_cast<int>((x >> j) & 1); }

// Returns false if some (C;D) quad is not a BS-quad.
bool ExtractLabels(const PackedQuad& s, Labels& out) {
  const int n = s.n;
  const int m = n / 2;
  for (int i = 0; i < m; ++i) {
    const int j = n - 1 - i;
    const int ap = Bit(s.a, i) | (Bit(s.a, j) << 1);
    out.p[i] = kLabelOfPattern[ap | (ap << 2)];
    const int cp = Bit(s.c, i) | (Bit(s.c, j) << 1) | (Bit(s.d, i) << 2) |
                   (Bit(s.d, j) << 3);
    out.q[i] = kLabelOfPattern[cp];
    if (out.q[i] == 0) return false;
  }
  if (n % 2 == 1) {
    const int ab = Bit(s.a, m);
    out.p_central = CentralSymbol::FromPattern(static_cast<std::uint8_t>(ab | (ab << 1))).label();
    out.q_central = CentralSymbol::FromPattern(static_cast<std::uint8_t>(
                                                   Bit(s.c, m) | (Bit(s.d, m) << 1)))
                        .label();
  }
  return true;
}

std::uint64_t ApplyQuadSwap45(std::uint64_t& c, std::uint64_t& d, int n) {
  const int m = n / 2;
  const std::uint64_t cr = bits::ReverseBits(c, n);
  const std::uint64_t dr = bits::ReverseBits(d, n);
  const std::uint64_t hits = (c ^ cr) & (d ^ dr) & (c ^ d) & bits::Mask(m);
  const std::uint64_t flip = hits | bits::ReverseBits(hits, n);
  c ^= flip;
  d ^= flip;
  return flip;
}

void SortUnique(std::vector<PackedQuad>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string_view Name(ElementaryTransform t) {
  switch (t) {
    case ElementaryTransform::kNegateAA:
      return "NegateAA";
    case ElementaryTransform::kReverseAA:
      return "ReverseAA";
    case ElementaryTransform::kNegateC:
      return "NegateC";
    case ElementaryTransform::kReverseC:
      return "ReverseC";
    case ElementaryTransform::kNegateD:
      return "NegateD";
    case ElementaryTransform::kReverseD:
      return "ReverseD";
    case ElementaryTransform::kSwapCD:
      return "SwapCD";
    case ElementaryTransform::kQuadSwap45:
      return "QuadSwap45";
    case ElementaryTransform::kAlternateAll:
      return "AlternateAll";
  }
  return "?";
}

PackedQuad Apply(ElementaryTransform t, const PackedQuad& s) {
  PackedQuad r = s;
  const int n = s.n;
  const std::uint64_t mask = bits::Mask(n);
  switch (t) {
    case ElementaryTransform::kNegateAA:
      r.a ^= mask;
      break;
    case ElementaryTransform::kReverseAA:
      r.a = bits::ReverseBits(s.a, n);
      break;
    case ElementaryTransform::kNegateC:
      r.c ^= mask;
      break;
    case ElementaryTransform::kReverseC:
      r.c = bits::ReverseBits(s.c, n);
      break;
    case ElementaryTransform::kNegateD:
      r.d ^= mask;
      break;
    case ElementaryTransform::kReverseD:
      r.d = bits::ReverseBits(s.d, n);
      break;
    case ElementaryTransform::kSwapCD:
      std::swap(r.c, r.d);
      break;
    case ElementaryTransform::kQuadSwap45:
      ApplyQuadSwap45(r.c, r.d, n);
      break;
    case ElementaryTransform::kAlternateAll: {
      const std::uint64_t alt = bits::AlternationMask(n);
      r.a ^= alt;
      r.c ^= alt;
      r.d ^= alt;
      break;
    }
  }
  return r;
}

NormalQuadruple Apply(ElementaryTransform t, const NormalQuadruple& s) {
  CheckPackable(s.n());
  return Apply(t, PackedQuad::From(s)).ToQuadruple();
}

std::vector<PackedQuad> OrbitByClosure(const PackedQuad& s,
                                       std::vector<int>* distance) {
  CheckPackable(s.n);
  std::unordered_map<PackedQuad, int, PackedQuadHash> seen;
  std::deque<PackedQuad> frontier;
  seen.emplace(s, 0);
  frontier.push_back(s);
  while (!frontier.empty()) {
    const PackedQuad cur = frontier.front();
    frontier.pop_front();
    const int dist = seen[cur];
    for (const ElementaryTransform t : kAllTransforms) {
      const PackedQuad next = Apply(t, cur);
      if (seen.emplace(next, dist + 1).second) frontier.push_back(next);
    }
  }
  std::vector<PackedQuad> members;
  members.reserve(seen.size());
  for (const auto& [q, d] : seen) members.push_back(q);
  std::sort(members.begin(), members.end());
  if (distance != nullptr) {
    distance->clear();
    for (const PackedQuad& q : members) distance->push_back(seen[q]);
  }
  return members;
}

std::vector<PackedQuad> PackedOrbit(const PackedQuad& s) {
  CheckPackable(s.n);
  const int n = s.n;
  const std::uint64_t mask = bits::Mask(n);

  std::array<std::uint64_t, 4> a_images = {
      s.a, s.a ^ mask, bits::ReverseBits(s.a, n),
      bits::ReverseBits(s.a, n) ^ mask};
  std::sort(a_images.begin(), a_images.end());
  const auto a_end = std::unique(a_images.begin(), a_images.end());

  // (C;D) orbit under negate/reverse of each row, row swap and 4<->5.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {{s.c, s.d}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [c, d] = pairs[k];
    std::array<std::pair<std::uint64_t, std::uint64_t>, 6> next = {{
        {c ^ mask, d},
        {bits::ReverseBits(c, n), d},
        {c, d ^ mask},
        {c, bits::ReverseBits(d, n)},
        {d, c},
        {c, d},
    }};
    ApplyQuadSwap45(next[5].first, next[5].second, n);
    for (const auto& p : next) {
      if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) {
        pairs.push_back(p);
      }
    }
  }

  std::vector<PackedQuad> members;
  members.reserve(2 * pairs.size() * 4);
  for (auto it = a_images.begin(); it != a_end; ++it) {
    for (const auto& [c, d] : pairs) members.push_back(PackedQuad{*it, c, d, n});
  }
  const std::size_t half = members.size();
  for (std::size_t k = 0; k < half; ++k) {
    members.push_back(Apply(ElementaryTransform::kAlternateAll, members[k]));
  }
  SortUnique(members);
  return members;
}

std::vector<NormalQuadruple> Orbit(const NormalQuadruple& s) {
  CheckPackable(s.n());
  std::vector<NormalQuadruple> out;
  for (const PackedQuad& q : PackedOrbit(PackedQuad::From(s))) {
    out.push_back(q.ToQuadruple());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RomanNumeral(int condition) {
  static constexpr std::array<std::string_view, 13> kNumerals = {
      "",   "i",   "ii", "iii", "iv", "v",  "vi",
      "vii", "viii", "ix", "x",   "xi", "xii"};
  if (condition < 1 || condition > 12) return "?";
  return std::string(kNumerals[condition]);
}

std::string CanonicalCheck::ToString() const {
  if (ok()) return "canonical";
  return "(" + RomanNumeral(condition) + ") at " + std::string(1, code) + "_" +
         std::to_string(index);
}

CanonicalCheck CheckCanonicalP(std::span<const std::uint8_t> p, int central,
                               int n) {
  const int m = static_cast<int>(p.size());
  const bool odd = n % 2 == 1;
  // (i)
  if (m >= 1) {
    if (!odd && p[0] != 1) return Fail(1, 'p', 1);
    if (odd && p[0] != 1 && p[0] != 6) return Fail(1, 'p', 1);
  }
  // (ii) and (iii)
  bool seen_symmetric = false;
  bool seen_skew = false;
  for (int i = 0; i < m; ++i) {
    if (IsSymmetricLabel(p[i])) {
      if (!seen_symmetric && p[i] != 1) return Fail(2, 'p', i + 1);
      seen_symmetric = true;
    } else {
      if (!seen_skew && p[i] != 6) return Fail(3, 'p', i + 1);
      seen_skew = true;
    }
  }
  if (!odd) return {};
  // (iv)
  if (!seen_symmetric && central != 0) return Fail(4, 'p', m + 1);
  // (v)
  for (int i = 0; i + 1 < m; ++i) {
    if (IsSymmetricLabel(p[i]) == IsSymmetricLabel(p[i + 1])) {
      if (p[i + 1] != 1 && p[i + 1] != 6) return Fail(5, 'p', i + 2);
      return {};
    }
  }
  if (m >= 1 && IsSymmetricLabel(p[m - 1]) && central != 0) {
    return Fail(5, 'p', m + 1);
  }
  return {};
}

CanonicalCheck CheckCanonicalQ(std::span<const std::uint8_t> q, int central,
                               int n) {
  const int m = static_cast<int>(q.size());
  const bool odd = n % 2 == 1;
  // (vi)
  if (n > 1 && m >= 1 && q[0] != 1 && q[0] != 6) return Fail(6, 'q', 1);
  bool seen_symmetric = false, seen_skew = false;
  bool seen_27 = false, seen_45 = false;
  bool has_1 = false, has_2 = false;
  for (int i = 0; i < m; ++i) {
    const int s = q[i];
    // (vii) and (viii)
    if (IsSymmetricLabel(s)) {
      if (!seen_symmetric && s != 1) return Fail(7, 'q', i + 1);
      seen_symmetric = true;
    } else {
      if (!seen_skew && s != 6) return Fail(8, 'q', i + 1);
      seen_skew = true;
    }
    // (ix)
    if (s == 2 || s == 7) {
      if (!seen_27 && s != 2) return Fail(9, 'q', i + 1);
      seen_27 = true;
    }
    // (x)
    if (s == 4 || s == 5) {
      if (!seen_45 && s != 4) return Fail(10, 'q', i + 1);
      seen_45 = true;
    }
    has_1 |= s == 1;
    has_2 |= s == 2;
  }
  if (!odd) return {};
  // (xi)
  if (!has_2 && central == 2) return Fail(11, 'q', m + 1);
  // (xii)
  if (!has_1 && central != 0) return Fail(12, 'q', m + 1);
  return {};
}

CanonicalCheck CheckCanonical(const QuadCode& p, const QuadCode& q) {
  const int n = p.n();
  if (q.n() != n) throw std::invalid_argument("p- and q-code lengths differ");
  std::vector<std::uint8_t> pl, ql;
  for (const QuadSymbol s : p.quads) pl.push_back(static_cast<std::uint8_t>(s.label()));
  for (const QuadSymbol s : q.quads) ql.push_back(static_cast<std::uint8_t>(s.label()));
  const CanonicalCheck pc =
      CheckCanonicalP(pl, p.central ? p.central->label() : -1, n);
  if (!pc.ok()) return pc;
  return CheckCanonicalQ(ql, q.central ? q.central->label() : -1, n);
}

CanonicalCheck CheckCanonical(const NormalQuadruple& s) {
  const auto [p, q] = EncodeQuadruple(s);
  return CheckCanonical(p, q);
}

CanonicalCheck CheckCanonical(const PackedQuad& s) {
  Labels labels;
  if (!ExtractLabels(s, labels)) {
    throw std::invalid_argument("(C;D) has a quad outside the eight BS-quads");
  }
  const int m = s.n / 2;
  const CanonicalCheck pc = CheckCanonicalP(
      std::span<const std::uint8_t>(labels.p.data(), m), labels.p_central, s.n);
  if (!pc.ok()) return pc;
  return CheckCanonicalQ(std::span<const std::uint8_t>(labels.q.data(), m),
                         labels.q_central, s.n);
}

bool IsCanonical(const NormalQuadruple& s) { return CheckCanonical(s).ok(); }

bool IsCanonical(const PackedQuad& s) { return CheckCanonical(s).ok(); }

int CountCanonicalInOrbit(const PackedQuad& s) {
  int count = 0;
  for (const PackedQuad& member : PackedOrbit(s)) count += IsCanonical(member);
  return count;
}

PackedQuad Canonicalize(const PackedQuad& s) {
  const PackedQuad* found = nullptr;
  const std::vector<PackedQuad> orbit = PackedOrbit(s);
  int count = 0;
  for (const PackedQuad& member : orbit) {
    if (IsCanonical(member)) {
      ++count;
      found = &member;
    }
  }
  if (count != 1) {
    throw CanonicalFormError(
        "orbit of " + s.ToQuadruple().ToString() + " has " +
        std::to_string(count) + " canonical members (expected exactly 1)");
  }
  return *found;
}

NormalQuadruple Canonicalize(const NormalQuadruple& s) {
  CheckPackable(s.n());
  return Canonicalize(PackedQuad::From(s)).ToQuadruple();
}

bool AreEquivalent(const NormalQuadruple& s1, const NormalQuadruple& s2) {
  if (s1.n() != s2.n()) {
    throw std::invalid_argument("AreEquivalent needs quadruples of one length");
  }
  CheckPackable(s1.n());
  const std::vector<PackedQuad> orbit = PackedOrbit(PackedQuad::From(s1));
  return std::binary_search(orbit.begin(), orbit.end(), PackedQuad::From(s2));
}

bool IsGolayType(const PackedQuad& s) {
  for (const PackedQuad& member : PackedOrbit(s)) {
    if (member.c == member.d) return true;
  }
  return false;
}

bool IsGolayType(const NormalQuadruple& s) {
  CheckPackable(s.n());
  return IsGolayType(PackedQuad::From(s));
}

}  // namespace nsq
