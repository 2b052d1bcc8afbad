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

#include "nsq/group.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "nsq/bits.h"
#include "nsq/pair_search.h"
#include "nsq/search.h"

namespace nsq {
namespace {

using T = ElementaryTransform;

constexpr std::array<T, 9> kNormalFormOrder = {
    T::kAlternateAll, T::kNegateAA, T::kReverseAA, T::kNegateC, T::kReverseC,
    T::kNegateD,      T::kReverseD, T::kSwapCD,    T::kQuadSwap45};

PackedQuad ActWord(std::span<const T> word, PackedQuad s) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = Apply(*it, s);
  return s;
}

std::vector<PackedQuad> ActAll(std::span<const T> word,
                               std::span<const PackedQuad> probe) {
  std::vector<PackedQuad> out;
  out.reserve(probe.size());
  for (const PackedQuad& q : probe) out.push_back(ActWord(word, q));
  return out;
}

struct ImageHash {
  std::size_t operator()(const std::vector<PackedQuad>& v) const {
    std::size_t h = v.size();
    PackedQuadHash qh;
    for (const PackedQuad& q : v) h = h * 1000003u ^ qh(q);
    return h;
  }
};

// Random quadruple whose (C;D) quads are all BS-quads.
PackedQuad RandomBsQuad(int n, std::mt19937_64& rng) {
  const auto choices = BsQuadChoices();
  PackedQuad q{rng() & bits::Mask(n), 0, 0, n};
  const int m = n / 2;
  for (int i = 0; i < m; ++i) {
    const QuadPattern p = choices[rng() % 8].pattern;
    const int j = n - 1 - i;
    q.c |= (std::uint64_t{p & 1u} << i) | (std::uint64_t{(p >> 1) & 1u} << j);
    q.d |= (std::uint64_t{(p >> 2) & 1u} << i) |
           (std::uint64_t{(p >> 3) & 1u} << j);
  }
  if (n % 2 == 1) {
    q.c |= (rng() & 1) << m;
    q.d |= (rng() & 1) << m;
  }
  return q;
}

std::vector<PackedQuad> WholeBsSpace(int n) {
  const int m = n / 2;
  const auto choices = BsQuadChoices();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {{0, 0}};
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    const int j = n - 1 - i;
    for (const auto& [c, d] : pairs) {
      for (const QuadChoice& ch : choices) {
        const QuadPattern p = ch.pattern;
        next.emplace_back(
            c | (std::uint64_t{p & 1u} << i) | (std::uint64_t{(p >> 1) & 1u} << j),
            d | (std::uint64_t{(p >> 2) & 1u} << i) |
                (std::uint64_t{(p >> 3) & 1u} << j));
      }
    }
    pairs = std::move(next);
  }
  if (n % 2 == 1) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    for (const auto& [c, d] : pairs) {
      for (std::uint64_t cc = 0; cc < 2; ++cc) {
        for (std::uint64_t dd = 0; dd < 2; ++dd) {
          next.emplace_back(c | (cc << m), d | (dd << m));
        }
      }
    }
    pairs = std::move(next);
  }
  std::vector<PackedQuad> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    for (const auto& [c, d] : pairs) out.push_back(PackedQuad{a, c, d, n});
  }
  return out;
}

std::size_t BsSpaceSize(int n) {
  std::size_t size = std::size_t{1} << n;  // A
  for (int i = 0; i < n / 2; ++i) size *= 8;
  if (n % 2 == 1) size *= 4;
  return size;
}

void CheckN(int n) {
  if (n < 1 || n > kMaxPackedLength) {
    throw std::invalid_argument("group actions need 1 <= n <= 64");
  }
}

struct Relation {
  std::string name;
  std::vector<T> lhs;
  std::vector<T> rhs;
};

std::vector<T> Concat(std::initializer_list<std::vector<T>> parts) {
  std::vector<T> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<T> Power(std::vector<T> base, int exponent) {
  std::vector<T> out;
  for (int k = 0; k < exponent; ++k) out.insert(out.end(), base.begin(), base.end());
  return out;
}

std::vector<Relation> StatedRelations(int n) {
  const std::vector<T> nu = {T::kNegateAA}, rho = {T::kReverseAA};
  const std::vector<T> nu3 = {T::kNegateC}, rho3 = {T::kReverseC};
  const std::vector<T> nu4 = {T::kNegateD}, rho4 = {T::kReverseD};
  const std::vector<T> sigma = {T::kSwapCD}, theta = {T::kQuadSwap45};
  const std::vector<T> alpha = {T::kAlternateAll};
  const std::vector<T> id = {};

  std::vector<Relation> out;
  for (const T g : kNormalFormOrder) {
    out.push_back({std::string(GeneratorName(g)) + "^2 = 1", {g, g}, id});
  }
  // E = <nu, rho, nu3, rho3, nu4, rho4> is elementary abelian.
  const std::array<T, 6> e = {T::kNegateAA, T::kReverseAA, T::kNegateC,
                              T::kReverseC, T::kNegateD,  T::kReverseD};
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const std::string x(GeneratorName(e[i])), y(GeneratorName(e[j]));
      out.push_back({x + " " + y + " = " + y + " " + x, {e[i], e[j]}, {e[j], e[i]}});
    }
  }
  out.push_back({"sigma nu = nu sigma", Concat({sigma, nu}), Concat({nu, sigma})});
  out.push_back({"sigma rho = rho sigma", Concat({sigma, rho}), Concat({rho, sigma})});
  out.push_back({"sigma nu3 = nu4 sigma", Concat({sigma, nu3}), Concat({nu4, sigma})});
  out.push_back({"sigma rho3 = rho4 sigma", Concat({sigma, rho3}), Concat({rho4, sigma})});
  out.push_back({"theta nu = nu theta", Concat({theta, nu}), Concat({nu, theta})});
  out.push_back({"theta rho = rho theta", Concat({theta, rho}), Concat({rho, theta})});
  out.push_back({"theta (nu3 rho3) = (nu3 rho3) theta", Concat({theta, nu3, rho3}),
                 Concat({nu3, rho3, theta})});
  out.push_back({"theta (nu4 rho4) = (nu4 rho4) theta", Concat({theta, nu4, rho4}),
                 Concat({nu4, rho4, theta})});
  out.push_back({"theta sigma = sigma theta", Concat({theta, sigma}), Concat({sigma, theta})});
  out.push_back({"theta rho3 = rho4 theta", Concat({theta, rho3}), Concat({rho4, theta})});
  out.push_back({"alpha nu = nu alpha", Concat({alpha, nu}), Concat({nu, alpha})});
  out.push_back({"alpha nu3 = nu3 alpha", Concat({alpha, nu3}), Concat({nu3, alpha})});
  out.push_back({"alpha nu4 = nu4 alpha", Concat({alpha, nu4}), Concat({nu4, alpha})});
  out.push_back({"alpha rho3 alpha = rho3 nu3^(n-1)", Concat({alpha, rho3, alpha}),
                 Concat({rho3, Power(nu3, n - 1)})});
  out.push_back({"alpha rho4 alpha = rho4 nu4^(n-1)", Concat({alpha, rho4, alpha}),
                 Concat({rho4, Power(nu4, n - 1)})});
  out.push_back({"alpha theta alpha = theta sigma^(n-1)", Concat({alpha, theta, alpha}),
                 Concat({theta, Power(sigma, n - 1)})});
  return out;
}

}  // namespace

std::string_view GeneratorName(ElementaryTransform t) {
  switch (t) {
    case T::kNegateAA:
      return "nu";
    case T::kReverseAA:
      return "rho";
    case T::kNegateC:
      return "nu3";
    case T::kReverseC:
      return "rho3";
    case T::kNegateD:
      return "nu4";
    case T::kReverseD:
      return "rho4";
    case T::kSwapCD:
      return "sigma";
    case T::kQuadSwap45:
      return "theta";
    case T::kAlternateAll:
      return "alpha";
  }
  return "?";
}

std::vector<ElementaryTransform> NormalFormWord(NormalForm form) {
  std::vector<T> word;
  for (int k = 0; k < 9; ++k) {
    if ((form >> k) & 1) word.push_back(kNormalFormOrder[k]);
  }
  return word;
}

PackedQuad GroupElement::Act(const PackedQuad& s) const {
  return ActWord(word, s);
}

std::string GroupElement::ToString() const {
  if (word.empty()) return "1";
  std::string out;
  for (const T t : word) {
    if (!out.empty()) out += ' ';
    out += GeneratorName(t);
  }
  return out;
}

std::vector<GroupElement> Generators(int n) {
  CheckN(n);
  const std::array<T, 9> order = {T::kNegateAA,   T::kReverseAA, T::kNegateC,
                                  T::kReverseC,   T::kNegateD,   T::kReverseD,
                                  T::kSwapCD,     T::kQuadSwap45, T::kAlternateAll};
  std::vector<GroupElement> out;
  for (const T t : order) {
    const auto pos = std::find(kNormalFormOrder.begin(), kNormalFormOrder.end(), t) -
                     kNormalFormOrder.begin();
    out.push_back(GroupElement{{t}, static_cast<NormalForm>(1u << pos)});
  }
  return out;
}

std::vector<PackedQuad> Probe(int n) {
  CheckN(n);
  if (n <= 20 && BsSpaceSize(n) <= 4096) return WholeBsSpace(n);
  std::mt19937_64 rng(20260101u + static_cast<unsigned>(n));
  std::vector<PackedQuad> probe;
  for (int k = 0; k < 16; ++k) probe.push_back(RandomBsQuad(n, rng));
  return probe;
}

int RealizedOrder(int n) {
  const std::vector<PackedQuad> probe = Probe(n);
  std::unordered_set<std::vector<PackedQuad>, ImageHash> seen;
  std::vector<std::vector<PackedQuad>> frontier = {probe};
  seen.insert(probe);
  while (!frontier.empty()) {
    std::vector<std::vector<PackedQuad>> next;
    for (const auto& images : frontier) {
      for (const T g : kAllTransforms) {
        std::vector<PackedQuad> moved;
        moved.reserve(images.size());
        for (const PackedQuad& q : images) moved.push_back(Apply(g, q));
        if (seen.insert(moved).second) next.push_back(std::move(moved));
      }
    }
    frontier = std::move(next);
  }
  return static_cast<int>(seen.size());
}

int RealizedOrderFromNormalForms(int n) {
  const std::vector<PackedQuad> probe = Probe(n);
  std::set<std::vector<PackedQuad>> actions;
  for (int form = 0; form < kGroupBound; ++form) {
    actions.insert(ActAll(NormalFormWord(static_cast<NormalForm>(form)), probe));
  }
  return static_cast<int>(actions.size());
}

std::optional<NormalForm> Reduce(std::span<const ElementaryTransform> word,
                                 int n) {
  const std::vector<PackedQuad> probe = Probe(n);
  const std::vector<PackedQuad> target = ActAll(word, probe);
  for (int form = 0; form < kGroupBound; ++form) {
    if (ActAll(NormalFormWord(static_cast<NormalForm>(form)), probe) == target) {
      return static_cast<NormalForm>(form);
    }
  }
  return std::nullopt;
}

std::string RelationResult::ToString() const {
  std::string status_text;
  switch (status) {
    case RelationStatus::kPass:
      status_text = "PASS";
      break;
    case RelationStatus::kFail:
      status_text = "FAIL";
      break;
    case RelationStatus::kUnverifiable:
      status_text = "UNVERIFIABLE";
      break;
  }
  std::string out = "n=" + std::to_string(n) + (n % 2 ? " odd " : " even ") +
                    status_text + " " + relation + " (tested " +
                    std::to_string(tested) + ")";
  if (!note.empty()) out += " -- " + note;
  return out;
}

std::vector<RelationResult> VerifyRelations(
    int n, std::span<const PackedQuad> samples) {
  CheckN(n);
  std::vector<RelationResult> out;
  auto check = [&](const std::string& name, std::span<const T> lhs,
                   std::span<const T> rhs, std::string note) {
    RelationResult r{name, n, RelationStatus::kPass, samples.size(), std::move(note)};
    for (const PackedQuad& s : samples) {
      if (ActWord(lhs, s) != ActWord(rhs, s)) {
        r.status = RelationStatus::kFail;
        r.note = "counterexample " + s.ToQuadruple().ToString();
        break;
      }
    }
    out.push_back(std::move(r));
  };
  for (const Relation& rel : StatedRelations(n)) check(rel.name, rel.lhs, rel.rhs, "");

  out.push_back(RelationResult{
      "alpha rho alpha = rho (nu sigma_1)^(n-1)", n,
      RelationStatus::kUnverifiable, 0,
      "sigma_1 is not among the generators; not checked"});
  std::vector<T> rhs = {T::kReverseAA};
  for (int k = 0; k < n - 1; ++k) rhs.push_back(T::kNegateAA);
  const std::vector<T> lhs = {T::kAlternateAll, T::kReverseAA, T::kAlternateAll};
  check("alpha rho alpha = rho nu^(n-1)", lhs, rhs,
        "empirical replacement for the unverifiable relation");
  return out;
}

std::vector<RelationResult> VerifyRelations(int n) {
  CheckN(n);
  std::vector<PackedQuad> samples = Probe(n);
  if (n <= 12) {
    const std::vector<PackedQuad> ns = EnumerateNormal(n);
    samples.insert(samples.end(), ns.begin(), ns.end());
  }
  std::mt19937_64 rng(777u + static_cast<unsigned>(n));
  for (int k = 0; k < 256; ++k) samples.push_back(RandomBsQuad(n, rng));
  return VerifyRelations(n, samples);
}

OrbitPartitionReport OrbitsMatchClasses(int n) {
  OrbitPartitionReport report;
  report.n = n;
  const std::vector<PackedQuad> members = EnumerateNormal(n);
  report.members = members.size();

  std::map<PackedQuad, PackedQuad> canonical_of;
  std::set<PackedQuad> canonical_classes;
  for (const PackedQuad& q : members) {
    const PackedQuad c = Canonicalize(q);
    canonical_of.emplace(q, c);
    canonical_classes.insert(c);
  }
  report.canonical_classes = canonical_classes.size();

  std::set<PackedQuad> visited;
  std::set<PackedQuad> seen_canonical;
  bool match = true;
  for (const PackedQuad& q : members) {
    if (visited.count(q)) continue;
    ++report.closure_orbits;
    const std::vector<PackedQuad> orbit = OrbitByClosure(q);
    const PackedQuad expected = canonical_of.at(q);
    if (!seen_canonical.insert(expected).second) match = false;
    for (const PackedQuad& member : orbit) {
      visited.insert(member);
      const auto it = canonical_of.find(member);
      if (it == canonical_of.end()) {
        report.closed = false;
        match = false;
      } else if (it->second != expected) {
        match = false;
      }
    }
  }
  report.match = match && report.closed &&
                 report.closure_orbits == report.canonical_classes;
  return report;
}

}  // namespace nsq
