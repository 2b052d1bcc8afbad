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
#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "nsq/quad_codec.h"
#include "nsq/search.h"
#include "nsq/tables.h"
#include "oracles.h"

namespace nsq {
namespace {

using T = ElementaryTransform;

BinarySeq S(const char* text) { return BinarySeq::Parse(text); }

NormalQuadruple Decode(const std::string& text, int n) {
  const auto [p, q] = ParseCode(text, n);
  return DecodeQuadruple(p, q);
}

std::string Encode(const NormalQuadruple& s) {
  const auto [p, q] = EncodeQuadruple(s);
  return FormatCode(p, q);
}

// Normal quadruples for n <= 7 from the brute-force oracle, gathered once.
const std::vector<PackedQuad>& SmallNormal() {
  static const std::vector<PackedQuad>* all = [] {
    auto* v = new std::vector<PackedQuad>;
    for (int n = 1; n <= 7; ++n) {
      const auto members = oracle::BruteForceNormal(n);
      v->insert(v->end(), members.begin(), members.end());
    }
    return v;
  }();
  return *all;
}

TEST(ApplyTest, Examples) {
  const NormalQuadruple two(S("++"), S("+-"), S("+-"));
  const NormalQuadruple alt = Apply(T::kAlternateAll, two);
  EXPECT_EQ(alt, NormalQuadruple(S("+-"), S("++"), S("++")));

  const NormalQuadruple five = Decode("160 640", 5);
  const NormalQuadruple swapped = Apply(T::kQuadSwap45, five);
  EXPECT_EQ(Encode(swapped), "160 650");
  EXPECT_TRUE(IsNormal(swapped));
  EXPECT_EQ(Apply(T::kNegateC, Apply(T::kNegateC, five)), five);
}

TEST(ApplyTest, MatchesSequenceLevelOracle) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 2000; ++k) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const PackedQuad q = oracle::RandomBsQuad(n, rng);
    for (int g = 0; g < 9; ++g) {
      const PackedQuad expected = oracle::ToPacked(oracle::Generator(g, oracle::FromPacked(q)));
      EXPECT_EQ(Apply(kAllTransforms[g], q), expected) << Name(kAllTransforms[g]);
      EXPECT_EQ(Apply(kAllTransforms[g], q.ToQuadruple()), expected.ToQuadruple());
    }
  }
}

TEST(ApplyTest, QuadSwapMatchesSymbolTranspositionOnCodes) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const PackedQuad q = oracle::RandomBsQuad(n, rng);
    const QuadCode code = DecomposePair(BinarySeq::FromPacked(q.c, n),
                                        BinarySeq::FromPacked(q.d, n));
    const PackedQuad t = Apply(T::kQuadSwap45, q);
    const QuadCode swapped = DecomposePair(BinarySeq::FromPacked(t.c, n),
                                           BinarySeq::FromPacked(t.d, n));
    for (std::size_t i = 0; i < code.quads.size(); ++i) {
      EXPECT_EQ(swapped.quads[i], code.quads[i].Swap45());
    }
    EXPECT_EQ(swapped.central, code.central);
  }
}

TEST(GeneratorPropertyTest, InvolutionsPreservingNormality) {
  std::mt19937_64 rng(23);
  const auto& normal = SmallNormal();
  for (int k = 0; k < 2000; ++k) {
    const PackedQuad q = normal[rng() % normal.size()];
    for (const T t : kAllTransforms) {
      const PackedQuad image = Apply(t, q);
      EXPECT_EQ(Apply(t, image), q);
      EXPECT_TRUE(image.IsNormal());
    }
  }
  for (int k = 0; k < 2000; ++k) {
    const PackedQuad q = oracle::RandomBsQuad(1 + static_cast<int>(rng() % 64), rng);
    for (const T t : kAllTransforms) EXPECT_EQ(Apply(t, Apply(t, q)), q);
  }
}

TEST(GeneratorPropertyTest, QuadSwapPreservesPairNpafSum) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 3000; ++k) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const PackedQuad q = oracle::RandomBsQuad(n, rng);
    const PackedQuad t = Apply(T::kQuadSwap45, q);
    const auto before_c = oracle::DirectNpaf(oracle::Unpack(q.c, n));
    const auto before_d = oracle::DirectNpaf(oracle::Unpack(q.d, n));
    const auto after_c = oracle::DirectNpaf(oracle::Unpack(t.c, n));
    const auto after_d = oracle::DirectNpaf(oracle::Unpack(t.d, n));
    for (int i = 0; i < n; ++i) {
      ASSERT_EQ(before_c[i] + before_d[i], after_c[i] + after_d[i]);
    }
  }
}

TEST(OrbitTest, ProductRouteEqualsClosure) {
  std::mt19937_64 rng(25);
  const auto& normal = SmallNormal();
  for (int k = 0; k < 1000; ++k) {
    const PackedQuad q = normal[rng() % normal.size()];
    const auto product = PackedOrbit(q);
    EXPECT_EQ(product, OrbitByClosure(q));
    std::vector<PackedQuad> independent;
    for (const auto& o : oracle::ClosureOrbit(oracle::FromPacked(q))) {
      independent.push_back(oracle::ToPacked(o));
    }
    std::sort(independent.begin(), independent.end());
    EXPECT_EQ(product, independent);
  }
  for (int k = 0; k < 200; ++k) {
    const PackedQuad q = oracle::RandomBsQuad(8 + static_cast<int>(rng() % 40), rng);
    EXPECT_EQ(PackedOrbit(q), OrbitByClosure(q));
  }
}

TEST(OrbitTest, SizesDivide512) {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 1000; ++k) {
    const PackedQuad q = oracle::RandomBsQuad(1 + static_cast<int>(rng() % 64), rng);
    const std::size_t size = PackedOrbit(q).size();
    EXPECT_EQ(512 % size, 0u) << size;
  }
  const auto orbit = Orbit(NormalQuadruple(S("+"), S("+"), S("+")));
  EXPECT_EQ(512 % orbit.size(), 0u);
}

TEST(OrbitTest, PrintedSmallRepresentatives) {
  const NormalQuadruple four = Decode("16 61", 4);
  const auto orbit = Orbit(four);
  EXPECT_EQ(std::count_if(orbit.begin(), orbit.end(),
                          [](const NormalQuadruple& s) { return IsCanonical(s); }),
            1);
  const std::vector<std::string> seven = {"1660 6122", "6113 1623", "6160 1262",
                                          "6163 1261"};
  for (std::size_t i = 0; i < seven.size(); ++i) {
    for (std::size_t j = i + 1; j < seven.size(); ++j) {
      const auto oi = Orbit(Decode(seven[i], 7));
      const auto oj = Orbit(Decode(seven[j], 7));
      std::vector<NormalQuadruple> common;
      std::set_intersection(oi.begin(), oi.end(), oj.begin(), oj.end(),
                            std::back_inserter(common));
      EXPECT_TRUE(common.empty()) << seven[i] << " vs " << seven[j];
    }
  }
}

TEST(CanonicalTest, Examples) {
  EXPECT_TRUE(IsCanonical(Decode("160 640", 5)));
  EXPECT_TRUE(IsCanonical(Decode("60 11", 3)));
  const NormalQuadruple alt = Apply(T::kAlternateAll, Decode("16 61", 4));
  const CanonicalCheck check = CheckCanonical(alt);
  EXPECT_EQ(check.condition, 1);
  EXPECT_EQ(check.ToString(), "(i) at p_1");
}

TEST(CanonicalTest, PrintedTwoIsNotCanonicalButItsOrbitMateIs) {
  const NormalQuadruple printed = Decode("6 1", 2);
  EXPECT_TRUE(IsNormal(printed));
  EXPECT_EQ(CheckCanonical(printed).condition, 1);
  const NormalQuadruple canonical = Canonicalize(printed);
  EXPECT_EQ(Encode(canonical), "1 6");
  EXPECT_EQ(Encode(Canonicalize(NormalQuadruple(S("++"), S("+-"), S("+-")))), "1 6");
}

TEST(CanonicalTest, DiagnosticsNameTheFirstFailure) {
  // q_1 = 6, q_2 = 2: the first symmetric q-quad is 2.
  EXPECT_EQ(CheckCanonical(Decode("1638163886681331 6241142632488423", 32)).ToString(),
            "(vii) at q_2");
  const std::uint8_t p[] = {6, 8};
  EXPECT_EQ(CheckCanonicalP(p, 0, 5).condition, 2);
  const std::uint8_t p3[] = {1, 3};
  EXPECT_EQ(CheckCanonicalP(p3, -1, 4).condition, 3);
  const std::uint8_t q[] = {6, 1, 7};
  EXPECT_EQ(CheckCanonicalQ(q, -1, 6).condition, 9);
  const std::uint8_t q5[] = {6, 5};
  EXPECT_EQ(CheckCanonicalQ(q5, -1, 4).condition, 10);
}

TEST(CanonicalTest, OddCentralConditions) {
  // (iv): all p-quads skew forces central 0.
  const std::uint8_t skew[] = {6, 6};
  EXPECT_TRUE(CheckCanonicalP(skew, 0, 5).ok());
  EXPECT_EQ(CheckCanonicalP(skew, 3, 5).condition, 4);
  // (v): first same-type pair at i=1 needs p_2 in {1,6}.
  const std::uint8_t same[] = {6, 6, 1};
  EXPECT_TRUE(CheckCanonicalP(same, 0, 7).ok());
  const std::uint8_t bad[] = {6, 3};
  EXPECT_EQ(CheckCanonicalP(bad, 0, 5).condition, 5);
  // (v), second sentence: alternating types ending symmetric forces 0.
  const std::uint8_t alternating[] = {6, 1};
  EXPECT_TRUE(CheckCanonicalP(alternating, 0, 5).ok());
  EXPECT_EQ(CheckCanonicalP(alternating, 3, 5).condition, 5);
  // (xi), (xii).
  const std::uint8_t q[] = {6, 4};
  EXPECT_EQ(CheckCanonicalQ(q, 2, 5).condition, 11);
  EXPECT_EQ(CheckCanonicalQ(q, 1, 5).condition, 12);
  EXPECT_TRUE(CheckCanonicalQ(q, 0, 5).ok());
}

TEST(CanonicalTest, AllOrbitPerturbationsOfPrintedSeven) {
  const NormalQuadruple target = Decode("1660 6122", 7);
  const auto orbit = OrbitByClosure(PackedQuad::From(target));
  for (const PackedQuad& member : orbit) {
    EXPECT_EQ(Canonicalize(member.ToQuadruple()), target);
  }
  // All 512 normal-form words applied to the representative.
  for (int form = 0; form < 512; ++form) {
    PackedQuad q = PackedQuad::From(target);
    for (int k = 0; k < 9; ++k) {
      if ((form >> k) & 1) q = Apply(kAllTransforms[k], q);
    }
    EXPECT_EQ(Canonicalize(q), PackedQuad::From(target));
  }
}

TEST(CanonicalPropertyTest, UniqueIdempotentOrbitConstant) {
  std::mt19937_64 rng(27);
  const auto& normal = SmallNormal();
  for (int k = 0; k < 1500; ++k) {
    const PackedQuad q = normal[rng() % normal.size()];
    EXPECT_EQ(CountCanonicalInOrbit(q), 1);
    const PackedQuad c = Canonicalize(q);
    EXPECT_TRUE(IsCanonical(c));
    EXPECT_EQ(Canonicalize(c), c);
    for (const T t : kAllTransforms) EXPECT_EQ(Canonicalize(Apply(t, q)), c);
  }
}

TEST(CanonicalPropertyTest, PrintedRowsOrbitConstantUnderAlternation) {
  const ReferenceTables tables = LoadTables();
  for (const TableRow& row : tables.reps) {
    if (row.n > 15) continue;
    const NormalQuadruple s = Decode(row.Code(), row.n);
    EXPECT_EQ(Canonicalize(Apply(T::kAlternateAll, s)), Canonicalize(s)) << row.Code();
  }
}

TEST(CanonicalTest, NonBsInputIsRejected) {
  EXPECT_THROW(CheckCanonical(PackedQuad{0, 0, 1, 2}), std::invalid_argument);
}

TEST(EquivalenceTest, Examples) {
  std::mt19937_64 rng(28);
  const auto& normal = SmallNormal();
  for (int k = 0; k < 200; ++k) {
    const NormalQuadruple s = normal[rng() % normal.size()].ToQuadruple();
    EXPECT_TRUE(AreEquivalent(s, Apply(T::kReverseC, s)));
  }
  EXPECT_FALSE(AreEquivalent(Decode("1163 6618", 8), Decode("1613 6168", 8)));
  EXPECT_THROW(AreEquivalent(Decode("16 61", 4), Decode("160 640", 5)),
               std::invalid_argument);
}

TEST(GolayTypeTest, Examples) {
  EXPECT_FALSE(IsGolayType(Decode("60 11", 3)));
  const SearchResult eight = EnumerateClasses(8);
  ASSERT_EQ(eight.classes.size(), 7u);
  int golay = 0;
  for (const ClassRecord& r : eight.classes) golay += IsGolayType(r.Decode());
  EXPECT_EQ(golay, 6);
}

}  // namespace
}  // namespace nsq
