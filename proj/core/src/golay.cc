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

#include "nsq/golay.h"

#include <algorithm>
#include <string>

#include "nsq/equivalence.h"
#include "nsq/packed_quad.h"
#include "nsq/pair_search.h"

namespace nsq {

bool IsGolayPair(const BinarySeq& a, const BinarySeq& b) {
  if (a.size() != b.size()) return false;
  const NpafTable na = Npaf(a), nb = Npaf(b);
  for (int i = 1; i < a.size(); ++i) {
    if (na[i] + nb[i] != 0) return false;
  }
  return true;
}

std::vector<GolayPair> GolayPairs(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > max_n || n > kMaxPackedLength) {
    throw BudgetExceeded("Golay search for n=" + std::to_string(n) +
                         " exceeds the budget n <= " + std::to_string(max_n));
  }
  std::vector<GolayPair> out;
  // All sixteen quad patterns: no assumption about which quads occur.
  SearchPairs(PairTarget(n, std::vector<int>(static_cast<std::size_t>(n), 0)),
              AllQuadChoices(), AllCentralChoices(), AcceptAllFilter{},
              [&](std::uint64_t a, std::uint64_t b) {
                out.push_back(GolayPair{BinarySeq::FromPacked(a, n),
                                        BinarySeq::FromPacked(b, n)});
              });
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<NormalQuadruple, NormalQuadruple> Embed(const GolayPair& p) {
  if (!IsGolayPair(p.a, p.b)) {
    throw std::invalid_argument("Embed requires a Golay pair");
  }
  return {NormalQuadruple(p.a, p.b, p.b), NormalQuadruple(p.b, p.a, p.a)};
}

bool TwoEmbeddingsEquivalent(const GolayPair& p) {
  const int n = p.a.size();
  if (n % 2 == 0 && n > 2) {
    const BinarySeq alt = Alternate(p.b);
    const BinarySeq rev = Reverse(p.a);
    return alt == p.a || alt == Negate(p.a) || alt == rev || alt == Negate(rev);
  }
  const auto [first, second] = Embed(p);
  return AreEquivalent(first, second);
}

int GolayTypeClassCount(int n, int max_n) {
  const std::vector<GolayPair> pairs = GolayPairs(n, max_n);
  std::vector<PackedQuad> embeddings;
  embeddings.reserve(2 * pairs.size());
  for (const GolayPair& p : pairs) {
    const std::uint64_t a = p.a.Packed(), b = p.b.Packed();
    embeddings.push_back(PackedQuad{a, b, b, n});
    embeddings.push_back(PackedQuad{b, a, a, n});
  }
  std::sort(embeddings.begin(), embeddings.end());
  embeddings.erase(std::unique(embeddings.begin(), embeddings.end()),
                   embeddings.end());
  std::vector<PackedQuad> canonical;
  canonical.reserve(embeddings.size());
  for (const PackedQuad& e : embeddings) canonical.push_back(Canonicalize(e));
  std::sort(canonical.begin(), canonical.end());
  return static_cast<int>(std::unique(canonical.begin(), canonical.end()) -
                          canonical.begin());
}

}  // namespace nsq
