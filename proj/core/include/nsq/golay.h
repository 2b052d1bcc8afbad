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

// Golay pairs and their two embeddings into normal quadruples.

#ifndef NSQ_GOLAY_H_
#define NSQ_GOLAY_H_

#include <stdexcept>
#include <utility>
#include <vector>

#include "nsq/sequence.h"

namespace nsq {

// (A;B) with N_A(i) + N_B(i) = 0 for all i >= 1.
struct GolayPair {
  BinarySeq a;
  BinarySeq b;

  friend bool operator==(const GolayPair&, const GolayPair&) = default;
  friend auto operator<=>(const GolayPair&, const GolayPair&) = default;
};

bool IsGolayPair(const BinarySeq& a, const BinarySeq& b);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultGolayBudget = 20;

// Every ordered Golay pair of length n, sorted. Throws BudgetExceeded when
// n > max_n.
std::vector<GolayPair> GolayPairs(int n, int max_n = kDefaultGolayBudget);

// (A;A;B;B) and (B;B;A;A). Throws std::invalid_argument for a non-Golay pair.
std::pair<NormalQuadruple, NormalQuadruple> Embed(const GolayPair& p);

// Whether the two embeddings are equivalent. For even n > 2 this is
// alternate(B) in {A, -A, A', -A'}; otherwise it falls back to orbit
// comparison.
bool TwoEmbeddingsEquivalent(const GolayPair& p);

// Number of distinct canonical forms over both embeddings of every pair.
int GolayTypeClassCount(int n, int max_n = kDefaultGolayBudget);

}  // namespace nsq

#endif  // NSQ_GOLAY_H_
