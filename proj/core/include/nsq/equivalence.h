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

// Equivalence of normal quadruples (A;A;C;D).
//
// Two quadruples are equivalent when a finite chain of elementary
// transformations maps one to the other. The transformations are
//
//   negate A (both copies), C or D;  reverse A (both copies), C or D;
//   swap C and D;  exchange quad symbols 4 and 5 in the (C;D) code;
//   alternate all of A, C, D.
//
// Each is an involution, so orbits have at most 512 members. Every orbit
// holds exactly one quadruple in canonical form (twelve conditions on the
// p- and q-codes, checked by CheckCanonical).

#ifndef NSQ_EQUIVALENCE_H_
#define NSQ_EQUIVALENCE_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsq/packed_quad.h"
#include "nsq/quad_codec.h"
#include "nsq/sequence.h"

namespace nsq {

enum class ElementaryTransform : std::uint8_t {
  kNegateAA,
  kReverseAA,
  kNegateC,
  kReverseC,
  kNegateD,
  kReverseD,
  kSwapCD,
  kQuadSwap45,
  kAlternateAll,
};

inline constexpr std::array<ElementaryTransform, 9> kAllTransforms = {
    ElementaryTransform::kNegateAA,  ElementaryTransform::kReverseAA,
    ElementaryTransform::kNegateC,   ElementaryTransform::kReverseC,
    ElementaryTransform::kNegateD,   ElementaryTransform::kReverseD,
    ElementaryTransform::kSwapCD,    ElementaryTransform::kQuadSwap45,
    ElementaryTransform::kAlternateAll,
};

std::string_view Name(ElementaryTransform t);

// Acts on any quadruple, normal or not. QuadSwap45 negates the four entries
// of every (C;D) quad whose pattern is 4 or 5; the central column is fixed.
PackedQuad Apply(ElementaryTransform t, const PackedQuad& s);
NormalQuadruple Apply(ElementaryTransform t, const NormalQuadruple& s);

// Orbit under the nine generators, sorted by NormalQuadruple ordering.
std::vector<NormalQuadruple> Orbit(const NormalQuadruple& s);

// Orbit as the product (A-orbit under negate/reverse) x ((C;D)-orbit under
// the six pair maps), closed under alternation. Sorted, duplicate-free.
std::vector<PackedQuad> PackedOrbit(const PackedQuad& s);

// Breadth-first closure under the nine generators; element k of `distance`
// is the generator count from `s` to element k. Sorted, duplicate-free.
std::vector<PackedQuad> OrbitByClosure(const PackedQuad& s,
                                       std::vector<int>* distance = nullptr);

// Result of testing the twelve canonical-form conditions. `condition` is
// 1..12 for the first violated condition (0 when canonical), `code` is 'p'
// or 'q' and `index` the 1-based symbol position that triggered it.
struct CanonicalCheck {
  int condition = 0;
  char code = ' ';
  int index = 0;

  bool ok() const { return condition == 0; }
  // "canonical" or e.g. "(viii) at q_3".
  std::string ToString() const;
};

std::string RomanNumeral(int condition);

// The conditions split cleanly: (i)-(v) read only the p-code and
// (vi)-(xii) only the q-code.
CanonicalCheck CheckCanonicalP(std::span<const std::uint8_t> quads,
                               int central, int n);
CanonicalCheck CheckCanonicalQ(std::span<const std::uint8_t> quads,
                               int central, int n);

CanonicalCheck CheckCanonical(const QuadCode& p, const QuadCode& q);
CanonicalCheck CheckCanonical(const NormalQuadruple& s);
CanonicalCheck CheckCanonical(const PackedQuad& s);

bool IsCanonical(const NormalQuadruple& s);
bool IsCanonical(const PackedQuad& s);

// Raised when an orbit holds zero or several canonical members.
class CanonicalFormError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The unique canonical orbit member. Throws CanonicalFormError if the orbit
// does not contain exactly one, and std::invalid_argument for n > 64.
NormalQuadruple Canonicalize(const NormalQuadruple& s);
PackedQuad Canonicalize(const PackedQuad& s);

// Number of canonical members of the orbit of s (1 for every normal s).
int CountCanonicalInOrbit(const PackedQuad& s);

// Throws std::invalid_argument on a length mismatch.
bool AreEquivalent(const NormalQuadruple& s1, const NormalQuadruple& s2);

// Some orbit member has C = D, i.e. s is equivalent to an embedding
// (A;A;B;B) of a Golay pair (A;B).
bool IsGolayType(const NormalQuadruple& s);
bool IsGolayType(const PackedQuad& s);

}  // namespace nsq

#endif  // NSQ_EQUIVALENCE_H_
