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

#ifndef NSQ_PACKED_QUAD_H_
#define NSQ_PACKED_QUAD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "nsq/bits.h"
#include "nsq/sequence.h"

namespace nsq {

// Bit-packed (A;A;C;D) for n <= 64, used on every hot path. Layout follows
// nsq/bits.h.
struct PackedQuad {
  std::uint64_t a = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  int n = 0;

  static PackedQuad From(const NormalQuadruple& s) {
    return PackedQuad{s.a().Packed(), s.c().Packed(), s.d().Packed(), s.n()};
  }
  NormalQuadruple ToQuadruple() const {
    return NormalQuadruple(BinarySeq::FromPacked(a, n),
                           BinarySeq::FromPacked(c, n),
                           BinarySeq::FromPacked(d, n));
  }

  bool IsNormal() const {
    for (int i = 1; i < n; ++i) {
      if (2 * bits::Npaf(a, n, i) + bits::Npaf(c, n, i) +
              bits::Npaf(d, n, i) !=
          0) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const PackedQuad&, const PackedQuad&) = default;
  friend auto operator<=>(const PackedQuad&, const PackedQuad&) = default;
};

struct PackedQuadHash {
  std::size_t operator()(const PackedQuad& q) const {
    std::uint64_t h = q.a * 0x9E3779B97F4A7C15ULL;
    h ^= q.c + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= q.d * 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(q.n));
  }
};

}  // namespace nsq

#endif  // NSQ_PACKED_QUAD_H_
