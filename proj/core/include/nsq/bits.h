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

// Bit-packed +1/-1 sequences. Bit j holds term j+1; a set bit is -1.

#ifndef NSQ_BITS_H_
#define NSQ_BITS_H_

#include <bit>
#include <cstdint>

namespace nsq::bits {

constexpr std::uint64_t Mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t ReverseBits(std::uint64_t x, int n) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) |
      ((x & 0x0000FFFF0000FFFFULL) << 16);
  x = (x >> 32) | (x << 32);
  return n == 0 ? 0 : x >> (64 - n);
}

// Positions 2, 4, 6, ... (bit indices 1, 3, 5, ...).
constexpr std::uint64_t AlternationMask(int n) {
  return 0xAAAAAAAAAAAAAAAAULL & Mask(n);
}

// N_X(shift) for a fully known sequence of length n.
constexpr int Npaf(std::uint64_t x, int n, int shift) {
  if (shift >= n) return 0;
  const int terms = n - shift;
  return terms - 2 * std::popcount((x ^ (x >> shift)) & Mask(terms));
}

// Sum of the terms.
constexpr int Sum(std::uint64_t x, int n) {
  return n - 2 * std::popcount(x & Mask(n));
}

}  // namespace nsq::bits

#endif  // NSQ_BITS_H_
