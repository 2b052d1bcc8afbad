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

// Quad decomposition of a sequence pair (X;Y) of length n = 2m or 2m+1.
//
// Quad i (1 <= i <= m) is the 2x2 sign matrix
//
//   [ x_i  x_{n+1-i} ]
//   [ y_i  y_{n+1-i} ]
//
// and, for odd n, the central column is [x_{m+1}; y_{m+1}]. Normal
// quadruples only ever produce the eight quads below, labeled 1..8:
//
//   1 = [++;++]  2 = [++;--]  3 = [-+;-+]  4 = [+-;-+]
//   5 = [-+;+-]  6 = [+-;+-]  7 = [--;++]  8 = [--;--]
//
// Central columns are labeled 0 = [+;+], 1 = [+;-], 2 = [-;+], 3 = [-;-].
// A pair (A;A) uses only quads {1,3,6,8} and centrals {0,3}.

#ifndef NSQ_QUAD_CODEC_H_
#define NSQ_QUAD_CODEC_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsq/sequence.h"

namespace nsq {

enum class SymmetryType { kSymmetric, kSkew };

// Sign pattern of a quad: bit 0 = x_i, bit 1 = x_{n+1-i}, bit 2 = y_i,
// bit 3 = y_{n+1-i}; a set bit is -1.
using QuadPattern = std::uint8_t;

class QuadSymbol {
 public:
  // Throws std::invalid_argument unless 1 <= label <= 8.
  constexpr explicit QuadSymbol(int label) : label_(Check(label)) {}

  // Returns nullopt for the eight sign patterns that are not BS-quads.
  static constexpr std::optional<QuadSymbol> FromPattern(QuadPattern pattern);

  constexpr int label() const { return label_; }
  constexpr QuadPattern pattern() const { return kPatterns[label_]; }
  constexpr SymmetryType symmetry() const {
    return (label_ == 1 || label_ == 2 || label_ == 7 || label_ == 8)
               ? SymmetryType::kSymmetric
               : SymmetryType::kSkew;
  }
  constexpr bool IsAA() const {
    return label_ == 1 || label_ == 3 || label_ == 6 || label_ == 8;
  }

  // Symbol-level images of the elementary maps on a pair.
  constexpr QuadSymbol NegateBoth() const { return Map(pattern() ^ 0xF); }
  constexpr QuadSymbol NegateTop() const { return Map(pattern() ^ 0x3); }
  constexpr QuadSymbol NegateBottom() const { return Map(pattern() ^ 0xC); }
  constexpr QuadSymbol ReverseTop() const {
    const QuadPattern p = pattern();
    return Map((p & 0xC) | ((p & 1) << 1) | ((p >> 1) & 1));
  }
  constexpr QuadSymbol ReverseBottom() const {
    const QuadPattern p = pattern();
    return Map((p & 0x3) | ((p & 4) << 1) | ((p >> 1) & 4));
  }
  constexpr QuadSymbol ReverseBoth() const {
    return ReverseTop().ReverseBottom();
  }
  constexpr QuadSymbol SwapRows() const {
    const QuadPattern p = pattern();
    return Map(((p & 0x3) << 2) | ((p >> 2) & 0x3));
  }
  // The transposition (4 5).
  constexpr QuadSymbol Swap45() const {
    return label_ == 4 ? QuadSymbol(5) : label_ == 5 ? QuadSymbol(4) : *this;
  }

  friend constexpr bool operator==(QuadSymbol, QuadSymbol) = default;
  friend constexpr auto operator<=>(QuadSymbol, QuadSymbol) = default;

 private:
  static constexpr std::array<QuadPattern, 9> kPatterns = {
      0, 0b0000, 0b1100, 0b0101, 0b0110, 0b1001, 0b1010, 0b0011, 0b1111};

  static constexpr int Check(int label) {
    if (label < 1 || label > 8) {
      throw std::invalid_argument("quad symbol must be 1..8");
    }
    return label;
  }
  static constexpr QuadSymbol Map(int pattern) {
    return *FromPattern(static_cast<QuadPattern>(pattern));
  }

  std::uint8_t label_;
};

constexpr std::optional<QuadSymbol> QuadSymbol::FromPattern(
    QuadPattern pattern) {
  for (int label = 1; label <= 8; ++label) {
    if (kPatterns[label] == (pattern & 0xF)) return QuadSymbol(label);
  }
  return std::nullopt;
}

// Bit 0 = x_{m+1}, bit 1 = y_{m+1}; a set bit is -1.
class CentralSymbol {
 public:
  // Throws std::invalid_argument unless 0 <= label <= 3.
  constexpr explicit CentralSymbol(int label) : label_(Check(label)) {}
  static constexpr CentralSymbol FromPattern(std::uint8_t pattern) {
    // 0 -> 0, x -> 2, y -> 1, both -> 3
    constexpr std::array<int, 4> kLabels = {0, 2, 1, 3};
    return CentralSymbol(kLabels[pattern & 3]);
  }

  constexpr int label() const { return label_; }
  constexpr std::uint8_t pattern() const {
    constexpr std::array<std::uint8_t, 4> kPatterns = {0, 2, 1, 3};
    return kPatterns[label_];
  }
  constexpr bool IsAA() const { return label_ == 0 || label_ == 3; }

  friend constexpr bool operator==(CentralSymbol, CentralSymbol) = default;
  friend constexpr auto operator<=>(CentralSymbol, CentralSymbol) = default;

 private:
  static constexpr int Check(int label) {
    if (label < 0 || label > 3) {
      throw std::invalid_argument("central symbol must be 0..3");
    }
    return label;
  }

  std::uint8_t label_;
};

// kAA encodes a repeated pair (A;A) (the p-code); kCD encodes (C;D) (the
// q-code).
enum class QuadKind { kAA, kCD };

struct QuadCode {
  QuadKind kind = QuadKind::kCD;
  std::vector<QuadSymbol> quads;
  std::optional<CentralSymbol> central;  // present iff n is odd

  int n() const {
    return 2 * static_cast<int>(quads.size()) + (central ? 1 : 0);
  }
  // Digit string, e.g. "1660".
  std::string ToString() const;

  friend bool operator==(const QuadCode&, const QuadCode&) = default;
};

// Throws std::invalid_argument on a length mismatch, when kind is kAA and
// x != y, or when some quad is not one of the eight BS-quads.
QuadCode DecomposePair(const BinarySeq& x, const BinarySeq& y,
                       QuadKind kind = QuadKind::kCD);

// Throws std::invalid_argument when the code does not describe a pair of
// length n or an AA-code uses a symbol outside {1,3,6,8} / {0,3}.
std::pair<BinarySeq, BinarySeq> ComposePair(const QuadCode& code, int n);

void ValidateCode(const QuadCode& code, int n);

SymmetryType Symmetry(QuadSymbol q);

// Parses "<pcode> <qcode>" for a known length n.
std::pair<QuadCode, QuadCode> ParseCode(std::string_view text, int n);

// Same, inferring n from the digit count (2L or 2L-1). Throws when both
// parities are well-formed and neither or both decode to a normal
// quadruple.
std::pair<QuadCode, QuadCode> ParseCode(std::string_view text);

std::string FormatCode(const QuadCode& p, const QuadCode& q);

// Code pair <-> quadruple.
NormalQuadruple DecodeQuadruple(const QuadCode& p, const QuadCode& q);
std::pair<QuadCode, QuadCode> EncodeQuadruple(const NormalQuadruple& s);

}  // namespace nsq

#endif  // NSQ_QUAD_CODEC_H_
