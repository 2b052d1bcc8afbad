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

// Binary (+1/-1) sequences and their nonperiodic autocorrelation algebra.
//
// A sequence X = x_1..x_n has NPAF N_X(i) = sum_j x_j x_{i+j}, with x_k = 0
// outside 1..n. Tables hold the one-sided values i = 0..n-1; N_X(-i) = N_X(i)
// and N_X(i) = 0 for i >= n.

#ifndef NSQ_SEQUENCE_H_
#define NSQ_SEQUENCE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsq {

// Longest sequence that fits the bit-packed fast paths.
inline constexpr int kMaxPackedLength = 64;

class BinarySeq {
 public:
  // Throws std::invalid_argument if `terms` is empty or holds anything other
  // than +1/-1.
  explicit BinarySeq(std::vector<std::int8_t> terms);

  // Bit j of `bits` set means term j+1 is -1. Requires 1 <= n <= 64.
  static BinarySeq FromPacked(std::uint64_t bits, int n);

  // Accepts "+-+" and "+,-,+" (whitespace ignored).
  static BinarySeq Parse(std::string_view text);

  int size() const { return static_cast<int>(terms_.size()); }
  // 0-based access.
  int operator[](int i) const { return terms_[static_cast<std::size_t>(i)]; }
  std::span<const std::int8_t> terms() const { return terms_; }

  // Inverse of FromPacked. Throws std::length_error if size() > 64.
  std::uint64_t Packed() const;

  // '+'/'-' glyphs, no separators.
  std::string ToString() const;

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;
  friend auto operator<=>(const BinarySeq&, const BinarySeq&) = default;

 private:
  std::vector<std::int8_t> terms_;
};

class NpafTable {
 public:
  NpafTable() = default;
  explicit NpafTable(std::vector<int> values) : values_(std::move(values)) {}

  // Number of stored shifts (the sequence length).
  int n() const { return static_cast<int>(values_.size()); }
  // Shifts outside 0..n-1 read as zero; negative shifts mirror.
  int operator[](int shift) const;
  std::span<const int> values() const { return values_; }

  // True iff every shift i >= 1 is zero.
  bool IsDelta() const;

  friend bool operator==(const NpafTable&, const NpafTable&) = default;

 private:
  std::vector<int> values_;
};

// (A;A;C;D), with A standing for the repeated first pair.
class NormalQuadruple {
 public:
  // Throws std::invalid_argument unless a, c, d share one length.
  NormalQuadruple(BinarySeq a, BinarySeq c, BinarySeq d);

  int n() const { return a_.size(); }
  const BinarySeq& a() const { return a_; }
  const BinarySeq& c() const { return c_; }
  const BinarySeq& d() const { return d_; }

  // Whether 2 N_A + N_C + N_D vanishes at every nonzero shift; computed once
  // at construction.
  bool valid() const { return valid_; }

  std::string ToString() const;

  friend bool operator==(const NormalQuadruple& x, const NormalQuadruple& y) {
    return x.a_ == y.a_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const NormalQuadruple& x,
                                          const NormalQuadruple& y);

 private:
  BinarySeq a_;
  BinarySeq c_;
  BinarySeq d_;
  bool valid_ = false;
};

// (A;B;C;D) with |A| = |B| = m and |C| = |D| = n.
struct BaseQuadruple {
  BinarySeq a;
  BinarySeq b;
  BinarySeq c;
  BinarySeq d;
};

NpafTable Npaf(const BinarySeq& s);

// 2 N_A + N_C + N_D; entry 0 equals 4n.
NpafTable NpafSum(const NormalQuadruple& quad);

BinarySeq Negate(const BinarySeq& s);
BinarySeq Reverse(const BinarySeq& s);
// a_1, -a_2, a_3, -a_4, ...
BinarySeq Alternate(const BinarySeq& s);
BinarySeq Concat(const BinarySeq& s, const BinarySeq& t);

// Throws std::invalid_argument unless |a| = |b| and |c| = |d|.
bool IsBaseSequences(const BinarySeq& a, const BinarySeq& b,
                     const BinarySeq& c, const BinarySeq& d);
bool IsBaseSequences(const BaseQuadruple& q);

bool IsNormal(const NormalQuadruple& quad);

// Necessary condition for NS(n) to be nonempty: 2n is a sum of three
// squares, i.e. not of the form 4^a (8b + 7). Requires n >= 1.
bool ThreeSquaresFeasible(int n);

// (A,+ ; A,- ; C ; D), a member of BS(n+1, n). Throws std::invalid_argument
// if `quad` is not normal.
BaseQuadruple EmbedBs(const NormalQuadruple& quad);

}  // namespace nsq

#endif  // NSQ_SEQUENCE_H_
