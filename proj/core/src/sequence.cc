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

#include "nsq/sequence.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nsq/bits.h"

namespace nsq {

BinarySeq::BinarySeq(std::vector<std::int8_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("binary sequence must have length >= 1");
  }
  for (const std::int8_t t : terms_) {
    if (t != 1 && t != -1) {
      throw std::invalid_argument("binary sequence term must be +1 or -1, got " +
                                  std::to_string(t));
    }
  }
}

BinarySeq BinarySeq::FromPacked(std::uint64_t bits, int n) {
  if (n < 1 || n > kMaxPackedLength) {
    throw std::invalid_argument("packed length out of range: " +
                                std::to_string(n));
  }
  std::vector<std::int8_t> terms(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) terms[j] = ((bits >> j) & 1) ? -1 : 1;
  return BinarySeq(std::move(terms));
}

BinarySeq BinarySeq::Parse(std::string_view text) {
  std::vector<std::int8_t> terms;
  for (const char ch : text) {
    switch (ch) {
      case '+':
        terms.push_back(1);
        break;
      case '-':
        terms.push_back(-1);
        break;
      case ',':
      case ' ':
      case '\t':
        break;
      default:
        throw std::invalid_argument("unexpected character '" +
                                    std::string(1, ch) + "' in sequence \"" +
                                    std::string(text) + "\"");
    }
  }
  return BinarySeq(std::move(terms));
}

std::uint64_t BinarySeq::Packed() const {
  if (size() > kMaxPackedLength) {
    throw std::length_error("sequence too long to pack: " +
                            std::to_string(size()));
  }
  std::uint64_t bits = 0;
  for (int j = 0; j < size(); ++j) {
    if (terms_[j] < 0) bits |= std::uint64_t{1} << j;
  }
  return bits;
}

std::string BinarySeq::ToString() const {
  std::string out;
  out.reserve(terms_.size());
  for (const std::int8_t t : terms_) out.push_back(t > 0 ? '+' : '-');
  return out;
}

int NpafTable::operator[](int shift) const {
  if (shift < 0) shift = -shift;
  if (shift >= n()) return 0;
  return values_[static_cast<std::size_t>(shift)];
}

bool NpafTable::IsDelta() const {
  return std::all_of(values_.begin() + (values_.empty() ? 0 : 1),
                     values_.end(), [](int v) { return v == 0; });
}

NormalQuadruple::NormalQuadruple(BinarySeq a, BinarySeq c, BinarySeq d)
    : a_(std::move(a)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.size() != c_.size() || a_.size() != d_.size()) {
    throw std::invalid_argument("quadruple sequences must share one length");
  }
  valid_ = NpafSum(*this).IsDelta();
}

std::string NormalQuadruple::ToString() const {
  return "A=" + a_.ToString() + "; C=" + c_.ToString() +
         "; D=" + d_.ToString();
}

std::strong_ordering operator<=>(const NormalQuadruple& x,
                                 const NormalQuadruple& y) {
  if (auto cmp = x.a_ <=> y.a_; cmp != 0) return cmp;
  if (auto cmp = x.c_ <=> y.c_; cmp != 0) return cmp;
  return x.d_ <=> y.d_;
}

NpafTable Npaf(const BinarySeq& s) {
  const int n = s.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  if (n <= kMaxPackedLength) {
    const std::uint64_t x = s.Packed();
    for (int i = 0; i < n; ++i) values[i] = bits::Npaf(x, n, i);
  } else {
    const auto t = s.terms();
    for (int i = 0; i < n; ++i) {
      int acc = 0;
      for (int j = 0; j + i < n; ++j) acc += t[j] * t[j + i];
      values[i] = acc;
    }
  }
  return NpafTable(std::move(values));
}

NpafTable NpafSum(const NormalQuadruple& quad) {
  const NpafTable na = Npaf(quad.a());
  const NpafTable nc = Npaf(quad.c());
  const NpafTable nd = Npaf(quad.d());
  std::vector<int> values(static_cast<std::size_t>(quad.n()));
  for (int i = 0; i < quad.n(); ++i) values[i] = 2 * na[i] + nc[i] + nd[i];
  return NpafTable(std::move(values));
}

BinarySeq Negate(const BinarySeq& s) {
  std::vector<std::int8_t> t(s.terms().begin(), s.terms().end());
  for (auto& v : t) v = static_cast<std::int8_t>(-v);
  return BinarySeq(std::move(t));
}

BinarySeq Reverse(const BinarySeq& s) {
  std::vector<std::int8_t> t(s.terms().rbegin(), s.terms().rend());
  return BinarySeq(std::move(t));
}

BinarySeq Alternate(const BinarySeq& s) {
  std::vector<std::int8_t> t(s.terms().begin(), s.terms().end());
  for (std::size_t j = 1; j < t.size(); j += 2) t[j] = static_cast<std::int8_t>(-t[j]);
  return BinarySeq(std::move(t));
}

BinarySeq Concat(const BinarySeq& s, const BinarySeq& t) {
  std::vector<std::int8_t> out(s.terms().begin(), s.terms().end());
  out.insert(out.end(), t.terms().begin(), t.terms().end());
  return BinarySeq(std::move(out));
}

bool IsBaseSequences(const BinarySeq& a, const BinarySeq& b,
                     const BinarySeq& c, const BinarySeq& d) {
  if (a.size() != b.size() || c.size() != d.size()) {
    throw std::invalid_argument(
        "base sequences need |A| = |B| and |C| = |D|");
  }
  const NpafTable na = Npaf(a), nb = Npaf(b), nc = Npaf(c), nd = Npaf(d);
  const int top = std::max(a.size(), c.size());
  for (int i = 1; i < top; ++i) {
    if (na[i] + nb[i] + nc[i] + nd[i] != 0) return false;
  }
  return true;
}

bool IsBaseSequences(const BaseQuadruple& q) {
  return IsBaseSequences(q.a, q.b, q.c, q.d);
}

bool IsNormal(const NormalQuadruple& quad) { return quad.valid(); }

bool ThreeSquaresFeasible(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long long v = 2LL * n;
  while (v % 4 == 0) v /= 4;
  return v % 8 != 7;
}

BaseQuadruple EmbedBs(const NormalQuadruple& quad) {
  if (!quad.valid()) {
    throw std::invalid_argument("EmbedBs requires a normal quadruple");
  }
  const BinarySeq plus({1});
  const BinarySeq minus({-1});
  return BaseQuadruple{Concat(quad.a(), plus), Concat(quad.a(), minus),
                       quad.c(), quad.d()};
}

}  // namespace nsq
