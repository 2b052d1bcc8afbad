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

// Outward-in branch and bound over sequence pairs (X;Y) of length n with a
// prescribed combined autocorrelation N_X(i) + N_Y(i) = target[i], i >= 1.
//
// Quad k (1-based) fixes positions k and n+1-k of both rows. Once quads
// 1..k are placed, every shift i >= n-k is fully determined, so level k
// checks shift n-k exactly. Shifts below n-k are bounded: the known part
// of the sum plus the number of still-open products must be able to reach
// the target. The central column (odd n) is placed last.

#ifndef NSQ_PAIR_SEARCH_H_
#define NSQ_PAIR_SEARCH_H_

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "nsq/bits.h"
#include "nsq/quad_codec.h"

namespace nsq {

// A quad candidate: its sign pattern and the label the filter sees.
struct QuadChoice {
  QuadPattern pattern;
  std::uint8_t label;
};

// Filter that accepts everything.
struct AcceptAllFilter {
  struct State {};
  bool Quad(const State&, int /*level*/, std::uint8_t /*label*/,
            State& /*next*/) const {
    return true;
  }
  bool Central(const State&, std::uint8_t /*label*/) const { return true; }
};

// Combined-NPAF target for the pair. target[0] is ignored.
class PairTarget {
 public:
  PairTarget(int n, std::vector<int> target) : n_(n), target_(std::move(target)) {
    if (n < 1 || n > 64) throw std::invalid_argument("pair search needs 1 <= n <= 64");
    if (static_cast<int>(target_.size()) != n) {
      throw std::invalid_argument("pair target must have n entries");
    }
  }
  int n() const { return n_; }
  int operator[](int shift) const { return target_[static_cast<std::size_t>(shift)]; }

 private:
  int n_;
  std::vector<int> target_;
};

namespace internal {

// Partial combined correlation at `shift` over the products whose both
// positions are known (positions 0..k-1 and n-k..n-1), and the count of
// products still open.
inline void PartialCorrelation(std::uint64_t x, std::uint64_t y,
                               std::uint64_t known, int n, int shift,
                               int& value, int& open) {
  const int terms = n - shift;
  const std::uint64_t window = bits::Mask(terms);
  const std::uint64_t both = known & (known >> shift) & window;
  const int k = std::popcount(both);
  value = 2 * k - 2 * std::popcount((x ^ (x >> shift)) & both) -
          2 * std::popcount((y ^ (y >> shift)) & both);
  open = 2 * (terms - k);
}

template <typename Filter, typename Visitor>
class PairSearcher {
 public:
  PairSearcher(const PairTarget& target, std::span<const QuadChoice> quads,
               std::span<const std::uint8_t> centrals, const Filter& filter,
               Visitor& visitor)
      : target_(target),
        n_(target.n()),
        m_(target.n() / 2),
        quads_(quads),
        centrals_(centrals),
        filter_(filter),
        visitor_(visitor) {}

  void Run() {
    typename Filter::State root{};
    Place(0, 0, 0, 0, root);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // All shifts in [1, hi] are determined; verify them.
  bool CheckAll(std::uint64_t x, std::uint64_t y, int hi) const {
    for (int s = 1; s <= hi; ++s) {
      if (bits::Npaf(x, n_, s) + bits::Npaf(y, n_, s) != target_[s]) return false;
    }
    return true;
  }

  // Open shifts (below n-k) whose target is out of reach.
  bool Feasible(std::uint64_t x, std::uint64_t y, std::uint64_t known,
                int below) const {
    for (int s = below - 1; s >= 1; --s) {
      int value = 0, open = 0;
      PartialCorrelation(x, y, known, n_, s, value, open);
      const int gap = target_[s] - value;
      if (gap > open || gap < -open) return false;
    }
    return true;
  }

  void Place(int k, std::uint64_t x, std::uint64_t y, std::uint64_t known,
             const typename Filter::State& state) {
    ++nodes_;
    if (k == m_) {
      if (n_ % 2 == 0) {
        if (CheckAll(x, y, m_ - 1)) visitor_(x, y);
        return;
      }
      for (const std::uint8_t label : centrals_) {
        if (!filter_.Central(state, label)) continue;
        const std::uint8_t pattern = CentralSymbol(label).pattern();
        const std::uint64_t cx = x | (std::uint64_t{pattern & 1u} << m_);
        const std::uint64_t cy = y | (std::uint64_t{(pattern >> 1) & 1u} << m_);
        if (CheckAll(cx, cy, m_)) visitor_(cx, cy);
      }
      return;
    }
    const int lo = k;
    const int hi = n_ - 1 - k;
    const int shift = n_ - 1 - k;  // newly determined by this quad
    const std::uint64_t next_known =
        known | (std::uint64_t{1} << lo) | (std::uint64_t{1} << hi);
    for (const QuadChoice& choice : quads_) {
      typename Filter::State next_state{};
      if (!filter_.Quad(state, k, choice.label, next_state)) continue;
      const QuadPattern p = choice.pattern;
      const std::uint64_t nx = x | (std::uint64_t{p & 1u} << lo) |
                               (std::uint64_t{(p >> 1) & 1u} << hi);
      const std::uint64_t ny = y | (std::uint64_t{(p >> 2) & 1u} << lo) |
                               (std::uint64_t{(p >> 3) & 1u} << hi);
      if (bits::Npaf(nx, n_, shift) + bits::Npaf(ny, n_, shift) !=
          target_[shift]) {
        continue;
      }
      if (!Feasible(nx, ny, next_known, shift)) continue;
      Place(k + 1, nx, ny, next_known, next_state);
    }
  }

  const PairTarget& target_;
  const int n_;
  const int m_;
  std::span<const QuadChoice> quads_;
  std::span<const std::uint8_t> centrals_;
  const Filter& filter_;
  Visitor& visitor_;
  std::uint64_t nodes_ = 0;
};

}  // namespace internal

// Visits every pair (x, y) (packed, see nsq/bits.h) whose quads come from
// `quads`, whose central column (odd n) comes from `centrals`, that the
// filter accepts, and that meets the target. Returns the node count.
template <typename Filter, typename Visitor>
std::uint64_t SearchPairs(const PairTarget& target,
                          std::span<const QuadChoice> quads,
                          std::span<const std::uint8_t> centrals,
                          const Filter& filter, Visitor&& visitor) {
  internal::PairSearcher<Filter, std::remove_reference_t<Visitor>> searcher(
      target, quads, centrals, filter, visitor);
  searcher.Run();
  return searcher.nodes();
}

// The eight BS-quads in label order.
std::span<const QuadChoice> BsQuadChoices();
// All sixteen sign patterns (label 0 for the non-BS ones).
std::span<const QuadChoice> AllQuadChoices();
// Central labels 0..3.
std::span<const std::uint8_t> AllCentralChoices();

}  // namespace nsq

#endif  // NSQ_PAIR_SEARCH_H_
