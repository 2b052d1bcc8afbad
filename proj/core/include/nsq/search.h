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

// Exhaustive enumeration of the equivalence classes of NS(n).
//
// Only canonical representatives are generated. The outer loop walks the
// p-codes of (A;A) that satisfy the p-side canonical conditions and pass
// integer spectral checks at z = 1, -1, i. For each A the (C;D) pair is
// found by the outward-in branch and bound of nsq/pair_search.h against the
// target N_C + N_D = -2 N_A, with the q-side canonical conditions applied
// symbol by symbol. Every leaf is re-checked (normality, full canonical
// form, orbit canonicalization) before it is emitted.

#ifndef NSQ_SEARCH_H_
#define NSQ_SEARCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nsq/packed_quad.h"
#include "nsq/sequence.h"

namespace nsq {

struct ClassRecord {
  int n = 0;
  int index = 0;  // 1-based rank in (p_code, q_code) order
  std::string p_code;
  std::string q_code;
  bool golay_type = false;

  NormalQuadruple Decode() const;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

// Required N_C + N_D for a given A: entry 0 is 2n, entry i is -2 N_A(i).
NpafTable SearchTarget(const BinarySeq& a);

struct SearchOptions {
  int threads = 1;
  // Integer spectral pre-checks on A (z = 1, -1, i). Sound; off only for
  // testing that they do not change the result.
  bool spectral_filter = true;
};

struct SearchStats {
  bool three_squares_short_circuit = false;
  std::uint64_t a_candidates = 0;    // p-codes passing conditions (i)-(v)
  std::uint64_t a_searched = 0;      // after the spectral checks
  std::uint64_t nodes = 0;           // branch-and-bound nodes over (C;D)
};

struct SearchResult {
  int n = 0;
  std::vector<ClassRecord> classes;
  SearchStats stats;
};

// One record per equivalence class of NS(n), sorted, duplicate-free. Empty
// when NS(n) is empty. Requires 1 <= n <= 64.
SearchResult EnumerateClasses(int n, const SearchOptions& options = {});

struct SummaryRow {
  int n = 0;
  int equ = 0;
  int gol = 0;
  int spo = 0;
  bool three_squares_short_circuit = false;
};

std::vector<SummaryRow> Summarize(int n_lo, int n_hi,
                                  const SearchOptions& options = {});

// Every A of length n (packed) whose (A;A) code satisfies the p-side
// canonical conditions, in p-code lexicographic order.
std::vector<std::uint64_t> CanonicalACandidates(int n);

// Every member of NS(n), with no symmetry reduction: all 2^n sequences A,
// and all sixteen sign patterns per (C;D) quad. Sorted.
std::vector<PackedQuad> EnumerateNormal(int n);

// Integer spectral necessary condition on A alone.
bool SpectralFeasible(std::uint64_t a, int n);

}  // namespace nsq

#endif  // NSQ_SEARCH_H_
