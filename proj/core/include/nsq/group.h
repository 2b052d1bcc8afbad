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

// The symmetry group of NS(n), realized concretely as the transformation
// group generated by nine involutions acting on quadruples (A;A;C;D):
//
//   nu    = negate A        rho   = reverse A
//   nu3   = negate C        rho3  = reverse C
//   nu4   = negate D        rho4  = reverse D
//   sigma = swap C and D    theta = exchange quad symbols 4 and 5 in (C;D)
//   alpha = alternate A, C and D
//
// Every element has a normal form alpha^s nu^a rho^b nu3^c rho3^d nu4^e
// rho4^f sigma^g theta^h, so the group has at most 512 elements. Actions are
// evaluated on the space where normal quadruples live: every (C;D) quad is
// one of the eight BS-quads.

#ifndef NSQ_GROUP_H_
#define NSQ_GROUP_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsq/equivalence.h"
#include "nsq/packed_quad.h"

namespace nsq {

// Exponent vector (s; nu, rho; nu3, rho3, nu4, rho4; sigma; theta), bit k
// holding entry k.
using NormalForm = std::uint16_t;
inline constexpr int kGroupBound = 512;

// The normal form as a word, leftmost factor first.
std::vector<ElementaryTransform> NormalFormWord(NormalForm form);

struct GroupElement {
  // Product g_1 g_2 ... g_k; acts as g_1(g_2(...g_k(S))).
  std::vector<ElementaryTransform> word;
  std::optional<NormalForm> normal_form;

  PackedQuad Act(const PackedQuad& s) const;
  std::string ToString() const;
};

// nu, rho, nu3, rho3, nu4, rho4, sigma, theta, alpha.
std::vector<GroupElement> Generators(int n);

std::string_view GeneratorName(ElementaryTransform t);

// Fixed probe: every quadruple of the BS-quad space when it has at most
// 4096 members, otherwise 16 quadruples drawn from std::mt19937_64 seeded
// with 20260101 + n.
std::vector<PackedQuad> Probe(int n);

// Order of the group generated by the nine involutions, computed as the
// breadth-first closure of their action on the probe.
int RealizedOrder(int n);

// Number of distinct probe actions among the 512 normal-form words.
int RealizedOrderFromNormalForms(int n);

// First normal form (in exponent-vector order) acting like `word` on the
// probe; nullopt if none does.
std::optional<NormalForm> Reduce(std::span<const ElementaryTransform> word,
                                 int n);

enum class RelationStatus { kPass, kFail, kUnverifiable };

struct RelationResult {
  std::string relation;  // e.g. "sigma nu3 = nu4 sigma"
  int n = 0;
  RelationStatus status = RelationStatus::kPass;
  std::size_t tested = 0;
  std::string note;

  // One-line verdict, e.g. "n=5 odd PASS sigma nu3 = nu4 sigma (tested 300)".
  std::string ToString() const;
};

// Checks every stated defining relation of the group on `samples`
// (quadruples of length n whose (C;D) quads are BS-quads). Relations
// involving undefined symbols are reported as unverifiable, alongside the
// relation that holds empirically.
std::vector<RelationResult> VerifyRelations(
    int n, std::span<const PackedQuad> samples);

// Same, on NS(n) (all members, for n <= 12) plus the probe.
std::vector<RelationResult> VerifyRelations(int n);

struct OrbitPartitionReport {
  int n = 0;
  std::size_t members = 0;       // |NS(n)|
  std::size_t closure_orbits = 0;
  std::size_t canonical_classes = 0;
  bool closed = true;            // every image of a member is a member
  bool match = false;            // the two partitions coincide
};

// Partitions NS(n) (enumerated without symmetry reduction) by generator
// closure and by Canonicalize and compares the two.
OrbitPartitionReport OrbitsMatchClasses(int n);

}  // namespace nsq

#endif  // NSQ_GROUP_H_
