// Copyright 2026 The Graph Envelopes Authors.
//
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

#pragma once

#include <cstdint>
#include <vector>

#include "genv/weights.hpp"

namespace genv {

// Definition-level reference implementations.  They deliberately share no
// code with the DP sweeps in envelopes.*: full scans and recursive cover
// search, so agreement between the two paths is evidence rather than
// tautology.  Exponential on purpose and size-guarded.

// Per subgraph, the enumeration refuses to run when H has more than
// `cap` nonempty subgraphs.
inline constexpr std::size_t kDefaultOracleCap = 20;

// Exact minimum part-sum over the covers of each H (the value is the same
// over irredundant-extension covers and over all covers, since dropping a
// part never increases a nonnegative sum); the empty subgraph passes w
// through.  Throws Error{oracle_cap_exceeded} naming the offending H.
WeightTable subadditive_minorant_bruteforce(const WeightTable& w,
                                            std::size_t cap = kDefaultOracleCap);

// Exact maximum part-sum over the element-disjoint partitions of each H;
// the empty subgraph passes w through.
WeightTable superadditive_majorant_bruteforce(const WeightTable& w,
                                              std::size_t cap = kDefaultOracleCap);

// Largest monotone minorant straight from the definition: a full
// supergraph scan per index, no layered sweep.
WeightTable monotone_minorant_scan(const WeightTable& w);

enum class SampleKind { monotone_below, subadditive_below };

// Randomized minorants of a target table, each verified against its
// declared property at construction.  Draws derive from a counter-based
// stream keyed by (seed, sample index, lattice index), so a SampleSet is a
// pure function of its arguments.
struct SampleSet {
  std::uint64_t seed = 0;
  SampleKind kind = SampleKind::monotone_below;
  std::vector<WeightTable> tables;
};

// For each sample: draw u <= w pointwise (entry k/q uniform over
// numerators k in [0, p] where w = p/q reduced), then take the monotone
// minorant of u by direct scan.  Every member is monotone increasing and
// <= w; a non-conforming member aborts construction.
SampleSet sample_monotone_minorants(const WeightTable& w, std::uint64_t seed,
                                    std::size_t count);

// Same draw, followed by the brute-force subadditive minorant.  Every
// member is subadditive and <= w.
SampleSet sample_subadditive_minorants(const WeightTable& w, std::uint64_t seed,
                                       std::size_t count,
                                       std::size_t cap = kDefaultOracleCap);

}  // namespace genv
