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

#include <optional>
#include <utility>
#include <vector>

#include "genv/lattice.hpp"
#include "genv/weights.hpp"

namespace genv {

// Outcome of a pairwise property scan.  `violation` is the
// lexicographically first violating index pair when the property fails.
struct PropertyCheck {
  bool holds = true;
  std::optional<std::pair<Lattice::Index, Lattice::Index>> violation;

  explicit operator bool() const { return holds; }
};

// w(H1) <= w(H2) for every proper containment H1 c H2.
PropertyCheck is_monotone_increasing(const WeightTable& w);
// w(H1) >= w(H2) for every proper containment H1 c H2.
PropertyCheck is_monotone_decreasing(const WeightTable& w);
// w(H1 u H2) <= w(H1) + w(H2) over all unordered pairs, equal and nested
// pairs included.
PropertyCheck is_subadditive(const WeightTable& w);
// w(H1 u H2) >= w(H1) + w(H2) over element-disjoint pairs of nonempty
// subgraphs.  The empty subgraph is skipped: it is never a partition part,
// and including it would force w(empty) = 0 for the property to be
// satisfiable at all.
PropertyCheck is_superadditive_on_disjoint(const WeightTable& w);

enum class EnvelopeKind {
  monotone_minorant,
  monotone_majorant,
  subadditive_minorant,
  superadditive_majorant,
};

const char* envelope_kind_name(EnvelopeKind k);

// The computed envelope plus, per index, the certificate that attains it:
// for the monotone kinds the optimizing supergraph/subgraph index (smallest
// canonical index on ties), for the cover kinds the optimizing cover or
// partition.  Re-evaluating a witness reproduces the output value exactly.
struct EnvelopeResult {
  EnvelopeKind kind;
  WeightTable input;
  WeightTable output;
  std::vector<Lattice::Index> extremal;  // monotone kinds only
  std::vector<Cover> covers;             // cover kinds only; empty cover at the bottom
};

// Largest monotone-increasing minorant: out[H] = min over H' >= H of w[H'],
// computed by a reverse sweep over the canonical order using immediate
// successors only.
EnvelopeResult monotone_minorant(const WeightTable& w);

// Smallest monotone-increasing majorant: out[H] = max over H' <= H of w[H'].
EnvelopeResult monotone_majorant(const WeightTable& w);

// Largest subadditive minorant: out[H] = min part-sum over covers of H,
// out[empty] = w[empty].  Layered DP over binary splits:
//   d[H] = min(w[H], min over split_pairs(H) of d[A] + d[B]);
// any n-part cover folds into nested binary unions of proper parts, and
// both halves of a split are strictly smaller, so the sweep is
// well-founded.
EnvelopeResult subadditive_minorant(const WeightTable& w);

// Smallest majorant that is superadditive on element-disjoint pairs:
// out[H] = max part-sum over element-disjoint partitions of H,
// out[empty] = w[empty].  Dual DP over disjoint binary splits.
EnvelopeResult superadditive_majorant(const WeightTable& w);

EnvelopeResult compute_envelope(EnvelopeKind kind, const WeightTable& w);

// Decision for the sandwich corollaries.  On success the separator lies
// between the two inputs pointwise and has the requested property; on
// failure `violating_index` is the first index where w1 exceeds the
// envelope of w2, together with the refuting certificate.
struct SandwichResult {
  bool success = false;
  WeightTable separator;
  std::optional<Lattice::Index> violating_index;
  std::optional<Lattice::Index> witness_supergraph;  // monotone kind
  std::optional<Cover> refuting_cover;               // subadditive kind

  explicit operator bool() const { return success; }
};

// Succeeds iff w1 <= monotone_minorant(w2) pointwise, which is equivalent
// to w1(H) <= w2(H') for all H <= H'.  Throws Error{lattice_mismatch} when
// the tables index different lattices.
SandwichResult sandwich_monotone(const WeightTable& w1, const WeightTable& w2);

// Succeeds iff w1 <= subadditive_minorant(w2) pointwise, which is
// equivalent to w1(H) <= w2(H1) + ... + w2(Hn) for every cover of H.
SandwichResult sandwich_subadditive(const WeightTable& w1, const WeightTable& w2);

}  // namespace genv
