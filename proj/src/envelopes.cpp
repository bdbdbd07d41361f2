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

#include "genv/envelopes.hpp"

#include <algorithm>
#include <limits>

#include "genv/error.hpp"

namespace genv {

const char* envelope_kind_name(EnvelopeKind k) {
  switch (k) {
    case EnvelopeKind::monotone_minorant: return "monotone_min";
    case EnvelopeKind::monotone_majorant: return "monotone_maj";
    case EnvelopeKind::subadditive_minorant: return "subadd_min";
    case EnvelopeKind::superadditive_majorant: return "superadd_maj";
  }
  return "?";
}

PropertyCheck is_monotone_increasing(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const auto& subs = lat.subgraphs();
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    for (Lattice::Index j = i + 1; j < lat.size(); ++j) {
      if (is_properly_contained(subs[i], subs[j]) && w[i] > w[j]) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

PropertyCheck is_monotone_decreasing(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const auto& subs = lat.subgraphs();
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    for (Lattice::Index j = i + 1; j < lat.size(); ++j) {
      if (is_properly_contained(subs[i], subs[j]) && w[i] < w[j]) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

PropertyCheck is_subadditive(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const auto& subs = lat.subgraphs();
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    for (Lattice::Index j = i; j < lat.size(); ++j) {
      const Lattice::Index u = lat.index_of(subs[i].vertex_mask | subs[j].vertex_mask,
                                            subs[i].edge_mask | subs[j].edge_mask);
      if (w[u] > w[i] + w[j]) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

PropertyCheck is_superadditive_on_disjoint(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const auto& subs = lat.subgraphs();
  for (Lattice::Index i = 1; i < lat.size(); ++i) {
    for (Lattice::Index j = i + 1; j < lat.size(); ++j) {
      if (!are_disjoint(subs[i], subs[j])) continue;
      const Lattice::Index u = lat.index_of(subs[i].vertex_mask | subs[j].vertex_mask,
                                            subs[i].edge_mask | subs[j].edge_mask);
      if (w[u] < w[i] + w[j]) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

EnvelopeResult monotone_minorant(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const std::size_t n = lat.size();
  std::vector<Rational> out(n);
  std::vector<Lattice::Index> wit(n);
  for (std::size_t k = n; k-- > 0;) {
    const auto i = static_cast<Lattice::Index>(k);
    Rational best = w[i];
    const std::vector<Lattice::Index> succ = lat.upper_covers(i);
    for (Lattice::Index s : succ) {
      if (out[s] < best) best = out[s];
    }
    // The smallest-index attainer: i precedes every proper supergraph in
    // canonical order, so i wins whenever w[i] itself attains the min.
    Lattice::Index witness = i;
    if (w[i] != best) {
      witness = std::numeric_limits<Lattice::Index>::max();
      for (Lattice::Index s : succ) {
        if (out[s] == best) witness = std::min(witness, wit[s]);
      }
    }
    out[k] = std::move(best);
    wit[k] = witness;
  }
  WeightTable output(w.lattice_ptr(), std::move(out));
  return {EnvelopeKind::monotone_minorant, w, std::move(output), std::move(wit), {}};
}

EnvelopeResult monotone_majorant(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const std::size_t n = lat.size();
  std::vector<Rational> out(n);
  std::vector<Lattice::Index> wit(n);
  for (Lattice::Index i = 0; i < n; ++i) {
    Rational best = w[i];
    const std::vector<Lattice::Index> pred = lat.lower_covers(i);
    for (Lattice::Index p : pred) {
      if (out[p] > best) best = out[p];
    }
    // Predecessor witnesses all precede i, so any predecessor attaining
    // the max beats i for the smallest-index tie-break.
    Lattice::Index witness = i;
    for (Lattice::Index p : pred) {
      if (out[p] == best) witness = std::min(witness, wit[p]);
    }
    out[i] = std::move(best);
    wit[i] = witness;
  }
  WeightTable output(w.lattice_ptr(), std::move(out));
  return {EnvelopeKind::monotone_majorant, w, std::move(output), std::move(wit), {}};
}

namespace {

Cover merge_covers(const Cover& a, const Cover& b) {
  Cover merged;
  merged.parts.reserve(a.parts.size() + b.parts.size());
  std::set_union(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
                 std::back_inserter(merged.parts));
  return merged;
}

}  // namespace

EnvelopeResult subadditive_minorant(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const std::size_t n = lat.size();
  std::vector<Rational> out(n);
  std::vector<Cover> wit(n);
  for (Lattice::Index i = 0; i < n; ++i) {
    Rational best = w[i];
    std::optional<std::pair<Lattice::Index, Lattice::Index>> best_split;
    // split_pairs is sorted, so the first strict improvement is the
    // smallest (A, B) pair attaining the final value.
    for (const auto& [a, b] : split_pairs(lat, i)) {
      Rational sum = out[a] + out[b];
      if (sum < best) {
        best = std::move(sum);
        best_split = std::make_pair(a, b);
      }
    }
    out[i] = std::move(best);
    if (best_split) {
      wit[i] = merge_covers(wit[best_split->first], wit[best_split->second]);
    } else if (i > 0) {
      wit[i] = Cover{{i}};
    }  // the bottom element keeps an empty cover: it has none.
  }
  WeightTable output(w.lattice_ptr(), std::move(out));
  return {EnvelopeKind::subadditive_minorant, w, std::move(output), {}, std::move(wit)};
}

EnvelopeResult superadditive_majorant(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  const std::size_t n = lat.size();
  std::vector<Rational> out(n);
  std::vector<Cover> wit(n);
  for (Lattice::Index i = 0; i < n; ++i) {
    Rational best = w[i];
    std::optional<std::pair<Lattice::Index, Lattice::Index>> best_split;
    for (const auto& [a, b] : disjoint_split_pairs(lat, i)) {
      Rational sum = out[a] + out[b];
      if (sum > best) {
        best = std::move(sum);
        best_split = std::make_pair(a, b);
      }
    }
    out[i] = std::move(best);
    if (best_split) {
      wit[i] = merge_covers(wit[best_split->first], wit[best_split->second]);
    } else if (i > 0) {
      wit[i] = Cover{{i}};
    }
  }
  WeightTable output(w.lattice_ptr(), std::move(out));
  return {EnvelopeKind::superadditive_majorant, w, std::move(output), {}, std::move(wit)};
}

EnvelopeResult compute_envelope(EnvelopeKind kind, const WeightTable& w) {
  switch (kind) {
    case EnvelopeKind::monotone_minorant: return monotone_minorant(w);
    case EnvelopeKind::monotone_majorant: return monotone_majorant(w);
    case EnvelopeKind::subadditive_minorant: return subadditive_minorant(w);
    case EnvelopeKind::superadditive_majorant: return superadditive_majorant(w);
  }
  raise(Errc::parse_error, "", "unknown envelope kind");
}

namespace {

void require_same_lattice(const WeightTable& w1, const WeightTable& w2) {
  if (!w1.same_lattice(w2)) {
    raise(Errc::lattice_mismatch, "",
          "the two weight tables index different lattices");
  }
}

}  // namespace

SandwichResult sandwich_monotone(const WeightTable& w1, const WeightTable& w2) {
  require_same_lattice(w1, w2);
  EnvelopeResult env = monotone_minorant(w2);
  for (Lattice::Index i = 0; i < w1.size(); ++i) {
    if (w1[i] > env.output[i]) {
      return {false, std::move(env.output), i, env.extremal[i], std::nullopt};
    }
  }
  return {true, std::move(env.output), std::nullopt, std::nullopt, std::nullopt};
}

SandwichResult sandwich_subadditive(const WeightTable& w1, const WeightTable& w2) {
  require_same_lattice(w1, w2);
  EnvelopeResult env = subadditive_minorant(w2);
  for (Lattice::Index i = 0; i < w1.size(); ++i) {
    if (w1[i] > env.output[i]) {
      return {false, std::move(env.output), i, std::nullopt, env.covers[i]};
    }
  }
  return {true, std::move(env.output), std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace genv
