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

#include "genv/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "genv/envelopes.hpp"
#include "genv/error.hpp"
#include "genv/rng.hpp"

namespace genv {

namespace {

void check_oracle_cap(const Lattice& lat, Lattice::Index h, std::size_t cap) {
  const Subgraph& target = lat.at(h);
  std::size_t count = 0;
  for (Lattice::Index i = 1; i < lat.size(); ++i) {
    if (is_contained(lat.subgraphs()[i], target)) ++count;
  }
  if (count > cap) {
    raise(Errc::oracle_cap_exceeded, render_subgraph(lat.graph(), target),
          render_subgraph(lat.graph(), target) + " has " + std::to_string(count) +
              " nonempty subgraphs, above the oracle cap of " + std::to_string(cap));
  }
}

// Minimum cover sum by recursive set-cover branching over the lowest
// uncovered element.  Partial sums only grow, so a branch whose sum has
// already reached the incumbent cannot improve the minimum and is cut.
struct MinCoverSearch {
  const Lattice& lat;
  const WeightTable& w;
  std::vector<Lattice::Index> candidates;
  Rational best;

  void descend(const Subgraph& uncovered, std::size_t from, const Rational& partial) {
    if (partial >= best) return;
    if (uncovered.empty()) {
      best = partial;
      return;
    }
    std::uint64_t want_v = 0, want_e = 0;
    if (uncovered.vertex_mask) {
      want_v = uncovered.vertex_mask & (~uncovered.vertex_mask + 1);
    } else {
      want_e = uncovered.edge_mask & (~uncovered.edge_mask + 1);
    }
    for (std::size_t p = from; p < candidates.size(); ++p) {
      const Subgraph& part = lat.subgraphs()[candidates[p]];
      if ((part.vertex_mask & want_v) != want_v || (part.edge_mask & want_e) != want_e) {
        continue;
      }
      descend(Subgraph{uncovered.vertex_mask & ~part.vertex_mask,
                       uncovered.edge_mask & ~part.edge_mask, 0},
              0, partial + w[candidates[p]]);
    }
  }
};

}  // namespace

WeightTable subadditive_minorant_bruteforce(const WeightTable& w, std::size_t cap) {
  const Lattice& lat = w.lattice();
  std::vector<Rational> out(lat.size());
  out[0] = w[0];
  for (Lattice::Index h = 1; h < lat.size(); ++h) {
    check_oracle_cap(lat, h, cap);
    const Subgraph& target = lat.at(h);
    MinCoverSearch search{lat, w, {}, w[h]};
    for (Lattice::Index i = 1; i < lat.size(); ++i) {
      if (is_contained(lat.subgraphs()[i], target)) search.candidates.push_back(i);
    }
    search.descend(target, 0, Rational(0));
    out[h] = std::move(search.best);
  }
  return WeightTable(w.lattice_ptr(), std::move(out));
}

WeightTable superadditive_majorant_bruteforce(const WeightTable& w, std::size_t cap) {
  const Lattice& lat = w.lattice();
  std::vector<Rational> out(lat.size());
  out[0] = w[0];
  for (Lattice::Index h = 1; h < lat.size(); ++h) {
    check_oracle_cap(lat, h, cap);
    Rational best = w[h];
    for_each_partition(lat, h, [&](const Cover& c) {
      Rational sum(0);
      for (Lattice::Index part : c.parts) sum += w[part];
      if (sum > best) best = std::move(sum);
      return true;
    });
    out[h] = std::move(best);
  }
  return WeightTable(w.lattice_ptr(), std::move(out));
}

WeightTable monotone_minorant_scan(const WeightTable& w) {
  const Lattice& lat = w.lattice();
  std::vector<Rational> out(lat.size());
  for (Lattice::Index h = 0; h < lat.size(); ++h) {
    Rational best = w[h];
    for (Lattice::Index s : supergraphs_of(lat, h)) {
      if (w[s] < best) best = w[s];
    }
    out[h] = std::move(best);
  }
  return WeightTable(w.lattice_ptr(), std::move(out));
}

namespace {

WeightTable draw_below(const WeightTable& w, std::uint64_t seed, std::size_t sample) {
  std::vector<Rational> values;
  values.reserve(w.size());
  for (Lattice::Index i = 0; i < w.size(); ++i) {
    const mpz_class& num = w[i].get_num();
    const mpz_class& den = w[i].get_den();
    if (num == 0) {
      values.emplace_back(0);
      continue;
    }
    detail::CounterRng rng(seed, sample, i);
    mpz_class k = detail::uniform_below(rng, mpz_class(num + 1));
    Rational v(std::move(k), den);
    v.canonicalize();
    values.push_back(std::move(v));
  }
  return WeightTable(w.lattice_ptr(), std::move(values));
}

void verify_below(const WeightTable& sample, const WeightTable& w, const char* what) {
  for (Lattice::Index i = 0; i < w.size(); ++i) {
    if (sample[i] > w[i]) {
      throw std::logic_error(std::string("sampler bug: ") + what +
                             " sample exceeds the target at index " + std::to_string(i));
    }
  }
}

}  // namespace

SampleSet sample_monotone_minorants(const WeightTable& w, std::uint64_t seed,
                                    std::size_t count) {
  SampleSet set{seed, SampleKind::monotone_below, {}};
  set.tables.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    WeightTable u = draw_below(w, seed, s);
    WeightTable minorant = monotone_minorant_scan(u);
    if (!is_monotone_increasing(minorant)) {
      throw std::logic_error("sampler bug: monotone sample fails its own property");
    }
    verify_below(minorant, w, "monotone");
    set.tables.push_back(std::move(minorant));
  }
  return set;
}

SampleSet sample_subadditive_minorants(const WeightTable& w, std::uint64_t seed,
                                       std::size_t count, std::size_t cap) {
  SampleSet set{seed, SampleKind::subadditive_below, {}};
  set.tables.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    WeightTable u = draw_below(w, seed, s);
    WeightTable minorant = subadditive_minorant_bruteforce(u, cap);
    if (!is_subadditive(minorant)) {
      throw std::logic_error("sampler bug: subadditive sample fails its own property");
    }
    verify_below(minorant, w, "subadditive");
    set.tables.push_back(std::move(minorant));
  }
  return set;
}

}  // namespace genv
