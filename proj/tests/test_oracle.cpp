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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "genv/envelopes.hpp"
#include "genv/error.hpp"
#include "genv/oracle.hpp"

#include "test_util.hpp"

using namespace genv;
using namespace testutil;

TEST_CASE("subadditive bruteforce on the running example") {
  const auto lat = enumerate_lattice(k2());
  const WeightTable w2 = table_of(lat, {0, 3, 5, 9, 4});
  CHECK(subadditive_minorant_bruteforce(w2).values() == rationals({0, 3, 5, 8, 4}));

  const WeightTable zero = table_of(lat, {0, 0, 0, 0, 0});
  CHECK(subadditive_minorant_bruteforce(zero).values() == zero.values());

  // subadditive input is a fixed point
  const WeightTable ec = tabulate(Builtin::edge_count, lat);
  CHECK(subadditive_minorant_bruteforce(ec).values() == ec.values());
}

TEST_CASE("subadditive bruteforce equals the exhaustive cover minimum") {
  for (const Graph& g : {k2(), two_isolated(), p3()}) {
    const auto lat = enumerate_lattice(g);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const WeightTable w = random_table(lat, seed, 9);
      const WeightTable bf = subadditive_minorant_bruteforce(w);
      for (Lattice::Index h = 1; h < lat->size(); ++h) {
        Rational best = w[h];
        for_each_cover(*lat, h, CoverMode::exhaustive, [&](const Cover& c) {
          Rational sum(0);
          for (Lattice::Index p : c.parts) sum += w[p];
          if (sum < best) best = sum;
          return true;
        });
        CHECK(bf[h] == best);
      }
      CHECK(bf[0] == w[0]);
    }
  }
}

TEST_CASE("superadditive bruteforce on the running example") {
  const auto lat = enumerate_lattice(k2());
  const WeightTable w2 = table_of(lat, {0, 3, 5, 9, 4});
  CHECK(superadditive_majorant_bruteforce(w2).values() == rationals({0, 3, 5, 9, 4}));

  // connected subgraphs have a single partition
  const auto latp = enumerate_lattice(p3());
  const WeightTable wp = random_table(latp, 3, 10);
  const WeightTable bf = superadditive_majorant_bruteforce(wp);
  CHECK(bf[latp->top_index()] == wp[latp->top_index()]);

  const auto lat_iso = enumerate_lattice(two_isolated());
  const WeightTable spike = table_of(lat_iso, {0, 1, 1, 0});
  CHECK(superadditive_majorant_bruteforce(spike).values() == rationals({0, 1, 1, 2}));
}

TEST_CASE("oracle cap") {
  const auto lat = enumerate_lattice(c4());
  const WeightTable w = random_table(lat, 1, 10);
  // the full C4 has 46 nonempty subgraphs, above the default cap of 20
  try {
    subadditive_minorant_bruteforce(w);
    FAIL_CHECK("expected OracleCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::oracle_cap_exceeded);
  }
  CHECK_NOTHROW(subadditive_minorant_bruteforce(w, 63));
  try {
    superadditive_majorant_bruteforce(w);
    FAIL_CHECK("expected OracleCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::oracle_cap_exceeded);
  }
}

TEST_CASE("dp and oracle agree exactly") {
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const WeightTable w = random_table(lat, seed, 25);
      CHECK(subadditive_minorant(w).output == subadditive_minorant_bruteforce(w, 63));
      CHECK(superadditive_majorant(w).output == superadditive_majorant_bruteforce(w, 63));
    }
  }
}

TEST_CASE("monotone minorant scan equals the sweep") {
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const WeightTable w = random_table(lat, seed, 17);
      CHECK(monotone_minorant_scan(w) == monotone_minorant(w).output);
    }
  }
}

TEST_CASE("monotone sample sets hold verified minorants") {
  const auto lat = enumerate_lattice(k2());
  const WeightTable w2 = table_of(lat, {0, 3, 5, 9, 4});
  const SampleSet set = sample_monotone_minorants(w2, 7, 40);
  CHECK(set.seed == 7);
  CHECK(set.kind == SampleKind::monotone_below);
  REQUIRE(set.tables.size() == 40);

  const WeightTable bar = monotone_minorant(w2).output;  // [0,3,4,4,4]
  for (const WeightTable& t : set.tables) {
    CHECK(is_monotone_increasing(t).holds);
    CHECK(pointwise_leq(t, w2));
    // maximality: no sampled monotone minorant exceeds the envelope
    CHECK(pointwise_leq(t, bar));
  }

  // determinism: the same arguments reproduce the same tables
  const SampleSet again = sample_monotone_minorants(w2, 7, 40);
  for (std::size_t i = 0; i < set.tables.size(); ++i) {
    CHECK(set.tables[i] == again.tables[i]);
  }
  const SampleSet other = sample_monotone_minorants(w2, 8, 40);
  bool all_equal = true;
  for (std::size_t i = 0; i < set.tables.size(); ++i) {
    if (!(set.tables[i] == other.tables[i])) all_equal = false;
  }
  CHECK(!all_equal);
}

TEST_CASE("constant targets bound every monotone sample") {
  const auto lat = enumerate_lattice(p3());
  const WeightTable five = table_of(lat, std::vector<long>(lat->size(), 5));
  const SampleSet set = sample_monotone_minorants(five, 3, 20);
  for (const WeightTable& t : set.tables) {
    CHECK(is_monotone_increasing(t).holds);
    for (Lattice::Index i = 0; i < t.size(); ++i) CHECK(t[i] <= 5);
  }
}

TEST_CASE("subadditive sample sets hold verified minorants") {
  const auto lat = enumerate_lattice(k2());
  const WeightTable w2 = table_of(lat, {0, 3, 5, 9, 4});
  const SampleSet set = sample_subadditive_minorants(w2, 11, 40);
  CHECK(set.kind == SampleKind::subadditive_below);
  REQUIRE(set.tables.size() == 40);

  const WeightTable tilde = subadditive_minorant(w2).output;  // [0,3,5,8,4]
  for (const WeightTable& t : set.tables) {
    CHECK(is_subadditive(t).holds);
    CHECK(pointwise_leq(t, w2));
    CHECK(pointwise_leq(t, tilde));
  }

  const WeightTable zero = table_of(lat, {0, 0, 0, 0, 0});
  for (const WeightTable& t : sample_subadditive_minorants(zero, 1, 5).tables) {
    CHECK(t == zero);
  }
}

TEST_CASE("sample draws stay pointwise below fractional targets") {
  const auto lat = enumerate_lattice(two_isolated());
  std::vector<Rational> vals = rationals({0, 0, 0, 0});
  vals[1] = Rational(7, 3);
  vals[2] = Rational(1, 2);
  vals[3] = Rational(9, 4);
  const WeightTable w(lat, std::move(vals));
  for (const WeightTable& t : sample_monotone_minorants(w, 21, 30).tables) {
    CHECK(pointwise_leq(t, w));
  }
}
