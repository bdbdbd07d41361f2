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

#include <algorithm>
#include <set>

#include "genv/error.hpp"
#include "genv/lattice.hpp"

#include "test_util.hpp"

using namespace genv;
using namespace testutil;

namespace {

void expect_error(Errc code, const std::string& token_part, auto&& fn) {
  try {
    fn();
    FAIL_CHECK("expected error " << errc_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
    if (!token_part.empty()) {
      CHECK(e.token().find(token_part) != std::string::npos);
    }
  }
}

}  // namespace

TEST_CASE("build_graph constructs and validates") {
  const Graph g2 = k2();
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count() == 1);
  CHECK(g2.edges()[0] == Graph::Edge{0, 1});

  const Graph g3 = k3();
  CHECK(g3.vertex_count() == 3);
  CHECK(g3.edge_count() == 3);
  // Normalized: endpoint-sorted edges in lexicographic index order.
  CHECK(g3.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {1, 2}});

  expect_error(Errc::duplicate_vertex, "a", [] { build_graph({"a", "a"}, {}); });
  expect_error(Errc::unknown_endpoint, "c", [] { build_graph({"a", "b"}, {{"a", "c"}}); });
  expect_error(Errc::self_loop, "a", [] { build_graph({"a", "b"}, {{"a", "a"}}); });
  expect_error(Errc::duplicate_edge, "a-b",
               [] { build_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}); });
}

TEST_CASE("enumerate_lattice matches the independent closure scan") {
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    const auto expected = closure_scan(g);
    REQUIRE(lat->size() == expected.size());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
    for (const Subgraph& s : lat->subgraphs()) got.emplace_back(s.vertex_mask, s.edge_mask);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("lattice sizes of the standard graphs") {
  CHECK(enumerate_lattice(k2())->size() == 5);
  CHECK(enumerate_lattice(two_isolated())->size() == 4);
  CHECK(enumerate_lattice(p3())->size() == 13);
  CHECK(enumerate_lattice(k3())->size() == 18);
  CHECK(enumerate_lattice(p4())->size() == 34);
  CHECK(enumerate_lattice(s3())->size() == 35);
  CHECK(enumerate_lattice(c4())->size() == 47);
  CHECK(enumerate_lattice(build_graph({}, {}))->size() == 1);
}

TEST_CASE("K2 lattice in canonical order") {
  const auto lat = enumerate_lattice(k2());
  REQUIRE(lat->size() == 5);
  CHECK(lat->at(0) == Subgraph{0b00, 0, 0});   // empty
  CHECK(lat->at(1) == Subgraph{0b01, 0, 1});   // {a}
  CHECK(lat->at(2) == Subgraph{0b10, 0, 1});   // {b}
  CHECK(lat->at(3) == Subgraph{0b11, 0, 2});   // {a,b}
  CHECK(lat->at(4) == Subgraph{0b11, 1, 3});   // K2 itself
  CHECK(lat->top_index() == 4);
  CHECK(render_subgraph(lat->graph(), lat->at(0)) == "∅");
  CHECK(render_subgraph(lat->graph(), lat->at(4)) == "{a,b | ab}");
}

TEST_CASE("canonical order is a linear extension of containment") {
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    const auto& subs = lat->subgraphs();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      CHECK(lat->index_of(subs[i]) == i);
      for (std::size_t j = 0; j < subs.size(); ++j) {
        if (is_properly_contained(subs[i], subs[j])) CHECK(i < j);
      }
    }
  }
}

TEST_CASE("layers are contiguous and partition the lattice") {
  const auto lat = enumerate_lattice(c4());
  std::size_t total = 0;
  for (std::size_t k = 0; k < lat->layer_count(); ++k) {
    const auto [lo, hi] = lat->layer(k);
    for (Lattice::Index i = lo; i < hi; ++i) {
      CHECK(lat->at(i).size == static_cast<int>(k));
    }
    total += hi - lo;
  }
  CHECK(total == lat->size());
}

TEST_CASE("lattice guard") {
  expect_error(Errc::lattice_too_large, "", [] { enumerate_lattice(k2(), 4); });
  CHECK(enumerate_lattice(k2(), 5)->size() == 5);
  // 25 isolated vertices predict 2^25 subgraphs; must refuse fast.
  std::vector<std::string> labels;
  for (int i = 0; i < 25; ++i) labels.push_back("v" + std::to_string(i));
  const Graph big = build_graph(labels, {});
  expect_error(Errc::lattice_too_large, "", [&] { enumerate_lattice(big); });
}

TEST_CASE("mask algebra examples and laws") {
  const auto lat = enumerate_lattice(k2());
  const Subgraph a = lat->at(1), b = lat->at(2), ab = lat->at(3), full = lat->at(4);
  CHECK(union_of(a, b) == ab);
  CHECK(intersect(full, a) == a);
  CHECK(is_contained(ab, full));
  CHECK(!is_contained(full, ab));

  const auto lat3 = enumerate_lattice(k3());
  const auto& subs = lat3->subgraphs();
  for (const Subgraph& x : subs) {
    for (const Subgraph& y : subs) {
      CHECK(union_of(x, y) == union_of(y, x));
      CHECK(intersect(x, y) == intersect(y, x));
      CHECK(union_of(x, x) == x);
      CHECK(intersect(x, x) == x);
      CHECK(is_contained(intersect(x, y), x));
      CHECK(is_contained(x, union_of(x, y)));
      // closure under both operations: results are lattice members
      CHECK(lat3->find(union_of(x, y).vertex_mask, union_of(x, y).edge_mask).has_value());
      CHECK(lat3->find(intersect(x, y).vertex_mask, intersect(x, y).edge_mask).has_value());
      for (const Subgraph& z : subs) {
        CHECK(union_of(union_of(x, y), z) == union_of(x, union_of(y, z)));
      }
    }
  }
}

TEST_CASE("supergraphs_of and subgraphs_of") {
  const auto lat = enumerate_lattice(k2());
  CHECK(supergraphs_of(*lat, 1) == std::vector<Lattice::Index>{1, 3, 4});
  CHECK(supergraphs_of(*lat, lat->top_index()) ==
        std::vector<Lattice::Index>{lat->top_index()});
  CHECK(subgraphs_of(*lat, 0) == std::vector<Lattice::Index>{0});
  CHECK(supergraphs_of(*lat, 0).size() == lat->size());

  // Duality on a bigger lattice: i in supergraphs_of(j) iff j in subgraphs_of(i).
  const auto lat3 = enumerate_lattice(p3());
  for (Lattice::Index h = 0; h < lat3->size(); ++h) {
    for (Lattice::Index s : supergraphs_of(*lat3, h)) {
      const auto subs = subgraphs_of(*lat3, s);
      CHECK(std::find(subs.begin(), subs.end(), h) != subs.end());
    }
  }
}

TEST_CASE("upper and lower covers agree with a brute filter") {
  for (const Graph& g : {p3(), c4()}) {
    const auto lat = enumerate_lattice(g);
    for (Lattice::Index h = 0; h < lat->size(); ++h) {
      std::vector<Lattice::Index> ups, downs;
      for (Lattice::Index j = 0; j < lat->size(); ++j) {
        if (lat->at(j).size == lat->at(h).size + 1 && is_contained(lat->at(h), lat->at(j))) {
          ups.push_back(j);
        }
        if (lat->at(j).size + 1 == lat->at(h).size && is_contained(lat->at(j), lat->at(h))) {
          downs.push_back(j);
        }
      }
      CHECK(lat->upper_covers(h) == ups);
      CHECK(lat->lower_covers(h) == downs);
    }
  }
}

TEST_CASE("split_pairs examples") {
  const auto lat = enumerate_lattice(k2());
  using P = std::pair<Lattice::Index, Lattice::Index>;
  CHECK(split_pairs(*lat, 3) == std::vector<P>{{1, 2}});  // {a,b} = {a} u {b}
  CHECK(split_pairs(*lat, 4).empty());  // no proper pair can rebuild the edge
  CHECK(split_pairs(*lat, 0).empty());
}

TEST_CASE("split_pairs equals the quadratic scan") {
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    for (Lattice::Index h = 0; h < lat->size(); ++h) {
      std::vector<std::pair<Lattice::Index, Lattice::Index>> brute;
      for (Lattice::Index a = 0; a < lat->size(); ++a) {
        if (!is_properly_contained(lat->at(a), lat->at(h))) continue;
        for (Lattice::Index b = a + 1; b < lat->size(); ++b) {
          if (!is_properly_contained(lat->at(b), lat->at(h))) continue;
          if (union_of(lat->at(a), lat->at(b)) == lat->at(h)) brute.emplace_back(a, b);
        }
      }
      std::sort(brute.begin(), brute.end());
      CHECK(split_pairs(*lat, h) == brute);
    }
  }
}

namespace {

// Subset-filter definition of covers: every subset of the nonempty
// subgraphs of h whose union is h.
std::set<Cover> cover_filter_oracle(const Lattice& lat, Lattice::Index h) {
  const Subgraph& target = lat.at(h);
  std::vector<Lattice::Index> cands;
  for (Lattice::Index i = 1; i < lat.size(); ++i) {
    if (is_contained(lat.subgraphs()[i], target)) cands.push_back(i);
  }
  std::set<Cover> out;
  for (std::uint64_t pick = 1; pick < (1ull << cands.size()); ++pick) {
    Subgraph u{};
    Cover c;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (pick & (1ull << i)) {
        u = union_of(u, lat.subgraphs()[cands[i]]);
        c.parts.push_back(cands[i]);
      }
    }
    if (u == target) out.insert(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("covers_of exhaustive examples on K2") {
  const auto lat = enumerate_lattice(k2());
  const auto covers = covers_of(*lat, 3, CoverMode::exhaustive);
  std::set<Cover> got(covers.begin(), covers.end());
  CHECK(got.size() == covers.size());  // no duplicates emitted
  const std::set<Cover> expected = {
      Cover{{1, 2}}, Cover{{3}}, Cover{{1, 3}}, Cover{{2, 3}}, Cover{{1, 2, 3}}};
  CHECK(got == expected);

  // Every cover of K2 itself contains K2: only it contains the edge.
  for (const Cover& c : covers_of(*lat, 4, CoverMode::exhaustive)) {
    CHECK(std::find(c.parts.begin(), c.parts.end(), 4u) != c.parts.end());
  }

  CHECK(covers_of(*lat, 0, CoverMode::exhaustive).empty());
  CHECK(covers_of(*lat, 0, CoverMode::irredundant).empty());
}

TEST_CASE("covers_of exhaustive equals the subset-filter definition") {
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    for (Lattice::Index h = 1; h < lat->size(); ++h) {
      std::size_t nonempty_subs = 0;
      for (Lattice::Index i = 1; i < lat->size(); ++i) {
        if (is_contained(lat->at(i), lat->at(h))) ++nonempty_subs;
      }
      if (nonempty_subs > 6) continue;
      const auto covers = covers_of(*lat, h, CoverMode::exhaustive);
      const std::set<Cover> got(covers.begin(), covers.end());
      CHECK(got.size() == covers.size());
      CHECK(got == cover_filter_oracle(*lat, h));

      // Default mode is a subset of exhaustive mode.
      for (const Cover& c : covers_of(*lat, h, CoverMode::irredundant)) {
        CHECK(got.count(c) == 1);
      }
    }
  }
}

TEST_CASE("cover streams stop early when the visitor declines") {
  const auto lat = enumerate_lattice(k3());
  std::size_t seen = 0;
  for_each_cover(*lat, lat->top_index(), CoverMode::exhaustive, [&](const Cover&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("partitions_of examples") {
  const auto lat_iso = enumerate_lattice(two_isolated());
  const auto parts_iso = partitions_of(*lat_iso, 3);
  const std::set<Cover> got(parts_iso.begin(), parts_iso.end());
  CHECK(got == std::set<Cover>{Cover{{1, 2}}, Cover{{3}}});

  const auto lat2 = enumerate_lattice(k2());
  CHECK(partitions_of(*lat2, lat2->top_index()) == std::vector<Cover>{Cover{{4}}});

  const auto lat3 = enumerate_lattice(p3());
  CHECK(partitions_of(*lat3, lat3->top_index()).size() == 1);

  CHECK(partitions_of(*lat2, 0).empty());
}

TEST_CASE("partitions_of equals the disjointness filter over exhaustive covers") {
  for (const Graph& g : {k2(), two_isolated(), p3()}) {
    const auto lat = enumerate_lattice(g);
    for (Lattice::Index h = 1; h < lat->size(); ++h) {
      std::size_t nonempty_subs = 0;
      for (Lattice::Index i = 1; i < lat->size(); ++i) {
        if (is_contained(lat->at(i), lat->at(h))) ++nonempty_subs;
      }
      if (nonempty_subs > 6) continue;
      std::set<Cover> expected;
      for (const Cover& c : covers_of(*lat, h, CoverMode::exhaustive)) {
        bool disjoint = true;
        for (std::size_t i = 0; i < c.parts.size() && disjoint; ++i) {
          for (std::size_t j = i + 1; j < c.parts.size() && disjoint; ++j) {
            if (!are_disjoint(lat->at(c.parts[i]), lat->at(c.parts[j]))) disjoint = false;
          }
        }
        if (disjoint) expected.insert(c);
      }
      const auto parts = partitions_of(*lat, h);
      const std::set<Cover> got(parts.begin(), parts.end());
      CHECK(got.size() == parts.size());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("partition counts are Bell numbers of the component count") {
  constexpr std::size_t bell[] = {1, 1, 2, 5, 15};
  for (const Graph& g : small_graphs()) {
    const auto lat = enumerate_lattice(g);
    for (Lattice::Index h = 1; h < lat->size(); ++h) {
      const std::size_t k = components_of(*lat, h).size();
      REQUIRE(k < 5);
      CHECK(partitions_of(*lat, h).size() == bell[k]);
    }
  }
}

TEST_CASE("disjoint_split_pairs agrees with a brute filter") {
  for (const Graph& g : {two_isolated(), p3(), c4()}) {
    const auto lat = enumerate_lattice(g);
    for (Lattice::Index h = 1; h < lat->size(); ++h) {
      std::vector<std::pair<Lattice::Index, Lattice::Index>> brute;
      for (Lattice::Index a = 1; a < lat->size(); ++a) {
        for (Lattice::Index b = a + 1; b < lat->size(); ++b) {
          if (are_disjoint(lat->at(a), lat->at(b)) &&
              union_of(lat->at(a), lat->at(b)) == lat->at(h)) {
            brute.emplace_back(a, b);
          }
        }
      }
      std::sort(brute.begin(), brute.end());
      CHECK(disjoint_split_pairs(*lat, h) == brute);
    }
  }
}

TEST_CASE("index errors") {
  const auto lat = enumerate_lattice(k2());
  expect_error(Errc::index_out_of_range, "", [&] { lat->at(99); });
  expect_error(Errc::index_out_of_range, "", [&] { (void)supergraphs_of(*lat, 99); });
  expect_error(Errc::index_out_of_range, "", [&] { (void)split_pairs(*lat, 99); });
}
