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

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "genv/graph.hpp"

namespace genv {

// A closed (vertex set, edge set) pair inside a parent Graph: every edge
// bit forces both endpoint vertex bits.  This closure is what makes the
// family of subgraphs a lattice under mask union/intersection.
struct Subgraph {
  std::uint64_t vertex_mask = 0;
  std::uint64_t edge_mask = 0;
  int size = 0;  // popcount(vertex_mask) + popcount(edge_mask), cached

  bool empty() const { return vertex_mask == 0 && edge_mask == 0; }

  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.vertex_mask == b.vertex_mask && a.edge_mask == b.edge_mask;
  }
};

inline int subgraph_size(std::uint64_t vmask, std::uint64_t emask) {
  return std::popcount(vmask) + std::popcount(emask);
}

// Mask algebra.  Union and intersection of closed subgraphs are closed: an
// edge present in both operands has its endpoints in both operands.
inline Subgraph union_of(const Subgraph& a, const Subgraph& b) {
  const std::uint64_t v = a.vertex_mask | b.vertex_mask;
  const std::uint64_t e = a.edge_mask | b.edge_mask;
  return Subgraph{v, e, subgraph_size(v, e)};
}

inline Subgraph intersect(const Subgraph& a, const Subgraph& b) {
  const std::uint64_t v = a.vertex_mask & b.vertex_mask;
  const std::uint64_t e = a.edge_mask & b.edge_mask;
  return Subgraph{v, e, subgraph_size(v, e)};
}

inline bool is_contained(const Subgraph& a, const Subgraph& b) {
  return (a.vertex_mask & ~b.vertex_mask) == 0 && (a.edge_mask & ~b.edge_mask) == 0;
}

inline bool is_properly_contained(const Subgraph& a, const Subgraph& b) {
  return is_contained(a, b) && !(a == b);
}

inline bool are_disjoint(const Subgraph& a, const Subgraph& b) {
  return (a.vertex_mask & b.vertex_mask) == 0 && (a.edge_mask & b.edge_mask) == 0;
}

// A set of distinct nonempty subgraphs of some target whose union equals
// the target.  Parts are canonical lattice indices, sorted ascending.
struct Cover {
  std::vector<std::uint32_t> parts;

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover& a, const Cover& b) {
    return a.parts <=> b.parts;
  }
};

// The complete enumeration of all closed subgraphs of a Graph.
//
// Canonical order: size ascending, then vertex mask, then edge mask.  Size
// strictly increases along containment, so the order is a linear extension
// of the subgraph relation and layers occupy contiguous index ranges.
// Index 0 is the empty subgraph; the last index is the whole graph.
// Immutable after construction; any number of readers may share it.
class Lattice {
 public:
  using Index = std::uint32_t;

  static constexpr std::size_t kDefaultGuard = 1u << 20;

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return subs_.size(); }
  const std::vector<Subgraph>& subgraphs() const { return subs_; }

  const Subgraph& at(Index i) const {
    check_index(i);
    return subs_[i];
  }

  Index top_index() const { return static_cast<Index>(subs_.size() - 1); }

  // Exact reverse lookup; empty when the pair is not a closed subgraph.
  std::optional<Index> find(std::uint64_t vertex_mask, std::uint64_t edge_mask) const;

  // Lookup that must succeed; throws Error{index_out_of_range} otherwise.
  Index index_of(std::uint64_t vertex_mask, std::uint64_t edge_mask) const;
  Index index_of(const Subgraph& s) const { return index_of(s.vertex_mask, s.edge_mask); }

  // Half-open index range of the subgraphs of a given size.
  std::size_t layer_count() const { return layer_begin_.size() - 1; }
  std::pair<Index, Index> layer(std::size_t sz) const {
    return {layer_begin_[sz], layer_begin_[sz + 1]};
  }

  // Immediate neighbours in the containment order: exactly the subgraphs
  // obtained by adding (removing) one vertex or one admissible edge.
  std::vector<Index> upper_covers(Index i) const;
  std::vector<Index> lower_covers(Index i) const;

  friend std::shared_ptr<const Lattice> enumerate_lattice(Graph g, std::size_t max_size);

 private:
  Lattice() = default;
  void check_index(Index i) const;

  struct MaskPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      std::uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
      h ^= k.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  Graph graph_;
  std::vector<Subgraph> subs_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Index, MaskPairHash> index_;
  std::vector<Index> layer_begin_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// Enumerates every closed subgraph of g.  Throws Error{lattice_too_large}
// as soon as the predicted lattice size exceeds max_size; the prediction
// pass costs at most max_size subset visits, so a rejected call never
// performs exponential work.
LatticePtr enumerate_lattice(Graph g, std::size_t max_size = Lattice::kDefaultGuard);

// All h' with h contained in h' (resp. h' contained in h), ascending,
// including h itself.
std::vector<Lattice::Index> supergraphs_of(const Lattice& lat, Lattice::Index h);
std::vector<Lattice::Index> subgraphs_of(const Lattice& lat, Lattice::Index h);

// All unordered pairs {A, B} of proper subgraphs of h with union(A, B) = h,
// as (smaller index, larger index), sorted ascending.  Enumerated by
// assigning each element of h to A-only / B-only / both (at most 3^|h|
// candidate assignments), keeping only closed pairs.
std::vector<std::pair<Lattice::Index, Lattice::Index>> split_pairs(const Lattice& lat,
                                                                   Lattice::Index h);

// Disjoint analogue of split_pairs: unordered pairs {A, B} of nonempty,
// element-disjoint subgraphs with union h.  These are exactly the
// two-block groupings of h's connected components.
std::vector<std::pair<Lattice::Index, Lattice::Index>> disjoint_split_pairs(
    const Lattice& lat, Lattice::Index h);

enum class CoverMode {
  // Only covers reached by always extending towards the lowest uncovered
  // element.  Sufficient for minimizing nonnegative part-sums: every cover
  // has an emitted subset-cover of no larger sum.
  irredundant,
  // Every cover (each exactly once).
  exhaustive,
};

// Streams the covers of h.  The consumer returns false to stop early.
// h = empty subgraph yields the empty stream: covers have no empty parts,
// so the bottom element has no cover at all.
void for_each_cover(const Lattice& lat, Lattice::Index h, CoverMode mode,
                    const std::function<bool(const Cover&)>& visit);
std::vector<Cover> covers_of(const Lattice& lat, Lattice::Index h, CoverMode mode);

// Streams the covers of h whose parts are pairwise element-disjoint;
// equivalently the groupings of h's connected components.
void for_each_partition(const Lattice& lat, Lattice::Index h,
                        const std::function<bool(const Cover&)>& visit);
std::vector<Cover> partitions_of(const Lattice& lat, Lattice::Index h);

// Connected components of the subgraph at h (isolated vertices are
// singleton components), each a closed subgraph, in ascending order of
// their lowest vertex.
std::vector<Subgraph> components_of(const Lattice& lat, Lattice::Index h);

// Human-readable rendering: the empty subgraph prints as "∅", K2 prints
// as "{a,b | ab}".
std::string render_subgraph(const Graph& g, const Subgraph& s);

}  // namespace genv
