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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genv/lattice.hpp"
#include "genv/rational.hpp"

namespace genv {

// Dense table of exact nonnegative weights, one per canonical lattice
// index.  Immutable after construction.
class WeightTable {
 public:
  // Throws Error{negative_weight} if any entry is negative and
  // Error{lattice_mismatch} if the value count does not match the lattice.
  WeightTable(LatticePtr lattice, std::vector<Rational> values);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](Lattice::Index i) const { return values_[i]; }
  const Rational& at(Lattice::Index i) const;
  const std::vector<Rational>& values() const { return values_; }

  // Tables agree only when they index the same Lattice instance.
  bool same_lattice(const WeightTable& other) const {
    return lattice_ == other.lattice_;
  }

  friend bool operator==(const WeightTable& a, const WeightTable& b) {
    return a.lattice_ == b.lattice_ && a.values_ == b.values_;
  }

 private:
  LatticePtr lattice_;
  std::vector<Rational> values_;
};

// Built-in graph-parameter weight functions.
enum class Builtin {
  edge_count,
  vertex_count,
  max_degree,
  component_count,
  clique_number,
  chromatic_number,
};

std::optional<Builtin> builtin_from_name(std::string_view name);
const char* builtin_name(Builtin b);

// Vertex cap for the exhaustive clique/chromatic solvers.
inline constexpr std::size_t kDefaultNpCap = 16;

// Exact integer value of the parameter on the subgraph at h.  Conventions:
// chromatic number is 0 on the empty subgraph and 1 on an edgeless
// nonempty one; clique number is 0 on the empty subgraph; max degree is 0
// on edgeless subgraphs; component count counts components among the
// included vertices.  Throws Error{cap_exceeded} when clique_number or
// chromatic_number is asked about a subgraph with more than np_cap
// vertices.
Rational eval_builtin(Builtin b, const Lattice& lat, Lattice::Index h,
                      std::size_t np_cap = kDefaultNpCap);

WeightTable tabulate(Builtin b, LatticePtr lat, std::size_t np_cap = kDefaultNpCap);

// Parses a weight file (JSON text): {"weights": [{"vertices": ["a"],
// "edges": [], "w": "3/2"}, ...]}.  Every lattice element must appear
// exactly once, identified by its vertex and edge label sets.  Weights are
// strings ("p/q", integer, or terminating decimal, parsed exactly) or JSON
// integers; JSON float literals are rejected because a binary double cannot
// carry an exact decimal.
WeightTable load_table(LatticePtr lat, const std::string& json_text);

// Emits the round-trip JSON form of a table ({"weights": [...]}), rows in
// canonical order, rationals reduced.
std::string weight_table_to_json(const WeightTable& table);

// Deterministic seeded table with integer values uniform in
// [0, max_numerator].  The same (seed, lattice, max_numerator) reproduces a
// bit-identical table on every platform.
WeightTable random_table(LatticePtr lat, std::uint64_t seed, std::uint64_t max_numerator);

}  // namespace genv
