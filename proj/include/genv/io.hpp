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

#include <iosfwd>
#include <string>
#include <vector>

#include "genv/envelopes.hpp"
#include "genv/graph.hpp"
#include "genv/lattice.hpp"
#include "genv/weights.hpp"

namespace genv::io {

// Graph JSON: {"vertices": ["a","b",...], "edges": [["a","b"],...]}.
// Vertex order in the file defines vertex bit positions; edges are
// normalized to endpoint-sorted, lexicographic order.
Graph parse_graph_json(const std::string& json_text);
Graph load_graph_file(const std::string& path);

// Weight file as accepted by load_table.
WeightTable load_weight_file(const std::string& path, LatticePtr lat);

// CSV field renderings (no commas, so no quoting is ever needed):
// vertex sets as semicolon-joined sorted labels, edge sets as
// semicolon-joined sorted "u-v" tokens.
std::string vertices_csv(const Graph& g, const Subgraph& s);
std::string edges_csv(const Graph& g, const Subgraph& s);

// One cover rendered as "[{a}|{b}]": parts in canonical index order, each
// part's vertices then edges semicolon-joined inside braces.  The empty
// cover (bottom element) renders as "[]".
std::string cover_token(const Lattice& lat, const Cover& cover);

// An envelope run over one input table; `results` holds the computed
// kinds in canonical kind order.
struct EnvelopeReport {
  WeightTable input;
  std::vector<EnvelopeResult> results;
};

// CSV with the fixed header
// index,vertices,edges,w,monotone_min,monotone_maj,subadd_min,superadd_maj,witness
// one row per lattice index in canonical order.  Columns of kinds that were
// not computed stay empty.  The witness column lists
// "<kind>=<cover token>" for each computed cover kind, space-joined; the
// monotone kinds carry no witness column entry.
void write_report_csv(std::ostream& os, const EnvelopeReport& report);

// JSON mirror of the CSV, rationals as reduced strings, witnesses as
// arrays of part descriptors.
void write_report_json(std::ostream& os, const EnvelopeReport& report);

// Benchmark graph families.
enum class Family { path, cycle, star, complete };
std::optional<Family> family_from_name(std::string_view name);
const char* family_name(Family f);

// Builds the family member on n vertices with labels "v1".."vn".
// Cycles need n >= 3; everything else accepts n >= 0.  Throws
// Error{parse_error} on an invalid size.
Graph make_family_graph(Family f, std::size_t n);

}  // namespace genv::io
