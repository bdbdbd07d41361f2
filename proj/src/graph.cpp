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

#include "genv/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "genv/error.hpp"

namespace genv {

Graph build_graph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Graph::VertexId> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = index.emplace(labels[i], static_cast<Graph::VertexId>(i));
    if (!inserted) {
      raise(Errc::duplicate_vertex, labels[i],
            "vertex label '" + labels[i] + "' appears more than once");
    }
  }

  std::vector<Graph::Edge> normalized;
  normalized.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) {
      raise(Errc::unknown_endpoint, a, "edge endpoint '" + a + "' is not a vertex");
    }
    auto ib = index.find(b);
    if (ib == index.end()) {
      raise(Errc::unknown_endpoint, b, "edge endpoint '" + b + "' is not a vertex");
    }
    Graph::VertexId u = ia->second;
    Graph::VertexId v = ib->second;
    if (u == v) {
      raise(Errc::self_loop, a, "self-loop on vertex '" + a + "'");
    }
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (!seen.insert(key).second) {
      const std::string token = labels[u] + "-" + labels[v];
      raise(Errc::duplicate_edge, token, "edge '" + token + "' appears more than once");
    }
    normalized.emplace_back(u, v);
  }
  std::sort(normalized.begin(), normalized.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.edges_ = std::move(normalized);
  if (g.labels_.size() <= 64) {
    g.endpoint_masks_.reserve(g.edges_.size());
    for (const auto& [u, v] : g.edges_) {
      g.endpoint_masks_.push_back((1ull << u) | (1ull << v));
    }
  }
  return g;
}

}  // namespace genv
