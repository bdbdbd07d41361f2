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

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace genv {

// Immutable finite simple undirected graph with labelled vertices.
//
// Vertex bit positions follow the label order given at construction.  Edges
// are normalized (endpoints sorted within an edge, edge list sorted
// lexicographically by index pair); edge bit positions follow that order.
// Instances are safe to share across threads once built.
class Graph {
 public:
  using VertexId = std::uint32_t;
  using Edge = std::pair<VertexId, VertexId>;  // first < second

  Graph() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& label(VertexId v) const { return labels_[v]; }

  // Bitmask of the two endpoints of edge e.  Valid when vertex_count <= 64,
  // which the lattice guard enforces before any mask is consumed.
  std::uint64_t edge_endpoint_mask(std::size_t e) const {
    return endpoint_masks_[e];
  }

  friend Graph build_graph(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> endpoint_masks_;
};

// Validates and normalizes the inputs.  Throws Error with code
// DuplicateVertex, UnknownEndpoint, SelfLoop or DuplicateEdge, naming the
// offending label or edge token.
Graph build_graph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace genv
