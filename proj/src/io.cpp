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

#include "genv/io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "genv/error.hpp"

namespace genv::io {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(Errc::parse_error, path, "cannot open file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph parse_graph_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    raise(Errc::parse_error, "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    raise(Errc::parse_error, "",
          "graph file must be an object with \"vertices\" and \"edges\"");
  }
  std::vector<std::string> labels;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_string()) {
      raise(Errc::parse_error, v.dump(), "field \"vertices\" must hold strings");
    }
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      raise(Errc::parse_error, e.dump(),
            "field \"edges\" must hold two-element label arrays");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return build_graph(std::move(labels), edges);
}

Graph load_graph_file(const std::string& path) {
  return parse_graph_json(read_file(path));
}

WeightTable load_weight_file(const std::string& path, LatticePtr lat) {
  return load_table(std::move(lat), read_file(path));
}

std::string vertices_csv(const Graph& g, const Subgraph& s) {
  std::vector<std::string> labels;
  for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
    labels.push_back(g.label(static_cast<Graph::VertexId>(std::countr_zero(vm))));
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ";";
    out += labels[i];
  }
  return out;
}

std::string edges_csv(const Graph& g, const Subgraph& s) {
  std::vector<std::string> tokens;
  for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
    const auto& [u, v] = g.edges()[static_cast<std::size_t>(std::countr_zero(em))];
    std::string a = g.label(u), b = g.label(v);
    if (b < a) std::swap(a, b);
    tokens.push_back(a + "-" + b);
  }
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ";";
    out += tokens[i];
  }
  return out;
}

namespace {

std::string part_token(const Graph& g, const Subgraph& s) {
  std::string out = "{";
  out += vertices_csv(g, s);
  const std::string edges = edges_csv(g, s);
  if (!edges.empty()) {
    out += ";";
    out += edges;
  }
  out += "}";
  return out;
}

}  // namespace

std::string cover_token(const Lattice& lat, const Cover& cover) {
  std::string out = "[";
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    if (i) out += "|";
    out += part_token(lat.graph(), lat.at(cover.parts[i]));
  }
  out += "]";
  return out;
}

namespace {

const EnvelopeResult* find_kind(const EnvelopeReport& report, EnvelopeKind kind) {
  for (const EnvelopeResult& r : report.results) {
    if (r.kind == kind) return &r;
  }
  return nullptr;
}

constexpr EnvelopeKind kKindOrder[] = {
    EnvelopeKind::monotone_minorant,
    EnvelopeKind::monotone_majorant,
    EnvelopeKind::subadditive_minorant,
    EnvelopeKind::superadditive_majorant,
};

}  // namespace

void write_report_csv(std::ostream& os, const EnvelopeReport& report) {
  const Lattice& lat = report.input.lattice();
  const Graph& g = lat.graph();
  os << "index,vertices,edges,w,monotone_min,monotone_maj,subadd_min,superadd_maj,witness\n";
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    const Subgraph& s = lat.at(i);
    os << i << ',' << vertices_csv(g, s) << ',' << edges_csv(g, s) << ','
       << format_rational(report.input[i]);
    for (EnvelopeKind kind : kKindOrder) {
      os << ',';
      if (const EnvelopeResult* r = find_kind(report, kind)) {
        os << format_rational(r->output[i]);
      }
    }
    os << ',';
    bool first = true;
    for (EnvelopeKind kind : {EnvelopeKind::subadditive_minorant,
                              EnvelopeKind::superadditive_majorant}) {
      if (const EnvelopeResult* r = find_kind(report, kind)) {
        if (!first) os << ' ';
        os << envelope_kind_name(kind) << '=' << cover_token(lat, r->covers[i]);
        first = false;
      }
    }
    os << '\n';
  }
}

void write_report_json(std::ostream& os, const EnvelopeReport& report) {
  const Lattice& lat = report.input.lattice();
  const Graph& g = lat.graph();

  json graph_obj;
  graph_obj["vertices"] = g.vertex_labels();
  json graph_edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    graph_edges.push_back(json::array({g.label(u), g.label(v)}));
  }
  graph_obj["edges"] = std::move(graph_edges);

  json kinds = json::array();
  for (const EnvelopeResult& r : report.results) kinds.push_back(envelope_kind_name(r.kind));

  auto subgraph_descriptor = [&](const Subgraph& s) {
    json vertices = json::array();
    for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
      vertices.push_back(g.label(static_cast<Graph::VertexId>(std::countr_zero(vm))));
    }
    json edges = json::array();
    for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
      const auto& [u, v] = g.edges()[static_cast<std::size_t>(std::countr_zero(em))];
      edges.push_back(json::array({g.label(u), g.label(v)}));
    }
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  };

  json rows = json::array();
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    const Subgraph& s = lat.at(i);
    json row = subgraph_descriptor(s);
    row["index"] = i;
    row["w"] = format_rational(report.input[i]);
    json witness = json::object();
    for (EnvelopeKind kind : kKindOrder) {
      if (const EnvelopeResult* r = find_kind(report, kind)) {
        row[envelope_kind_name(kind)] = format_rational(r->output[i]);
        if (!r->covers.empty()) {
          json parts = json::array();
          for (Lattice::Index part : r->covers[i].parts) {
            parts.push_back(subgraph_descriptor(lat.at(part)));
          }
          witness[envelope_kind_name(kind)] = std::move(parts);
        }
      }
    }
    if (!witness.empty()) row["witness"] = std::move(witness);
    rows.push_back(std::move(row));
  }

  json doc{{"graph", std::move(graph_obj)},
           {"lattice_size", lat.size()},
           {"kinds", std::move(kinds)},
           {"rows", std::move(rows)}};
  os << doc.dump(2) << '\n';
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
  }
  return "?";
}

Graph make_family_graph(Family f, std::size_t n) {
  if (f == Family::cycle && n < 3) {
    raise(Errc::parse_error, std::to_string(n),
          "a cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  switch (f) {
    case Family::path:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(labels[i - 1], labels[i]);
      break;
    case Family::cycle:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(labels[i - 1], labels[i]);
      edges.emplace_back(labels[n - 1], labels[0]);
      break;
    case Family::star:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(labels[0], labels[i]);
      break;
    case Family::complete:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
      }
      break;
  }
  return build_graph(std::move(labels), edges);
}

}  // namespace genv::io
