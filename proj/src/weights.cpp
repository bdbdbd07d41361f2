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

#include "genv/weights.hpp"

#include <algorithm>
#include <limits>
#include <bit>
#include <utility>

#include "json.hpp"

#include "genv/error.hpp"
#include "genv/rng.hpp"

namespace genv {

WeightTable::WeightTable(LatticePtr lattice, std::vector<Rational> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (values_.size() != lattice_->size()) {
    raise(Errc::lattice_mismatch, std::to_string(values_.size()),
          "table has " + std::to_string(values_.size()) + " values for a lattice of size " +
              std::to_string(lattice_->size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    // gmp equality and rendering assume canonical form; two-argument
    // mpq_class construction does not canonicalize on its own.
    values_[i].canonicalize();
    if (values_[i] < 0) {
      raise(Errc::negative_weight, format_rational(values_[i]),
            "weight " + format_rational(values_[i]) + " at index " + std::to_string(i) +
                " is negative");
    }
  }
}

const Rational& WeightTable::at(Lattice::Index i) const {
  if (i >= values_.size()) {
    raise(Errc::index_out_of_range, std::to_string(i),
          "weight index " + std::to_string(i) + " out of range");
  }
  return values_[i];
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  if (name == "edge_count") return Builtin::edge_count;
  if (name == "vertex_count") return Builtin::vertex_count;
  if (name == "max_degree") return Builtin::max_degree;
  if (name == "component_count") return Builtin::component_count;
  if (name == "clique_number") return Builtin::clique_number;
  if (name == "chromatic_number") return Builtin::chromatic_number;
  return std::nullopt;
}

const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::edge_count: return "edge_count";
    case Builtin::vertex_count: return "vertex_count";
    case Builtin::max_degree: return "max_degree";
    case Builtin::component_count: return "component_count";
    case Builtin::clique_number: return "clique_number";
    case Builtin::chromatic_number: return "chromatic_number";
  }
  return "?";
}

namespace {

// Local adjacency bitsets over the vertices of s, positions in mask order.
std::vector<std::uint32_t> local_adjacency(const Graph& g, const Subgraph& s,
                                           std::vector<int>& vertex_ids) {
  vertex_ids.clear();
  for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
    vertex_ids.push_back(std::countr_zero(vm));
  }
  std::vector<std::uint32_t> adj(vertex_ids.size(), 0);
  auto local_of = [&](int v) {
    return static_cast<std::size_t>(
        std::popcount(s.vertex_mask & ((1ull << v) - 1)));
  };
  for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
    const auto& [u, v] = g.edges()[static_cast<std::size_t>(std::countr_zero(em))];
    const std::size_t lu = local_of(static_cast<int>(u));
    const std::size_t lv = local_of(static_cast<int>(v));
    adj[lu] |= 1u << lv;
    adj[lv] |= 1u << lu;
  }
  return adj;
}

int max_degree_of(const Graph& g, const Subgraph& s) {
  int best = 0;
  for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
    const std::uint64_t bit = 1ull << std::countr_zero(vm);
    int deg = 0;
    for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
      if (g.edge_endpoint_mask(static_cast<std::size_t>(std::countr_zero(em))) & bit) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

int component_count_of(const Graph& g, const Subgraph& s) {
  int count = 0;
  std::uint64_t unvisited = s.vertex_mask;
  while (unvisited) {
    ++count;
    std::uint64_t comp = 1ull << std::countr_zero(unvisited);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
        const std::uint64_t ep =
            g.edge_endpoint_mask(static_cast<std::size_t>(std::countr_zero(em)));
        if ((ep & comp) && (ep & ~comp)) {
          comp |= ep;
          grew = true;
        }
      }
    }
    unvisited &= ~comp;
  }
  return count;
}

void check_np_cap(const Lattice& lat, const Subgraph& s, std::size_t np_cap, Builtin b) {
  const std::size_t nv = static_cast<std::size_t>(std::popcount(s.vertex_mask));
  if (nv > np_cap) {
    raise(Errc::cap_exceeded, render_subgraph(lat.graph(), s),
          std::string(builtin_name(b)) + " on " + render_subgraph(lat.graph(), s) + " has " +
              std::to_string(nv) + " vertices, above the cap of " + std::to_string(np_cap));
  }
}

// Exhaustive scan over vertex subsets; n is capped, so 2^n stays small.
int clique_number_of(const Graph& g, const Subgraph& s) {
  std::vector<int> ids;
  const std::vector<std::uint32_t> adj = local_adjacency(g, s, ids);
  const std::size_t n = ids.size();
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    const int k = std::popcount(sub);
    if (k <= best) continue;
    bool clique = true;
    for (std::uint32_t rest = sub; rest && clique; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t others = sub & ~(1u << v);
      if ((adj[static_cast<std::size_t>(v)] & others) != others) clique = false;
    }
    if (clique) best = k;
  }
  return best;
}

bool k_colorable(const std::vector<std::uint32_t>& adj, std::size_t n, int k) {
  std::vector<int> color(n, -1);
  // Vertex i may only open color min(i, used); this breaks color symmetry.
  auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
    if (i == n) return true;
    const int limit = std::min(used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (std::uint32_t nb = adj[i] & ((1u << i) - 1); nb; nb &= nb - 1) {
        if (color[static_cast<std::size_t>(std::countr_zero(nb))] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[i] = c;
        if (self(self, i + 1, std::max(used, c + 1))) return true;
        color[i] = -1;
      }
    }
    return false;
  };
  return rec(rec, 0, 0);
}

int chromatic_number_of(const Graph& g, const Subgraph& s) {
  std::vector<int> ids;
  const std::vector<std::uint32_t> adj = local_adjacency(g, s, ids);
  const std::size_t n = ids.size();
  if (n == 0) return 0;
  if (s.edge_mask == 0) return 1;
  for (int k = 2;; ++k) {
    if (k_colorable(adj, n, k)) return k;
  }
}

}  // namespace

Rational eval_builtin(Builtin b, const Lattice& lat, Lattice::Index h, std::size_t np_cap) {
  const Subgraph& s = lat.at(h);
  switch (b) {
    case Builtin::edge_count:
      return Rational(std::popcount(s.edge_mask));
    case Builtin::vertex_count:
      return Rational(std::popcount(s.vertex_mask));
    case Builtin::max_degree:
      return Rational(max_degree_of(lat.graph(), s));
    case Builtin::component_count:
      return Rational(component_count_of(lat.graph(), s));
    case Builtin::clique_number:
      check_np_cap(lat, s, np_cap, b);
      return Rational(clique_number_of(lat.graph(), s));
    case Builtin::chromatic_number:
      check_np_cap(lat, s, np_cap, b);
      return Rational(chromatic_number_of(lat.graph(), s));
  }
  raise(Errc::parse_error, "", "unknown builtin");
}

WeightTable tabulate(Builtin b, LatticePtr lat, std::size_t np_cap) {
  std::vector<Rational> values;
  values.reserve(lat->size());
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    values.push_back(eval_builtin(b, *lat, i, np_cap));
  }
  return WeightTable(std::move(lat), std::move(values));
}

namespace {

using nlohmann::json;

std::string descriptor_of(const json& entry) {
  return entry.dump();
}

// Resolves a {"vertices": [...], "edges": [...]} descriptor to a lattice
// index.  Unknown labels, unknown edges and unclosed pairs are all
// UnknownSubgraph: no closed subgraph matches the descriptor.
Lattice::Index resolve_descriptor(const Lattice& lat, const json& entry) {
  const Graph& g = lat.graph();
  if (!entry.is_object() || !entry.contains("vertices") || !entry.contains("edges")) {
    raise(Errc::parse_error, descriptor_of(entry),
          "weight entry must be an object with \"vertices\", \"edges\" and \"w\"");
  }
  std::uint64_t vmask = 0;
  for (const auto& v : entry.at("vertices")) {
    if (!v.is_string()) {
      raise(Errc::parse_error, descriptor_of(entry), "vertex labels must be strings");
    }
    const std::string label = v.get<std::string>();
    const auto& labels = g.vertex_labels();
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      raise(Errc::unknown_subgraph, descriptor_of(entry),
            "vertex '" + label + "' is not in the graph");
    }
    vmask |= 1ull << (it - labels.begin());
  }
  std::uint64_t emask = 0;
  for (const auto& e : entry.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      raise(Errc::parse_error, descriptor_of(entry),
            "edges must be two-element label arrays");
    }
    const std::string a = e[0].get<std::string>();
    const std::string b = e[1].get<std::string>();
    bool found = false;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& [u, v] = g.edges()[i];
      if ((g.label(u) == a && g.label(v) == b) || (g.label(u) == b && g.label(v) == a)) {
        emask |= 1ull << i;
        found = true;
        break;
      }
    }
    if (!found) {
      raise(Errc::unknown_subgraph, descriptor_of(entry),
            "edge [" + a + "," + b + "] is not in the graph");
    }
  }
  const auto idx = lat.find(vmask, emask);
  if (!idx) {
    raise(Errc::unknown_subgraph, descriptor_of(entry),
          "descriptor does not denote a closed subgraph: " + descriptor_of(entry));
  }
  return *idx;
}

Rational parse_weight_value(const json& w, const std::string& descriptor) {
  if (w.is_string()) return parse_rational(w.get<std::string>());
  if (w.is_number_integer()) {
    if (w.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(w.get<std::uint64_t>())), 1);
    }
    return Rational(mpz_class(std::to_string(w.get<std::int64_t>())), 1);
  }
  if (w.is_number_float()) {
    raise(Errc::malformed_number, w.dump(),
          "weight " + w.dump() + " in " + descriptor +
              " is a float literal; quote decimals (\"" + w.dump() + "\") to keep them exact");
  }
  raise(Errc::malformed_number, w.dump(), "weight must be a string or integer");
}

}  // namespace

WeightTable load_table(LatticePtr lat, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    raise(Errc::parse_error, "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc.at("weights").is_array()) {
    raise(Errc::parse_error, "", "weight file must be an object with a \"weights\" array");
  }

  std::vector<Rational> values(lat->size());
  std::vector<bool> seen(lat->size(), false);
  for (const auto& entry : doc.at("weights")) {
    const Lattice::Index idx = resolve_descriptor(*lat, entry);
    if (seen[idx]) {
      raise(Errc::duplicate_entry, descriptor_of(entry),
            "subgraph " + render_subgraph(lat->graph(), lat->at(idx)) +
                " listed more than once");
    }
    if (!entry.contains("w")) {
      raise(Errc::parse_error, descriptor_of(entry), "weight entry is missing \"w\"");
    }
    const Rational value = parse_weight_value(entry.at("w"), descriptor_of(entry));
    if (value < 0) {
      raise(Errc::negative_weight, format_rational(value),
            "weight " + format_rational(value) + " for " +
                render_subgraph(lat->graph(), lat->at(idx)) + " is negative");
    }
    values[idx] = value;
    seen[idx] = true;
  }
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    if (!seen[i]) {
      raise(Errc::missing_subgraph, render_subgraph(lat->graph(), lat->at(i)),
            "no weight given for " + render_subgraph(lat->graph(), lat->at(i)));
    }
  }
  return WeightTable(std::move(lat), std::move(values));
}

std::string weight_table_to_json(const WeightTable& table) {
  const Lattice& lat = table.lattice();
  const Graph& g = lat.graph();
  json rows = json::array();
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    const Subgraph& s = lat.at(i);
    json vertices = json::array();
    for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
      vertices.push_back(g.label(static_cast<Graph::VertexId>(std::countr_zero(vm))));
    }
    json edges = json::array();
    for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
      const auto& [u, v] = g.edges()[static_cast<std::size_t>(std::countr_zero(em))];
      edges.push_back(json::array({g.label(u), g.label(v)}));
    }
    rows.push_back(json{{"vertices", std::move(vertices)},
                        {"edges", std::move(edges)},
                        {"w", format_rational(table[i])}});
  }
  return json{{"weights", std::move(rows)}}.dump(2) + "\n";
}

WeightTable random_table(LatticePtr lat, std::uint64_t seed, std::uint64_t max_numerator) {
  // Stream tag keeps these draws disjoint from the oracle samplers'.
  constexpr std::uint64_t kStream = 0x7ab1e5eedull;
  std::vector<Rational> values;
  values.reserve(lat->size());
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    detail::CounterRng rng(seed, kStream, i);
    std::uint64_t v = 0;
    if (max_numerator > 0) {
      if (max_numerator == std::numeric_limits<std::uint64_t>::max()) {
        v = rng.next();
      } else {
        v = detail::uniform_below(rng, max_numerator + 1);
      }
    }
    values.emplace_back(mpz_class(std::to_string(v)), 1);
  }
  return WeightTable(std::move(lat), std::move(values));
}

}  // namespace genv
