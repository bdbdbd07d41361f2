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

#include "genv/lattice.hpp"

#include <algorithm>
#include <limits>

#include "genv/error.hpp"

namespace genv {

namespace {

// Mask of the edges whose endpoints both lie in the vertex set.
std::uint64_t admissible_edges(const Graph& g, std::uint64_t vertex_mask) {
  std::uint64_t avail = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::uint64_t ep = g.edge_endpoint_mask(e);
    if ((ep & vertex_mask) == ep) avail |= (1ull << e);
  }
  return avail;
}

bool canonical_less(const Subgraph& a, const Subgraph& b) {
  if (a.size != b.size) return a.size < b.size;
  if (a.vertex_mask != b.vertex_mask) return a.vertex_mask < b.vertex_mask;
  return a.edge_mask < b.edge_mask;
}

[[noreturn]] void too_large(std::size_t max_size, const std::string& detail) {
  raise(Errc::lattice_too_large, detail,
        "predicted lattice size exceeds the guard of " + std::to_string(max_size) +
            " (" + detail + ")");
}

}  // namespace

void Lattice::check_index(Index i) const {
  if (i >= subs_.size()) {
    raise(Errc::index_out_of_range, std::to_string(i),
          "lattice index " + std::to_string(i) + " out of range [0, " +
              std::to_string(subs_.size()) + ")");
  }
}

std::optional<Lattice::Index> Lattice::find(std::uint64_t vertex_mask,
                                            std::uint64_t edge_mask) const {
  auto it = index_.find({vertex_mask, edge_mask});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lattice::Index Lattice::index_of(std::uint64_t vertex_mask, std::uint64_t edge_mask) const {
  auto found = find(vertex_mask, edge_mask);
  if (!found) {
    raise(Errc::index_out_of_range, "",
          "mask pair does not denote a closed subgraph of this lattice");
  }
  return *found;
}

std::vector<Lattice::Index> Lattice::upper_covers(Index i) const {
  check_index(i);
  const Subgraph& s = subs_[i];
  std::vector<Index> out;
  const std::size_t nv = graph_.vertex_count();
  for (std::size_t v = 0; v < nv; ++v) {
    const std::uint64_t bit = 1ull << v;
    if (!(s.vertex_mask & bit)) out.push_back(index_of(s.vertex_mask | bit, s.edge_mask));
  }
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const std::uint64_t bit = 1ull << e;
    if (s.edge_mask & bit) continue;
    const std::uint64_t ep = graph_.edge_endpoint_mask(e);
    if ((ep & s.vertex_mask) == ep) out.push_back(index_of(s.vertex_mask, s.edge_mask | bit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Lattice::Index> Lattice::lower_covers(Index i) const {
  check_index(i);
  const Subgraph& s = subs_[i];
  std::vector<Index> out;
  std::uint64_t touched = 0;  // vertices with an incident edge inside s
  for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
    const int e = std::countr_zero(em);
    touched |= graph_.edge_endpoint_mask(static_cast<std::size_t>(e));
    out.push_back(index_of(s.vertex_mask, s.edge_mask & ~(1ull << e)));
  }
  for (std::uint64_t vm = s.vertex_mask & ~touched; vm; vm &= vm - 1) {
    const int v = std::countr_zero(vm);
    out.push_back(index_of(s.vertex_mask & ~(1ull << v), s.edge_mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePtr enumerate_lattice(Graph g, std::size_t max_size) {
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();

  // Every vertex subset is a lattice element, as is every edge subset over
  // the full vertex set, so |lattice| >= max(2^|V|, 2^|E|).
  if (nv >= 64 || ne >= 64) {
    too_large(max_size, "graph has " + std::to_string(nv) + " vertices and " +
                            std::to_string(ne) + " edges");
  }
  if (nv < 64 && max_size < (std::size_t{1} << std::min<std::size_t>(nv, 63))) {
    too_large(max_size, "2^" + std::to_string(nv) + " vertex subsets alone exceed it");
  }

  // Prediction pass: at most max_size visited subsets (2^nv <= max_size here).
  std::size_t predicted = 0;
  const std::uint64_t full = nv == 0 ? 0 : ((nv == 64 ? ~0ull : (1ull << nv) - 1));
  for (std::uint64_t vm = 0;; ++vm) {
    const int k = std::popcount(admissible_edges(g, vm));
    if (k >= 63) too_large(max_size, "a single vertex subset admits 2^" + std::to_string(k) + " edge subsets");
    predicted += (std::size_t{1} << k);
    if (predicted > max_size) {
      too_large(max_size, "predicted size reached " + std::to_string(predicted));
    }
    if (vm == full) break;
  }
  if (predicted > std::numeric_limits<Lattice::Index>::max()) {
    too_large(max_size, "size does not fit a 32-bit index");
  }

  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->graph_ = std::move(g);
  lat->subs_.reserve(predicted);
  for (std::uint64_t vm = 0;; ++vm) {
    const std::uint64_t avail = admissible_edges(lat->graph_, vm);
    std::uint64_t em = avail;
    while (true) {
      lat->subs_.push_back(Subgraph{vm, em, subgraph_size(vm, em)});
      if (em == 0) break;
      em = (em - 1) & avail;
    }
    if (vm == full) break;
  }
  std::sort(lat->subs_.begin(), lat->subs_.end(), canonical_less);

  lat->index_.reserve(lat->subs_.size());
  for (std::size_t i = 0; i < lat->subs_.size(); ++i) {
    lat->index_.emplace(std::make_pair(lat->subs_[i].vertex_mask, lat->subs_[i].edge_mask),
                        static_cast<Lattice::Index>(i));
  }

  const std::size_t max_layer = static_cast<std::size_t>(lat->subs_.back().size);
  lat->layer_begin_.assign(max_layer + 2, 0);
  for (const Subgraph& s : lat->subs_) {
    lat->layer_begin_[static_cast<std::size_t>(s.size) + 1]++;
  }
  for (std::size_t i = 1; i < lat->layer_begin_.size(); ++i) {
    lat->layer_begin_[i] += lat->layer_begin_[i - 1];
  }
  return lat;
}

std::vector<Lattice::Index> supergraphs_of(const Lattice& lat, Lattice::Index h) {
  const Subgraph& s = lat.at(h);
  std::vector<Lattice::Index> out;
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    if (is_contained(s, lat.subgraphs()[i])) out.push_back(i);
  }
  return out;
}

std::vector<Lattice::Index> subgraphs_of(const Lattice& lat, Lattice::Index h) {
  const Subgraph& s = lat.at(h);
  std::vector<Lattice::Index> out;
  for (Lattice::Index i = 0; i < lat.size(); ++i) {
    if (is_contained(lat.subgraphs()[i], s)) out.push_back(i);
  }
  return out;
}

namespace {

// Elements of a subgraph in branching order: vertices by index, then edges.
struct Element {
  bool is_edge;
  int bit;
};

std::vector<Element> elements_of(const Subgraph& s) {
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(s.size));
  for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
    elems.push_back({false, std::countr_zero(vm)});
  }
  for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
    elems.push_back({true, std::countr_zero(em)});
  }
  return elems;
}

struct SplitEnumerator {
  const Lattice& lat;
  const Subgraph target;
  std::vector<Element> elems;
  std::vector<std::pair<Lattice::Index, Lattice::Index>> out;

  void run() {
    descend(0, Subgraph{}, Subgraph{});
  }

  // Assign element k to A-only / B-only / both.  Edges come after both of
  // their endpoints in `elems`, so closure can be enforced at assignment.
  void descend(std::size_t k, Subgraph a, Subgraph b) {
    if (k == elems.size()) {
      if (a == target || b == target) return;  // proper parts only
      // Each unordered pair appears once per orientation; keep one.
      if (std::make_pair(a.vertex_mask, a.edge_mask) <
          std::make_pair(b.vertex_mask, b.edge_mask)) {
        Lattice::Index ia = lat.index_of(a);
        Lattice::Index ib = lat.index_of(b);
        out.emplace_back(std::min(ia, ib), std::max(ia, ib));
      }
      return;
    }
    const Element& el = elems[k];
    if (!el.is_edge) {
      const std::uint64_t bit = 1ull << el.bit;
      descend(k + 1, Subgraph{a.vertex_mask | bit, a.edge_mask, 0}, b);
      descend(k + 1, a, Subgraph{b.vertex_mask | bit, b.edge_mask, 0});
      descend(k + 1, Subgraph{a.vertex_mask | bit, a.edge_mask, 0},
              Subgraph{b.vertex_mask | bit, b.edge_mask, 0});
    } else {
      const std::uint64_t bit = 1ull << el.bit;
      const std::uint64_t ep = lat.graph().edge_endpoint_mask(static_cast<std::size_t>(el.bit));
      const bool a_ok = (ep & a.vertex_mask) == ep;
      const bool b_ok = (ep & b.vertex_mask) == ep;
      if (a_ok) descend(k + 1, Subgraph{a.vertex_mask, a.edge_mask | bit, 0}, b);
      if (b_ok) descend(k + 1, a, Subgraph{b.vertex_mask, b.edge_mask | bit, 0});
      if (a_ok && b_ok) {
        descend(k + 1, Subgraph{a.vertex_mask, a.edge_mask | bit, 0},
                Subgraph{b.vertex_mask, b.edge_mask | bit, 0});
      }
    }
  }
};

}  // namespace

std::vector<std::pair<Lattice::Index, Lattice::Index>> split_pairs(const Lattice& lat,
                                                                   Lattice::Index h) {
  SplitEnumerator en{lat, lat.at(h), elements_of(lat.at(h)), {}};
  en.run();
  std::sort(en.out.begin(), en.out.end());
  return en.out;
}

std::vector<Subgraph> components_of(const Lattice& lat, Lattice::Index h) {
  const Subgraph& s = lat.at(h);
  const Graph& g = lat.graph();
  std::vector<Subgraph> comps;
  std::uint64_t unvisited = s.vertex_mask;
  while (unvisited) {
    const int start = std::countr_zero(unvisited);
    std::uint64_t comp_v = 1ull << start;
    std::uint64_t comp_e = 0;
    // Grow until no edge of s leaves the current vertex set.
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint64_t em = s.edge_mask & ~comp_e; em; em &= em - 1) {
        const int e = std::countr_zero(em);
        const std::uint64_t ep = g.edge_endpoint_mask(static_cast<std::size_t>(e));
        if (ep & comp_v) {
          comp_e |= 1ull << e;
          if ((ep & ~comp_v) != 0) {
            comp_v |= ep;
            grew = true;
          }
        }
      }
    }
    comps.push_back(Subgraph{comp_v, comp_e, subgraph_size(comp_v, comp_e)});
    unvisited &= ~comp_v;
  }
  return comps;
}

std::vector<std::pair<Lattice::Index, Lattice::Index>> disjoint_split_pairs(
    const Lattice& lat, Lattice::Index h) {
  const std::vector<Subgraph> comps = components_of(lat, h);
  std::vector<std::pair<Lattice::Index, Lattice::Index>> out;
  if (comps.size() < 2) return out;
  const std::size_t k = comps.size();
  // Component 0 stays in A; every nonempty subset of the rest forms B.
  for (std::uint64_t pick = 1; pick < (1ull << (k - 1)); ++pick) {
    Subgraph a = comps[0];
    Subgraph b{};
    for (std::size_t i = 1; i < k; ++i) {
      if (pick & (1ull << (i - 1))) {
        b = union_of(b, comps[i]);
      } else {
        a = union_of(a, comps[i]);
      }
    }
    Lattice::Index ia = lat.index_of(a);
    Lattice::Index ib = lat.index_of(b);
    out.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CoverEnumerator {
  const Lattice& lat;
  const Subgraph target;
  CoverMode mode;
  const std::function<bool(const Cover&)>& visit;

  std::vector<Lattice::Index> candidates;  // nonempty subgraphs of target, ascending
  std::vector<bool> excluded;
  std::vector<std::size_t> chosen;  // candidate positions
  bool stopped = false;

  bool emit(const std::vector<std::size_t>& positions) {
    Cover c;
    c.parts.reserve(positions.size());
    for (std::size_t p : positions) c.parts.push_back(candidates[p]);
    std::sort(c.parts.begin(), c.parts.end());
    if (!visit(c)) {
      stopped = true;
      return false;
    }
    return true;
  }

  // Exhaustive mode tops up an emitted cover with every subset of the
  // still-eligible unused candidates.  Eligibility (not excluded on this
  // branch) is what keeps each cover reachable exactly once.
  void extend(std::vector<std::size_t>& unused, std::size_t from,
              std::vector<std::size_t>& acc) {
    if (stopped) return;
    if (from == unused.size()) return;
    for (std::size_t i = from; i < unused.size() && !stopped; ++i) {
      acc.push_back(unused[i]);
      if (!emit(acc)) {
        acc.pop_back();
        return;
      }
      extend(unused, i + 1, acc);
      acc.pop_back();
    }
  }

  void descend(const Subgraph& uncovered) {
    if (stopped) return;
    if (uncovered.empty()) {
      if (!emit(chosen)) return;
      if (mode == CoverMode::exhaustive) {
        std::vector<std::size_t> unused;
        std::vector<bool> in_chosen(candidates.size(), false);
        for (std::size_t p : chosen) in_chosen[p] = true;
        for (std::size_t p = 0; p < candidates.size(); ++p) {
          if (!excluded[p] && !in_chosen[p]) unused.push_back(p);
        }
        std::vector<std::size_t> acc(chosen);
        extend(unused, 0, acc);
      }
      return;
    }

    // Branch on the lowest uncovered element: vertices first, then edges.
    std::uint64_t want_v = 0, want_e = 0;
    if (uncovered.vertex_mask) {
      want_v = uncovered.vertex_mask & (~uncovered.vertex_mask + 1);
    } else {
      want_e = uncovered.edge_mask & (~uncovered.edge_mask + 1);
    }

    std::vector<std::size_t> eligible;
    for (std::size_t p = 0; p < candidates.size(); ++p) {
      if (excluded[p]) continue;
      const Subgraph& c = lat.subgraphs()[candidates[p]];
      if ((c.vertex_mask & want_v) == want_v && (c.edge_mask & want_e) == want_e) {
        eligible.push_back(p);
      }
    }
    // Choosing the i-th eligible part excludes the earlier ones: the part
    // covering this element must be the minimal-index such part of the
    // final cover, which makes every cover reachable exactly once.
    for (std::size_t i = 0; i < eligible.size() && !stopped; ++i) {
      const std::size_t p = eligible[i];
      for (std::size_t j = 0; j < i; ++j) excluded[eligible[j]] = true;
      chosen.push_back(p);
      const Subgraph& part = lat.subgraphs()[candidates[p]];
      descend(Subgraph{uncovered.vertex_mask & ~part.vertex_mask,
                       uncovered.edge_mask & ~part.edge_mask, 0});
      chosen.pop_back();
      for (std::size_t j = 0; j < i; ++j) excluded[eligible[j]] = false;
    }
  }
};

}  // namespace

void for_each_cover(const Lattice& lat, Lattice::Index h, CoverMode mode,
                    const std::function<bool(const Cover&)>& visit) {
  const Subgraph& target = lat.at(h);
  if (target.empty()) return;  // no nonempty parts exist
  CoverEnumerator en{lat, target, mode, visit, {}, {}, {}, false};
  for (Lattice::Index i = 1; i < lat.size(); ++i) {
    if (is_contained(lat.subgraphs()[i], target)) en.candidates.push_back(i);
  }
  en.excluded.assign(en.candidates.size(), false);
  en.descend(target);
}

std::vector<Cover> covers_of(const Lattice& lat, Lattice::Index h, CoverMode mode) {
  std::vector<Cover> out;
  for_each_cover(lat, h, mode, [&](const Cover& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

void for_each_partition(const Lattice& lat, Lattice::Index h,
                        const std::function<bool(const Cover&)>& visit) {
  const std::vector<Subgraph> comps = components_of(lat, h);
  if (comps.empty()) return;
  const std::size_t k = comps.size();

  // Restricted-growth assignment of components to blocks.
  std::vector<std::size_t> block(k, 0);
  bool stopped = false;

  auto emit = [&](std::size_t used) {
    std::vector<Subgraph> blocks(used);
    for (std::size_t i = 0; i < k; ++i) blocks[block[i]] = union_of(blocks[block[i]], comps[i]);
    Cover c;
    c.parts.reserve(used);
    for (const Subgraph& b : blocks) c.parts.push_back(lat.index_of(b));
    std::sort(c.parts.begin(), c.parts.end());
    if (!visit(c)) stopped = true;
  };

  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (stopped) return;
    if (i == k) {
      emit(used);
      return;
    }
    for (std::size_t b = 0; b <= used && !stopped; ++b) {
      block[i] = b;
      self(self, i + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Cover> partitions_of(const Lattice& lat, Lattice::Index h) {
  std::vector<Cover> out;
  for_each_partition(lat, h, [&](const Cover& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::string render_subgraph(const Graph& g, const Subgraph& s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (std::uint64_t vm = s.vertex_mask; vm; vm &= vm - 1) {
    if (!first) out += ",";
    out += g.label(static_cast<Graph::VertexId>(std::countr_zero(vm)));
    first = false;
  }
  if (s.edge_mask) {
    out += " | ";
    first = true;
    for (std::uint64_t em = s.edge_mask; em; em &= em - 1) {
      const auto& [u, v] = g.edges()[static_cast<std::size_t>(std::countr_zero(em))];
      if (!first) out += ",";
      out += g.label(u);
      out += g.label(v);
      first = false;
    }
  }
  out += "}";
  return out;
}

}  // namespace genv
