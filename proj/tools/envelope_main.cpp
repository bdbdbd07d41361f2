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

// Command-line surface: enumerate, envelope, verify, sandwich, bench.
//
// Exit codes: 0 success; 2 parse/validation error in an input file;
// 3 size guard (lattice guard or solver caps); 4 oracle mismatch;
// 5 sandwich FAILURE (a decision, not an error); 6 lattice mismatch.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "genv/envelopes.hpp"
#include "genv/error.hpp"
#include "genv/io.hpp"
#include "genv/oracle.hpp"

namespace {

using namespace genv;

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitOracleMismatch = 4;
constexpr int kExitSandwichFailure = 5;
constexpr int kExitLatticeMismatch = 6;

// Oracle cap used by --oracle-check: large enough for any lattice of at
// most 64 elements, which is the intended scale for the recheck.
constexpr std::size_t kOracleCheckCap = 63;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::duplicate_vertex:
    case Errc::unknown_endpoint:
    case Errc::self_loop:
    case Errc::duplicate_edge:
    case Errc::missing_subgraph:
    case Errc::unknown_subgraph:
    case Errc::duplicate_entry:
    case Errc::negative_weight:
    case Errc::malformed_number:
    case Errc::parse_error:
      return kExitParse;
    case Errc::lattice_too_large:
    case Errc::cap_exceeded:
    case Errc::oracle_cap_exceeded:
      return kExitGuard;
    case Errc::lattice_mismatch:
      return kExitLatticeMismatch;
    case Errc::index_out_of_range:
      return 1;
  }
  return 1;
}

std::size_t resolve_guard(std::optional<std::size_t> flag_value) {
  if (flag_value) return *flag_value;
  if (const char* env = std::getenv("ENVELOPE_MAX_LATTICE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      raise(Errc::parse_error, env,
            std::string("ENVELOPE_MAX_LATTICE must be a positive integer, got '") + env + "'");
    }
    return static_cast<std::size_t>(v);
  }
  return Lattice::kDefaultGuard;
}

// A weight source is a file path or "builtin:<name>".
WeightTable load_weights_source(const std::string& source, LatticePtr lat) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    const auto b = builtin_from_name(name);
    if (!b) {
      raise(Errc::parse_error, name, "unknown builtin weight '" + name + "'");
    }
    return tabulate(*b, std::move(lat));
  }
  return io::load_weight_file(source, std::move(lat));
}

WeightTable load_weights(const std::string& weights_path, const std::string& builtin,
                         LatticePtr lat) {
  if (!builtin.empty()) {
    const auto b = builtin_from_name(builtin);
    if (!b) {
      raise(Errc::parse_error, builtin, "unknown builtin weight '" + builtin + "'");
    }
    return tabulate(*b, std::move(lat));
  }
  return io::load_weight_file(weights_path, std::move(lat));
}

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty()) return std::cout;
  file.open(out_path, std::ios::binary);
  if (!file) {
    raise(Errc::parse_error, out_path, "cannot open output file '" + out_path + "'");
  }
  return file;
}

int cmd_enumerate(const std::string& graph_path, std::optional<std::size_t> guard_flag) {
  const LatticePtr lat =
      enumerate_lattice(io::load_graph_file(graph_path), resolve_guard(guard_flag));
  std::cout << "lattice size: " << lat->size() << "\n";
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    std::cout << render_subgraph(lat->graph(), lat->at(i)) << "\n";
  }
  return 0;
}

struct EnvelopeOptions {
  std::string graph_path;
  std::string weights_path;
  std::string builtin;
  std::string kind = "all";
  std::string format = "csv";
  std::string out_path;
  std::optional<std::size_t> guard;
  bool oracle_check = false;
};

int cmd_envelope(const EnvelopeOptions& opt) {
  const LatticePtr lat =
      enumerate_lattice(io::load_graph_file(opt.graph_path), resolve_guard(opt.guard));
  const WeightTable w = load_weights(opt.weights_path, opt.builtin, lat);

  std::vector<EnvelopeKind> kinds;
  if (opt.kind == "all") {
    kinds = {EnvelopeKind::monotone_minorant, EnvelopeKind::monotone_majorant,
             EnvelopeKind::subadditive_minorant, EnvelopeKind::superadditive_majorant};
  } else {
    bool known = false;
    for (EnvelopeKind k : {EnvelopeKind::monotone_minorant, EnvelopeKind::monotone_majorant,
                           EnvelopeKind::subadditive_minorant,
                           EnvelopeKind::superadditive_majorant}) {
      if (opt.kind == envelope_kind_name(k)) {
        kinds = {k};
        known = true;
        break;
      }
    }
    if (!known) {
      raise(Errc::parse_error, opt.kind, "unknown envelope kind '" + opt.kind + "'");
    }
  }

  io::EnvelopeReport report{w, {}};
  for (EnvelopeKind k : kinds) report.results.push_back(compute_envelope(k, w));

  if (opt.oracle_check) {
    for (const EnvelopeResult& r : report.results) {
      std::optional<WeightTable> reference;
      if (r.kind == EnvelopeKind::subadditive_minorant) {
        reference = subadditive_minorant_bruteforce(w, kOracleCheckCap);
      } else if (r.kind == EnvelopeKind::superadditive_majorant) {
        reference = superadditive_majorant_bruteforce(w, kOracleCheckCap);
      }
      if (!reference) continue;
      for (Lattice::Index i = 0; i < lat->size(); ++i) {
        if (r.output[i] != (*reference)[i]) {
          std::cerr << "oracle mismatch for " << envelope_kind_name(r.kind) << " at index "
                    << i << " (" << render_subgraph(lat->graph(), lat->at(i))
                    << "): dp=" << format_rational(r.output[i])
                    << " oracle=" << format_rational((*reference)[i]) << "\n";
          return kExitOracleMismatch;
        }
      }
    }
  }

  std::ofstream file;
  std::ostream& os = open_output(file, opt.out_path);
  if (opt.format == "csv") {
    io::write_report_csv(os, report);
  } else if (opt.format == "json") {
    io::write_report_json(os, report);
  } else {
    raise(Errc::parse_error, opt.format, "unknown format '" + opt.format + "'");
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& weights_path,
               const std::string& builtin, std::optional<std::size_t> guard_flag) {
  const LatticePtr lat =
      enumerate_lattice(io::load_graph_file(graph_path), resolve_guard(guard_flag));
  const WeightTable w = load_weights(weights_path, builtin, lat);

  const auto report_order = [&](const char* name, const PropertyCheck& check) {
    std::cout << name << ": " << (check.holds ? "yes" : "no");
    if (!check.holds) {
      const auto [a, b] = *check.violation;
      std::cout << " (first violation: " << render_subgraph(lat->graph(), lat->at(a))
                << " within " << render_subgraph(lat->graph(), lat->at(b))
                << ", w=" << format_rational(w[a]) << " vs w=" << format_rational(w[b]) << ")";
    }
    std::cout << "\n";
  };
  report_order("monotone_increasing", is_monotone_increasing(w));
  report_order("monotone_decreasing", is_monotone_decreasing(w));

  const PropertyCheck sub = is_subadditive(w);
  std::cout << "subadditive: " << (sub.holds ? "yes" : "no");
  if (!sub.holds) {
    const auto [a, b] = *sub.violation;
    const Lattice::Index u = lat->index_of(
        lat->at(a).vertex_mask | lat->at(b).vertex_mask,
        lat->at(a).edge_mask | lat->at(b).edge_mask);
    std::cout << " (first violation: H1=" << render_subgraph(lat->graph(), lat->at(a))
              << ", H2=" << render_subgraph(lat->graph(), lat->at(b))
              << ": w(H1∪H2)=" << format_rational(w[u]) << " > "
              << format_rational(w[a]) << "+" << format_rational(w[b]) << ")";
  }
  std::cout << "\n";
  return 0;
}

int cmd_sandwich(const std::string& graph_path, const std::string& w1_source,
                 const std::string& w2_source, const std::string& kind,
                 std::optional<std::size_t> guard_flag) {
  const LatticePtr lat =
      enumerate_lattice(io::load_graph_file(graph_path), resolve_guard(guard_flag));
  const WeightTable w1 = load_weights_source(w1_source, lat);
  const WeightTable w2 = load_weights_source(w2_source, lat);

  if (kind != "monotone" && kind != "subadditive") {
    raise(Errc::parse_error, kind, "sandwich kind must be 'monotone' or 'subadditive'");
  }
  const bool monotone = kind == "monotone";
  const SandwichResult res = monotone ? sandwich_monotone(w1, w2) : sandwich_subadditive(w1, w2);
  const char* property = monotone ? "monotone increasing" : "subadditive";

  if (!res.success) {
    const Lattice::Index i = *res.violating_index;
    std::cout << "FAILURE: w1 > separator at index " << i << " ("
              << render_subgraph(lat->graph(), lat->at(i)) << "): w1="
              << format_rational(w1[i]) << ", separator="
              << format_rational(res.separator[i]) << "\n";
    if (res.witness_supergraph) {
      std::cout << "witness supergraph: "
                << render_subgraph(lat->graph(), lat->at(*res.witness_supergraph)) << "\n";
    }
    if (res.refuting_cover) {
      std::cout << "refuting cover: " << io::cover_token(*lat, *res.refuting_cover) << "\n";
    }
    return kExitSandwichFailure;
  }

  std::cout << "SUCCESS: " << property << " separator found\n";
  std::cout << "index,vertices,edges,separator\n";
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    std::cout << i << ',' << io::vertices_csv(lat->graph(), lat->at(i)) << ','
              << io::edges_csv(lat->graph(), lat->at(i)) << ','
              << format_rational(res.separator[i]) << "\n";
  }
  return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  auto parse_one = [&](const std::string& tok) -> std::size_t {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(tok, &pos, 10);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      raise(Errc::parse_error, tok, "bad size token '" + tok + "'");
    }
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const std::size_t lo = parse_one(spec.substr(0, dots));
    const std::size_t hi = parse_one(spec.substr(dots + 2));
    if (hi < lo) {
      raise(Errc::parse_error, spec, "size range '" + spec + "' is not ascending");
    }
    for (std::size_t n = lo; n <= hi; ++n) sizes.push_back(n);
  } else {
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(parse_one(tok));
  }
  if (sizes.empty()) {
    raise(Errc::parse_error, spec, "no sizes given");
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      raise(Errc::parse_error, spec, "sizes must be strictly ascending");
    }
  }
  return sizes;
}

int cmd_bench(const std::string& family_name_arg, const std::string& sizes_spec,
              std::uint64_t seed, std::optional<std::size_t> guard_flag,
              const std::string& out_path) {
  const auto family = io::family_from_name(family_name_arg);
  if (!family) {
    raise(Errc::parse_error, family_name_arg,
          "unknown family '" + family_name_arg + "' (path|cycle|star|complete)");
  }
  const std::vector<std::size_t> sizes = parse_sizes(sizes_spec);
  const std::size_t guard = resolve_guard(guard_flag);

  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  os << "family,n,vertices,edges,lattice,monotone_min_ms,monotone_maj_ms,"
        "subadd_min_ms,superadd_maj_ms,peak_witness_parts\n";
  for (std::size_t n : sizes) {
    const Graph g = io::make_family_graph(*family, n);
    const std::size_t nv = g.vertex_count();
    const std::size_t ne = g.edge_count();
    const LatticePtr lat = enumerate_lattice(g, guard);
    const WeightTable w = random_table(lat, seed ^ (0x517cc1b727220a95ull * n), 100);

    double times[4] = {0, 0, 0, 0};
    std::size_t peak_parts = 0;
    const EnvelopeKind order[4] = {
        EnvelopeKind::monotone_minorant, EnvelopeKind::monotone_majorant,
        EnvelopeKind::subadditive_minorant, EnvelopeKind::superadditive_majorant};
    for (int k = 0; k < 4; ++k) {
      const auto start = clock::now();
      const EnvelopeResult r = compute_envelope(order[k], w);
      times[k] = ms_since(start);
      for (const Cover& c : r.covers) peak_parts = std::max(peak_parts, c.parts.size());
    }
    os << io::family_name(*family) << ',' << n << ',' << nv << ',' << ne << ','
       << lat->size();
    for (double t : times) os << ',' << t;
    os << ',' << peak_parts << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal monotone/subadditive envelopes of weighted subgraph lattices"};
  app.require_subcommand(1);

  std::optional<std::size_t> guard;

  auto* enumerate = app.add_subcommand("enumerate", "List the subgraph lattice of a graph");
  std::string en_graph;
  std::optional<std::size_t> en_guard;
  enumerate->add_option("--graph", en_graph, "graph JSON file")->required();
  enumerate->add_option("--max-lattice", en_guard, "lattice size guard");

  auto* envelope = app.add_subcommand("envelope", "Compute envelope tables and witnesses");
  EnvelopeOptions eo;
  envelope->add_option("--graph", eo.graph_path, "graph JSON file")->required();
  auto* ew = envelope->add_option("--weights", eo.weights_path, "weight JSON file");
  auto* eb = envelope->add_option("--builtin", eo.builtin, "builtin weight name");
  ew->excludes(eb);
  eb->excludes(ew);
  envelope->add_option("--kind", eo.kind,
                       "all|monotone_min|monotone_maj|subadd_min|superadd_maj");
  envelope->add_option("--format", eo.format, "csv|json");
  envelope->add_option("--out", eo.out_path, "output file (default stdout)");
  envelope->add_option("--max-lattice", eo.guard, "lattice size guard");
  envelope->add_flag("--oracle-check", eo.oracle_check,
                     "recompute cover kinds with the brute-force oracle");

  auto* verify = app.add_subcommand("verify", "Check monotonicity and subadditivity");
  std::string v_graph, v_weights, v_builtin;
  verify->add_option("--graph", v_graph, "graph JSON file")->required();
  auto* vw = verify->add_option("--weights", v_weights, "weight JSON file");
  auto* vb = verify->add_option("--builtin", v_builtin, "builtin weight name");
  vw->excludes(vb);
  vb->excludes(vw);
  verify->add_option("--max-lattice", guard, "lattice size guard");

  auto* sandwich = app.add_subcommand("sandwich", "Decide the separation corollaries");
  std::string s_graph, s_w1, s_w2, s_kind;
  std::optional<std::size_t> s_guard;
  sandwich->add_option("--graph", s_graph, "graph JSON file")->required();
  sandwich->add_option("--w1", s_w1, "lower weight source (file or builtin:NAME)")->required();
  sandwich->add_option("--w2", s_w2, "upper weight source (file or builtin:NAME)")->required();
  sandwich->add_option("--kind", s_kind, "monotone|subadditive")->required();
  sandwich->add_option("--max-lattice", s_guard, "lattice size guard");

  auto* bench = app.add_subcommand("bench", "Time the envelopes on graph families");
  std::string b_family, b_sizes, b_out;
  std::uint64_t b_seed = 1;
  std::optional<std::size_t> b_guard;
  bench->add_option("--family", b_family, "path|cycle|star|complete")->required();
  bench->add_option("--sizes", b_sizes, "list '2,3,4' or range '2..4'")->required();
  bench->add_option("--seed", b_seed, "seed for the random weight tables");
  bench->add_option("--max-lattice", b_guard, "lattice size guard");
  bench->add_option("--out", b_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(en_graph, en_guard);
    if (envelope->parsed()) {
      if (eo.weights_path.empty() && eo.builtin.empty()) {
        raise(Errc::parse_error, "", "one of --weights or --builtin is required");
      }
      return cmd_envelope(eo);
    }
    if (verify->parsed()) {
      if (v_weights.empty() && v_builtin.empty()) {
        raise(Errc::parse_error, "", "one of --weights or --builtin is required");
      }
      return cmd_verify(v_graph, v_weights, v_builtin, guard);
    }
    if (sandwich->parsed()) return cmd_sandwich(s_graph, s_w1, s_w2, s_kind, s_guard);
    if (bench->parsed()) return cmd_bench(b_family, b_sizes, b_seed, b_guard, b_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
