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

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "genv/envelopes.hpp"
#include "genv/error.hpp"
#include "genv/io.hpp"

#include "test_util.hpp"

using namespace genv;
using namespace testutil;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::stringstream ss(line);
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

TEST_CASE("parse_graph_json") {
  const Graph g = io::parse_graph_json(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);

  for (const char* bad : {"{oops", R"({"vertices":["a"]})", R"({"vertices":[1],"edges":[]})",
                          R"({"vertices":["a"],"edges":[["a"]]})"}) {
    try {
      io::parse_graph_json(bad);
      FAIL_CHECK("expected ParseError for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }

  // graph validation errors pass through with their own codes
  try {
    io::parse_graph_json(R"({"vertices":["a","a"],"edges":[]})");
    FAIL_CHECK("expected DuplicateVertex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_vertex);
  }
}

TEST_CASE("load_graph_file and load_weight_file") {
  const std::string dir = TESTDATA_DIR;
  const Graph g = io::load_graph_file(dir + "/k2.json");
  const auto lat = enumerate_lattice(g);
  const WeightTable w2 = io::load_weight_file(dir + "/k2_w2.json", lat);
  CHECK(w2.values() == rationals({0, 3, 5, 9, 4}));

  try {
    io::load_graph_file(dir + "/no_such_file.json");
    FAIL_CHECK("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("csv field renderings") {
  const auto lat = enumerate_lattice(k2());
  CHECK(io::vertices_csv(lat->graph(), lat->at(0)).empty());
  CHECK(io::vertices_csv(lat->graph(), lat->at(3)) == "a;b");
  CHECK(io::edges_csv(lat->graph(), lat->at(4)) == "a-b");
  CHECK(io::cover_token(*lat, Cover{{1, 2}}) == "[{a}|{b}]");
  CHECK(io::cover_token(*lat, Cover{{4}}) == "[{a;b;a-b}]");
  CHECK(io::cover_token(*lat, Cover{}) == "[]");
}

TEST_CASE("csv report matches the golden file byte for byte") {
  const std::string dir = TESTDATA_DIR;
  const auto lat = enumerate_lattice(io::load_graph_file(dir + "/k2.json"));
  const WeightTable w2 = io::load_weight_file(dir + "/k2_w2.json", lat);
  io::EnvelopeReport report{w2,
                            {monotone_minorant(w2), monotone_majorant(w2),
                             subadditive_minorant(w2), superadditive_majorant(w2)}};
  std::ostringstream os;
  io::write_report_csv(os, report);
  CHECK(os.str() == slurp(dir + "/golden_k2_w2.csv"));
}

TEST_CASE("csv report leaves uncomputed kinds empty") {
  const auto lat = enumerate_lattice(k2());
  const WeightTable w2 = table_of(lat, {0, 3, 5, 9, 4});
  io::EnvelopeReport report{w2, {}};
  report.results.push_back(subadditive_minorant(w2));
  std::ostringstream os;
  io::write_report_csv(os, report);
  const auto lines = split(os.str(), '\n');
  REQUIRE(lines.size() >= 5);
  const auto row3 = split(lines[4], ',');
  REQUIRE(row3.size() == 9);
  CHECK(row3[0] == "3");
  CHECK(row3[4].empty());        // monotone_min not computed
  CHECK(row3[6] == "8");         // subadd_min
  CHECK(row3[8] == "subadd_min=[{a}|{b}]");
}

TEST_CASE("weight table json round-trips bit-identically") {
  const auto lat = enumerate_lattice(p3());
  std::vector<Rational> vals;
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    Rational r(static_cast<long>(3 * i + 1), static_cast<long>(1 + (i % 4)));
    r.canonicalize();
    vals.push_back(r);
  }
  const WeightTable original(lat, std::move(vals));
  const WeightTable reloaded = load_table(lat, weight_table_to_json(original));
  CHECK(reloaded == original);
}

TEST_CASE("csv rationals reload exactly") {
  const auto lat = enumerate_lattice(k2());
  std::vector<Rational> vals = rationals({0, 0, 0, 0, 0});
  vals[1] = Rational(7, 3);
  vals[2] = Rational(1, 2);
  vals[4] = Rational(22, 7);
  const WeightTable w(lat, std::move(vals));
  io::EnvelopeReport report{w, {monotone_minorant(w)}};
  std::ostringstream os;
  io::write_report_csv(os, report);
  const auto lines = split(os.str(), '\n');
  for (Lattice::Index i = 0; i < lat->size(); ++i) {
    const auto fields = split(lines[1 + i], ',');
    CHECK(parse_rational(fields[3]) == w[i]);
  }
}

TEST_CASE("json report carries exact rationals and witnesses") {
  const auto lat = enumerate_lattice(k2());
  std::vector<Rational> vals = rationals({0, 3, 5, 9, 4});
  vals[1] = Rational(10, 3);
  const WeightTable w(lat, std::move(vals));
  io::EnvelopeReport report{w,
                            {monotone_minorant(w), monotone_majorant(w),
                             subadditive_minorant(w), superadditive_majorant(w)}};
  std::ostringstream os;
  io::write_report_json(os, report);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc.at("lattice_size") == 5);
  REQUIRE(doc.at("rows").size() == 5);
  for (Lattice::Index i = 0; i < 5; ++i) {
    CHECK(parse_rational(doc.at("rows")[i].at("w").get<std::string>()) == w[i]);
  }
  // the optimal cover of {a,b} splits into the two singletons
  const auto& witness = doc.at("rows")[3].at("witness").at("subadd_min");
  REQUIRE(witness.size() == 2);
  CHECK(witness[0].at("vertices") == nlohmann::json::array({"a"}));
}

TEST_CASE("family graphs") {
  const Graph p = io::make_family_graph(io::Family::path, 4);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  const Graph c = io::make_family_graph(io::Family::cycle, 5);
  CHECK(c.edge_count() == 5);
  const Graph s = io::make_family_graph(io::Family::star, 4);
  CHECK(s.edge_count() == 3);
  const Graph k = io::make_family_graph(io::Family::complete, 4);
  CHECK(k.edge_count() == 6);

  CHECK(io::family_from_name("path") == io::Family::path);
  CHECK(!io::family_from_name("tree").has_value());

  try {
    io::make_family_graph(io::Family::cycle, 2);
    FAIL_CHECK("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}
