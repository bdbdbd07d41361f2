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

#include <stdexcept>
#include <string>
#include <utility>

namespace genv {

// Error categories surfaced by the library.  The CLI maps these onto its
// exit-code contract; tests match on the code and on the offending token.
enum class Errc {
  duplicate_vertex,
  unknown_endpoint,
  self_loop,
  duplicate_edge,
  lattice_too_large,
  index_out_of_range,
  cap_exceeded,
  oracle_cap_exceeded,
  missing_subgraph,
  unknown_subgraph,
  duplicate_entry,
  negative_weight,
  malformed_number,
  lattice_mismatch,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_vertex: return "DuplicateVertex";
    case Errc::unknown_endpoint: return "UnknownEndpoint";
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::lattice_too_large: return "LatticeTooLarge";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::oracle_cap_exceeded: return "OracleCapExceeded";
    case Errc::missing_subgraph: return "MissingSubgraph";
    case Errc::unknown_subgraph: return "UnknownSubgraph";
    case Errc::duplicate_entry: return "DuplicateEntry";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::malformed_number: return "MalformedNumber";
    case Errc::lattice_mismatch: return "LatticeMismatch";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string token, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        token_(std::move(token)) {}

  Errc code() const noexcept { return code_; }

  // The offending input token (vertex label, edge token, subgraph
  // descriptor, ...) that triggered the error.
  const std::string& token() const noexcept { return token_; }

 private:
  Errc code_;
  std::string token_;
};

[[noreturn]] inline void raise(Errc code, std::string token, const std::string& message) {
  throw Error(code, std::move(token), message);
}

}  // namespace genv
