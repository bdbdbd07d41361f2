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

#include "genv/rational.hpp"

#include <cctype>
#include <cstddef>

#include "genv/error.hpp"

namespace genv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  raise(Errc::malformed_number, std::string(text),
        "cannot parse '" + std::string(text) + "' as a rational");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail(text);

  mpz_class num;
  mpz_class den = 1;
  if (std::size_t slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) fail(text);
    num = mpz_class(std::string(p), 10);
    den = mpz_class(std::string(q), 10);
    if (den == 0) fail(text);
  } else if (std::size_t dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = body.substr(0, dot);
    std::string_view fpart = body.substr(dot + 1);
    if (!all_digits(ipart) || !all_digits(fpart)) fail(text);
    num = mpz_class(std::string(ipart) + std::string(fpart), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fpart.size());
  } else {
    if (!all_digits(body)) fail(text);
    num = mpz_class(std::string(body), 10);
  }

  if (negative) num = -num;
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

}  // namespace genv
