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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace genv {

// All weight arithmetic in this library is exact; floating point never
// enters a comparison.  Ties between envelope values are meaningful, so
// everything is carried as arbitrary-precision rationals.
using Rational = mpq_class;

// Accepts "p", "p/q" and terminating decimals ("1.25"), optionally signed.
// The decimal form is converted exactly (1.25 -> 5/4).  Anything else,
// including a zero denominator, throws Error{malformed_number}.
Rational parse_rational(std::string_view text);

// Reduced textual form: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace genv
