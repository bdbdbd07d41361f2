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

#include "genv/rng.hpp"

#include <limits>
#include <vector>

namespace genv::detail {

std::uint64_t uniform_below(CounterRng& rng, std::uint64_t bound) {
  if (bound == 0) return rng.next();  // degenerate: full 64-bit range
  if ((bound & (bound - 1)) == 0) return rng.next() & (bound - 1);
  // Accept only the prefix that splits evenly into residue classes.
  const std::uint64_t threshold =
      (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
  std::uint64_t r = rng.next();
  while (r >= threshold) r = rng.next();
  return r % bound;
}

mpz_class uniform_below(CounterRng& rng, const mpz_class& bound) {
  if (bound.fits_ulong_p()) {
    return mpz_class(static_cast<unsigned long>(
        uniform_below(rng, bound.get_ui())));
  }
  const std::size_t bits = mpz_sizeinbase(mpz_class(bound - 1).get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~0ull : ((1ull << top_bits) - 1);
  std::vector<std::uint64_t> buf(words);
  while (true) {
    for (std::size_t i = 0; i < words; ++i) buf[i] = rng.next();
    buf[words - 1] &= top_mask;
    mpz_class r;
    mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
               buf.data());
    if (r < bound) return r;
  }
}

}  // namespace genv::detail
