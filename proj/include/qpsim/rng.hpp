// Copyright 2026 The qpsim Authors
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

#include <cstdint>
#include <vector>

#include "qpsim/rational.hpp"

namespace qpsim {

/// Counter-based generator: stream state is splitmix64 seeded by
/// mix(master, stream). Identical (master, stream) pairs give identical
/// sequences on every platform; shot i of a run uses stream i.
class StreamRng {
 public:
  StreamRng(uint64_t master, uint64_t stream) {
    state_ = mix(master ^ mix(stream + 0x9E3779B97F4A7C15ull));
  }

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Exact Bernoulli: true with probability p (clamped to [0,1]).
  bool bernoulli(const Rational &p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    uint64_t u = next();
    // u < p * 2^64, exactly
    BigInt lhs = BigInt(u) * denominator(p);
    BigInt rhs = numerator(p) << 64;
    return lhs < rhs;
  }

  /// Index i with probability weights[i] / sum(weights); weights >= 0.
  size_t pick(const std::vector<Rational> &weights) {
    Rational total = 0;
    for (const auto &w : weights) total += w;
    uint64_t u = next();
    // target = u/2^64 * total; find first index with cumulative > target
    BigInt un(u);
    Rational target = Rational(un, BigInt(1) << 64) * total;
    Rational cum = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      cum += weights[i];
      if (target < cum) return i;
    }
    return weights.size() - 1;
  }

  size_t pick(const std::vector<double> &weights) {
    double total = 0;
    for (double w : weights) total += w;
    double target = (next() >> 11) * 0x1.0p-53 * total;
    double cum = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      cum += weights[i];
      if (target < cum) return i;
    }
    return weights.size() - 1;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
    z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
    return z ^ (z >> 33);
  }
  uint64_t state_;
};

}  // namespace qpsim
