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

#include <vector>

#include "qpsim/rational.hpp"

namespace qpsim {

/// A halfspace a.x + b >= 0 with integer data.
struct Halfspace {
  std::vector<BigInt> a;
  BigInt b;
};

/// Exact vertex enumeration of the (bounded) polytope cut out by the system,
/// by incremental double description over homogeneous integer coordinates.
/// The feasible region must lie in the box |x_j| <= box_bound; a containing
/// simplex built from that bound seeds the computation.
std::vector<std::vector<Rational>> dd_vertices(const std::vector<Halfspace> &system, int dim,
                                               long box_bound = 1);

}  // namespace qpsim
