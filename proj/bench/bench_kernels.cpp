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

// Serial reference vs OpenMP kernels: sign scans, membership scans, shot loops.

#include <benchmark/benchmark.h>

#include "qpsim/decompose.hpp"
#include "qpsim/oracle.hpp"
#include "qpsim/phasespace.hpp"
#include "qpsim/simulate.hpp"

using namespace qpsim;

static void BM_SignScanSerial(benchmark::State &state) {
  for (auto _ : state) {
    auto res = find_vertex_signs_serial(2, true, 0, 1);
    benchmark::DoNotOptimize(res.vertex_count);
  }
}
BENCHMARK(BM_SignScanSerial)->Unit(benchmark::kMillisecond);

static void BM_SignScanParallel(benchmark::State &state) {
  for (auto _ : state) {
    auto res = find_vertex_signs(2, true, 0, 1);
    benchmark::DoNotOptimize(res.vertex_count);
  }
}
BENCHMARK(BM_SignScanParallel)->Unit(benchmark::kMillisecond);

static void BM_MembershipSerial(benchmark::State &state) {
  MajoranaPairLabel l{.n = 3, .majoranas = jordan_wigner_majoranas(7), .eta = 0x15555};
  auto op = make_majorana_pair_operator(l);
  for (auto _ : state) {
    auto res = lambda_membership_serial(op);
    benchmark::DoNotOptimize(res.member);
  }
}
BENCHMARK(BM_MembershipSerial)->Unit(benchmark::kMillisecond);

static void BM_MembershipParallel(benchmark::State &state) {
  MajoranaPairLabel l{.n = 3, .majoranas = jordan_wigner_majoranas(7), .eta = 0x15555};
  auto op = make_majorana_pair_operator(l);
  for (auto _ : state) {
    auto res = lambda_membership(op);
    benchmark::DoNotOptimize(res.member);
  }
}
BENCHMARK(BM_MembershipParallel)->Unit(benchmark::kMillisecond);

namespace {
struct ShotFixture {
  Circuit circuit = Circuit::parse(
      "qubits 2\nstate H 0\nstate + 1\ngate CX 0 1\nmeasure +IZ -> s\ngate X 0 if s\ngate S 0 if s\n"
      "measure +XI -> out\n");
  std::vector<PhasePointOperator> ops;
  std::vector<Rational> weights;
  ShotFixture() {
    PhaseSpaceConfig cfg;
    cfg.majorana_pairs = true;
    auto set = build_phase_space(2, cfg);
    auto pc = pauli_coefficients(dense_state({"H", "+"}));
    auto rho = PauliVector::from_float(2, pc.values);
    auto dec = decompose_nonnegative(rho, set);
    for (const auto &[idx, w] : dec.weights) {
      ops.push_back(set[idx]);
      weights.push_back(Rational(w));
    }
  }
};
}  // namespace

static void BM_ShotsSerial(benchmark::State &state) {
  static ShotFixture fx;
  for (auto _ : state) {
    auto est = estimate_distribution_serial(fx.ops, fx.weights, fx.circuit, 5000, 7);
    benchmark::DoNotOptimize(est.shots);
  }
}
BENCHMARK(BM_ShotsSerial)->Unit(benchmark::kMillisecond);

static void BM_ShotsParallel(benchmark::State &state) {
  static ShotFixture fx;
  for (auto _ : state) {
    auto est = estimate_distribution(fx.ops, fx.weights, fx.circuit, 5000, 7);
    benchmark::DoNotOptimize(est.shots);
  }
}
BENCHMARK(BM_ShotsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
