// Copyright 2026 fgflip contributors
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

#include <benchmark/benchmark.h>

#include "fgflip/qdilog.hpp"
#include "fgflip/snake.hpp"
#include "fgflip/verifications.hpp"

using namespace fgflip;

static void BM_PairingTables(benchmark::State& state) {
  TriangleSpace tri = build_triangle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = verify_pairing_tables(tri);
    benchmark::DoNotOptimize(rep.checked);
  }
}
BENCHMARK(BM_PairingTables)->Arg(3)->Arg(4)->Arg(6);

static void BM_BorelDeterminant(benchmark::State& state) {
  TriangleSpace tri = build_triangle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rat det = borel_nondegeneracy(tri);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(BM_BorelDeterminant)->Arg(4)->Arg(6);

static void BM_PartitionFunction(benchmark::State& state) {
  TriangleSpace tri = build_triangle(static_cast<int>(state.range(0)));
  LabeledBraidGraph g = standard_graph(tri, GraphFamily::E);
  for (auto _ : state) {
    FormSum z = partition_function(g, 1, g.strands());
    benchmark::DoNotOptimize(z.size());
  }
}
BENCHMARK(BM_PartitionFunction)->Arg(4)->Arg(6);

static void BM_SnakeReduction(benchmark::State& state) {
  for (auto _ : state) {
    SnakeReduction red = snake_reduce_doubled(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(red.reached_target);
  }
}
BENCHMARK(BM_SnakeReduction)->Arg(3)->Arg(5);

static void BM_PentagonDerivation(benchmark::State& state) {
  for (auto _ : state) {
    Report rep = verify_braided_pentagon(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(BM_PentagonDerivation)->Arg(3)->Arg(4);

static void BM_PentagonOracle(benchmark::State& state) {
  for (auto _ : state) {
    Report rep = pentagon_bfs_oracle(3, 1000000);
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(BM_PentagonOracle);

static void BM_WReal(benchmark::State& state) {
  qd::QDParams p;
  p.theta = 0.5;
  double t = -10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qd::W_real(p, t));
    t = t >= 10 ? -10 : t + 0.37;
  }
}
BENCHMARK(BM_WReal);

static void BM_WContour(benchmark::State& state) {
  qd::QDParams p;
  p.theta = 2.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(qd::W_complex(p, {0.7, 1.3}));
}
BENCHMARK(BM_WContour);

BENCHMARK_MAIN();
