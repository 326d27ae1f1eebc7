// Copyright 2026 The qdp developers
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

#include <vector>

#include "qdp/circuit.hpp"
#include "qdp/dataset.hpp"
#include "qdp/direct.hpp"
#include "qdp/noise.hpp"
#include "qdp/qae.hpp"
#include "qdp/query.hpp"
#include "qdp/rng.hpp"
#include "qdp/state.hpp"

namespace {

qdp::Schema bench_schema() {
  return qdp::parse_schema(
      "attribute = age:4\n"
      "attribute = grp:3\n"
      "index_prefix_bits = auto\n");
}

qdp::Dataset bench_dataset(std::uint64_t n) {
  auto rng = qdp::substream(42, "bench", 0);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    rows.push_back({rng() & 0xF, rng() & 0x7});
  }
  return qdp::dataset_from_codes(bench_schema(), rows);
}

void BM_AccountDirect(benchmark::State& state) {
  const auto t = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdp::account_direct(1000000, t, 2, 1.0));
  }
}
BENCHMARK(BM_AccountDirect)->Arg(1000)->Arg(100000);

void BM_OutcomeDistribution(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdp::outcome_distribution(0.7, m));
  }
}
BENCHMARK(BM_OutcomeDistribution)->Arg(256)->Arg(4096);

void BM_CompileAndApply(benchmark::State& state) {
  const auto d = bench_dataset(static_cast<std::uint64_t>(state.range(0)));
  const auto q = qdp::parse_query("age <= 0111 AND grp == 010", d.schema());
  const auto circuit = qdp::compile_circuit(q, d.schema());
  for (auto _ : state) {
    auto s = qdp::encoded_input(d, circuit);
    qdp::apply_circuit(s, circuit.gates);
    benchmark::DoNotOptimize(qdp::marginal_prob_one(s, circuit.output_qubit));
  }
}
BENCHMARK(BM_CompileAndApply)->Arg(64)->Arg(512);

void BM_LaplaceSample(benchmark::State& state) {
  auto rng = qdp::substream(7, "bench-lap", 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdp::sample_laplace(rng, 0.5));
  }
}
BENCHMARK(BM_LaplaceSample);

void BM_RunDirect(benchmark::State& state) {
  const auto d = bench_dataset(256);
  const auto q = qdp::parse_query("age <= 0111", d.schema());
  qdp::DirectConfig cfg;
  cfg.t = static_cast<std::uint64_t>(state.range(0));
  cfg.k = 1;
  cfg.epsilon = 1.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(qdp::run_direct(d, q, cfg));
  }
}
BENCHMARK(BM_RunDirect)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
