// Copyright 2026 The Orbigrpd Authors
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

#include "orbi/bicat.hpp"
#include "orbi/fixtures.hpp"
#include "orbi/gmap.hpp"
#include "orbi/inertia.hpp"
#include "orbi/io.hpp"

namespace orbi {
namespace {

const char* const kCyclic[] = {"pt_1", "pt_z2", "pt_z3", "pt_z4", "pt_z6"};

void BM_EnumerateIntoTb(benchmark::State& state) {
  GroupoidPtr g = make_fixture(kCyclic[state.range(0)]);
  GroupoidPtr tb = make_fixture("tb");
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homomorphisms(g, tb, {}, threads));
}
BENCHMARK(BM_EnumerateIntoTb)->ArgsProduct({{1, 2, 4}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_BuildGmapTb(benchmark::State& state) {
  GroupoidPtr g = make_fixture(kCyclic[state.range(0)]);
  GroupoidPtr tb = make_fixture("tb");
  for (auto _ : state) benchmark::DoNotOptimize(build_gmap(g, tb, 4));
}
BENCHMARK(BM_BuildGmapTb)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ValidateTb(benchmark::State& state) {
  GroupoidPtr tb = make_fixture("tb");
  for (auto _ : state) benchmark::DoNotOptimize(validate_groupoid(*tb));
}
BENCHMARK(BM_ValidateTb)->Unit(benchmark::kMillisecond);

void BM_Inertia(benchmark::State& state) {
  GroupoidPtr tb = make_fixture("tb");
  for (auto _ : state) benchmark::DoNotOptimize(build_inertia(tb));
}
BENCHMARK(BM_Inertia)->Unit(benchmark::kMillisecond);

void BM_TwoCellWitnessSearch(benchmark::State& state) {
  TwoCellExample ex = two_cell_example();
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_two_cell_witness(ex.d1, ex.d3, bound));
}
BENCHMARK(BM_TwoCellWitnessSearch)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MoritaIntervals(benchmark::State& state) {
  GroupoidPtr i1 = make_fixture("i1"), i3 = make_fixture("i3");
  for (auto _ : state) benchmark::DoNotOptimize(morita_equivalent(i1, i3, 12));
}
BENCHMARK(BM_MoritaIntervals)->Unit(benchmark::kMillisecond);

void BM_ParseTb(benchmark::State& state) {
  const std::string text = serialize_groupoid(*make_fixture("tb"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_groupoid(text));
}
BENCHMARK(BM_ParseTb)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace orbi

BENCHMARK_MAIN();
