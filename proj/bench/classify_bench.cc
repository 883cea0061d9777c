// Copyright 2026 The telechan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "telechan/classify.h"

namespace {

using namespace telechan;

void BM_ClassifySerial(benchmark::State &state) {
    InputClass cls(static_cast<ClassKind>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_all_serial(cls));
    }
}

void BM_ClassifyParallel(benchmark::State &state) {
    InputClass cls(static_cast<ClassKind>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_all(cls));
    }
}

void BM_ImpossibilitySerial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_general_impossibility_serial());
    }
}

void BM_ImpossibilityParallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_general_impossibility());
    }
}

void BM_BasisScanSerial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(general_basis_scan_serial(state.range(0), 42));
    }
}

void BM_BasisScanParallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(general_basis_scan(state.range(0), 42));
    }
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImpossibilitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImpossibilityParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasisScanSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasisScanParallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
