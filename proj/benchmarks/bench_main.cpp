/*
 * Copyright 2026 The hiddenalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "hiddenalg/algebra_io.hpp"
#include "hiddenalg/candidate.hpp"
#include "hiddenalg/properties.hpp"
#include "hiddenalg/search.hpp"
#include "hiddenalg/split_octonion.hpp"
#include "hiddenalg/susy.hpp"

namespace {

using namespace hiddenalg;

void BM_SplitOctonionProduct(benchmark::State& state) {
  const SplitOctonion a = q(1) + Scalar(2) * q(4) - q(7);
  const SplitOctonion b = Scalar::ratio(1, 2) * q(5) + q(0);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SplitOctonionProduct);

void BM_CheckProperty(benchmark::State& state) {
  const auto kind = static_cast<PropertyKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_property(split_octonions(), Property{kind}));
  state.SetLabel(std::string(property_name(kind)));
}
BENCHMARK(BM_CheckProperty)
    ->Arg(static_cast<int>(PropertyKind::associative))
    ->Arg(static_cast<int>(PropertyKind::flexible))
    ->Arg(static_cast<int>(PropertyKind::lie_admissible))
    ->Unit(benchmark::kMillisecond);

void BM_PowerAssociative(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_property(split_octonions(), Property::power_associative(4)));
}
BENCHMARK(BM_PowerAssociative)->Unit(benchmark::kMillisecond);

void BM_SuperOpCompose(benchmark::State& state) {
  const Generators g = build_generators(SigmaConvention::standard);
  for (auto _ : state) benchmark::DoNotOptimize(graded_bracket(g.Q[0], g.Qbar[1]));
}
BENCHMARK(BM_SuperOpCompose);

void BM_VerifySusy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_susy(SigmaConvention::standard));
}
BENCHMARK(BM_VerifySusy)->Unit(benchmark::kMillisecond);

void BM_VerifyPoincare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_poincare(MomentumSign::plus_i));
}
BENCHMARK(BM_VerifyPoincare)->Unit(benchmark::kMillisecond);

void BM_Residual(benchmark::State& state) {
  SearchConfig cfg;
  cfg.max_iters = 0;
  const CandidateAlgebra c = search(cfg).best().best;
  for (auto _ : state) benchmark::DoNotOptimize(residual(c));
}
BENCHMARK(BM_Residual)->Unit(benchmark::kMicrosecond);

void BM_Search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.max_iters = static_cast<int>(state.range(0));
  cfg.rng_seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(search(cfg));
}
BENCHMARK(BM_Search)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ParseFixture(benchmark::State& state) {
  std::ifstream in(std::string(HIDDENALG_FIXTURE_DIR) + "/splitO.alg");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  for (auto _ : state) benchmark::DoNotOptimize(parse_algebra(text));
}
BENCHMARK(BM_ParseFixture);

}  // namespace
BENCHMARK_MAIN();
