// Copyright 2026 The orthinv Authors.
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

#include "orthinv/families.hpp"
#include "orthinv/genhermite.hpp"
#include "orthinv/inversion.hpp"
#include "orthinv/series.hpp"

namespace {

using namespace orthinv;

void BM_SeriesExp(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TruncSeries arg(order, {Poly(), Poly::x(), Poly::constant(Scalar(Rational(-1, 4)))});
  for (auto _ : state) benchmark::DoNotOptimize(arg.exp());
}
BENCHMARK(BM_SeriesExp)->Arg(8)->Arg(16)->Arg(32);

void BM_GeneratingFunction(benchmark::State& state) {
  ParamSet p;
  p.alpha = Rational(1, 3);
  p.beta = Rational(-1, 4);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_generating_function(Family::jacobi, p, order));
}
BENCHMARK(BM_GeneratingFunction)->Arg(8)->Arg(16);

void BM_InvertTriangular(benchmark::State& state) {
  ParamSet p;
  p.alpha = Rational(2, 7);
  const int size = static_cast<int>(state.range(0));
  const auto matrix = build_matrix(Family::laguerre, p, size);
  for (auto _ : state) benchmark::DoNotOptimize(invert_triangular(matrix));
}
BENCHMARK(BM_InvertTriangular)->Arg(5)->Arg(10)->Arg(20);

void BM_VerifyJacobiInverse(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  SamplingOptions options;
  options.count = 4;
  const auto samples = draw_samples(IdentityId::jacobi_inv, size, options);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(IdentityId::jacobi_inv, size, samples));
}
BENCHMARK(BM_VerifyJacobiInverse)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DeCoefficients(benchmark::State& state) {
  const auto config = genhermite::GenHermiteConfig::with_defaults(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(genhermite::de_coefficients(config));
}
BENCHMARK(BM_DeCoefficients)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
