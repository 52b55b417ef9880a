// Serial reference vs OpenMP kernels. Run with --benchmark_counters_tabular=true.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "gorenstein/kernels.hpp"
#include "gorenstein/oracle.hpp"
#include "gorenstein/resolution.hpp"

using namespace gorenstein;

namespace {

const Field kGf = Field::prime(32003);

FieldMatrix random_gf_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, 32002);
  FieldMatrix m(rows, cols, Scalar::zero(kGf));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(kGf, dist(rng));
  }
  return m;
}

FieldMatrix random_gf_alternating(std::size_t n, std::uint64_t seed) {
  const FieldMatrix a = random_gf_matrix(n, n, seed);
  return a - a.transpose();
}

// Linear syzygy matrix of the example family: 2n+1 square, linear entries over Q.
const PolyMatrix& family_b2(int n) {
  static std::map<int, PolyMatrix> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, build_linear_presentation(family_phi(n), n).syzygies).first;
  }
  return it->second;
}

template <FieldMatrix (*Multiply)(const FieldMatrix&, const FieldMatrix&)>
void BM_MultiplyGf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldMatrix a = random_gf_matrix(n, n, 1);
  const FieldMatrix b = random_gf_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
  state.counters["threads"] = kernels::max_threads();
}

template <PolyMatrix (*Multiply)(const PolyMatrix&, const PolyMatrix&)>
void BM_MultiplyFamilyB2(benchmark::State& state) {
  const PolyMatrix& b2 = family_b2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(b2, b2));
}

template <std::vector<Scalar> (*Row)(const FieldMatrix&)>
void BM_PfaffianRowGf(benchmark::State& state) {
  const FieldMatrix m = random_gf_alternating(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Row(m));
}

template <std::vector<Polynomial> (*Row)(const PolyMatrix&)>
void BM_PfaffianRowFamilyB2(benchmark::State& state) {
  const PolyMatrix& b2 = family_b2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Row(b2));
}

template <FieldMatrix (*Cat)(const DualElement&, std::span<const Monomial>, std::span<const Monomial>,
                             const Polynomial&)>
void BM_CatalecticantFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DualElement phi = family_phi(n);
  const auto rows = sym_basis(n - 1);
  const Polynomial x = variable(phi.field(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Cat(phi, rows, rows, x));
}

}  // namespace

BENCHMARK(BM_MultiplyGf<kernels::serial::multiply>)->Name("multiply_gf/serial")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_MultiplyGf<kernels::parallel::multiply>)->Name("multiply_gf/parallel")->RangeMultiplier(2)->Range(16, 128)->UseRealTime();

BENCHMARK(BM_MultiplyFamilyB2<kernels::serial::multiply>)->Name("multiply_family_b2/serial")->DenseRange(2, 8, 2);
BENCHMARK(BM_MultiplyFamilyB2<kernels::parallel::multiply>)->Name("multiply_family_b2/parallel")->DenseRange(2, 8, 2)->UseRealTime();

BENCHMARK(BM_PfaffianRowGf<kernels::serial::signed_maximal_pfaffians>)->Name("pfaffian_row_gf/serial")->DenseRange(9, 17, 4);
BENCHMARK(BM_PfaffianRowGf<kernels::parallel::signed_maximal_pfaffians>)->Name("pfaffian_row_gf/parallel")->DenseRange(9, 17, 4)->UseRealTime();

BENCHMARK(BM_PfaffianRowFamilyB2<kernels::serial::signed_maximal_pfaffians>)->Name("pfaffian_row_family_b2/serial")->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PfaffianRowFamilyB2<kernels::parallel::signed_maximal_pfaffians>)->Name("pfaffian_row_family_b2/parallel")->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK(BM_CatalecticantFamily<kernels::serial::catalecticant>)->Name("catalecticant_family/serial")->DenseRange(4, 16, 4);
BENCHMARK(BM_CatalecticantFamily<kernels::parallel::catalecticant>)->Name("catalecticant_family/parallel")->DenseRange(4, 16, 4)->UseRealTime();

BENCHMARK_MAIN();
