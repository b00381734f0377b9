#include <benchmark/benchmark.h>

#include <vector>

#include "qspace/fock.hpp"
#include "qspace/labeled.hpp"
#include "qspace/statistics.hpp"

using namespace qspace;
using fock::LevelIndex;
using fock::OccupationMap;
using fock::Statistics;

namespace {

void BM_planck_weight(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::planck_weight(n, n / 2));
  }
}
BENCHMARK(BM_planck_weight)->Arg(16)->Arg(64)->Arg(256);

void BM_enumerate_bosons(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::enumerate_microstates(stats::StatisticsKind::BE, n, 6));
  }
}
BENCHMARK(BM_enumerate_bosons)->Arg(4)->Arg(8)->Arg(12);

OccupationMap dense_word(std::uint32_t length) {
  std::vector<LevelIndex> word;
  for (std::uint32_t i = 0; i < length; ++i) word.push_back(1 + i / 2);
  return OccupationMap::from_word(word);
}

void BM_boson_bracket(benchmark::State& state) {
  OccupationMap occ = dense_word(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::basis_bracket(Statistics::boson, occ, occ));
  }
}
BENCHMARK(BM_boson_bracket)->Arg(4)->Arg(6)->Arg(8);

void BM_fermion_bracket(benchmark::State& state) {
  std::vector<LevelIndex> word;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(state.range(0)); ++i) {
    word.push_back(1 + i);
  }
  OccupationMap occ = OccupationMap::from_word(word);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::basis_bracket(Statistics::fermion, occ, occ));
  }
}
BENCHMARK(BM_fermion_bracket)->Arg(4)->Arg(6)->Arg(8);

labeled::IntMatrix ones(std::size_t n) {
  return labeled::IntMatrix(n, std::vector<long long>(n, 1));
}

void BM_permanent_cofactor(benchmark::State& state) {
  auto m = ones(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(labeled::permanent(m));
}
BENCHMARK(BM_permanent_cofactor)->Arg(5)->Arg(7);

void BM_permanent_literal(benchmark::State& state) {
  auto m = ones(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(labeled::permutation_sum(m, false));
}
BENCHMARK(BM_permanent_literal)->Arg(5)->Arg(7);

void BM_commutator_residual(benchmark::State& state) {
  fock::LevelBasis basis = fock::LevelBasis::uniform(4);
  fock::FockVector ket = fock::basis_ket(dense_word(6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fock::commutator_residual(Statistics::boson, basis, 1, 2, ket));
  }
}
BENCHMARK(BM_commutator_residual);

void BM_symmetrize(benchmark::State& state) {
  labeled::Assignment word;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(state.range(0)); ++i) {
    word.push_back(1 + i % 3);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(labeled::symmetrize(word, labeled::Symmetry::antisymmetric));
  }
}
BENCHMARK(BM_symmetrize)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
