#include <benchmark/benchmark.h>

#include <random>

#include "sseq/invariants.hpp"
#include "sseq/laurent.hpp"
#include "sseq/linalg.hpp"
#include "sseq/moves.hpp"
#include "sseq/normalize.hpp"
#include "sseq/search.hpp"

using namespace sseq;

namespace {

IntMatrix random_matrix(std::size_t n, long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

// Genus g, one component: symmetric part random, M - M^t = Sym.
OrderedSeifertMatrix knot_matrix(std::size_t g, std::uint64_t seed) {
  IntMatrix m = random_matrix(2 * g, 3, seed);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  const IntMatrix sym = standard_sym(g);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = i + 1; j < 2 * g; ++j) m(i, j) += sym(i, j);
  return {1, g, m};
}

}  // namespace

static void BM_Det(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_LaurentDet(benchmark::State& state) {
  const LaurentMatrix p = seifert_pencil(random_matrix(static_cast<std::size_t>(state.range(0)), 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(laurent_det(p));
}
BENCHMARK(BM_LaurentDet)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

static void BM_Conway(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(conway(m));
}
BENCHMARK(BM_Conway)->Arg(4)->Arg(8)->Arg(12);

static void BM_Signature(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 5, 4);
  m = m + m.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(signature(m));
}
BENCHMARK(BM_Signature)->Arg(4)->Arg(8)->Arg(16);

static void BM_Fingerprint(benchmark::State& state) {
  const auto s = knot_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(s));
}
BENCHMARK(BM_Fingerprint)->Arg(1)->Arg(2)->Arg(4);

static void BM_Normalize(benchmark::State& state) {
  const auto s = knot_matrix(1, 6);
  const AnnotatedSequence seq(random_sequence(s, static_cast<std::size_t>(state.range(0)), 2, 7));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_sequence(seq));
}
BENCHMARK(BM_Normalize)->Arg(2)->Arg(4)->Arg(8);

static void BM_StrongSearch(benchmark::State& state) {
  const OrderedSeifertMatrix a{1, 1, IntMatrix{{-1, 1}, {0, -1}}};
  const OrderedSeifertMatrix b{1, 1, IntMatrix{{-1, 0}, {-1, -1}}};
  SearchConfig cfg;
  cfg.max_depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(strong_equiv_bounded(a, b, cfg));
}
BENCHMARK(BM_StrongSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ClassicalCounterexample(benchmark::State& state) {
  const IntMatrix v{{-1, 0}, {0, 0}};
  const IntMatrix w{{-1, -1}, {-1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(classical_equiv_bounded(v, w, SearchConfig{}));
}
BENCHMARK(BM_ClassicalCounterexample)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
