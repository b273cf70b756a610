#include <benchmark/benchmark.h>

#include "hallfix/corpus.hpp"
#include "hallfix/hall.hpp"
#include "hallfix/verifiers.hpp"

using namespace hallfix;

namespace {

PermGroup builtin(char const *name) { return find_builtin(name)->group(); }

void BM_Close(benchmark::State &state, char const *name)
{
  auto const *e = find_builtin(name);
  auto f = parse_group_file(e->source);
  for (auto _ : state)
    benchmark::DoNotOptimize(close(f.generators, f.degree));
}
BENCHMARK_CAPTURE(BM_Close, A5, "A5");
BENCHMARK_CAPTURE(BM_Close, GL32, "GL(3,2)");
BENCHMARK_CAPTURE(BM_Close, PGL29, "PGL(2,9)");

void BM_SubgroupsOfOrder(benchmark::State &state, char const *name, std::uint64_t m)
{
  auto g = builtin(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(subgroups_of_order(g, m));
}
BENCHMARK_CAPTURE(BM_SubgroupsOfOrder, GL32_8, "GL(3,2)", 8);
BENCHMARK_CAPTURE(BM_SubgroupsOfOrder, PGL29_16, "PGL(2,9)", 16);

void BM_HallContext(benchmark::State &state, char const *name, std::uint64_t p)
{
  auto g = builtin(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_hall_context(g, PiSet{p}));
}
BENCHMARK_CAPTURE(BM_HallContext, A5_2, "A5", 2);
BENCHMARK_CAPTURE(BM_HallContext, PSL29_3, "PSL(2,9)", 3);

void BM_Alpha(benchmark::State &state)
{
  auto ctx = build_hall_context(builtin("GL(3,2)"), PiSet{2});
  for (auto _ : state)
    benchmark::DoNotOptimize(alpha_multiplicative(ctx, ctx.canonical_hall()));
}
BENCHMARK(BM_Alpha);

void BM_Curiosity(benchmark::State &state)
{
  auto g = builtin("A5");
  for (auto _ : state)
    benchmark::DoNotOptimize(curiosity(g, PiSet{3}, 60));
}
BENCHMARK(BM_Curiosity);

} // namespace
BENCHMARK_MAIN();
