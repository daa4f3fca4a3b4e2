#include <benchmark/benchmark.h>

#include "motivic/biquadratic.hpp"
#include "motivic/scenarios.hpp"
#include "motivic/torus.hpp"

using namespace motivic;

namespace
{

ContextPtr const &biq()
{
  static ContextPtr ctx = GaloisContext::biquadratic();
  return ctx;
}

void BM_BurnsideProduct(benchmark::State &state)
{
  auto a = biq()->parse_element("2+[K]-[E1]-[E2]-[E12]");
  auto b = biq()->parse_element("3*[E1]+[E12]-1");
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BurnsideProduct);

void BM_QuasiSplitRegularPower(benchmark::State &state)
{
  std::string spec = "regular";
  for (int k = 1; k < state.range(0); ++k)
    spec += "+regular";
  auto s = biq()->parse_gset(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(quasi_split_class(s));
}
BENCHMARK(BM_QuasiSplitRegularPower)->DenseRange(1, 4);

void BM_ExactDivideG(benchmark::State &state)
{
  auto g = biq()->group();
  auto num = quasi_split_class(GSet::regular(g));
  auto den = ArtinPolynomial::lefschetz(g) - ArtinPolynomial::constant(biq()->parse_element("[E12]")) +
             ArtinPolynomial::integer(g, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_divide(num, den));
}
BENCHMARK(BM_ExactDivideG);

void BM_ResolutionSearchG(benchmark::State &state)
{
  auto l = biquadratic::character_lattice_G(*biq());
  for (auto _ : state)
    benchmark::DoNotOptimize(find_quasi_split_resolution(l));
}
BENCHMARK(BM_ResolutionSearchG)->Unit(benchmark::kMillisecond);

void BM_Scenario(benchmark::State &state, std::string id)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(run_scenario(id, biq(), {}));
}
BENCHMARK_CAPTURE(BM_Scenario, basics, std::string("basics"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, lemma_t, std::string("lemma-t"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, thm15, std::string("thm15"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, thm16, std::string("thm16"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, remark, std::string("remark"))->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
