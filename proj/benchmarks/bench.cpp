#include <benchmark/benchmark.h>

#include <random>

#include "darbouxlie/classify.hpp"
#include "darbouxlie/derivations.hpp"
#include "darbouxlie/expr.hpp"
#include "darbouxlie/yangbaxter.hpp"

using namespace dlie;

namespace {

const std::vector<std::string>& fams() { return catalog_families(); }

LieAlgebra sample(const std::string& f) {
  Params p;
  for (auto& n : catalog_param_names(f)) p[n] = Rational(1, 2);
  if (f == "s3") p["beta"] = Rational(1, 3);
  return catalog(f, p);
}

void BM_Rref(benchmark::State& st) {
  std::size_t n = st.range(0);
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-9, 9);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) & 3));
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_SchoutenLambda2(benchmark::State& st) {
  auto g = sample(fams()[st.range(0)]);
  auto r = generic_bivector(4);
  for (auto _ : st) benchmark::DoNotOptimize(schouten(g, r, r));
  st.SetLabel(g.name());
}
BENCHMARK(BM_SchoutenLambda2)->DenseRange(0, 12);

void BM_YbSystem(benchmark::State& st) {
  auto g = sample(fams()[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(yb_system(g));
  st.SetLabel(g.name());
}
BENCHMARK(BM_YbSystem)->DenseRange(0, 12);

void BM_Derivations(benchmark::State& st) {
  auto g = sample(fams()[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(derivation_basis(g));
  st.SetLabel(g.name());
}
BENCHMARK(BM_Derivations)->DenseRange(0, 12);

void BM_Invariants(benchmark::State& st) {
  auto g = sample("n1");
  int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(invariants(g, m));
}
BENCHMARK(BM_Invariants)->DenseRange(1, 4);

void BM_OrbitDim(benchmark::State& st) {
  auto g = catalog("s12");
  auto r = parse_multivector("e12 + e34 - 2*e23", 4);
  for (auto _ : st) benchmark::DoNotOptimize(orbit_dim(g, r));
}
BENCHMARK(BM_OrbitDim);

void BM_IdealMembership(benchmark::State& st) {
  auto ys = yb_system(catalog("s7"));
  auto target = ys.mcybe[0] * parse_coordinate_poly("x1 + x2*x3");
  for (auto _ : st) benchmark::DoNotOptimize(ideal_membership(target, ys.mcybe, 2));
}
BENCHMARK(BM_IdealMembership)->Unit(benchmark::kMillisecond);

void BM_VerifyTrees(benchmark::State& st) {
  const auto& f = fams()[st.range(0)];
  for (auto _ : st) benchmark::DoNotOptimize(verify_trees(f));
  st.SetLabel(f);
}
BENCHMARK(BM_VerifyTrees)->Arg(0)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_CompareYbe(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(compare_ybe_locus("s6", 1000));
}
BENCHMARK(BM_CompareYbe)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
