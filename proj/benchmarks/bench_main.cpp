#include <benchmark/benchmark.h>

#include "cellar/catalog.hpp"

using namespace cellar;

namespace {

const Presentation& pres(const std::string& name) {
  static std::map<std::string, Presentation> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, catalog_build(name).presentation).first;
  return it->second;
}

const FDAlgebra& algebra(const std::string& name) {
  static std::map<std::string, FDAlgebra> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, normalize(pres(name))).first;
  return it->second;
}

void BM_normalize_kronecker(benchmark::State& state) {
  const Presentation& p = pres("Kronecker");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(p).dim());
}
BENCHMARK(BM_normalize_kronecker);

void BM_normalize_a7(benchmark::State& state) {
  const Presentation& p = pres("A7");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(p).dim());
}
BENCHMARK(BM_normalize_a7);

void BM_cartan_a7(benchmark::State& state) {
  const FDAlgebra& A = algebra("A7");
  for (auto _ : state) benchmark::DoNotOptimize(cartan_matrix(A));
}
BENCHMARK(BM_cartan_a7);

void BM_projective_socle(benchmark::State& state) {
  const FDAlgebra& A = algebra("A7");
  for (auto _ : state) {
    LeftModule P = projective(A, 1);
    benchmark::DoNotOptimize(socle_vector(P));
  }
}
BENCHMARK(BM_projective_socle);

void BM_truncate(benchmark::State& state) {
  const FDAlgebra& A = algebra("Gamma2");
  for (auto _ : state) benchmark::DoNotOptimize(truncate(A, {"-1", "0"}).dim());
}
BENCHMARK(BM_truncate);

void BM_gram_factorizations_a3(benchmark::State& state) {
  IntMat c = {{2, 2, 1, 1}, {2, 4, 2, 2}, {1, 2, 2, 1}, {1, 2, 1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(gram_factorizations(c).size());
}
BENCHMARK(BM_gram_factorizations_a3);

void BM_order_consistency(benchmark::State& state) {
  IntMat d = {{1, 1}, {1, 1}, {1, 0}, {1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(order_consistency(d, true).consistent);
}
BENCHMARK(BM_order_consistency);

void BM_verify_cell_a7(benchmark::State& state) {
  BuiltAlgebra b = catalog_build("A7");
  FDAlgebra A = normalize(b.presentation);
  CellDatum d = instantiate_cell_datum(*b.datum, A);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cell_datum(d).ok);
}
BENCHMARK(BM_verify_cell_a7);

void BM_report_pipeline_a5(benchmark::State& state) {
  const FDAlgebra& A = algebra("A5");
  GramProblem prob{cartan_matrix(A), true};
  for (auto _ : state)
    benchmark::DoNotOptimize(necessary_conditions_report(A, prob).verdict.size());
}
BENCHMARK(BM_report_pipeline_a5);

}  // namespace

BENCHMARK_MAIN();
