#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "octograss/diffops.hpp"
#include "octograss/energy.hpp"
#include "octograss/octonion.hpp"

using namespace octograss;

namespace {

void BM_OctonionMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Eigen::VectorXd a(8), b(8);
  for (int i = 0; i < 8; ++i) a(i) = g(rng), b(i) = g(rng);
  const Octonion x = Octonion::from_vector(a), y = Octonion::from_vector(b);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_OctonionMul);

void BM_Cross3(benchmark::State& state) {
  const Eigen::VectorXd u = Eigen::VectorXd::Unit(8, 1), v = Eigen::VectorXd::Unit(8, 4),
                        w = Eigen::VectorXd::Unit(8, 6);
  for (auto _ : state) benchmark::DoNotOptimize(cross3(u, v, w));
}
BENCHMARK(BM_Cross3);

void BM_RandomPoint(benchmark::State& state) {
  std::mt19937_64 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(random_point(8, 3, rng));
}
BENCHMARK(BM_RandomPoint);

void BM_Laplacian(benchmark::State& state, const char* name, DiffMethod method) {
  const Section s = section_by_name(name);
  const OrientedSubspace p = random_point(s.n(), s.k(), 3u);
  DiffOptions opt;
  opt.method = method;
  for (auto _ : state) benchmark::DoNotOptimize(rough_laplacian(s, p, opt));
}
BENCHMARK_CAPTURE(BM_Laplacian, sigma3_closed, "sigma3", DiffMethod::ClosedForm);
BENCHMARK_CAPTURE(BM_Laplacian, sigma3_jet, "sigma3", DiffMethod::Jet);
BENCHMARK_CAPTURE(BM_Laplacian, sigma3_nested, "sigma3", DiffMethod::Nested);
BENCHMARK_CAPTURE(BM_Laplacian, J_closed, "J", DiffMethod::ClosedForm);
BENCHMARK_CAPTURE(BM_Laplacian, J_jet, "J", DiffMethod::Jet);

void BM_Criticality(benchmark::State& state) {
  const Section s = make_sigma3();
  const TangentFrame frame(random_point(8, 3, 4u));
  for (auto _ : state) benchmark::DoNotOptimize(criticality_form(s, frame.direction(5)));
}
BENCHMARK(BM_Criticality);

void BM_BendingDensity(benchmark::State& state) {
  const Section s = make_J();
  const OrientedSubspace p = random_point(8, 2, 5u);
  for (auto _ : state) benchmark::DoNotOptimize(bending_density(s, p));
}
BENCHMARK(BM_BendingDensity);

void BM_ParallelObstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallel_obstruction(std::numbers::pi / 4));
}
BENCHMARK(BM_ParallelObstruction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
