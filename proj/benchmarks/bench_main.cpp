#include <benchmark/benchmark.h>

#include <multinorm/linear_map.hpp>
#include <multinorm/multibound.hpp>
#include <multinorm/multinorms.hpp>
#include <multinorm/summing.hpp>

using namespace multinorm;

namespace {

cmat sample(int m, int n, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_matrix(rng, m, n, true);
}

void BM_OperatorNormPower(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const cmat A = sample(m, m, 1);
  const rvec w = rvec::Ones(m);
  for (auto _ : st) benchmark::DoNotOptimize(operator_norm(A, w, Exponent(3), w, Exponent(3, 2), Budget{}).value);
}
BENCHMARK(BM_OperatorNormPower)->Arg(3)->Arg(6)->Arg(12);

void BM_OperatorNormSigns(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const cmat A = sample(m, m, 2);
  const rvec w = rvec::Ones(m);
  for (auto _ : st) benchmark::DoNotOptimize(operator_norm(A, w, Exponent::inf(), w, Exponent(2), Budget{}).value);
}
BENCHMARK(BM_OperatorNormSigns)->Arg(4)->Arg(8)->Arg(12);

void BM_Mu(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const VectorTuple t(Space::uniform(4), Exponent(3), sample(4, n, 3));
  for (auto _ : st) benchmark::DoNotOptimize(mu(Exponent(2), t, Budget{}).value);
}
BENCHMARK(BM_Mu)->Arg(2)->Arg(4)->Arg(8);

void BM_StandardQ(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const VectorTuple t(Space::uniform(m), Exponent(2), sample(m, 3, 4));
  for (auto _ : st) benchmark::DoNotOptimize(standard_q_norm(Exponent(2), t, Budget{}).value);
}
BENCHMARK(BM_StandardQ)->Arg(4)->Arg(8)->Arg(12);

void BM_MultiNorm(benchmark::State& st, const char* spec, Exponent base) {
  const VectorTuple t(Space::uniform(4), base, sample(4, 3, 5));
  const MultiNormSpec s = MultiNormSpec::parse(spec);
  for (auto _ : st) benchmark::DoNotOptimize(multi_norm(s, t, Budget{}).value);
}
BENCHMARK_CAPTURE(BM_MultiNorm, lattice, "lattice", Exponent(3, 2));
BENCHMARK_CAPTURE(BM_MultiNorm, max_l1, "max", Exponent(1));
BENCHMARK_CAPTURE(BM_MultiNorm, max_l2, "max", Exponent(2))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MultiNorm, pq_1_2_linf, "pq:1,2", Exponent::inf())->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MultiNorm, pq_2_2_l2, "pq:2,2", Exponent(2))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MultiNorm, pq_2_3_l32, "pq:2,3", Exponent(3, 2))->Unit(benchmark::kMillisecond);

void BM_AlphaKp(benchmark::State& st) {
  const LinearMap T = kp_operator(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(alpha(Exponent(2), Exponent(2), T, Budget{}).value);
}
BENCHMARK(BM_AlphaKp)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
