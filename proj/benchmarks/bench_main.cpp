#include <benchmark/benchmark.h>

#include <random>

#include "qfrob/repvar.hpp"
#include "qfrob/sl2.hpp"

using namespace qfrob;

namespace {

Polynomial random_dense_poly(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = Rational(coeff(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return Polynomial(std::move(c));
}

void BM_PolynomialMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto deg = static_cast<std::size_t>(state.range(0));
  Polynomial a = random_dense_poly(rng, deg);
  Polynomial b = random_dense_poly(rng, deg);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(16)->Arg(64)->Arg(256);

void BM_PolynomialGcd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto deg = static_cast<std::size_t>(state.range(0));
  Polynomial g = random_dense_poly(rng, deg);
  Polynomial a = random_dense_poly(rng, deg) * g;
  Polynomial b = random_dense_poly(rng, deg) * g;
  for (auto _ : state) benchmark::DoNotOptimize(Polynomial::gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd)->Arg(8)->Arg(32);

void BM_TableExtraction(benchmark::State& state) {
  const auto& seq = sl2::dataset();
  for (auto _ : state) benchmark::DoNotOptimize(extract_recurrence(seq));
}
BENCHMARK(BM_TableExtraction);

void BM_ClosedGenusFormula(benchmark::State& state) {
  const auto genus = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sl2::closed_genus_formula(genus));
}
BENCHMARK(BM_ClosedGenusFormula)->Arg(10)->Arg(20);

void BM_GenusCountConvolution(benchmark::State& state) {
  FiniteGroup s4 = builtin_group("S4");
  const auto genus = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genus_count(s4, genus));
}
BENCHMARK(BM_GenusCountConvolution)->Arg(3)->Arg(10);

void BM_GenusCountBruteForce(benchmark::State& state) {
  FiniteGroup s3 = builtin_group("S3");
  for (auto _ : state) benchmark::DoNotOptimize(genus_count_brute_force(s3, 2));
}
BENCHMARK(BM_GenusCountBruteForce);

void BM_CongruenceDiagonalize(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix<Rational> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v{entry(rng)};
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  for (auto _ : state) benchmark::DoNotOptimize(congruence_diagonalize(g));
}
BENCHMARK(BM_CongruenceDiagonalize)->Arg(8)->Arg(24);

void BM_CommutatorDistribution(benchmark::State& state) {
  FiniteGroup d = builtin_group("D" + std::to_string(state.range(0)));
  ClassData cd = conjugacy_classes(d);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_distribution(d, cd));
}
BENCHMARK(BM_CommutatorDistribution)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
