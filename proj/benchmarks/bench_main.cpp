#include <benchmark/benchmark.h>

#include <random>

#include "sepcert/chevalley/chevalley.hpp"
#include "sepcert/exact/int_matrix.hpp"
#include "sepcert/exact/mod_poly.hpp"
#include "sepcert/io/json_io.hpp"
#include "sepcert/residue/closure.hpp"
#include "sepcert/separator/separate.hpp"

using namespace sepcert;

namespace {

void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-50, 50);
  exact::IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact::smith_normal_form(a));
}
BENCHMARK(BM_SmithForm)->Arg(4)->Arg(8)->Arg(16);

void BM_FactorModP(benchmark::State& state) {
  std::vector<exact::Integer> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(i * i + 3);
  c.back() = 1;
  const exact::IntPoly f(c);
  for (auto _ : state) benchmark::DoNotOptimize(exact::factor_mod_p(f, 1000003));
}
BENCHMARK(BM_FactorModP)->Arg(8)->Arg(32);

void BM_Chevalley(benchmark::State& state) {
  const auto q = nfield::NumberField::rationals();
  const units::UnitList u{q, {nfield::FieldElement(-1).with_field(q), nfield::FieldElement(2).with_field(q)}, 8};
  for (auto _ : state) benchmark::DoNotOptimize(chevalley::chevalley_modulus(u, state.range(0), {}));
}
BENCHMARK(BM_Chevalley)->Arg(2)->Arg(8)->Arg(24);

void BM_Closure(benchmark::State& state) {
  const auto k = nfield::NumberField::rationals();
  residue::HomDescription hom;
  hom.components.push_back(residue::build_residue_map(k, state.range(0), {}));
  const auto t = residue::apply_matrix(hom, nfield::Matrix::from_ints({{2, 0}, {0, 1}}));
  const auto a = residue::apply_matrix(hom, nfield::Matrix::from_ints({{1, 1}, {0, 1}}));
  for (auto _ : state) benchmark::DoNotOptimize(residue::group_closure(residue::rings_of(hom), 2, {t, a}));
}
BENCHMARK(BM_Closure)->Arg(101)->Arg(211);

void BM_Separate(benchmark::State& state, const char* name, bool fast) {
  auto p = io::load_problem(std::string(SEPCERT_CORPUS_DIR) + "/" + name);
  p.options.fast_path = fast;
  for (auto _ : state) benchmark::DoNotOptimize(separator::separate_abelian(p.gamma, p.H, p.h, p.options));
}
BENCHMARK_CAPTURE(BM_Separate, bs12_fast, "bs12_t_vs_a.json", true);
BENCHMARK_CAPTURE(BM_Separate, bs12_induction, "bs12_t_vs_a.json", false);
BENCHMARK_CAPTURE(BM_Separate, gauss_induction, "gauss_units.json", false);
BENCHMARK_CAPTURE(BM_Separate, sqrt2_induction, "sqrt2_diag.json", false);

}  // namespace

BENCHMARK_MAIN();
