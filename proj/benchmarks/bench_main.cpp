#include "liegate/closedforms.hpp"
#include "liegate/greens.hpp"
#include "liegate/maps.hpp"
#include "liegate/oracle.hpp"
#include "liegate/paramflow.hpp"
#include "liegate/quadops.hpp"

#include <benchmark/benchmark.h>

using namespace liegate;

namespace {

CoefficientSet1D driven() {
  CoefficientSet1D c;
  c.a = TimeProfile::sinusoid(0.2, 1.3, 0.1, 1.0);
  c.b = TimeProfile::sinusoid(0.1, 0.7);
  c.c = TimeProfile::sinusoid(0.3, 2.1, 0.4, 1.2);
  c.d = TimeProfile::sinusoid(0.2, 0.9);
  c.e = TimeProfile::sinusoid(-0.3, 1.7, 0.0, 0.1);
  return c;
}

CoefficientSet1D oscillator() {
  CoefficientSet1D c;
  c.c = TimeProfile::sinusoid(0.3, 2.1, 0.4, 1.2);
  c.e = TimeProfile::constant(-0.2);
  return c;
}

}  // namespace

static void BM_StructureConstants(benchmark::State& st) {
  const auto alg = static_cast<Algebra>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(structure_constants(alg));
  st.SetLabel(algebra_name(alg));
}
BENCHMARK(BM_StructureConstants)->DenseRange(0, 2);

static void BM_SolvePath1(benchmark::State& st) {
  const double tol = std::pow(10.0, -static_cast<double>(st.range(0)));
  const auto c = driven();
  for (auto _ : st) benchmark::DoNotOptimize(solve_path1(c, 1.0, tol));
}
BENCHMARK(BM_SolvePath1)->Arg(8)->Arg(10)->Arg(12);

static void BM_SolvePath2(benchmark::State& st) {
  const double tol = std::pow(10.0, -static_cast<double>(st.range(0)));
  const auto c = driven();
  for (auto _ : st) benchmark::DoNotOptimize(solve_path2(c, 1.0, tol));
}
BENCHMARK(BM_SolvePath2)->Arg(8)->Arg(10)->Arg(12);

static void BM_Solve2D(benchmark::State& st) {
  FieldProfile2D f;
  f.B = TimeProfile::sinusoid(0.4, 0.8, 0.3, 1.0);
  f.K = TimeProfile::constant(0.5);
  f.Ex = TimeProfile::sinusoid(0.2, 1.1);
  for (auto _ : st) benchmark::DoNotOptimize(solve_2d(f, 1.0, 1e-10, Path::Path1));
}
BENCHMARK(BM_Solve2D);

static void BM_AssembleMap(benchmark::State& st) {
  auto tr = solve_path1(driven(), 1.0, 1e-10);
  double t = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(assemble(tr, t));
    t = t > 0.9 ? 0.1 : t + 0.01;
  }
}
BENCHMARK(BM_AssembleMap);

static void BM_KernelApply(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto q = static_cast<Quadrature>(st.range(1));
  auto tr = solve_path1(oscillator(), 1.0, 1e-10);
  auto k = kernel_build(tr, 0.7, KernelVariant::Path1);
  auto psi = WaveGrid::gaussian(n, -20, 40.0 / static_cast<double>(n), 0.5, 0.3, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(kernel_apply(k, psi, q));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_KernelApply)
    ->ArgsProduct({{256, 1024, 4096},
                   {static_cast<long>(Quadrature::Trapezoid), static_cast<long>(Quadrature::Spectral)}})
    ->Unit(benchmark::kMicrosecond);

static void BM_KernelApply2D(benchmark::State& st) {
  FieldProfile2D f;
  f.B = TimeProfile::constant(1.0);
  f.K = TimeProfile::constant(0.4);
  auto tr = solve_2d(f, 1.0, 1e-10, Path::Path1);
  auto k = kernel_build(tr, 0.9, KernelVariant::TwoD_Path1);
  const auto n = static_cast<std::size_t>(st.range(0));
  auto psi = WaveGrid::gaussian_2d(n, -8, 16.0 / static_cast<double>(n), 1, -0.5, 0.3, 0.2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernel_apply(k, psi, Quadrature::Trapezoid));
}
BENCHMARK(BM_KernelApply2D)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_SplitStep(benchmark::State& st) {
  auto psi = WaveGrid::gaussian(1024, -20, 40.0 / 1024, 0.5, 0.3, 1.0);
  const auto c = oscillator();
  for (auto _ : st) benchmark::DoNotOptimize(oracle::split_step_evolve(c, psi, 1.0, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SplitStep)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_Mathieu(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mathieu_c(2.0, 0.5, 3.0));
}
BENCHMARK(BM_Mathieu);

static void BM_IonTrapClosedForm(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ion_trap_params(1, 1, 0.3, 5, 0.4));
}
BENCHMARK(BM_IonTrapClosedForm);

static void BM_EfieldClosedForm(benchmark::State& st) {
  EfieldInputs in;
  in.B = 2;
  in.K = 0.5;
  in.E0x = 0.3;
  in.E1y = 0.2;
  in.omega = 1.3;
  in.zeta = 1.5707963267948966;
  for (auto _ : st) benchmark::DoNotOptimize(efield_const_b_params(in, 2.0, Gamma4Form::ResonanceProduct));
}
BENCHMARK(BM_EfieldClosedForm);
BENCHMARK_MAIN();
