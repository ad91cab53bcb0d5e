#include "liegate/errors.hpp"
#include "liegate/greens.hpp"
#include "liegate/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>

using namespace liegate;
using namespace testsupport;
using doctest::Approx;

namespace {

const cdouble I(0, 1);

// Mehler kernel of the unit SHO, written out independently.
cdouble mehler(double x, double xp, double t, double hbar = 1) {
  const double s = std::sin(t);
  return std::sqrt(1.0 / (2 * pi * I * hbar * s)) *
         std::exp(I * ((x * x + xp * xp) * std::cos(t) - 2 * x * xp) / (2 * hbar * s));
}

WaveGrid test_gaussian(double x0 = 0.5, double p0 = 0.3, double sigma = 1.0) {
  return WaveGrid::gaussian(1024, -20.0, 40.0 / 1024, x0, p0, sigma);
}

}  // namespace

TEST_CASE("free kernel at t = 1") {
  auto tr = solve_path1(free_particle(), 2.0, 1e-12);
  auto k = kernel_build(tr, 1.0, KernelVariant::LP);
  CHECK(std::abs(k.prefactor) == Approx(1 / std::sqrt(2 * pi)).epsilon(1e-12));
  CHECK(k.Axx(0, 0).real() == Approx(0.5));
  CHECK(k.Ayy(0, 0).real() == Approx(0.5));
  CHECK(k.Axy(0, 0).real() == Approx(-1.0));
  cdouble want = std::exp(-I * pi / 4.0) / std::sqrt(2 * pi) * std::exp(I * 0.5 * 0.49);
  CHECK(std::abs(k(0.3, -0.4) - want) < 1e-12);
}

TEST_CASE("SHO kernel matches Mehler entrywise") {
  for (auto path : {Path::Path1, Path::Path2}) {
    auto tr = solve(sho(), path, 1.0, 1e-12);
    auto k = kernel_build(tr, pi / 4, path == Path::Path1 ? KernelVariant::Path1 : KernelVariant::Path2);
    for (double x : {-2.0, -0.3, 0.0, 1.1})
      for (double xp : {-1.5, 0.2, 2.4}) {
        INFO(path_name(path) << " x=" << x << " xp=" << xp);
        CHECK(std::abs(k(x, xp) - mehler(x, xp, pi / 4)) < 1e-9);
      }
  }
}

TEST_CASE("kernel build preconditions") {
  auto tr = solve_path1(sho(), 3.0, 1e-12);
  CHECK_THROWS_AS(kernel_build(tr, 0.0, KernelVariant::Path1), DomainError);
  CHECK_THROWS_AS(kernel_build(tr, 2.0, KernelVariant::Path1), CausticError);
  CHECK_THROWS_AS(kernel_build(tr, 1.0, KernelVariant::Path2), DomainError);
  CHECK_THROWS_AS(kernel_build(tr, 1.0, KernelVariant::LP), DomainError);
}

TEST_CASE("near-delta kernel reproduces its input") {
  auto tr = solve_path1(free_particle(), 1.0, 1e-12);
  auto psi = test_gaussian();
  auto out = kernel_apply(kernel_build(tr, 1e-6, KernelVariant::LP), psi);
  CHECK(oracle::fidelity(psi, out) >= 1 - 1e-6);
}

TEST_CASE("unitarity residuals and prefactor conventions") {
  auto tr = solve_path1(free_particle(), 2.0, 1e-12);
  auto psi = test_gaussian();
  auto k = kernel_build(tr, 1.0, KernelVariant::LP);
  CHECK(kernel_unitarity_residual(k, psi, Quadrature::Trapezoid) <= 1e-6);
  auto lit = kernel_build(tr, 1.0, KernelVariant::LP, PrefactorConvention::Literal);
  CHECK(std::abs(std::abs(lit.prefactor) - std::abs(k.prefactor)) < 1e-15);
  CHECK(kernel_unitarity_residual(lit, psi, Quadrature::Trapezoid) <= 1e-6);
  auto bad = k;
  bad.prefactor *= 1.1;
  CHECK(kernel_unitarity_residual(bad, psi, Quadrature::Trapezoid) == Approx(0.1).epsilon(1e-6));
}

TEST_CASE("coherent state mean follows the map") {
  auto tr = solve_path1(sho(), 1.5, 1e-12);
  auto psi = test_gaussian(1.0, 0.5, std::sqrt(0.5));
  const double t = 1.2;
  auto out = kernel_apply(kernel_build(tr, t, KernelVariant::Path1), psi, Quadrature::Trapezoid);
  auto mom = oracle::grid_moments(out);
  auto map = assemble_path1(tr, t);
  Eigen::Vector2d want = map.M * Eigen::Vector2d(1.0, 0.5) + map.shift;
  CHECK(std::abs(mom.mean[0] - want[0]) < 1e-4);
  CHECK(std::abs(mom.mean[1] - want[1]) < 1e-4);
}

TEST_CASE("linear potential kicks the momentum") {
  auto tr = solve_path1(lp(1.0), 2.0, 1e-12);
  auto psi = test_gaussian(0.0, 0.3, 1.0);
  auto out = kernel_apply(kernel_build(tr, 1.5, KernelVariant::LP), psi, Quadrature::Trapezoid);
  auto mom = oracle::grid_moments(out);
  CHECK(mom.mean[1] == Approx(0.3 + 1.5).epsilon(1e-5));
}

TEST_CASE("moment transport matches the map covariance") {
  auto c = random_coeffs(6, false);
  auto tr = solve_path1(c, 1.0, 1e-12);
  auto psi = test_gaussian(0.2, -0.1, 1.0);
  auto before = oracle::grid_moments(psi);
  const double t = 0.6;
  auto out = kernel_apply(kernel_build(tr, t, KernelVariant::Path1), psi, Quadrature::Trapezoid);
  auto after = oracle::grid_moments(out);
  auto want = evolve_gaussian_moments(assemble_path1(tr, t), before.mean, before.cov);
  CHECK((after.mean - want.mean).cwiseAbs().maxCoeff() < 1e-4);
  CHECK((after.cov - want.cov).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("2D kernel against separable 1D kernels when B = 0") {
  FieldProfile2D f;
  f.K = TimeProfile::constant(1.0);
  auto tr = solve_2d(f, 1.0, 1e-12, Path::Path1);
  auto k2 = kernel_build(tr, 0.7, KernelVariant::TwoD_Path1);
  auto k1 = kernel_build(solve_path1(sho(), 1.0, 1e-12), 0.7, KernelVariant::Path1);
  Eigen::Vector2d x(0.3, -0.5), xp(-0.2, 0.9);
  CHECK(std::abs(k2(x, xp) - k1(0.3, -0.2) * k1(-0.5, 0.9)) < 1e-10);
}

TEST_CASE("wavegrid IO round trip") {
  auto dir = std::filesystem::temp_directory_path() / "liegate_io_test";
  std::filesystem::create_directories(dir);
  auto psi = WaveGrid::gaussian(64, -5.0, 10.0 / 64, 0.1, 0.4, 0.8);
  write_wavegrid_csv(psi, (dir / "a.csv").string());
  auto back = read_wavegrid_csv((dir / "a.csv").string());
  REQUIRE(back.same_geometry(psi));
  for (std::size_t i = 0; i < psi.size(); ++i) CHECK(back.amps[i] == psi.amps[i]);
  write_wavegrid_bin(psi, (dir / "a.bin").string());
  auto bin = read_wavegrid_bin((dir / "a.bin").string());
  REQUIRE(bin.same_geometry(psi));
  for (std::size_t i = 0; i < psi.size(); ++i) CHECK(bin.amps[i] == psi.amps[i]);
  auto g2 = WaveGrid::gaussian_2d(8, -2.0, 0.5, 0, 0, 0, 0, 1.0);
  write_wavegrid_bin(g2, (dir / "b.bin").string());
  CHECK(read_wavegrid_bin((dir / "b.bin").string()).dims == 2);
  write_wavegrid_csv(g2, (dir / "b.csv").string());
  auto c2 = read_wavegrid_csv((dir / "b.csv").string());
  CHECK(c2.dims == 2);
  CHECK(c2.amps == g2.amps);
}

TEST_CASE("normalized states") {
  auto psi = WaveGrid::gaussian(512, -10.0, 20.0 / 512, 0.0, 0.0, 1.0);
  CHECK(psi.norm2() == Approx(1.0).epsilon(1e-12));
  psi.amps[3] *= 4.0;
  psi.normalize();
  CHECK(psi.norm2() == Approx(1.0).epsilon(1e-12));
}
