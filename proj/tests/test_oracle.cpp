#include "liegate/errors.hpp"
#include "liegate/greens.hpp"
#include "liegate/maps.hpp"
#include "liegate/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace liegate;
using namespace testsupport;
using doctest::Approx;

TEST_CASE("classical flow trivia") {
  auto f = oracle::classical_flow(free_particle(), Eigen::Vector2d(0, 1), 2.0, 1e-12);
  CHECK(f.at(2.0).z[0] == Approx(2.0));
  CHECK(f.at(2.0).z[1] == Approx(1.0));
  auto s = oracle::classical_flow(sho(), Eigen::Vector2d(1, 0), pi / 2, 1e-12);
  CHECK(std::abs(s.at(pi / 2).z[0]) < 1e-10);
  CHECK(s.at(pi / 2).z[1] == Approx(-1.0).epsilon(1e-10));
  auto l = oracle::classical_flow(lp(1.0), Eigen::Vector2d(0, 0), 2.0, 1e-12);
  auto lt = solve_linear_translation(lp(1.0), 2.0, 1e-12).at(2.0);
  CHECK(l.at(2.0).z[0] == Approx(2.0).epsilon(1e-10));
  CHECK(l.at(2.0).z[1] == Approx(2.0).epsilon(1e-10));
  CHECK(l.at(2.0).z[0] == Approx(lt.lam).epsilon(1e-10));
  CHECK(l.at(2.0).z[1] == Approx(-lt.Pi).epsilon(1e-10));
}

TEST_CASE("fundamental matrix trivia") {
  auto f = oracle::fundamental_matrix(free_particle(), 3.0, 1e-12).at(3.0).Phi;
  CHECK(f(0, 1) == Approx(3.0));
  CHECK(f(0, 0) == Approx(1.0));
  CHECK(std::abs(f(1, 0)) < 1e-14);
  auto s = oracle::fundamental_matrix(sho(), 1.0, 1e-12).at(pi / 4).Phi;
  CHECK(s(0, 0) == Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(s(1, 0) == Approx(-std::sqrt(0.5)).epsilon(1e-10));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto fm = oracle::fundamental_matrix(random_coeffs(seed), 2.0, 1e-12);
    for (auto& m : fm.samples) CHECK(std::abs(m.Phi.determinant() - 1) <= 1e-9);
  }
}

TEST_CASE("split step: zero steps and b != 0") {
  auto psi = WaveGrid::gaussian(256, -10, 20.0 / 256, 0.3, 0.2, 1.0);
  auto same = oracle::split_step_evolve(sho(), psi, 1.0, 0);
  CHECK(same.amps == psi.amps);
  CHECK_THROWS_AS(oracle::split_step_evolve(random_coeffs(1), psi, 1.0, 10), UnsupportedError);
}

TEST_CASE("split step: SHO coherent state revives after one period") {
  auto psi = WaveGrid::gaussian(1024, -20, 40.0 / 1024, 1.5, 0.5, std::sqrt(0.5));
  auto out = oracle::split_step_evolve(sho(), psi, 2 * pi, 4096);
  CHECK(oracle::fidelity(psi, out) >= 1 - 1e-6);
}

TEST_CASE("split step: free spreading matches the map covariance") {
  auto psi = WaveGrid::gaussian(1024, -30, 60.0 / 1024, 0.0, 0.0, 1.0);
  auto out = oracle::split_step_evolve(free_particle(), psi, 2.0, 400);
  auto mom = oracle::grid_moments(out);
  // σ² (1 + (ħt/2mσ²)²)
  CHECK(mom.cov(0, 0) == Approx(1.0 * (1 + 1.0)).epsilon(1e-5));
  auto before = oracle::grid_moments(psi);
  auto map = assemble_path1(solve_path1(free_particle(), 2.0, 1e-12), 2.0);
  auto want = evolve_gaussian_moments(map, before.mean, before.cov);
  CHECK((mom.cov - want.cov).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("fidelity") {
  auto psi = WaveGrid::gaussian(256, -10, 20.0 / 256, 0.3, 0.2, 1.0);
  CHECK(oracle::fidelity(psi, psi) == Approx(1.0).epsilon(1e-15));
  auto ipsi = psi;
  for (auto& a : ipsi.amps) a *= cdouble(0, 1);
  CHECK(oracle::fidelity(psi, ipsi) == Approx(1.0).epsilon(1e-15));
  // first two Hermite functions
  auto h0 = WaveGrid::zeros(1, 512, -12, 24.0 / 512);
  auto h1 = h0;
  for (std::size_t i = 0; i < h0.n; ++i) {
    const double x = h0.x(i);
    h0.amps[i] = std::exp(-x * x / 2);
    h1.amps[i] = x * std::exp(-x * x / 2);
  }
  CHECK(oracle::fidelity(h0, h1) <= 1e-10);
  auto other = WaveGrid::gaussian(128, -10, 20.0 / 128, 0, 0, 1);
  CHECK_THROWS_AS(oracle::fidelity(psi, other), DomainError);
}

TEST_CASE("grid moments of a Gaussian") {
  auto psi = WaveGrid::gaussian(1024, -20, 40.0 / 1024, 0.7, -0.4, 1.3);
  auto m = oracle::grid_moments(psi);
  CHECK(m.mean[0] == Approx(0.7).epsilon(1e-10));
  CHECK(m.mean[1] == Approx(-0.4).epsilon(1e-10));
  CHECK(m.cov(0, 0) == Approx(1.3 * 1.3).epsilon(1e-10));
  CHECK(m.cov(1, 1) == Approx(1 / (4 * 1.3 * 1.3)).epsilon(1e-10));
  CHECK(std::abs(m.cov(0, 1)) < 1e-10);
}

TEST_CASE("2D rotating-frame split step against the 2D kernel") {
  FieldProfile2D f;
  f.B = TimeProfile::constant(1.0);
  f.K = TimeProfile::constant(0.4);
  const std::size_t n = 48;
  auto psi = WaveGrid::gaussian_2d(n, -8.0, 16.0 / n, 1.0, -0.5, 0.3, 0.2, 1.0);
  const double t = 0.9;
  auto ss = oracle::split_step_evolve(f, psi, t, 400);
  auto tr = solve_2d(f, 1.0, 1e-12, Path::Path1);
  auto kk = kernel_apply(kernel_build(tr, t, KernelVariant::TwoD_Path1), psi, Quadrature::Trapezoid);
  CHECK(oracle::fidelity(ss, kk) >= 1 - 1e-5);
  FieldProfile2D driven = f;
  driven.Ex = TimeProfile::constant(0.1);
  CHECK_THROWS_AS(oracle::split_step_evolve(driven, psi, t, 10), UnsupportedError);
}
