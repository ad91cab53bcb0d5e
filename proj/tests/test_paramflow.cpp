#include "liegate/errors.hpp"
#include "liegate/oracle.hpp"
#include "liegate/paramflow.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace liegate;
using namespace testsupport;
using doctest::Approx;

TEST_CASE("linear parameters of the linear potential") {
  auto lt = solve_linear_translation(lp(1.0), 2.0, 1e-12);
  auto s = lt.at(2.0);
  CHECK(s.Pi == Approx(-2.0).epsilon(1e-10));
  CHECK(s.lam == Approx(2.0).epsilon(1e-10));
  // Π = −s, λ = s²/2, Ṡ = −½Π² − fλ = −s²
  CHECK(s.S == Approx(-8.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("no linear terms means zero translation") {
  auto lt = solve_linear_translation(sho(), 3.0, 1e-10);
  for (auto& s : lt.samples) {
    CHECK(s.lam == 0.0);
    CHECK(s.Pi == 0.0);
    CHECK(s.S == 0.0);
  }
}

TEST_CASE("sinusoidal drive matches classical flow") {
  CoefficientSet1D c = free_particle();
  c.e = TimeProfile::sinusoid(1, 1);
  auto lt = solve_linear_translation(c, pi, 1e-12);
  auto cf = oracle::classical_flow(c, Eigen::Vector2d(0, 0), pi, 1e-12);
  auto s = lt.at(pi);
  auto z = cf.at(pi).z;
  CHECK(std::abs(s.lam - z[0]) < 1e-8);
  CHECK(std::abs(-s.Pi - z[1]) < 1e-8);
}

TEST_CASE("path1 free particle") {
  auto tr = solve_path1(free_particle(), 3.0, 1e-12);
  auto s = tr.at(2.5);
  CHECK(s.gamma == 0.0);
  CHECK(std::abs(s.alpha) < 1e-14);
  CHECK(std::abs(s.phi) < 1e-14);
  CHECK(s.beta == Approx(2.5).epsilon(1e-12));
  CHECK(caustic_window(tr) == kInf);
}

TEST_CASE("path1 SHO at pi/4") {
  auto tr = solve_path1(sho(), 1.0, 1e-12);
  auto s = tr.at(pi / 4);
  CHECK(s.alpha == Approx(1.0).epsilon(1e-10));
  CHECK(s.phi == Approx(std::log(std::sqrt(2.0) / 2)).epsilon(1e-10));
  CHECK(s.beta == Approx(1.0).epsilon(1e-10));
  CHECK(tr.Delta == 1.0);
}

TEST_CASE("path1 SHO caustic at pi/2") {
  auto tr = solve_path1(sho(), 3.0, 1e-12);
  CHECK(tr.valid_to == Approx(pi / 2).epsilon(1e-10));
  CHECK(caustic_window(tr) == tr.valid_to);
  auto past = tr.at(2.0);
  CHECK(std::isnan(past.alpha));
  CHECK(std::isfinite(past.u));
  CHECK(past.u == Approx(std::cos(2.0)).epsilon(1e-9));
}

TEST_CASE("path1 Kanai-Caldirola beta") {
  // a = e^{-t}, c = (0.25)² e^{t}: frozen from a 30-digit ODE solve of u'' + u' + u/16 = 0
  auto tr = solve_path1(kanai_caldirola_coeffs(1, 1, 0.25, 0, 0, 0), 1.0, 1e-12);
  auto s = tr.at(1.0);
  CHECK(s.beta == Approx(0.6403145453816552255).epsilon(1e-9));
  CHECK(s.alpha == Approx(0.040019659086353451594).epsilon(1e-9));
  CHECK(s.phi == Approx(0.47685272664403242279).epsilon(1e-9));
  CHECK(s.gamma == Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("path1 invariants on random coefficients") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto c = random_coeffs(seed);
    auto tr = solve_path1(c, 2.0, 1e-11);
    for (auto& s : tr.samples) {
      const double aD = c.a.value(s.t) * tr.Delta;
      CHECK(std::abs(std::exp(2 * s.gamma) - aD) <= 1e-9 * aD);
      if (s.t < tr.valid_to) {
        const double r = std::abs(s.alpha * s.u + s.udot);
        CHECK(r <= 1e-8 * (std::abs(s.alpha * s.u) + std::abs(s.udot)) + 1e-300);
      }
    }
  }
}

TEST_CASE("path2 SHO shortcut") {
  auto tr = solve_path2(sho(), 4.0, 1e-12);
  CHECK(tr.reduced);
  auto s = tr.at(1.3);
  CHECK(s.phi == Approx(1.3).epsilon(1e-12));
  CHECK(s.alpha == 0.0);
  CHECK(s.vphi == 0.0);
  CHECK(s.beta == 0.0);
  CHECK(tr.Delta == 1.0);
  CHECK(tr.valid_to == Approx(pi).epsilon(1e-10));
}

TEST_CASE("path2 constant-B radial oscillator") {
  const double m = 2.0, Om = 1.7;
  CoefficientSet1D c;
  c.a = TimeProfile::constant(1 / m);
  c.c = TimeProfile::constant(m * Om * Om / 4);
  auto tr = solve_path2(c, 1.0, 1e-12);
  auto s = tr.at(0.8);
  CHECK(s.gamma == Approx(0.0));
  CHECK(s.phi == Approx(Om * 0.8 / 2).epsilon(1e-12));
  CHECK(tr.Delta == Approx(m * Om / 2).epsilon(1e-14));
}

TEST_CASE("path2 gamma identity and c <= 0 rejection") {
  auto c = random_coeffs(3);
  auto tr = solve_path2(c, 2.0, 1e-11);
  CHECK_FALSE(tr.reduced);
  for (auto& s : tr.samples) {
    const double want = tr.Delta * std::sqrt(c.a.value(s.t) / c.c.value(s.t));
    CHECK(std::abs(std::exp(2 * s.gamma) - want) <= 1e-9 * want);
  }
  CHECK_THROWS_WITH_AS(solve_path2(free_particle(), 1.0, 1e-10), doctest::Contains("path1"),
                       DomainError);
}

TEST_CASE("parameters vanish at t = 0") {
  for (auto path : {Path::Path1, Path::Path2}) {
    auto tr = solve(random_coeffs(9), path, 1.0, 1e-10);
    auto s = tr.samples.front();
    CHECK(s.t == 0.0);
    CHECK(s.S == 0.0);
    CHECK(s.lam == 0.0);
    CHECK(s.Pi == 0.0);
    CHECK(s.gamma == Approx(0.0));
    CHECK(s.alpha == 0.0);
    CHECK(s.phi == Approx(0.0));
    CHECK(s.beta == 0.0);
  }
}

TEST_CASE("S converges under tolerance halving") {
  auto c = random_coeffs(4);
  const double tol = 1e-9;
  double s1 = solve_path1(c, 2.0, tol).at(2.0).S;
  double s2 = solve_path1(c, 2.0, tol / 2).at(2.0).S;
  CHECK(std::abs(s1 - s2) < 10 * tol);
}

TEST_CASE("over-damped Kanai-Caldirola has no caustic") {
  auto tr = solve_path1(kanai_caldirola_coeffs(1, 1, 0.25, 0, 0, 0), 10.0, 1e-11);
  CHECK(caustic_window(tr) == kInf);
  for (auto& s : tr.samples) CHECK(s.u > 0);
}

TEST_CASE("2D solve") {
  SUBCASE("E = 0 gives zero linear parameters") {
    FieldProfile2D f;
    f.B = TimeProfile::constant(1.0);
    f.K = TimeProfile::constant(0.5);
    auto tr = solve_2d(f, 2.0, 1e-10, Path::Path1);
    for (auto& s : tr.samples) {
      CHECK(s.lam_x == 0.0);
      CHECK(s.Pi_y == 0.0);
      CHECK(s.S == 0.0);
    }
  }
  SUBCASE("B = B0 sin wt rotation angle") {
    FieldProfile2D f;
    const double B0 = 1.2, w = 0.9;
    f.B = TimeProfile::sinusoid(B0, w);
    auto tr = solve_2d(f, 3.0, 1e-11, Path::Path1);
    auto s = tr.at(2.2);
    const double sn = std::sin(w * 2.2 / 2);
    CHECK(s.theta == Approx(B0 / w * sn * sn).epsilon(1e-9));
  }
  SUBCASE("constant B with static Ex matches the closed form") {
    EfieldInputs in;
    in.B = 2.0;
    in.K = 0.5;
    in.E0x = 0.3;
    auto tr = solve_2d(efield_const_b_field(in), 2.0, 1e-12, Path::Path2);
    auto cf = efield_const_b_params(in, 2.0);
    auto s = tr.at(2.0);
    CHECK(std::abs(s.lam_x - cf.lam_x) < 1e-6);
    CHECK(std::abs(s.Pi_y - cf.Pi_y) < 1e-6);
  }
}

TEST_CASE("2D linear parameters match the lab-frame classical flow") {
  EfieldInputs in;
  in.B = 2.0;
  in.K = 0.5;
  in.E0x = 0.3;
  in.E1y = 0.2;
  in.omega = 1.3;
  in.zeta = pi / 2;
  auto f = efield_const_b_field(in);
  auto tr = solve_2d(f, 2.0, 1e-12, Path::Path1);
  auto cf = oracle::classical_flow(f, Eigen::Vector4d::Zero(), 2.0, 1e-12);
  for (double t : {0.5, 1.0, 2.0}) {
    auto s = tr.at(t);
    auto z = cf.at(t).z;
    CHECK(std::abs(s.lam_x - z[0]) < 1e-7);
    CHECK(std::abs(s.lam_y - z[1]) < 1e-7);
    CHECK(std::abs(-s.Pi_x - z[2]) < 1e-7);
    CHECK(std::abs(-s.Pi_y - z[3]) < 1e-7);
  }
}

TEST_CASE("integration errors and bad inputs") {
  CHECK_THROWS_AS(solve_path1(free_particle(), -1.0, 1e-10), DomainError);
  CoefficientSet1D c = free_particle();
  c.a = TimeProfile::sinusoid(1, 1);  // a vanishes at t = 0
  CHECK_THROWS_AS(solve_path1(c, 1.0, 1e-10), DomainError);
}
