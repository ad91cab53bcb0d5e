#include "liegate/errors.hpp"
#include "liegate/maps.hpp"
#include "liegate/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace liegate;
using namespace testsupport;
using doctest::Approx;

namespace {
double maxdiff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("free particle map") {
  auto tr = solve_path1(free_particle(), 2.0, 1e-12);
  auto m = assemble_path1(tr, 1.5);
  Eigen::Matrix2d want;
  want << 1, 1.5, 0, 1;
  CHECK(maxdiff(m.M, want) < 1e-12);
  CHECK(m.shift.norm() == 0.0);
}

TEST_CASE("SHO map, both paths") {
  const double s = std::sqrt(0.5);
  Eigen::Matrix2d want;
  want << s, s, -s, s;
  auto m1 = assemble_path1(solve_path1(sho(), 1.0, 1e-12), pi / 4);
  auto m2 = assemble_path2(solve_path2(sho(), 1.0, 1e-12), pi / 4);
  CHECK(maxdiff(m1.M, want) < 1e-10);
  CHECK(maxdiff(m2.M, want) < 1e-12);
  auto m3 = assemble(solve_path2(sho(), 3.0, 1e-12), 2.5, {true});
  Eigen::Matrix2d rot;
  rot << std::cos(2.5), std::sin(2.5), -std::sin(2.5), std::cos(2.5);
  CHECK(maxdiff(m3.M, rot) < 1e-12);
}

TEST_CASE("Kanai-Caldirola G_qq") {
  auto tr = solve_path1(kanai_caldirola_coeffs(1, 1, 0.25, 0, 0, 0), 1.0, 1e-12);
  CHECK(assemble_path1(tr, 1.0).M(0, 0) == Approx(0.97711856964524899397).epsilon(1e-9));
}

TEST_CASE("constant-B radial oscillator, path2 entries") {
  const double m = 2.0, Om = 1.7, t = 0.9;
  CoefficientSet1D c;
  c.a = TimeProfile::constant(1 / m);
  c.c = TimeProfile::constant(m * Om * Om / 4);
  auto M = assemble_path2(solve_path2(c, 1.0, 1e-12), t).M;
  CHECK(M(0, 0) == Approx(std::cos(Om * t / 2)).epsilon(1e-12));
  CHECK(M(0, 1) == Approx(2 / (m * Om) * std::sin(Om * t / 2)).epsilon(1e-12));
}

TEST_CASE("t = 0 gives the exact identity") {
  for (auto path : {Path::Path1, Path::Path2}) {
    auto m = assemble(solve(random_coeffs(2), path, 1.0, 1e-10), 0.0);
    CHECK(m.M == Eigen::MatrixXd::Identity(2, 2));
    CHECK(m.shift.isZero(0));
  }
  FieldProfile2D f;
  f.B = TimeProfile::constant(1.0);
  auto m = assemble_2d(solve_2d(f, 1.0, 1e-10, Path::Path1), 0.0);
  CHECK(m.M == Eigen::MatrixXd::Identity(4, 4));
}

TEST_CASE("caustic handling") {
  auto tr = solve_path1(sho(), 3.0, 1e-12);
  CHECK_THROWS_AS(assemble_path1(tr, 2.0), CausticError);
  try {
    assemble_path1(tr, 2.0);
  } catch (const CausticError& e) {
    CHECK(e.valid_to() == Approx(pi / 2));
  }
  auto m = assemble_path1(tr, 2.0, {true});
  CHECK(m.M(0, 0) == Approx(std::cos(2.0)).epsilon(1e-9));
  CHECK_THROWS_AS(assemble_path1(tr, 3.5, {true}), DomainError);
}

TEST_CASE("symplectic residuals") {
  SymplecticMap id{1, 0.0, Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2)};
  auto r0 = check_symplectic(id);
  CHECK(r0.det_residual == 0.0);
  CHECK(r0.form_residual == 0.0);

  auto tr = solve_path1(random_coeffs(5), 2.0, 1e-11);
  for (double t : {0.3, 0.9, 1.7}) {
    auto r = check_symplectic(assemble_path1(tr, t, {true}));
    CHECK(r.det_residual <= 1e-9);
    CHECK(r.form_residual <= 1e-9);
  }
  auto bad = assemble_path1(tr, 0.5, {true});
  bad.M(0, 1) += 0.1;
  CHECK(check_symplectic(bad).form_residual > 1e-3);
}

TEST_CASE("maps agree with the fundamental matrix") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto c = random_coeffs(seed);
    auto fm = oracle::fundamental_matrix(c, 2.0, 1e-12);
    auto t1 = solve_path1(c, 2.0, 1e-12);
    auto t2 = solve_path2(c, 2.0, 1e-12);
    for (double t : {0.4, 1.1, 2.0}) {
      auto phi = fm.at(t).Phi;
      CHECK(maxdiff(assemble_path1(t1, t, {true}).M, phi) < 1e-7);
      CHECK(maxdiff(assemble_path2(t2, t, {true}).M, phi) < 1e-7);
    }
  }
}

TEST_CASE("2D block structure commutes with rotation") {
  FieldProfile2D f;
  f.B = TimeProfile::sinusoid(1.0, 0.7, 0.2, 0.5);
  f.K = TimeProfile::constant(0.8);
  auto tr = solve_2d(f, 2.0, 1e-12, Path::Path1);
  auto m = assemble_2d(tr, 1.4, {true});
  const double th = tr.at(1.4).theta;
  Eigen::Matrix2d R;
  R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  Eigen::Matrix4d RR = Eigen::Matrix4d::Zero();
  RR.block<2, 2>(0, 0) = R;
  RR.block<2, 2>(2, 2) = R;
  CHECK(maxdiff(m.M * RR, RR * m.M) < 1e-12);
  auto fm = oracle::fundamental_matrix(f, 2.0, 1e-12);
  CHECK(maxdiff(m.M, fm.at(1.4).Phi) < 1e-7);
}

TEST_CASE("2D constant B, K: radial part returns after one period") {
  const double m = 1, e = 1, B = 2, K = 0.5;
  FieldProfile2D f;
  f.B = TimeProfile::constant(B);
  f.K = TimeProfile::constant(K);
  const double wc = e * B / m, Om = std::sqrt(4 * K / m + wc * wc), T = 2 * pi / Om;
  auto tr = solve_2d(f, T, 1e-12, Path::Path2);
  auto M = assemble_2d(tr, T, {true}).M;
  const double th = wc * T / 2;
  Eigen::Matrix2d R;
  R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  // G_qq = G_pp = cos π = −1
  CHECK(maxdiff(M.block<2, 2>(0, 0), -R) < 1e-10);
  CHECK(maxdiff(M.block<2, 2>(0, 2), Eigen::Matrix2d::Zero()) < 1e-10);
}

TEST_CASE("Gaussian moment transport") {
  SymplecticMap id{1, 0.0, Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2)};
  Eigen::Vector2d mean(0.3, -0.2);
  Eigen::Matrix2d cov;
  cov << 1, 0.1, 0.1, 2;
  auto g0 = evolve_gaussian_moments(id, mean, cov);
  CHECK(g0.mean == mean);
  CHECK(g0.cov == cov);

  auto free = assemble_path1(solve_path1(free_particle(), 2.0, 1e-12), 1.0);
  auto g1 = evolve_gaussian_moments(free, Eigen::Vector2d(0, 1), Eigen::Matrix2d::Identity());
  CHECK(g1.mean[0] == Approx(1.0));
  CHECK(g1.mean[1] == Approx(1.0));

  auto quarter = assemble_path2(solve_path2(sho(), 2.0, 1e-12), pi / 2);
  auto g2 = evolve_gaussian_moments(quarter, Eigen::Vector2d(0, 0), Eigen::Matrix2d::Identity());
  CHECK(maxdiff(g2.cov, Eigen::Matrix2d::Identity()) < 1e-12);

  Eigen::Matrix2d asym;
  asym << 1, 0.2, 0.1, 1;
  CHECK_THROWS_AS(evolve_gaussian_moments(id, mean, asym), DomainError);
}
