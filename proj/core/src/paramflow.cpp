#include "liegate/paramflow.hpp"

#include "liegate/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace liegate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

OdeOptions options_for(double tol) {
  if (!(tol > 0) || !std::isfinite(tol)) throw DomainError("tol must be a positive number");
  OdeOptions o;
  o.rtol = tol;
  o.atol = tol;
  return o;
}

void check_interval(double t_end, double t_max) {
  if (!(t_end > 0) || !std::isfinite(t_end)) throw DomainError("t_end must be positive and finite");
  if (t_end > t_max)
    throw DomainError("coefficients are only defined up to t=" + std::to_string(t_max) +
                      ", requested t_end=" + std::to_string(t_end));
}

std::vector<double> uniform_grid(double t_end, int n) {
  if (n < 2) n = 2;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = t_end * i / (n - 1);
  g.back() = t_end;
  return g;
}

// y[0..2] = λ, Π, S for the 1D linear part.
void linear_rhs(const CoefficientSet1D& c, const OdeState& y, OdeState& dy, double t) {
  const double a = c.a(t), b = c.b(t), cc = c.c(t), d = c.d(t), e = c.e(t), g = c.g(t);
  const double lam = y[0], Pi = y[1];
  const double lam_dot = b * lam - a * Pi + d;
  dy[0] = lam_dot;
  dy[1] = cc * lam - b * Pi + e;
  dy[2] = g + 0.5 * a * Pi * Pi + 0.5 * cc * lam * lam - b * lam * Pi - d * Pi + e * lam +
          lam_dot * Pi;
}

}  // namespace

const char* path_name(Path p) { return p == Path::Path1 ? "path1" : "path2"; }

LinearSample LinearTrajectory::at(double t) const {
  auto y = sol_.at(t);
  return {t, y[2], y[0], y[1]};
}

LinearTrajectory solve_linear_translation(const CoefficientSet1D& c, double t_end, double tol,
                                          int n_samples) {
  check_interval(t_end, c.t_max());
  auto grid = uniform_grid(t_end, n_samples);
  LinearTrajectory tr;
  tr.sol_ = DenseSolution::solve(
      [c](const OdeState& y, OdeState& dy, double t) { linear_rhs(c, y, dy, t); },
      OdeState(3, 0.0), 0.0, t_end, options_for(tol), grid);
  for (double t : grid) tr.samples.push_back(tr.at(t));
  return tr;
}

ParamSample ParamTrajectory::at(double t) const { return make_sample(t, sol_.at(t)); }

ParamSample ParamTrajectory::make_sample(double t, const OdeState& y) const {
  ParamSample s;
  s.t = t;
  s.lam = y[0];
  s.Pi = y[1];
  s.S = y[2];
  s.a = coeffs_.a(t);
  s.in_window = t < valid_to;
  if (path == Path::Path1) {
    s.u = y[3];
    s.udot = y[4];
    s.w = y[5];
    s.wdot = y[6];
    s.Bint = y[7];
    s.gamma = 0.5 * std::log(s.a * Delta);
    if (s.in_window && s.u > 0) {
      s.alpha = -s.udot / s.u;
      s.phi = s.Bint - s.gamma + std::log(s.u);
      s.beta = Delta * s.w / s.u;
    } else {
      s.alpha = s.phi = s.beta = kNaN;
    }
    s.vphi = 0;
  } else {
    const double cc = coeffs_.c(t);
    s.gamma = 0.5 * std::log(Delta * std::sqrt(s.a / cc));
    s.phi = y[3];
    s.N = y[4];
    s.D = y[5];
    s.N2 = y[6];
    s.D2 = y[7];
    s.u = s.D;
    s.udot = -s.N;
    if (s.in_window && s.D > 0) {
      s.alpha = s.N / s.D;
      s.vphi = std::log(s.D);
      s.beta = -s.D2 / s.D;
    } else {
      s.alpha = s.vphi = s.beta = kNaN;
    }
  }
  return s;
}

ParamTrajectory solve_path1(const CoefficientSet1D& c, double t_end, double tol, int n_samples) {
  check_interval(t_end, c.t_max());
  require_positive(c.a, 0.0, t_end, "a");
  ParamTrajectory tr;
  tr.path = Path::Path1;
  tr.coeffs_ = c;
  tr.hbar = c.hbar;
  tr.t_end = t_end;
  const double a0 = c.a(0.0);
  tr.Delta = 1.0 / a0;

  // y = λ, Π, S, u, u̇, w, ẇ, ∫b
  auto rhs = [c](const OdeState& y, OdeState& dy, double t) {
    linear_rhs(c, y, dy, t);
    const double a = c.a(t), ad = c.a.derivative(t), b = c.b(t), cc = c.c(t);
    const double damp = 2.0 * b - ad / a, k = cc * a;
    dy[3] = y[4];
    dy[4] = -damp * y[4] - k * y[3];
    dy[5] = y[6];
    dy[6] = -damp * y[6] - k * y[5];
    dy[7] = b;
  };
  OdeState y0{0, 0, 0, 1, 0, 0, a0, 0};
  tr.t_grid = uniform_grid(t_end, n_samples);
  tr.sol_ = DenseSolution::solve(rhs, y0, 0.0, t_end, options_for(tol), tr.t_grid);
  tr.valid_to = tr.sol_.first_root([](double, const OdeState& y) { return y[3]; }, 1e-12);
  for (double t : tr.t_grid) tr.samples.push_back(tr.at(t));
  return tr;
}

ParamTrajectory solve_path2(const CoefficientSet1D& c, double t_end, double tol, int n_samples) {
  check_interval(t_end, c.t_max());
  try {
    require_positive(c.a, 0.0, t_end, "a");
    require_positive(c.c, 0.0, t_end, "c");
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + "; path2 needs a > 0 and c > 0, use path1");
  }
  ParamTrajectory tr;
  tr.path = Path::Path2;
  tr.coeffs_ = c;
  tr.hbar = c.hbar;
  tr.t_end = t_end;
  tr.Delta = std::sqrt(c.c(0.0) / c.a(0.0));

  auto kappa = [c](double t) {
    const double gd = 0.25 * (c.a.derivative(t) / c.a(t) - c.c.derivative(t) / c.c(t));
    const double b = c.b(t);
    return std::pair{b - gd, 1.0 + std::abs(b) + std::abs(gd)};
  };
  tr.reduced = true;
  const int probes = 4 * std::max(n_samples, 2) + 1;
  for (int i = 0; i < probes && tr.reduced; ++i) {
    auto [k, scale] = kappa(t_end * i / (probes - 1));
    if (std::abs(k) >= 1e-12 * scale) tr.reduced = false;
  }

  // y = λ, Π, S, φ, N, D, N2, D2
  const bool reduced = tr.reduced;
  auto rhs = [c, kappa, reduced](const OdeState& y, OdeState& dy, double t) {
    linear_rhs(c, y, dy, t);
    dy[3] = std::sqrt(c.a(t) * c.c(t));
    if (reduced) {
      dy[4] = dy[5] = dy[6] = dy[7] = 0.0;
      return;
    }
    const double k = kappa(t).first;
    const double s2 = std::sin(2.0 * y[3]), c2 = std::cos(2.0 * y[3]);
    dy[4] = -k * c2 * y[4] - k * s2 * y[5];
    dy[5] = -k * s2 * y[4] + k * c2 * y[5];
    dy[6] = -k * c2 * y[6] - k * s2 * y[7];
    dy[7] = -k * s2 * y[6] + k * c2 * y[7];
  };
  OdeState y0{0, 0, 0, 0, 0, 1, 1, 0};
  tr.t_grid = uniform_grid(t_end, n_samples);
  tr.sol_ = DenseSolution::solve(rhs, y0, 0.0, t_end, options_for(tol), tr.t_grid);
  double t_sin = tr.sol_.first_root([](double, const OdeState& y) { return std::sin(y[3]); });
  double t_d = tr.sol_.first_root([](double, const OdeState& y) { return y[5]; });
  tr.valid_to = std::min(t_sin, t_d);
  for (double t : tr.t_grid) tr.samples.push_back(tr.at(t));
  return tr;
}

ParamTrajectory solve(const CoefficientSet1D& c, Path path, double t_end, double tol,
                      int n_samples) {
  return path == Path::Path1 ? solve_path1(c, t_end, tol, n_samples)
                             : solve_path2(c, t_end, tol, n_samples);
}

Sample2D ParamTrajectory2D::at(double t) const {
  auto y = sol_.at(t);
  return {t, y[5], y[0], y[1], y[2], y[3], y[4]};
}

ParamTrajectory2D solve_2d(const FieldProfile2D& f, double t_end, double tol, Path path,
                           int n_samples) {
  check_interval(t_end, f.t_max());
  require_positive(f.m, 0.0, t_end, "m");
  auto red = reduce_2d(f);
  ParamTrajectory2D tr;
  tr.field_ = f;
  tr.radial = solve(red.radial, path, t_end, tol, n_samples);
  const double q = f.charge;
  const auto cc = red.radial.c;
  const auto w = red.theta_rate;
  // y = λx, λy, Πx, Πy, S, θ
  auto rhs = [f, q, cc, w](const OdeState& y, OdeState& dy, double t) {
    const double m = f.m(t), c = cc(t), om = w(t), ex = q * f.Ex(t), ey = q * f.Ey(t);
    const double lx = y[0], ly = y[1], px = y[2], py = y[3];
    dy[0] = -px / m - om * ly;
    dy[1] = -py / m + om * lx;
    dy[2] = c * lx - om * py + ex;
    dy[3] = c * ly + om * px + ey;
    dy[4] = (px * px + py * py) / (2 * m) + 0.5 * c * (lx * lx + ly * ly) +
            om * (ly * px - lx * py) + dy[0] * px + dy[1] * py + ex * lx + ey * ly;
    dy[5] = om;
  };
  tr.t_grid = tr.radial.t_grid;
  tr.sol_ = DenseSolution::solve(rhs, OdeState(6, 0.0), 0.0, t_end, options_for(tol), tr.t_grid);
  for (double t : tr.t_grid) tr.samples.push_back(tr.at(t));
  return tr;
}

double caustic_window(const ParamTrajectory& traj) { return traj.valid_to; }

}  // namespace liegate
