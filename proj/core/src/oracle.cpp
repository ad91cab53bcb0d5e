#include "liegate/oracle.hpp"

#include "fft.hpp"
#include "liegate/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace liegate::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble I(0.0, 1.0);

void check_span(double t_end, double tol) {
  if (!(t_end >= 0) || !std::isfinite(t_end)) throw DomainError("t_end must be finite and >= 0");
  if (!(tol > 0)) throw DomainError("tol must be positive");
}

OdeOptions options(double tol) {
  OdeOptions o;
  o.rtol = tol;
  o.atol = tol;
  o.method = OdeMethod::Fehlberg78;
  return o;
}

std::vector<double> uniform(double t_end, int n) {
  if (n < 2) n = 2;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = t_end * i / (n - 1);
  g.back() = t_end;
  return g;
}

// Lab-frame 2D Hessian pieces: H = ½c|r|² + |p|²/2m + ω(x p_y − y p_x) + e(E·r).
struct Lab2D {
  Reduced2D red;
  FieldProfile2D f;
  void hessian(double t, Eigen::Matrix4d& H, Eigen::Vector4d& l) const {
    const double c = red.radial.c.value(t), a = red.radial.a.value(t), w = red.theta_rate.value(t);
    H.setZero();
    H(0, 0) = H(1, 1) = c;
    H(2, 2) = H(3, 3) = a;
    H(0, 3) = H(3, 0) = w;
    H(1, 2) = H(2, 1) = -w;
    l << f.charge * f.Ex.value(t), f.charge * f.Ey.value(t), 0, 0;
  }
};

Eigen::Matrix4d J4() {
  Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
  J.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
  J.block<2, 2>(2, 0) = -Eigen::Matrix2d::Identity();
  return J;
}

void check_field(const FieldProfile2D& f, double t_end) {
  require_positive(f.m, 0.0, t_end, "m");
}

}  // namespace

class FlowAccess {
public:
  static DenseSolution& sol(ClassicalTrajectory& t) { return t.sol_; }
  static DenseSolution& sol(FundamentalTrajectory& t) { return t.sol_; }
  static const DenseSolution& sol(const ClassicalTrajectory& t) { return t.sol_; }
  static const DenseSolution& sol(const FundamentalTrajectory& t) { return t.sol_; }
};

namespace {

ClassicalState to_state(double t, const OdeState& y) {
  ClassicalState s;
  s.t = t;
  s.z = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
  return s;
}

FundamentalMatrix to_matrix(double t, const OdeState& y, int dim) {
  FundamentalMatrix f;
  f.t = t;
  f.Phi = Eigen::Map<const Eigen::MatrixXd>(y.data(), dim, dim);
  return f;
}

ClassicalTrajectory run_classical(OdeRhs rhs, const Eigen::VectorXd& z0, double t_end, double tol,
                                  int n_samples, int dof) {
  check_span(t_end, tol);
  if (z0.size() != 2 * dof) throw DomainError("z0 must have " + std::to_string(2 * dof) + " entries");
  ClassicalTrajectory tr;
  tr.dof = dof;
  auto grid = uniform(t_end, n_samples);
  OdeState y0(z0.data(), z0.data() + z0.size());
  FlowAccess::sol(tr) = DenseSolution::solve(std::move(rhs), y0, 0.0, t_end, options(tol), grid);
  for (double t : grid) tr.samples.push_back(tr.at(t));
  return tr;
}

FundamentalTrajectory run_fundamental(OdeRhs rhs, double t_end, double tol, int n_samples,
                                      int dof) {
  check_span(t_end, tol);
  FundamentalTrajectory tr;
  tr.dof = dof;
  const int dim = 2 * dof;
  Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(dim, dim);
  OdeState y0(Id.data(), Id.data() + Id.size());
  auto grid = uniform(t_end, n_samples);
  FlowAccess::sol(tr) = DenseSolution::solve(std::move(rhs), y0, 0.0, t_end, options(tol), grid);
  for (double t : grid) tr.samples.push_back(tr.at(t));
  return tr;
}

}  // namespace

ClassicalState ClassicalTrajectory::at(double t) const { return to_state(t, sol_.at(t)); }

FundamentalMatrix FundamentalTrajectory::at(double t) const {
  return to_matrix(t, sol_.at(t), 2 * dof);
}

ClassicalTrajectory classical_flow(const CoefficientSet1D& c, const Eigen::VectorXd& z0,
                                   double t_end, double tol, int n_samples) {
  auto rhs = [c](const OdeState& y, OdeState& dy, double t) {
    const double a = c.a.value(t), b = c.b.value(t), cc = c.c.value(t);
    dy[0] = a * y[1] + b * y[0] + c.d.value(t);
    dy[1] = -cc * y[0] - b * y[1] - c.e.value(t);
  };
  return run_classical(rhs, z0, t_end, tol, n_samples, 1);
}

ClassicalTrajectory classical_flow(const FieldProfile2D& f, const Eigen::VectorXd& z0,
                                   double t_end, double tol, int n_samples) {
  check_field(f, t_end);
  Lab2D lab{reduce_2d(f), f};
  const Eigen::Matrix4d J = J4();
  auto rhs = [lab, J](const OdeState& y, OdeState& dy, double t) {
    Eigen::Matrix4d H;
    Eigen::Vector4d l;
    lab.hessian(t, H, l);
    Eigen::Vector4d z(y[0], y[1], y[2], y[3]);
    Eigen::Vector4d d = J * (H * z + l);
    for (int i = 0; i < 4; ++i) dy[i] = d[i];
  };
  return run_classical(rhs, z0, t_end, tol, n_samples, 2);
}

FundamentalTrajectory fundamental_matrix(const CoefficientSet1D& c, double t_end, double tol,
                                         int n_samples) {
  auto rhs = [c](const OdeState& y, OdeState& dy, double t) {
    const double a = c.a.value(t), b = c.b.value(t), cc = c.c.value(t);
    // column-major 2×2
    for (int col = 0; col < 2; ++col) {
      const double x = y[2 * col], p = y[2 * col + 1];
      dy[2 * col] = b * x + a * p;
      dy[2 * col + 1] = -cc * x - b * p;
    }
  };
  return run_fundamental(rhs, t_end, tol, n_samples, 1);
}

FundamentalTrajectory fundamental_matrix(const FieldProfile2D& f, double t_end, double tol,
                                         int n_samples) {
  check_field(f, t_end);
  Lab2D lab{reduce_2d(f), f};
  const Eigen::Matrix4d J = J4();
  auto rhs = [lab, J](const OdeState& y, OdeState& dy, double t) {
    Eigen::Matrix4d H;
    Eigen::Vector4d l;
    lab.hessian(t, H, l);
    Eigen::Map<const Eigen::Matrix4d> Phi(y.data());
    Eigen::Map<Eigen::Matrix4d> dPhi(dy.data());
    dPhi = J * H * Phi;
  };
  return run_fundamental(rhs, t_end, tol, n_samples, 2);
}

namespace {

std::vector<double> wavenumbers(std::size_t n, double dx) {
  std::vector<double> k(n);
  const double L = static_cast<double>(n) * dx;
  for (std::size_t m = 0; m < n; ++m) {
    long mm = m < (n + 1) / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n);
    k[m] = 2 * kPi * static_cast<double>(mm) / L;
  }
  return k;
}

// Strang steps for ½a p² + d p + ½c x² + e x + g on every axis of the grid.
WaveGrid strang(const CoefficientSet1D& c, const WaveGrid& psi0, double t_end, int n_steps) {
  if (n_steps < 0) throw DomainError("n_steps must be >= 0");
  if (!(t_end >= 0)) throw DomainError("t_end must be >= 0");
  WaveGrid psi = psi0;
  if (n_steps == 0 || t_end == 0) return psi;
  const std::size_t n = psi.n;
  const int dims = psi.dims;
  const double hbar = psi.hbar, dt = t_end / n_steps;
  const auto k = wavenumbers(n, psi.dx);
  detail::FftPlan fwd(n, -1, dims), bwd(n, +1, dims);
  std::vector<cdouble> spec(psi.size()), vhalf(n), tfull(n);
  const double norm = 1.0 / static_cast<double>(psi.size());

  for (int s = 0; s < n_steps; ++s) {
    const double tm = (s + 0.5) * dt;
    const double a = c.a.value(tm), cc = c.c.value(tm), d = c.d.value(tm), e = c.e.value(tm),
                 g = c.g.value(tm);
    // g is shared by all axes; split it evenly so the total phase is g·dt.
    for (std::size_t i = 0; i < n; ++i) {
      const double x = psi.x(i);
      const double V = 0.5 * cc * x * x + e * x + g / dims;
      vhalf[i] = std::exp(-I * (V * dt / (2 * hbar)));
      const double p = hbar * k[i];
      tfull[i] = std::exp(-I * ((0.5 * a * p * p + d * p) * dt / hbar));
    }
    auto apply = [&](std::vector<cdouble>& v, const std::vector<cdouble>& ph, double scale) {
      if (dims == 1) {
        for (std::size_t i = 0; i < n; ++i) v[i] *= ph[i] * scale;
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) v[i * n + j] *= ph[i] * ph[j] * scale;
      }
    };
    apply(psi.amps, vhalf, 1.0);
    fwd.execute(psi.amps.data(), spec.data());
    apply(spec, tfull, norm);
    bwd.execute(spec.data(), psi.amps.data());
    apply(psi.amps, vhalf, 1.0);
  }
  return psi;
}

}  // namespace

WaveGrid split_step_evolve(const CoefficientSet1D& c, const WaveGrid& psi0, double t_end,
                           int n_steps) {
  if (!c.b.is_zero())
    throw UnsupportedError(
        "split-step oracle needs b = 0; validate b != 0 cases with oracle::fundamental_matrix");
  if (psi0.dims != 1) throw DomainError("1D split-step needs a 1D grid");
  WaveGrid g = psi0;
  g.hbar = c.hbar;
  auto out = strang(c, g, t_end, n_steps);
  out.hbar = psi0.hbar;
  return out;
}

WaveGrid split_step_evolve(const FieldProfile2D& f, const WaveGrid& psi0, double t_end,
                           int n_steps) {
  if (psi0.dims != 2) throw DomainError("2D split-step needs a 2D grid");
  if (!f.Ex.is_zero() || !f.Ey.is_zero())
    throw UnsupportedError(
        "rotating-frame split-step needs E = 0; validate driven cases with oracle::classical_flow");
  if (t_end > 0) check_field(f, t_end);
  const auto red = reduce_2d(f);
  WaveGrid g = psi0;
  g.hbar = f.hbar;
  WaveGrid rot = strang(red.radial, g, t_end, n_steps);
  rot.hbar = psi0.hbar;
  if (n_steps == 0 || t_end == 0) return rot;

  OdeOptions o;
  o.rtol = o.atol = 1e-13;
  const auto rate = red.theta_rate;
  const double theta =
      integrate_to([rate](const OdeState&, OdeState& dy, double t) { dy[0] = rate.value(t); },
                   {0.0}, 0.0, t_end, o)[0];
  if (theta == 0) return rot;

  // ψ_lab(r) = ψ_rot(R(−θ) r), evaluated on the trigonometric interpolant of ψ_rot.
  const std::size_t n = rot.n;
  std::vector<cdouble> coef(rot.size());
  detail::FftPlan(n, -1, 2).execute(rot.amps.data(), coef.data());
  const double scale = 1.0 / static_cast<double>(rot.size());
  const auto k = wavenumbers(n, rot.dx);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double lo = rot.x(0) - 0.5 * rot.dx, hi = rot.x(n - 1) + 0.5 * rot.dx;
  WaveGrid out = rot;
  std::vector<cdouble> ex(n), ey(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double x = rot.x(i), y = rot.x(j);
      const double X = ct * x + st * y, Y = -st * x + ct * y;
      if (X < lo || X > hi || Y < lo || Y > hi) {
        out.amps[i * n + j] = 0;
        continue;
      }
      for (std::size_t m = 0; m < n; ++m) {
        ex[m] = std::exp(I * (k[m] * (X - rot.x_min)));
        ey[m] = std::exp(I * (k[m] * (Y - rot.x_min)));
      }
      cdouble acc = 0;
      for (std::size_t m1 = 0; m1 < n; ++m1) {
        cdouble row = 0;
        for (std::size_t m2 = 0; m2 < n; ++m2) row += coef[m1 * n + m2] * ey[m2];
        acc += ex[m1] * row;
      }
      out.amps[i * n + j] = acc * scale;
    }
  return out;
}

double fidelity(const WaveGrid& psi1, const WaveGrid& psi2) {
  if (!psi1.same_geometry(psi2)) throw DomainError("fidelity needs identical grids");
  cdouble ov = 0;
  double n1 = 0, n2 = 0;
  for (std::size_t i = 0; i < psi1.size(); ++i) {
    ov += std::conj(psi1.amps[i]) * psi2.amps[i];
    n1 += std::norm(psi1.amps[i]);
    n2 += std::norm(psi2.amps[i]);
  }
  if (n1 == 0 || n2 == 0) throw DomainError("fidelity of a zero wavefunction");
  return std::min(1.0, std::abs(ov) / std::sqrt(n1 * n2));
}

GridMoments grid_moments(const WaveGrid& psi) {
  if (psi.dims != 1) throw DomainError("grid_moments is 1D only");
  const std::size_t n = psi.n;
  const auto k = wavenumbers(n, psi.dx);
  std::vector<cdouble> spec(n), dpsi(n);
  detail::FftPlan(n, -1).execute(psi.amps.data(), spec.data());
  for (std::size_t m = 0; m < n; ++m) spec[m] *= psi.hbar * k[m] / static_cast<double>(n);
  detail::FftPlan(n, +1).execute(spec.data(), dpsi.data());  // p̂ψ

  double N = 0, sx = 0, sxx = 0, sp = 0, spp = 0, sxp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = psi.x(i), w = std::norm(psi.amps[i]);
    N += w;
    sx += x * w;
    sxx += x * x * w;
    const cdouble ppsi = dpsi[i];
    sp += (std::conj(psi.amps[i]) * ppsi).real();
    spp += std::norm(ppsi);
    sxp += x * (std::conj(psi.amps[i]) * ppsi).real();
  }
  if (N == 0) throw DomainError("moments of a zero wavefunction");
  GridMoments g;
  g.mean << sx / N, sp / N;
  g.cov(0, 0) = sxx / N - g.mean[0] * g.mean[0];
  g.cov(1, 1) = spp / N - g.mean[1] * g.mean[1];
  g.cov(0, 1) = g.cov(1, 0) = sxp / N - g.mean[0] * g.mean[1];
  return g;
}

}  // namespace liegate::oracle
