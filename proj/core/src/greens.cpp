#include "liegate/greens.hpp"

#include "liegate/errors.hpp"

#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

namespace liegate {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble I(0.0, 1.0);

double trap_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

// Runs body(i) for i in [0, n) on worker_threads() threads, contiguous chunks.
template <class F>
void parallel_rows(std::size_t n, F&& body) {
  unsigned nt = std::min<unsigned>(worker_threads(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + nt - 1) / nt;
  for (unsigned w = 0; w < nt; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("LIEGATE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double WaveGrid::norm2() const {
  double s = 0;
  if (dims == 1) {
    for (std::size_t i = 0; i < n; ++i) s += trap_weight(i, n) * std::norm(amps[i]);
    return s * dx;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s += trap_weight(i, n) * trap_weight(j, n) * std::norm(amps[i * n + j]);
  return s * dx * dx;
}

void WaveGrid::normalize() {
  double nn = std::sqrt(norm2());
  if (!(nn > 0)) throw DomainError("cannot normalize a zero wavefunction");
  for (auto& a : amps) a /= nn;
}

bool WaveGrid::same_geometry(const WaveGrid& o) const {
  return dims == o.dims && n == o.n && x_min == o.x_min && dx == o.dx;
}

WaveGrid WaveGrid::zeros(int dims, std::size_t n, double x_min, double dx, double hbar) {
  if (dims != 1 && dims != 2) throw DomainError("grid dims must be 1 or 2");
  if (n < 2 || !(dx > 0)) throw DomainError("grid needs n >= 2 and dx > 0");
  WaveGrid g;
  g.dims = dims;
  g.n = n;
  g.x_min = x_min;
  g.dx = dx;
  g.hbar = hbar;
  g.amps.assign(dims == 1 ? n : n * n, cdouble(0));
  return g;
}

WaveGrid WaveGrid::gaussian(std::size_t n, double x_min, double dx, double x0, double p0,
                            double sigma, double hbar) {
  auto g = zeros(1, n, x_min, dx, hbar);
  for (std::size_t i = 0; i < n; ++i) {
    double x = g.x(i);
    g.amps[i] = std::exp(-(x - x0) * (x - x0) / (4 * sigma * sigma) + I * (p0 * x / hbar));
  }
  g.normalize();
  return g;
}

WaveGrid WaveGrid::gaussian_2d(std::size_t n, double x_min, double dx, double x0, double y0,
                               double px0, double py0, double sigma, double hbar) {
  auto g = zeros(2, n, x_min, dx, hbar);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double x = g.x(i), y = g.x(j);
      double r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
      g.amps[i * n + j] = std::exp(-r2 / (4 * sigma * sigma) + I * ((px0 * x + py0 * y) / hbar));
    }
  g.normalize();
  return g;
}

const char* variant_name(KernelVariant v) {
  switch (v) {
    case KernelVariant::LP: return "lp";
    case KernelVariant::Path1: return "path1";
    case KernelVariant::Path2: return "path2";
    case KernelVariant::TwoD_Path1: return "2d_path1";
    case KernelVariant::TwoD_Path2: return "2d_path2";
  }
  return "?";
}

cdouble GaussianKernel::operator()(double x, double xp) const {
  if (dof != 1) throw DomainError("1D evaluation of a 2D kernel");
  cdouble e = Axx(0, 0) * x * x + Ayy(0, 0) * xp * xp + Axy(0, 0) * x * xp + lx(0) * x +
              ly(0) * xp + scal;
  return prefactor * std::exp(I * e);
}

cdouble GaussianKernel::operator()(const Eigen::Vector2d& x, const Eigen::Vector2d& xp) const {
  if (dof != 2) throw DomainError("2D evaluation of a 1D kernel");
  Eigen::Vector2cd xc = x.cast<cdouble>(), xpc = xp.cast<cdouble>();
  cdouble e = xc.dot(Axx * xc) + xpc.dot(Ayy * xpc) + xc.dot(Axy * xpc) + lx.dot(xc) +
              ly.dot(xpc) + scal;
  return prefactor * std::exp(I * e);
}

GaussianKernel kernel_from_map(const SymplecticMap& map, double S, double hbar,
                               PrefactorConvention pc) {
  const int n = map.dof;
  // x - λ = A x' + B p',  p + Π = C x' + D p'
  Eigen::MatrixXd A = map.M.topLeftCorner(n, n), B = map.M.topRightCorner(n, n);
  Eigen::MatrixXd D = map.M.bottomRightCorner(n, n);
  const double detB = B.determinant();
  if (!(detB > 0) || (n == 1 && !(B(0, 0) > 0)))
    throw CausticError("kernel needs a positive G_qp block, det=" + std::to_string(detB), map.t);
  Eigen::MatrixXd Binv = B.inverse();
  Eigen::MatrixXd DBi = D * Binv, BiA = Binv * A;
  DBi = 0.5 * (DBi + DBi.transpose()).eval();
  BiA = 0.5 * (BiA + BiA.transpose()).eval();
  Eigen::VectorXd lam = map.shift.head(n), Pi = -map.shift.tail(n);

  // F = ½(x−λ)ᵀDB⁻¹(x−λ) − (x−λ)ᵀB⁻ᵀx' + ½x'ᵀB⁻¹Ax' − Πᵀ(x−λ) − S
  GaussianKernel k;
  k.dof = n;
  k.t = map.t;
  k.hbar = hbar;
  const double h = hbar;
  k.Axx = (0.5 * DBi / h).cast<cdouble>();
  k.Ayy = (0.5 * BiA / h).cast<cdouble>();
  k.Axy = (-Binv.transpose() / h).cast<cdouble>();
  k.lx = ((-DBi * lam - Pi) / h).cast<cdouble>();
  k.ly = (Binv * lam / h).cast<cdouble>();
  k.scal = (0.5 * lam.dot(DBi * lam) + Pi.dot(lam) - S) / h;
  if (n == 1) {
    double mod = 1.0 / std::sqrt(2 * kPi * h * detB);
    k.prefactor = pc == PrefactorConvention::Unitary ? mod * std::exp(-I * (kPi / 4)) : cdouble(mod);
  } else {
    double mod = 1.0 / (2 * kPi * h * std::sqrt(detB));
    k.prefactor = pc == PrefactorConvention::Unitary ? -I * mod : cdouble(mod);
  }
  return k;
}

static void check_kernel_time(double t, double valid_to) {
  if (!(t > 0)) throw DomainError("kernel at t<=0 is a delta distribution, not a Gaussian");
  if (t >= valid_to)
    throw CausticError("t=" + std::to_string(t) + " is at or beyond the caustic valid_to=" +
                           std::to_string(valid_to),
                       valid_to);
}

GaussianKernel kernel_build(const ParamTrajectory& traj, double t, KernelVariant variant,
                            PrefactorConvention pc) {
  switch (variant) {
    case KernelVariant::LP:
      if (traj.path != Path::Path1)
        throw DomainError("LP kernel is built from a path1 trajectory");
      if (!traj.coeffs().b.is_zero() || !traj.coeffs().c.is_zero())
        throw DomainError("LP kernel needs b = c = 0");
      break;
    case KernelVariant::Path1:
      if (traj.path != Path::Path1) throw DomainError("variant path1 needs a path1 trajectory");
      break;
    case KernelVariant::Path2:
      if (traj.path != Path::Path2) throw DomainError("variant path2 needs a path2 trajectory");
      break;
    default:
      throw DomainError("2D variant requested for a 1D trajectory");
  }
  check_kernel_time(t, traj.valid_to);
  auto map = assemble(traj, t);
  auto k = kernel_from_map(map, traj.at(t).S, traj.hbar, pc);
  k.valid_to = traj.valid_to;
  return k;
}

GaussianKernel kernel_build(const ParamTrajectory2D& traj, double t, KernelVariant variant,
                            PrefactorConvention pc) {
  Path want = variant == KernelVariant::TwoD_Path1 ? Path::Path1 : Path::Path2;
  if (variant != KernelVariant::TwoD_Path1 && variant != KernelVariant::TwoD_Path2)
    throw DomainError("1D variant requested for a 2D trajectory");
  if (traj.radial.path != want)
    throw DomainError(std::string("variant ") + variant_name(variant) +
                      " does not match the trajectory path");
  check_kernel_time(t, traj.valid_to());
  // det of the G_qp·R block cannot see the sign of G_qp
  if (!(radial_block(traj.radial, traj.radial.at(t))(0, 1) > 0))
    throw CausticError("kernel needs G_qp > 0", traj.valid_to());
  auto map = assemble_2d(traj, t);
  auto k = kernel_from_map(map, traj.at(t).S, traj.radial.hbar, pc);
  k.valid_to = traj.valid_to();
  return k;
}

namespace {

bool real_coefficients(const GaussianKernel& k) {
  auto small = [](cdouble v) { return std::abs(v.imag()) <= 1e-14 * (1 + std::abs(v.real())); };
  return small(k.Axx(0, 0)) && small(k.Ayy(0, 0)) && small(k.Axy(0, 0)) && small(k.lx(0)) &&
         small(k.ly(0)) && small(k.scal);
}

// Largest local x' frequency of the kernel phase over the grid.
double chirp_rate(const GaussianKernel& k, const WaveGrid& g) {
  const double C = k.Ayy(0, 0).real(), B = k.Axy(0, 0).real(), l = k.ly(0).real();
  const double a = g.x(0), b = g.x(g.n - 1);
  double m = 0;
  for (double x : {a, b})
    for (double xp : {a, b}) m = std::max(m, std::abs(2 * C * xp + B * x + l));
  return m;
}

WaveGrid apply_trapezoid_1d(const GaussianKernel& k, const WaveGrid& psi0) {
  const std::size_t n = psi0.n;
  std::vector<cdouble> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    double xp = psi0.x(j);
    v[j] = std::exp(I * (k.Ayy(0, 0) * xp * xp + k.ly(0) * xp)) * psi0.amps[j] *
           (trap_weight(j, n) * psi0.dx);
  }
  WaveGrid out = psi0;
  const cdouble B = k.Axy(0, 0);
  parallel_rows(n, [&](std::size_t i) {
    double x = psi0.x(i);
    cdouble acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += std::exp(I * (B * x * psi0.x(j))) * v[j];
    out.amps[i] = k.prefactor * std::exp(I * (k.Axx(0, 0) * x * x + k.lx(0) * x + k.scal)) * acc;
  });
  return out;
}

WaveGrid apply_trapezoid_2d(const GaussianKernel& k, const WaveGrid& psi0) {
  const std::size_t n = psi0.n, N = n * n;
  std::vector<cdouble> v(N);
  std::vector<Eigen::Vector2cd> xs(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::Vector2cd xp(psi0.x(i), psi0.x(j));
      xs[i * n + j] = xp;
      v[i * n + j] = std::exp(I * (xp.dot(k.Ayy * xp) + k.ly.dot(xp))) * psi0.amps[i * n + j] *
                     (trap_weight(i, n) * trap_weight(j, n) * psi0.dx * psi0.dx);
    }
  WaveGrid out = psi0;
  parallel_rows(N, [&](std::size_t p) {
    const Eigen::Vector2cd& x = xs[p];
    // xᵀ Axy x' = c0·x'_0 + c1·x'_1
    Eigen::RowVector2cd c = x.transpose() * k.Axy;
    cdouble acc = 0;
    for (std::size_t q = 0; q < N; ++q) acc += std::exp(I * (c(0) * xs[q](0) + c(1) * xs[q](1))) * v[q];
    out.amps[p] = k.prefactor * std::exp(I * (x.dot(k.Axx * x) + k.lx.dot(x) + k.scal)) * acc;
  });
  return out;
}

// ∫ e^{i(Cx'² + (Bx+l')x')} ψ0 dx' = e^{-iCy²} (ψ0 * e^{iCu²})(y), y = -(Bx+l')/2C, with the
// convolution done exactly on the Fourier series of ψ0.
WaveGrid apply_spectral_1d(const GaussianKernel& k, const WaveGrid& psi0) {
  const std::size_t n = psi0.n;
  const double C = k.Ayy(0, 0).real(), B = k.Axy(0, 0).real(), lp = k.ly(0).real();
  const double A = k.Axx(0, 0).real(), l = k.lx(0).real(), s = k.scal.real();
  const double L = n * psi0.dx;

  std::vector<cdouble> c(n);
  detail::FftPlan(n, -1).execute(psi0.amps.data(), c.data());
  const cdouble chirp_ft = std::sqrt(kPi / std::abs(C)) * std::exp(I * (C > 0 ? kPi / 4 : -kPi / 4));
  std::vector<double> kk(n);
  for (std::size_t m = 0; m < n; ++m) {
    long mm = m < (n + 1) / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n);
    kk[m] = 2 * kPi * mm / L;
    c[m] *= chirp_ft * std::exp(-I * (kk[m] * kk[m] / (4 * C))) / static_cast<double>(n);
  }
  WaveGrid out = psi0;
  const double lo = psi0.x(0) - 0.5 * psi0.dx, hi = psi0.x(n - 1) + 0.5 * psi0.dx;
  parallel_rows(n, [&](std::size_t i) {
    double x = psi0.x(i);
    double y = -(B * x + lp) / (2 * C);
    if (y < lo || y > hi) {
      out.amps[i] = 0;
      return;
    }
    cdouble F = 0;
    for (std::size_t m = 0; m < n; ++m) F += c[m] * std::exp(I * (kk[m] * (y - psi0.x_min)));
    out.amps[i] = k.prefactor * std::exp(I * (A * x * x + l * x + s - C * y * y)) * F;
  });
  return out;
}

}  // namespace

WaveGrid kernel_apply(const GaussianKernel& k, const WaveGrid& psi0, Quadrature q) {
  if (k.dof != psi0.dims)
    throw DomainError("kernel dof " + std::to_string(k.dof) + " does not match grid dims " +
                      std::to_string(psi0.dims));
  if (psi0.amps.size() != (psi0.dims == 1 ? psi0.n : psi0.n * psi0.n))
    throw DomainError("grid amplitude count does not match its geometry");
  if (k.dof == 2) {
    if (q == Quadrature::Spectral) throw UnsupportedError("spectral quadrature is 1D only");
    return apply_trapezoid_2d(k, psi0);
  }
  const bool spectral_ok = real_coefficients(k) && k.Ayy(0, 0).real() != 0.0;
  if (q == Quadrature::Spectral) {
    if (!spectral_ok) throw UnsupportedError("spectral quadrature needs a real chirp with G_qq != 0");
    return apply_spectral_1d(k, psi0);
  }
  if (q == Quadrature::Auto && spectral_ok && chirp_rate(k, psi0) * psi0.dx > kPi / 2)
    return apply_spectral_1d(k, psi0);
  return apply_trapezoid_1d(k, psi0);
}

double kernel_unitarity_residual(const GaussianKernel& k, const WaveGrid& psi, Quadrature q) {
  double n0 = std::sqrt(psi.norm2());
  double n1 = std::sqrt(kernel_apply(k, psi, q).norm2());
  return std::abs(n1 - n0) / n0;
}

}  // namespace liegate
