#pragma once

#include "liegate/maps.hpp"
#include "liegate/paramflow.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace liegate {

using cdouble = std::complex<double>;

// Uniform grid, same geometry on every axis.  2D amplitudes are row-major with
// x as the slow index: amps[ix * n + iy].
struct WaveGrid {
  int dims = 1;
  std::size_t n = 0;
  double x_min = 0;
  double dx = 1;
  std::vector<cdouble> amps;
  double hbar = 1;

  double x(std::size_t i) const { return x_min + dx * static_cast<double>(i); }
  std::size_t size() const { return amps.size(); }
  // Trapezoid ‖ψ‖².
  double norm2() const;
  void normalize();
  bool same_geometry(const WaveGrid& o) const;

  static WaveGrid zeros(int dims, std::size_t n, double x_min, double dx, double hbar = 1);
  // Normalized Gaussian with position standard deviation sigma and mean momentum p0.
  static WaveGrid gaussian(std::size_t n, double x_min, double dx, double x0, double p0,
                           double sigma, double hbar = 1);
  static WaveGrid gaussian_2d(std::size_t n, double x_min, double dx, double x0, double y0,
                              double px0, double py0, double sigma, double hbar = 1);
};

enum class KernelVariant { LP, Path1, Path2, TwoD_Path1, TwoD_Path2 };

const char* variant_name(KernelVariant v);

// G(x, x') = prefactor · exp(i·(xᵀAxx x + x'ᵀAyy x' + xᵀAxy x' + lxᵀx + lyᵀx' + scal)),
// x final and x' initial coordinates.
struct GaussianKernel {
  int dof = 1;
  double t = 0;
  double hbar = 1;
  cdouble prefactor;
  Eigen::MatrixXcd Axx, Ayy, Axy;
  Eigen::VectorXcd lx, ly;
  cdouble scal;
  double valid_from = 0;
  double valid_to = kInf;

  cdouble operator()(double x, double xp) const;
  cdouble operator()(const Eigen::Vector2d& x, const Eigen::Vector2d& xp) const;
};

enum class PrefactorConvention {
  Unitary,  // e^{-iπ/4}/√(2πħG_qp) in 1D, -i/(2πħG_qp) in 2D
  Literal   // real root without the i
};

// Kernel of the affine symplectic map z -> Mz + shift with action S.  Needs G_qp > 0.
GaussianKernel kernel_from_map(const SymplecticMap& map, double S, double hbar,
                               PrefactorConvention pc = PrefactorConvention::Unitary);

GaussianKernel kernel_build(const ParamTrajectory& traj, double t, KernelVariant variant,
                            PrefactorConvention pc = PrefactorConvention::Unitary);
GaussianKernel kernel_build(const ParamTrajectory2D& traj, double t, KernelVariant variant,
                            PrefactorConvention pc = PrefactorConvention::Unitary);

enum class Quadrature {
  Trapezoid,
  // 1D only: exact Fourier treatment of the x' chirp; for kernels too narrow
  // for the grid (t -> 0).
  Spectral,
  Auto
};

WaveGrid kernel_apply(const GaussianKernel& k, const WaveGrid& psi0,
                      Quadrature q = Quadrature::Auto);

// |‖Kψ‖ − ‖ψ‖| / ‖ψ‖
double kernel_unitarity_residual(const GaussianKernel& k, const WaveGrid& psi,
                                 Quadrature q = Quadrature::Auto);

// Worker count from LIEGATE_THREADS (default: hardware concurrency).
unsigned worker_threads();

// CSV: "x,re,im" (1D) or "x,y,re,im" (2D) with a header line.
void write_wavegrid_csv(const WaveGrid& g, const std::string& path);
WaveGrid read_wavegrid_csv(const std::string& path, double hbar = 1);
// Little-endian f64: n, x_min, dx, then re/im pairs.  Dimension follows from the pair count.
void write_wavegrid_bin(const WaveGrid& g, const std::string& path);
WaveGrid read_wavegrid_bin(const std::string& path, double hbar = 1);

}  // namespace liegate
