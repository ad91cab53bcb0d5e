#pragma once

#include "liegate/coeffs.hpp"
#include "liegate/errors.hpp"
#include "liegate/ode.hpp"

#include <memory>
#include <vector>

namespace liegate {

enum class Path { Path1, Path2 };

const char* path_name(Path p);

struct LinearSample {
  double t = 0, S = 0, lam = 0, Pi = 0;
};

// One time slice.  alpha, phi, vphi, beta are NaN past valid_to.
struct ParamSample {
  double t = 0;
  double S = 0, lam = 0, Pi = 0;
  double gamma = 0, alpha = 0, phi = 0, vphi = 0, beta = 0;
  double u = 1, udot = 0;
  // Linear solutions behind the parameters; these stay finite through caustics.
  double w = 0, wdot = 0, Bint = 0;   // Path1: second solution and ∫b
  double N = 0, D = 1, N2 = 1, D2 = 0;  // Path2: projective pairs
  double a = 1;                        // a(t), needed for the Path1 momentum row
  bool in_window = true;
};

class LinearTrajectory {
public:
  LinearSample at(double t) const;
  double t_end() const { return sol_.t1(); }
  std::vector<LinearSample> samples;

private:
  friend LinearTrajectory solve_linear_translation(const CoefficientSet1D&, double, double, int);
  DenseSolution sol_;
};

class ParamTrajectory {
public:
  Path path = Path::Path1;
  double Delta = 1;
  double valid_to = kInf;
  double t_end = 0;
  double hbar = 1;
  bool reduced = false;  // Path2 shortcut taken (b - γ̇ vanishes)
  std::vector<double> t_grid;
  std::vector<ParamSample> samples;

  ParamSample at(double t) const;
  const CoefficientSet1D& coeffs() const { return coeffs_; }

private:
  friend ParamTrajectory solve_path1(const CoefficientSet1D&, double, double, int);
  friend ParamTrajectory solve_path2(const CoefficientSet1D&, double, double, int);
  ParamSample make_sample(double t, const OdeState& y) const;
  CoefficientSet1D coeffs_;
  DenseSolution sol_;
};

struct Sample2D {
  double t = 0, theta = 0, lam_x = 0, lam_y = 0, Pi_x = 0, Pi_y = 0, S = 0;
};

class ParamTrajectory2D {
public:
  ParamTrajectory radial;
  std::vector<double> t_grid;
  std::vector<Sample2D> samples;

  Sample2D at(double t) const;
  double valid_to() const { return radial.valid_to; }
  const FieldProfile2D& field() const { return field_; }

private:
  friend ParamTrajectory2D solve_2d(const FieldProfile2D&, double, double, Path, int);
  FieldProfile2D field_;
  DenseSolution sol_;
};

// Π̇ = cλ − bΠ + e, λ̇ = bλ − aΠ + d, Ṡ = H(λ, −Π) + λ̇Π, all zero at t = 0.
LinearTrajectory solve_linear_translation(const CoefficientSet1D& c, double t_end, double tol,
                                          int n_samples = 101);

// Riccati route through ü + (2b − ȧ/a)u̇ + ac·u = 0; Δ = 1/a(0).
ParamTrajectory solve_path1(const CoefficientSet1D& c, double t_end, double tol,
                            int n_samples = 101);

// Arnold-rotation route; needs a, c > 0.  Δ = √(c(0)/a(0)).
ParamTrajectory solve_path2(const CoefficientSet1D& c, double t_end, double tol,
                            int n_samples = 101);

ParamTrajectory solve(const CoefficientSet1D& c, Path path, double t_end, double tol,
                      int n_samples = 101);

ParamTrajectory2D solve_2d(const FieldProfile2D& f, double t_end, double tol, Path path,
                           int n_samples = 101);

double caustic_window(const ParamTrajectory& traj);

}  // namespace liegate
