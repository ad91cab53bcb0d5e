#pragma once

#include "liegate/coeffs.hpp"
#include "liegate/greens.hpp"
#include "liegate/ode.hpp"

#include <Eigen/Dense>

#include <vector>

namespace liegate::oracle {

// Positions then momenta.
struct ClassicalState {
  double t = 0;
  Eigen::VectorXd z;
};

class ClassicalTrajectory {
public:
  int dof = 1;
  std::vector<ClassicalState> samples;  // uniform grid on [0, t_end]
  ClassicalState at(double t) const;

private:
  friend class FlowAccess;
  DenseSolution sol_;
};

// Hamilton's equations of the full quadratic H, from z0 at t = 0.
ClassicalTrajectory classical_flow(const CoefficientSet1D& c, const Eigen::VectorXd& z0,
                                   double t_end, double tol, int n_samples = 101);
ClassicalTrajectory classical_flow(const FieldProfile2D& f, const Eigen::VectorXd& z0,
                                   double t_end, double tol, int n_samples = 101);

struct FundamentalMatrix {
  double t = 0;
  Eigen::MatrixXd Phi;
};

class FundamentalTrajectory {
public:
  int dof = 1;
  std::vector<FundamentalMatrix> samples;
  FundamentalMatrix at(double t) const;

private:
  friend class FlowAccess;
  DenseSolution sol_;
};

// Φ̇ = AΦ, Φ(0) = I; A = [[b, a], [−c, −b]] in 1D and J·Hess(H) in 2D.
FundamentalTrajectory fundamental_matrix(const CoefficientSet1D& c, double t_end, double tol,
                                         int n_samples = 101);
FundamentalTrajectory fundamental_matrix(const FieldProfile2D& f, double t_end, double tol,
                                         int n_samples = 101);

// Strang split-step with midpoint coefficients.  Needs b ≡ 0.
WaveGrid split_step_evolve(const CoefficientSet1D& c, const WaveGrid& psi0, double t_end,
                           int n_steps);

// 2D with E ≡ 0: radial split-step on each axis in the rotating frame, then the rotation by
// θ = ∫eB/2m applied to the Fourier interpolant.
WaveGrid split_step_evolve(const FieldProfile2D& f, const WaveGrid& psi0, double t_end,
                           int n_steps);

// |⟨ψ₁|ψ₂⟩| / (‖ψ₁‖‖ψ₂‖)
double fidelity(const WaveGrid& psi1, const WaveGrid& psi2);

// ⟨x⟩, ⟨p⟩ and the symmetrized covariance, momenta from the spectral derivative.  1D only.
struct GridMoments {
  Eigen::Vector2d mean;
  Eigen::Matrix2d cov;
};

GridMoments grid_moments(const WaveGrid& psi);

}  // namespace liegate::oracle
