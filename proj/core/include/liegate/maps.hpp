#pragma once

#include "liegate/paramflow.hpp"

#include <Eigen/Dense>

#include <utility>

namespace liegate {

// z(t) = M z(0) + shift, ordering (x, p) or (x, y, p_x, p_y).
struct SymplecticMap {
  int dof = 1;
  double t = 0;
  Eigen::MatrixXd M;
  Eigen::VectorXd shift;
};

struct MapOptions {
  // The map formulas stay finite past the first caustic; callers may opt in.
  bool allow_past_caustic = false;
};

Eigen::MatrixXd symplectic_form(int dof);

SymplecticMap assemble_path1(const ParamTrajectory& traj, double t, MapOptions opt = {});
SymplecticMap assemble_path2(const ParamTrajectory& traj, double t, MapOptions opt = {});
// Dispatches on traj.path.
SymplecticMap assemble(const ParamTrajectory& traj, double t, MapOptions opt = {});
SymplecticMap assemble_2d(const ParamTrajectory2D& traj, double t, MapOptions opt = {});

// The 2×2 radial entries [[G_qq, G_qp], [G_pq, G_pp]] at a sample.
Eigen::Matrix2d radial_block(const ParamTrajectory& traj, const ParamSample& s);

struct SymplecticResidual {
  double det_residual = 0;   // |det M − 1|
  double form_residual = 0;  // ‖MᵀJM − J‖∞
};

SymplecticResidual check_symplectic(const SymplecticMap& map);

struct GaussianMoments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

GaussianMoments evolve_gaussian_moments(const SymplecticMap& map, const Eigen::VectorXd& mean,
                                        const Eigen::MatrixXd& cov);

}  // namespace liegate
