#include "liegate/maps.hpp"

#include "liegate/errors.hpp"

#include <cmath>
#include <string>

namespace liegate {

namespace {

void check_window(double t, double valid_to, double t_end, const MapOptions& opt) {
  if (t < 0 || t > t_end * (1 + 1e-12))
    throw DomainError("t=" + std::to_string(t) + " outside solved interval [0, " +
                      std::to_string(t_end) + "]");
  if (!opt.allow_past_caustic && t > valid_to)
    throw CausticError("t=" + std::to_string(t) + " is beyond the first caustic at valid_to=" +
                           std::to_string(valid_to),
                       valid_to);
}

}  // namespace

Eigen::MatrixXd symplectic_form(int dof) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * dof, 2 * dof);
  J.topRightCorner(dof, dof).setIdentity();
  J.bottomLeftCorner(dof, dof) = -Eigen::MatrixXd::Identity(dof, dof);
  return J;
}

Eigen::Matrix2d radial_block(const ParamTrajectory& traj, const ParamSample& s) {
  Eigen::Matrix2d G;
  if (traj.path == Path::Path1) {
    // e^B [[u, w], [u̇/a, ẇ/a]]; G_qq = e^{φ+γ}, G_qp = e^{φ+γ}β/Δ, ...
    const double eb = std::exp(s.Bint);
    G << eb * s.u, eb * s.w, eb * s.udot / s.a, eb * s.wdot / s.a;
  } else {
    const double eg = std::exp(s.gamma), sn = std::sin(s.phi), cs = std::cos(s.phi);
    const double Dl = traj.Delta;
    G << eg * (s.D * cs - s.N * sn), eg / Dl * (s.N2 * sn - s.D2 * cs),
        -Dl / eg * (s.N * cs + s.D * sn), (s.D2 * sn + s.N2 * cs) / eg;
  }
  return G;
}

static SymplecticMap assemble_1d(const ParamTrajectory& traj, double t, MapOptions opt) {
  check_window(t, traj.valid_to, traj.t_end, opt);
  SymplecticMap m;
  m.dof = 1;
  m.t = t;
  if (t == 0.0) {
    m.M = Eigen::Matrix2d::Identity();
    m.shift = Eigen::Vector2d::Zero();
    return m;
  }
  auto s = traj.at(t);
  m.M = radial_block(traj, s);
  m.shift = Eigen::Vector2d(s.lam, -s.Pi);
  return m;
}

SymplecticMap assemble_path1(const ParamTrajectory& traj, double t, MapOptions opt) {
  if (traj.path != Path::Path1) throw DomainError("assemble_path1 needs a path1 trajectory");
  return assemble_1d(traj, t, opt);
}

SymplecticMap assemble_path2(const ParamTrajectory& traj, double t, MapOptions opt) {
  if (traj.path != Path::Path2) throw DomainError("assemble_path2 needs a path2 trajectory");
  return assemble_1d(traj, t, opt);
}

SymplecticMap assemble(const ParamTrajectory& traj, double t, MapOptions opt) {
  return assemble_1d(traj, t, opt);
}

SymplecticMap assemble_2d(const ParamTrajectory2D& traj, double t, MapOptions opt) {
  check_window(t, traj.valid_to(), traj.radial.t_end, opt);
  SymplecticMap m;
  m.dof = 2;
  m.t = t;
  if (t == 0.0) {
    m.M = Eigen::Matrix4d::Identity();
    m.shift = Eigen::Vector4d::Zero();
    return m;
  }
  auto G = radial_block(traj.radial, traj.radial.at(t));
  auto s = traj.at(t);
  Eigen::Matrix2d R;
  R << std::cos(s.theta), -std::sin(s.theta), std::sin(s.theta), std::cos(s.theta);
  m.M.resize(4, 4);
  m.M << G(0, 0) * R, G(0, 1) * R, G(1, 0) * R, G(1, 1) * R;
  m.shift = Eigen::Vector4d(s.lam_x, s.lam_y, -s.Pi_x, -s.Pi_y);
  return m;
}

SymplecticResidual check_symplectic(const SymplecticMap& map) {
  const auto J = symplectic_form(map.dof);
  SymplecticResidual r;
  r.det_residual = std::abs(map.M.determinant() - 1.0);
  r.form_residual = (map.M.transpose() * J * map.M - J).cwiseAbs().maxCoeff();
  return r;
}

GaussianMoments evolve_gaussian_moments(const SymplecticMap& map, const Eigen::VectorXd& mean,
                                        const Eigen::MatrixXd& cov) {
  const auto n = map.M.rows();
  if (mean.size() != n || cov.rows() != n || cov.cols() != n)
    throw DomainError("moment dimensions do not match the map");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + cov.cwiseAbs().maxCoeff()))
    throw DomainError("covariance must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw DomainError("covariance must be positive definite");
  return {map.M * mean + map.shift, map.M * cov * map.M.transpose()};
}

}  // namespace liegate
