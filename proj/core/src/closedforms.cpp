#include "liegate/closedforms.hpp"

#include "liegate/errors.hpp"
#include "liegate/ode.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace liegate {

namespace {

OdeOptions tight(double tol) {
  OdeOptions o;
  o.rtol = tol;
  o.atol = tol;
  o.max_step_fraction = 1.0 / 16.0;
  return o;
}

// y = (C, C', T) in z with T' = scale / C².  Throws CausticError at the first zero of C.
OdeState mathieu_with_quadrature(double a, double q, double z_end, double scale, double tol,
                                 double t_per_z) {
  // Locate any zero of C first; the 1/C² quadrature cannot step across one.
  auto plain = [a, q](const OdeState& y, OdeState& dy, double z) {
    dy[0] = y[1];
    dy[1] = -(a - 2 * q * std::cos(2 * z)) * y[0];
  };
  auto probe = DenseSolution::solve(plain, {1.0, 0.0}, 0.0, z_end, tight(tol));
  double zc = probe.first_root([](double, const OdeState& y) { return y[0]; });
  if (zc <= z_end)
    throw CausticError("Mathieu cosine vanishes at t=" + std::to_string(zc * t_per_z) +
                           " before the requested time",
                       zc * t_per_z);
  auto rhs = [a, q, scale](const OdeState& y, OdeState& dy, double z) {
    dy[0] = y[1];
    dy[1] = -(a - 2 * q * std::cos(2 * z)) * y[0];
    dy[2] = scale / (y[0] * y[0]);
  };
  return integrate_to(rhs, {1.0, 0.0, 0.0}, 0.0, z_end, tight(tol));
}

}  // namespace

MathieuEval mathieu_c(double a, double q, double z, double tol) {
  MathieuEval r{a, q, z, 1.0, 0.0};
  if (z == 0.0) return r;
  const double az = std::abs(z);
  auto rhs = [a, q](const OdeState& y, OdeState& dy, double s) {
    dy[0] = y[1];
    dy[1] = -(a - 2 * q * std::cos(2 * s)) * y[0];
  };
  auto y = integrate_to(rhs, {1.0, 0.0}, 0.0, az, tight(tol));
  r.C = y[0];
  r.Cp = z < 0 ? -y[1] : y[1];  // C is even
  return r;
}

CoefficientSet1D ion_trap_coeffs(double m, double K, double k, double omega) {
  CoefficientSet1D c;
  c.a = TimeProfile::constant(1.0 / m);
  c.c = TimeProfile::sinusoid(k, omega, std::numbers::pi / 2, K);
  return c;
}

IonTrapParams ion_trap_params(double m, double K, double k, double omega, double t, double tol) {
  if (!(m > 0) || !(omega > 0)) throw DomainError("ion trap needs m > 0 and omega > 0");
  if (t < 0) throw DomainError("t must be non-negative");
  if (t == 0) return {};
  const double A = 4 * K / (m * omega * omega), q = -2 * k / (m * omega * omega);
  // ds = (2/ω) dz
  auto y = mathieu_with_quadrature(A, q, omega * t / 2, 2.0 / omega, tol, 2.0 / omega);
  return {-(omega / 2) * y[1] / y[0], std::log(y[0]), y[2]};
}

CoefficientSet1D kanai_caldirola_coeffs(double m, double tau, double w0, double F0, double F1,
                                        double w1) {
  CoefficientSet1D c;
  c.a = TimeProfile::exponential(1.0 / m, -1.0 / tau);
  c.c = TimeProfile::exponential(m * w0 * w0, 1.0 / tau);
  c.e = TimeProfile::exponential(-F0, 1.0 / tau) +
        TimeProfile::exponential(1.0, 1.0 / tau) * TimeProfile::sinusoid(-F1, w1);
  return c;
}

namespace {

struct KanaiCore {
  double m, tau, w0, F0, F1, w1, Om;
  bool under;

  // cosh/cos and sinh(Ωt)/Ω or sin(Ωt)/Ω
  void hyp(double t, double& ch, double& shO) const {
    if (under) {
      ch = std::cos(Om * t);
      shO = std::sin(Om * t) / Om;
    } else {
      ch = std::cosh(Om * t);
      shO = std::sinh(Om * t) / Om;
    }
  }

  void linear(double t, double& lam, double& Pi) const {
    double ch, shO;
    hyp(t, ch, shO);
    const double D = tau * tau * (w1 * w1 - w0 * w0) * (w1 * w1 - w0 * w0) + w1 * w1;
    const double E = std::exp(-t / (2 * tau)), Ep = std::exp(t / (2 * tau));
    lam = F0 / (m * w0 * w0) * (1 - E * ch - E / (2 * tau) * shO) +
          F1 / (m * D) *
              (tau * w1 * E * ch +
               w1 / 2 * (1 + 2 * tau * tau * w1 * w1 - 2 * tau * tau * w0 * w0) * E * shO -
               tau * w1 * std::cos(w1 * t) + tau * tau * (w0 * w0 - w1 * w1) * std::sin(w1 * t));
    Pi = -F0 * Ep * shO +
         F1 / D *
             (tau * tau * w1 * (w0 * w0 - w1 * w1) * Ep * (ch - Ep * std::cos(w1 * t)) +
              tau * w1 / 2 * (w0 * w0 + w1 * w1) * Ep * shO -
              tau * w1 * w1 * std::exp(t / tau) * std::sin(w1 * t));
  }
};

}  // namespace

KanaiParams kanai_caldirola_params(double m, double tau, double w0, double F0, double F1,
                                   double w1, double t) {
  if (!(m > 0) || !(tau > 0)) throw DomainError("Kanai-Caldirola needs m > 0 and tau > 0");
  if (w0 == 0) throw DomainError("Kanai-Caldirola needs w0 != 0");
  const double gap = 1 - 4 * tau * tau * w0 * w0;
  if (std::abs(gap) <= 1e-14) throw DomainError("critical damping excluded (4 tau^2 w0^2 = 1)");
  KanaiCore k{m, tau, w0, F0, F1, w1, std::sqrt(std::abs(gap)) / (2 * tau), gap < 0};

  KanaiParams r;
  r.t = t;
  r.Omega = k.Om;
  r.underdamped = k.under;
  r.Delta = m;
  r.gamma = -t / (2 * tau);
  double ch, shO;
  k.hyp(t, ch, shO);
  const double den = shO + 2 * tau * ch;
  if (!(den > 0))
    throw CausticError("Kanai-Caldirola u vanishes before t=" + std::to_string(t), t);
  r.alpha = 2 * tau * w0 * w0 * shO / den;
  r.phi = std::log(ch + shO / (2 * tau));
  r.beta = 2 * tau * shO / den;
  k.linear(t, r.lam, r.Pi);
  if (t > 0) {
    // Ṡ = −½aΠ² + ½cλ² + eλ
    auto L = [&](double s) {
      double lam, Pi;
      k.linear(s, lam, Pi);
      const double a = std::exp(-s / tau) / m, c = m * w0 * w0 * std::exp(s / tau);
      const double e = -std::exp(s / tau) * (F0 + F1 * std::sin(w1 * s));
      return -0.5 * a * Pi * Pi + 0.5 * c * lam * lam + e * lam;
    };
    r.S = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(L, 0.0, t, 15, 1e-13);
  }
  return r;
}

BSinParams bfield_sin_params(double m, double B0, double omega, double e, double t, double tol) {
  if (!(m > 0) || !(omega > 0)) throw DomainError("bfield_sin needs m > 0 and omega > 0");
  if (t < 0) throw DomainError("t must be non-negative");
  const double wc = e * B0 / m;
  BSinParams r;
  const double s = std::sin(omega * t / 2);
  r.theta = wc / omega * s * s;
  if (t == 0) return r;
  const double A = wc * wc / (8 * omega * omega), q = wc * wc / (16 * omega * omega);
  auto y = mathieu_with_quadrature(A, q, omega * t, 1.0 / omega, tol, 1.0 / omega);
  r.alpha = -omega * y[1] / y[0];
  r.phi = std::log(y[0]);
  r.beta = y[2];
  return r;
}

FieldProfile2D efield_const_b_field(const EfieldInputs& in) {
  FieldProfile2D f;
  f.m = TimeProfile::constant(in.m);
  f.B = TimeProfile::constant(in.B);
  f.K = TimeProfile::constant(in.K);
  f.Ex = TimeProfile::sinusoid(in.E1x, in.omega, 0.0, in.E0x);
  f.Ey = TimeProfile::sinusoid(in.E1y, in.omega, in.zeta, in.E0y);
  f.charge = in.e;
  return f;
}

EfieldConstants efield_constants(const EfieldInputs& in, Gamma4Form form) {
  if (!(in.m > 0)) throw DomainError("efield needs m > 0");
  EfieldConstants k;
  k.omega_c = in.e * in.B / in.m;
  const double wc2 = k.omega_c * k.omega_c;
  const double O2 = 4 * in.K / in.m + wc2;
  if (!(O2 > 0)) throw DomainError("efield needs 4K/m + omega_c^2 > 0");
  k.Omega = std::sqrt(O2);
  k.Gp2 = O2 + wc2;
  k.Gm2 = O2 - wc2;
  const double w2 = in.omega * in.omega;
  const double last = form == Gamma4Form::CrossTerm
                          ? 8 * w2 * (k.Omega + k.omega_c) * (k.Omega + k.omega_c)
                          : 8 * w2 * (O2 + wc2);
  k.Gamma4 = 16 * w2 * w2 + k.Gm2 * k.Gm2 - last;
  if (std::abs(k.Gm2) <= 1e-12 * k.Gp2)
    throw DomainError("resonant: Gamma_-^2 = Omega^2 - omega_c^2 = 4K/m vanishes");
  if (std::abs(k.Gamma4) <= 1e-12 * (16 * w2 * w2 + k.Gm2 * k.Gm2 + last))
    throw DomainError("resonant drive: Gamma^4 vanishes for this omega");
  return k;
}

std::vector<EfieldAddend> efield_addends(const EfieldInputs& in, Gamma4Form form) {
  const auto k = efield_constants(in, form);
  const double e = in.e, m = in.m, w = in.omega, wc = k.omega_c, O = k.Omega;
  const double G4 = k.Gamma4, Gp2 = k.Gp2, Gm2 = k.Gm2;
  const double E0x = in.E0x, E0y = in.E0y, E1x = in.E1x, E1y = in.E1y;
  const double cz = std::cos(in.zeta), sz = std::sin(in.zeta);
  const double w2 = w * w, w3 = w2 * w, wc2 = wc * wc, O2 = O * O;
  using C = EfieldComponent;
  using B = EfieldBasis;
  // Terms in table order.
  return {
      // λ_x
      {C::LamX, B::One, "E0x", -4 * e * E0x / (Gm2 * m)},
      {C::LamX, B::CosWt, "E1y", 16 * e * E1y * w * wc * cz / (G4 * m)},
      {C::LamX, B::SinWt, "E1x", 16 * e * E1x * w2 / (G4 * m)},
      {C::LamX, B::SinWt, "E1x", -4 * Gm2 * e * E1x / (G4 * m)},
      {C::LamX, B::SinWt, "E1y", -16 * e * E1y * w * wc * sz / (G4 * m)},
      {C::LamX, B::SinOSinC, "E0x", 4 * e * E0x * wc / (Gm2 * m * O)},
      {C::LamX, B::SinOSinC, "E1y", 32 * e * E1y * w3 * cz / (G4 * m * O)},
      {C::LamX, B::SinOSinC, "E1y", -8 * e * E1y * w * wc2 * cz / (G4 * m * O)},
      {C::LamX, B::SinOSinC, "E1y", -8 * e * E1y * w * O * cz / (G4 * m)},
      {C::LamX, B::CosOCosC, "E0x", 4 * e * E0x / (Gm2 * m)},
      {C::LamX, B::CosOCosC, "E1y", -16 * e * E1y * w * wc * cz / (G4 * m)},
      {C::LamX, B::CosOSinC, "E0y", -4 * e * E0y / (Gm2 * m)},
      {C::LamX, B::CosOSinC, "E1x", -16 * e * E1x * w * wc / (G4 * m)},
      {C::LamX, B::CosOSinC, "E1y", 16 * e * E1y * w2 * sz / (G4 * m)},
      {C::LamX, B::CosOSinC, "E1y", -4 * Gm2 * e * E1y * sz / (G4 * m)},
      {C::LamX, B::SinOCosC, "E0y", 4 * e * E0y * wc / (Gm2 * m * O)},
      {C::LamX, B::SinOCosC, "E1x", -32 * e * E1x * w3 / (G4 * m * O)},
      {C::LamX, B::SinOCosC, "E1x", 8 * Gp2 * e * E1x * w / (G4 * m * O)},
      {C::LamX, B::SinOCosC, "E1y", 16 * e * E1y * w2 * wc * sz / (G4 * m * O)},
      {C::LamX, B::SinOCosC, "E1y", 4 * Gm2 * e * E1y * wc * sz / (G4 * m * O)},
      // λ_y
      {C::LamY, B::One, "E0y", -4 * e * E0y / (Gm2 * m)},
      {C::LamY, B::CosWt, "E1x", -16 * e * E1x * w * wc / (G4 * m)},
      {C::LamY, B::CosWt, "E1y", 16 * e * E1y * w2 * sz / (G4 * m)},
      {C::LamY, B::CosWt, "E1y", -4 * Gm2 * e * E1y * sz / (G4 * m)},
      {C::LamY, B::SinWt, "E1y", 16 * e * E1y * w2 * cz / (G4 * m)},
      {C::LamY, B::SinWt, "E1y", -4 * Gm2 * e * E1y * cz / (G4 * m)},
      {C::LamY, B::SinOCosC, "E0x", -4 * e * E0x * wc / (Gm2 * m * O)},
      {C::LamY, B::SinOCosC, "E1y", -32 * e * E1y * w3 * cz / (G4 * m * O)},
      {C::LamY, B::SinOCosC, "E1y", 8 * e * E1y * w * wc2 * cz / (G4 * m * O)},
      {C::LamY, B::SinOCosC, "E1y", 8 * e * E1y * w * O * cz / (G4 * m)},
      {C::LamY, B::CosOSinC, "E0x", 4 * e * E0x / (Gm2 * m)},
      {C::LamY, B::CosOSinC, "E1y", -16 * e * E1y * w * wc * cz / (G4 * m)},
      {C::LamY, B::CosOCosC, "E0y", 4 * e * E0y / (Gm2 * m)},
      {C::LamY, B::CosOCosC, "E1x", 16 * e * E1x * w * wc / (G4 * m)},
      {C::LamY, B::CosOCosC, "E1y", -16 * e * E1y * w2 * sz / (G4 * m)},
      {C::LamY, B::CosOCosC, "E1y", 4 * Gm2 * e * E1y * sz / (G4 * m)},
      {C::LamY, B::SinOSinC, "E0y", 4 * e * E0y * wc / (Gm2 * m * O)},
      {C::LamY, B::SinOSinC, "E1x", -32 * e * E1x * w3 / (G4 * m * O)},
      {C::LamY, B::SinOSinC, "E1x", 8 * Gp2 * e * E1x * w / (G4 * m * O)},
      {C::LamY, B::SinOSinC, "E1y", 16 * e * E1y * w2 * wc * sz / (G4 * m * O)},
      {C::LamY, B::SinOSinC, "E1y", 4 * Gm2 * e * E1y * wc * sz / (G4 * m * O)},
      // Π_x
      {C::PiX, B::One, "E0y", 2 * e * E0y * wc / Gm2},
      {C::PiX, B::SinWt, "E1y", 8 * e * E1y * w2 * wc * cz / G4},
      {C::PiX, B::SinWt, "E1y", 2 * Gm2 * e * E1y * wc * cz / G4},
      {C::PiX, B::CosWt, "E1x", -16 * e * E1x * w3 / G4},
      {C::PiX, B::CosWt, "E1x", 4 * Gp2 * e * E1x * w / G4},
      {C::PiX, B::CosWt, "E1y", 8 * e * E1y * w2 * wc * sz / G4},
      {C::PiX, B::CosWt, "E1y", 2 * Gm2 * e * E1y * wc * sz / G4},
      {C::PiX, B::CosOSinC, "E0x", -2 * e * E0x * wc / Gm2},
      {C::PiX, B::CosOSinC, "E1y", -16 * e * E1y * w3 * cz / G4},
      {C::PiX, B::CosOSinC, "E1y", 4 * e * E1y * w * O2 * cz / G4},
      {C::PiX, B::CosOSinC, "E1y", 4 * e * E1y * w * wc2 * cz / G4},
      {C::PiX, B::SinOCosC, "E0x", 2 * e * E0x * O / Gm2},
      {C::PiX, B::SinOCosC, "E1y", -8 * e * E1y * w * O * wc * cz / G4},
      {C::PiX, B::SinOSinC, "E0y", -2 * e * E0y * O / Gm2},
      {C::PiX, B::SinOSinC, "E1x", -8 * e * E1x * w * O * wc / G4},
      {C::PiX, B::SinOSinC, "E1y", 8 * e * E1y * w2 * O * sz / G4},
      {C::PiX, B::SinOSinC, "E1y", -2 * Gm2 * e * E1y * O * sz / G4},
      {C::PiX, B::CosOCosC, "E0y", -2 * e * E0y * wc / Gm2},
      {C::PiX, B::CosOCosC, "E1x", 16 * e * E1x * w3 / G4},
      {C::PiX, B::CosOCosC, "E1x", -4 * Gp2 * e * E1x * w / G4},
      {C::PiX, B::CosOCosC, "E1y", -8 * e * E1y * w2 * wc * sz / G4},
      {C::PiX, B::CosOCosC, "E1y", -2 * Gm2 * e * E1y * wc * sz / G4},
      // Π_y
      {C::PiY, B::One, "E0x", -2 * e * E0x * wc / Gm2},
      {C::PiY, B::SinWt, "E1x", -8 * e * E1x * w2 * wc / G4},
      {C::PiY, B::SinWt, "E1x", -2 * Gm2 * e * E1x * wc / G4},
      {C::PiY, B::SinWt, "E1y", 16 * e * E1y * w3 * sz / G4},
      {C::PiY, B::SinWt, "E1y", -4 * e * E1y * w * O2 * sz / G4},
      {C::PiY, B::SinWt, "E1y", -4 * e * E1y * w * wc2 * sz / G4},
      {C::PiY, B::CosWt, "E1y", 4 * Gp2 * e * E1y * w * cz / G4},
      {C::PiY, B::CosWt, "E1y", -16 * e * E1y * w3 * cz / G4},
      {C::PiY, B::CosOCosC, "E0x", 2 * e * E0x * wc / Gm2},
      {C::PiY, B::CosOCosC, "E1y", 16 * e * E1y * w3 * cz / G4},
      {C::PiY, B::CosOCosC, "E1y", -4 * e * E1y * w * O2 * cz / G4},
      {C::PiY, B::CosOCosC, "E1y", -4 * e * E1y * w * wc2 * cz / G4},
      {C::PiY, B::SinOSinC, "E0x", 2 * e * E0x * O / Gm2},
      {C::PiY, B::SinOSinC, "E1y", -8 * e * E1y * w * O * wc * cz / G4},
      {C::PiY, B::SinOCosC, "E0y", 2 * e * E0y * O / Gm2},
      {C::PiY, B::SinOCosC, "E1x", 8 * e * E1x * w * O * wc / G4},
      {C::PiY, B::SinOCosC, "E1y", -8 * e * E1y * w2 * O * sz / G4},
      {C::PiY, B::SinOCosC, "E1y", 2 * Gm2 * e * E1y * O * sz / G4},
      {C::PiY, B::CosOSinC, "E0y", -2 * e * E0y * wc / Gm2},
      {C::PiY, B::CosOSinC, "E1x", 16 * e * E1x * w3 / G4},
      {C::PiY, B::CosOSinC, "E1x", -4 * Gp2 * e * E1x * w / G4},
      {C::PiY, B::CosOSinC, "E1y", -8 * e * E1y * w2 * wc * sz / G4},
      {C::PiY, B::CosOSinC, "E1y", -2 * Gm2 * e * E1y * wc * sz / G4},
  };
}

double efield_basis(EfieldBasis b, const EfieldConstants& k, double omega, double t) {
  const double sO = std::sin(t * k.Omega / 2), cO = std::cos(t * k.Omega / 2);
  const double sC = std::sin(t * k.omega_c / 2), cC = std::cos(t * k.omega_c / 2);
  switch (b) {
    case EfieldBasis::One: return 1.0;
    case EfieldBasis::SinWt: return std::sin(omega * t);
    case EfieldBasis::CosWt: return std::cos(omega * t);
    case EfieldBasis::SinOSinC: return sO * sC;
    case EfieldBasis::SinOCosC: return sO * cC;
    case EfieldBasis::CosOSinC: return cO * sC;
    case EfieldBasis::CosOCosC: return cO * cC;
  }
  return 0.0;
}

EfieldParams efield_const_b_params(const EfieldInputs& in, double t, Gamma4Form form) {
  EfieldParams r;
  r.k = efield_constants(in, form);
  for (const auto& a : efield_addends(in, form)) {
    const double v = a.coef * efield_basis(a.basis, r.k, in.omega, t);
    switch (a.component) {
      case EfieldComponent::LamX: r.lam_x += v; break;
      case EfieldComponent::LamY: r.lam_y += v; break;
      case EfieldComponent::PiX: r.Pi_x += v; break;
      case EfieldComponent::PiY: r.Pi_y += v; break;
    }
  }
  r.theta = r.k.omega_c * t / 2;
  r.phi = r.k.Omega * t / 2;
  r.Delta = in.m * r.k.Omega / 2;
  return r;
}

}  // namespace liegate
