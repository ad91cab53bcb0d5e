#pragma once

#include "liegate/coeffs.hpp"

#include <string>
#include <vector>

namespace liegate {

// y'' + (a − 2q cos 2z) y = 0, y(0) = 1, y'(0) = 0.
struct MathieuEval {
  double a = 0, q = 0, z = 0;
  double C = 1, Cp = 0;
};

MathieuEval mathieu_c(double a, double q, double z, double tol = 1e-12);

// Paul trap: a = 1/m, c = K + k cos ωt.
CoefficientSet1D ion_trap_coeffs(double m, double K, double k, double omega);

struct IonTrapParams {
  double alpha = 0, phi = 0, beta = 0;
};

// u = C(4K/mω², −2k/mω², ωt/2); α = −(ω/2)C'/C, φ = ln C, β = ∫ds/C².
IonTrapParams ion_trap_params(double m, double K, double k, double omega, double t,
                              double tol = 1e-12);

// Mass growing as m·e^{t/τ}, stiffness mω₀², driven by F₀ + F₁ sin ω₁t:
// a = e^{−t/τ}/m, c = mω₀²e^{t/τ}, e = −e^{t/τ}(F₀ + F₁ sin ω₁t).
CoefficientSet1D kanai_caldirola_coeffs(double m, double tau, double w0, double F0, double F1,
                                        double w1);

struct KanaiParams {
  double t = 0;
  double lam = 0, Pi = 0, S = 0;
  double gamma = 0, alpha = 0, phi = 0, beta = 0;
  double Delta = 1;
  double Omega = 0;
  bool underdamped = false;
};

KanaiParams kanai_caldirola_params(double m, double tau, double w0, double F0, double F1,
                                   double w1, double t);

struct BSinParams {
  double alpha = 0, phi = 0, beta = 0, theta = 0;
};

// B = B₀ sin ωt, K = 0.  Radial u = C(ω_c²/8ω², ω_c²/16ω², ωt), θ = (ω_c/ω) sin²(ωt/2).
BSinParams bfield_sin_params(double m, double B0, double omega, double e, double t,
                             double tol = 1e-12);

// Constant B and K with E = (E0x + E1x sin ωt, E0y + E1y sin(ωt + ζ)).
struct EfieldInputs {
  double m = 1, e = 1, B = 0, K = 0;
  double E0x = 0, E0y = 0, E1x = 0, E1y = 0;
  double omega = 1, zeta = 0;
};

FieldProfile2D efield_const_b_field(const EfieldInputs& in);

enum class Gamma4Form {
  CrossTerm,        // 16ω⁴ + (Ω²−ω_c²)² − 8ω²(Ω+ω_c)²
  ResonanceProduct  // 16ω⁴ + (Ω²−ω_c²)² − 8ω²(Ω²+ω_c²) = (4ω² − (Ω+ω_c)²)(4ω² − (Ω−ω_c)²)
};

enum class EfieldComponent { LamX, LamY, PiX, PiY };
enum class EfieldBasis { One, SinWt, CosWt, SinOSinC, SinOCosC, CosOSinC, CosOCosC };

struct EfieldAddend {
  EfieldComponent component;
  EfieldBasis basis;
  const char* source;  // "E0x", "E0y", "E1x" or "E1y"
  double coef;
};

struct EfieldConstants {
  double omega_c = 0, Omega = 0, Gamma4 = 0, Gp2 = 0, Gm2 = 0;
};

EfieldConstants efield_constants(const EfieldInputs& in, Gamma4Form form = Gamma4Form::CrossTerm);
std::vector<EfieldAddend> efield_addends(const EfieldInputs& in,
                                         Gamma4Form form = Gamma4Form::CrossTerm);
double efield_basis(EfieldBasis b, const EfieldConstants& k, double omega, double t);

struct EfieldParams {
  double lam_x = 0, lam_y = 0, Pi_x = 0, Pi_y = 0;
  double theta = 0, phi = 0, Delta = 0;
  EfieldConstants k;
};

EfieldParams efield_const_b_params(const EfieldInputs& in, double t,
                                   Gamma4Form form = Gamma4Form::CrossTerm);

}  // namespace liegate
