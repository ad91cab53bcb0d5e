#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace liegate {

enum class ProfileKind { Constant, Sinusoid, Exponential, Tabulated, Composite };

// Immutable scalar function of time with its first derivative.  Copies share
// the underlying node.
class TimeProfile {
public:
  struct Node;

  TimeProfile();  // constant 0

  static TimeProfile constant(double v);
  // amplitude·sin(omega·t + phase) + offset
  static TimeProfile sinusoid(double amplitude, double omega, double phase = 0.0,
                              double offset = 0.0);
  // prefactor·exp(rate·t)
  static TimeProfile exponential(double prefactor, double rate);
  // Cubic through the knots (not-a-knot ends); no extrapolation.
  static TimeProfile tabulated(std::vector<std::pair<double, double>> knots);

  double value(double t) const;
  double derivative(double t) const;
  double operator()(double t) const { return value(t); }

  ProfileKind kind() const;
  // Domain of definition; ±inf unless a tabulated node is involved.
  double t_min() const;
  double t_max() const;
  bool is_constant() const;
  // True for constant 0.
  bool is_zero() const;
  std::string describe() const;

  TimeProfile operator+(const TimeProfile& o) const;
  TimeProfile operator-(const TimeProfile& o) const;
  TimeProfile operator*(const TimeProfile& o) const;
  TimeProfile operator*(double k) const;
  TimeProfile reciprocal() const;
  // t -> f(t + t0)
  TimeProfile shifted(double t0) const;

private:
  explicit TimeProfile(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline TimeProfile operator*(double k, const TimeProfile& p) { return p * k; }

// H = ½a p² + ½b(xp+px) + ½c x² + d p + e x + g
struct CoefficientSet1D {
  TimeProfile a = TimeProfile::constant(1.0);
  TimeProfile b, c, d, e, g;
  double hbar = 1.0;

  CoefficientSet1D shifted(double t0) const;
  // Domain shared by all six profiles.
  double t_max() const;
};

// H = |p|²/2m + ½(K + e²B²/4m)|r|² + (eB/2m) L_z + e(E_x x + E_y y)
struct FieldProfile2D {
  TimeProfile m = TimeProfile::constant(1.0);
  TimeProfile B, K, Ex, Ey;
  double charge = 1.0;
  double hbar = 1.0;

  FieldProfile2D shifted(double t0) const;
  double t_max() const;
};

struct Reduced2D {
  CoefficientSet1D radial;
  TimeProfile theta_rate;  // eB/2m
};

Reduced2D reduce_2d(const FieldProfile2D& f);

// Throws DomainError if the profile is not strictly positive on a sampled [t0, t1].
void require_positive(const TimeProfile& p, double t0, double t1, const std::string& name,
                      int samples = 257);

}  // namespace liegate
