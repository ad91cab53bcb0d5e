#pragma once

#include "liegate/closedforms.hpp"
#include "liegate/coeffs.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using liegate::CoefficientSet1D;
using liegate::TimeProfile;

inline constexpr double pi = std::numbers::pi;

inline TimeProfile wobble(std::mt19937_64& rng, double lo, double hi, double amp) {
  std::uniform_real_distribution<double> off(lo, hi), am(-amp, amp), w(0.3, 3.0),
      ph(0.0, 2 * pi);
  double o = off(rng), A = am(rng), om = w(rng), p = ph(rng);
  return TimeProfile::sinusoid(A, om, p, o);
}

// Smooth coefficients with a, c > 0 on any interval.
inline CoefficientSet1D random_coeffs(std::uint64_t seed, bool with_b = true) {
  std::mt19937_64 rng(seed);
  CoefficientSet1D c;
  c.a = wobble(rng, 0.7, 1.4, 0.25);
  c.b = with_b ? wobble(rng, -0.2, 0.2, 0.2) : TimeProfile();
  c.c = wobble(rng, 0.5, 1.8, 0.3);
  c.d = wobble(rng, -0.5, 0.5, 0.5);
  c.e = wobble(rng, -0.5, 0.5, 0.5);
  c.g = wobble(rng, -0.5, 0.5, 0.5);
  return c;
}

inline CoefficientSet1D free_particle(double m = 1) {
  CoefficientSet1D c;
  c.a = TimeProfile::constant(1 / m);
  return c;
}

inline CoefficientSet1D sho(double m = 1, double w = 1) {
  CoefficientSet1D c;
  c.a = TimeProfile::constant(1 / m);
  c.c = TimeProfile::constant(m * w * w);
  return c;
}

// Linear potential −f·x.
inline CoefficientSet1D lp(double f = 1, double m = 1) {
  CoefficientSet1D c = free_particle(m);
  c.e = TimeProfile::constant(-f);
  return c;
}

struct NamedSystem {
  std::string name;
  CoefficientSet1D c;
  double t_end;
};

// The four worked 1D systems.
inline std::vector<NamedSystem> closed_form_systems() {
  return {
      {"lp", lp(1.0), 2.0},
      {"iontrap", liegate::ion_trap_coeffs(1.0, 1.0, 0.3, 5.0), 1.2},
      {"kanai", liegate::kanai_caldirola_coeffs(1.0, 1.0, 0.25, 0.3, 0.2, 1.1), 2.0},
      {"kanai_under", liegate::kanai_caldirola_coeffs(1.0, 1.0, 2.0, 0.3, 0.2, 1.1), 0.5},
  };
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace testsupport
