#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace liegate {

using OdeState = std::vector<double>;
using OdeRhs = std::function<void(const OdeState& y, OdeState& dydt, double t)>;

enum class OdeMethod {
  Dopri5,     // Dormand–Prince 5(4)
  Fehlberg78  // Runge–Kutta–Fehlberg 7(8); the oracles use it to stay independent
};

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-10;
  // Cap on the step as a fraction of the interval so sign changes are not skipped.
  double max_step_fraction = 1.0 / 64.0;
  long max_steps = 2'000'000;
  OdeMethod method = OdeMethod::Dopri5;
};

// Adaptive solution kept as accepted-step nodes.  at(t) re-integrates
// from the nearest node at or before t, so any requested time is hit exactly.
class DenseSolution {
public:
  static DenseSolution solve(OdeRhs rhs, OdeState y0, double t0, double t1,
                             const OdeOptions& opt, std::vector<double> stops = {});

  OdeState at(double t) const;

  double t0() const { return ts_.front(); }
  double t1() const { return ts_.back(); }
  const std::vector<double>& node_times() const { return ts_; }
  const std::vector<OdeState>& node_states() const { return ys_; }

  // First t in (t0, t1] where f changes sign (or is zero at a node), refined by
  // bracketing to relative accuracy rel_tol.  +inf when there is none.
  double first_root(const std::function<double(double, const OdeState&)>& f,
                    double rel_tol = 1e-12) const;

private:
  std::shared_ptr<const OdeRhs> rhs_;
  OdeOptions opt_;
  std::vector<double> ts_;
  std::vector<OdeState> ys_;
};

// Integrates y from t0 to t1 and returns y(t1) only.
OdeState integrate_to(const OdeRhs& rhs, OdeState y0, double t0, double t1,
                      const OdeOptions& opt);

}  // namespace liegate
