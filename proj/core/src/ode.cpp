#include "liegate/ode.hpp"

#include "liegate/errors.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace liegate {

namespace odeint = boost::numeric::odeint;

namespace {

using Dopri = odeint::runge_kutta_dopri5<OdeState>;
using Rkf78 = odeint::runge_kutta_fehlberg78<OdeState>;

struct Sys {
  const OdeRhs* f;
  void operator()(const OdeState& y, OdeState& dy, double t) const { (*f)(y, dy, t); }
};

bool finite(const OdeState& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

// Steps y from t to t_end exactly; calls on_step after every accepted step.
template <class Stepper, class OnStep>
void march_with(const OdeRhs& f, OdeState& y, double t, double t_end, const OdeOptions& opt,
                double max_dt, long& steps, OnStep&& on_step) {
  if (t_end <= t) return;
  auto stepper = odeint::make_controlled(opt.atol, opt.rtol, max_dt, Stepper());
  Sys sys{&f};
  double dt = std::min(max_dt, (t_end - t) / 8.0);
  double floor = 1e-14 * std::max(1.0, std::abs(t_end));
  while (t < t_end) {
    bool last = false;
    if (t + dt >= t_end) {
      dt = t_end - t;
      last = true;
    }
    double t_try = t;
    odeint::controlled_step_result r;
    try {
      r = stepper.try_step(sys, y, t_try, dt);
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception& ex) {
      throw IntegrationError(std::string("integrator failed: ") + ex.what(), t);
    }
    if (r == odeint::success) {
      if (!finite(y)) throw IntegrationError("non-finite state at t=" + std::to_string(t_try), t);
      t = last ? t_end : t_try;
      if (++steps > opt.max_steps)
        throw IntegrationError("step budget exhausted at t=" + std::to_string(t), t);
      on_step(t, y);
      dt = std::min(dt, max_dt);
    } else if (dt < floor) {
      throw IntegrationError("step size underflow at t=" + std::to_string(t), t);
    }
  }
}

template <class OnStep>
void march(const OdeRhs& f, OdeState& y, double t, double t_end, const OdeOptions& opt,
           double max_dt, long& steps, OnStep&& on_step) {
  if (opt.method == OdeMethod::Fehlberg78)
    march_with<Rkf78>(f, y, t, t_end, opt, max_dt, steps, on_step);
  else
    march_with<Dopri>(f, y, t, t_end, opt, max_dt, steps, on_step);
}

}  // namespace

DenseSolution DenseSolution::solve(OdeRhs rhs, OdeState y0, double t0, double t1,
                                   const OdeOptions& opt, std::vector<double> stops) {
  if (!(t1 >= t0)) throw DomainError("integration interval must satisfy t1 >= t0");
  DenseSolution s;
  s.rhs_ = std::make_shared<const OdeRhs>(std::move(rhs));
  s.opt_ = opt;
  s.ts_.push_back(t0);
  s.ys_.push_back(y0);
  if (t1 == t0) return s;
  const double max_dt = (t1 - t0) * opt.max_step_fraction;
  stops.push_back(t1);
  std::sort(stops.begin(), stops.end());
  OdeState y = std::move(y0);
  double t = t0;
  long steps = 0;
  for (double stop : stops) {
    if (stop <= t || stop > t1) continue;
    march(*s.rhs_, y, t, stop, opt, max_dt, steps, [&](double tt, const OdeState& yy) {
      s.ts_.push_back(tt);
      s.ys_.push_back(yy);
    });
    t = stop;
  }
  return s;
}

OdeState DenseSolution::at(double t) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(t1()));
  if (t < t0() - slack || t > t1() + slack)
    throw DomainError("t=" + std::to_string(t) + " outside solved interval [" +
                      std::to_string(t0()) + ", " + std::to_string(t1()) + "]");
  t = std::clamp(t, t0(), t1());
  auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  size_t k = static_cast<size_t>(it - ts_.begin()) - 1;
  if (ts_[k] == t) return ys_[k];
  OdeState y = ys_[k];
  long steps = 0;
  const double max_dt = (t1() - t0()) * opt_.max_step_fraction;
  march(*rhs_, y, ts_[k], t, opt_, max_dt, steps, [](double, const OdeState&) {});
  return y;
}

double DenseSolution::first_root(const std::function<double(double, const OdeState&)>& f,
                                 double rel_tol) const {
  double f_prev = f(ts_[0], ys_[0]);
  for (size_t k = 1; k < ts_.size(); ++k) {
    double fk = f(ts_[k], ys_[k]);
    if (fk == 0.0) return ts_[k];
    if ((f_prev < 0) != (fk < 0) && f_prev != 0.0) {
      auto g = [&](double t) { return f(t, at(t)); };
      auto tol = [&](double lo, double hi) {
        return std::abs(hi - lo) <= rel_tol * std::max(std::abs(lo), 1e-300);
      };
      std::uintmax_t iters = 200;
      auto [lo, hi] =
          boost::math::tools::toms748_solve(g, ts_[k - 1], ts_[k], f_prev, fk, tol, iters);
      return 0.5 * (lo + hi);
    }
    f_prev = fk;
  }
  return kInf;
}

OdeState integrate_to(const OdeRhs& rhs, OdeState y0, double t0, double t1,
                      const OdeOptions& opt) {
  if (!(t1 >= t0)) throw DomainError("integration interval must satisfy t1 >= t0");
  long steps = 0;
  march(rhs, y0, t0, t1, opt, (t1 - t0) * opt.max_step_fraction, steps,
        [](double, const OdeState&) {});
  return y0;
}

}  // namespace liegate
