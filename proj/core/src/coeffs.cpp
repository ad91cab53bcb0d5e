#include "liegate/coeffs.hpp"

#include "liegate/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace liegate {

struct TimeProfile::Node {
  virtual ~Node() = default;
  virtual double value(double t) const = 0;
  virtual double derivative(double t) const = 0;
  virtual ProfileKind kind() const { return ProfileKind::Composite; }
  virtual double t_min() const { return -kInf; }
  virtual double t_max() const { return kInf; }
  virtual bool constant() const { return false; }
  virtual std::string describe() const = 0;
};

namespace {

using Node = TimeProfile::Node;
using NodePtr = std::shared_ptr<const Node>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct ConstNode final : Node {
  double v;
  explicit ConstNode(double v) : v(v) {}
  double value(double) const override { return v; }
  double derivative(double) const override { return 0.0; }
  ProfileKind kind() const override { return ProfileKind::Constant; }
  bool constant() const override { return true; }
  std::string describe() const override { return num(v); }
};

struct SinNode final : Node {
  double A, w, ph, off;
  SinNode(double A, double w, double ph, double off) : A(A), w(w), ph(ph), off(off) {}
  double value(double t) const override { return A * std::sin(w * t + ph) + off; }
  double derivative(double t) const override { return A * w * std::cos(w * t + ph); }
  ProfileKind kind() const override { return ProfileKind::Sinusoid; }
  std::string describe() const override {
    return num(A) + "*sin(" + num(w) + "t+" + num(ph) + ")+" + num(off);
  }
};

struct ExpNode final : Node {
  double pre, rate;
  ExpNode(double p, double r) : pre(p), rate(r) {}
  double value(double t) const override { return pre * std::exp(rate * t); }
  double derivative(double t) const override { return pre * rate * std::exp(rate * t); }
  ProfileKind kind() const override { return ProfileKind::Exponential; }
  std::string describe() const override { return num(pre) + "*exp(" + num(rate) + "t)"; }
};

struct SplineNode final : Node {
  std::vector<double> x, y, M;

  explicit SplineNode(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw DomainError("tabulated profile needs at least 2 knots");
    for (auto& [t, v] : knots) {
      if (!std::isfinite(t) || !std::isfinite(v))
        throw DomainError("tabulated profile has a non-finite knot");
      x.push_back(t);
      y.push_back(v);
    }
    for (size_t i = 1; i < x.size(); ++i)
      if (!(x[i] > x[i - 1])) throw DomainError("tabulated knots must be strictly increasing in t");
    solve_moments();
  }

  void solve_moments() {
    const int n = static_cast<int>(x.size());
    M.assign(n, 0.0);
    if (n == 2) return;
    std::vector<double> h(n - 1), d(n - 1);
    for (int i = 0; i < n - 1; ++i) {
      h[i] = x[i + 1] - x[i];
      d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 3) {
      // the unique parabola
      std::fill(M.begin(), M.end(), 2.0 * (d[1] - d[0]) / (h[0] + h[1]));
      return;
    }
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    // not-a-knot: M''' continuous across x[1] and x[n-2]
    trip.emplace_back(0, 0, h[1]);
    trip.emplace_back(0, 1, -(h[0] + h[1]));
    trip.emplace_back(0, 2, h[0]);
    for (int i = 1; i < n - 1; ++i) {
      trip.emplace_back(i, i - 1, h[i - 1]);
      trip.emplace_back(i, i, 2.0 * (h[i - 1] + h[i]));
      trip.emplace_back(i, i + 1, h[i]);
      rhs[i] = 6.0 * (d[i] - d[i - 1]);
    }
    trip.emplace_back(n - 1, n - 3, h[n - 2]);
    trip.emplace_back(n - 1, n - 2, -(h[n - 3] + h[n - 2]));
    trip.emplace_back(n - 1, n - 1, h[n - 3]);
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) throw DomainError("spline system is singular");
    Eigen::VectorXd m = lu.solve(rhs);
    for (int i = 0; i < n; ++i) M[i] = m[i];
  }

  size_t locate(double& t) const {
    const double slack = 1e-12 * std::max({1.0, std::abs(x.front()), std::abs(x.back())});
    if (t < x.front() - slack || t > x.back() + slack || std::isnan(t))
      throw DomainError("t=" + num(t) + " outside tabulated range [" + num(x.front()) + ", " +
                        num(x.back()) + "]");
    t = std::clamp(t, x.front(), x.back());
    auto it = std::upper_bound(x.begin(), x.end(), t);
    size_t i = it == x.begin() ? 0 : static_cast<size_t>(it - x.begin()) - 1;
    return std::min(i, x.size() - 2);
  }

  double value(double t) const override {
    size_t i = locate(t);
    const double h = x[i + 1] - x[i], A = x[i + 1] - t, B = t - x[i];
    return M[i] * A * A * A / (6 * h) + M[i + 1] * B * B * B / (6 * h) +
           (y[i] / h - M[i] * h / 6) * A + (y[i + 1] / h - M[i + 1] * h / 6) * B;
  }
  double derivative(double t) const override {
    size_t i = locate(t);
    const double h = x[i + 1] - x[i], A = x[i + 1] - t, B = t - x[i];
    return -M[i] * A * A / (2 * h) + M[i + 1] * B * B / (2 * h) - (y[i] / h - M[i] * h / 6) +
           (y[i + 1] / h - M[i + 1] * h / 6);
  }
  ProfileKind kind() const override { return ProfileKind::Tabulated; }
  double t_min() const override { return x.front(); }
  double t_max() const override { return x.back(); }
  std::string describe() const override {
    return "tabulated[" + num(x.front()) + "," + num(x.back()) + "]";
  }
};

struct SumNode final : Node {
  NodePtr a, b;
  double sb;
  SumNode(NodePtr a, NodePtr b, double sb) : a(std::move(a)), b(std::move(b)), sb(sb) {}
  double value(double t) const override { return a->value(t) + sb * b->value(t); }
  double derivative(double t) const override { return a->derivative(t) + sb * b->derivative(t); }
  double t_min() const override { return std::max(a->t_min(), b->t_min()); }
  double t_max() const override { return std::min(a->t_max(), b->t_max()); }
  std::string describe() const override {
    return "(" + a->describe() + (sb > 0 ? " + " : " - ") + b->describe() + ")";
  }
};

struct ProdNode final : Node {
  NodePtr a, b;
  ProdNode(NodePtr a, NodePtr b) : a(std::move(a)), b(std::move(b)) {}
  double value(double t) const override { return a->value(t) * b->value(t); }
  double derivative(double t) const override {
    return a->derivative(t) * b->value(t) + a->value(t) * b->derivative(t);
  }
  double t_min() const override { return std::max(a->t_min(), b->t_min()); }
  double t_max() const override { return std::min(a->t_max(), b->t_max()); }
  std::string describe() const override { return a->describe() + "*" + b->describe(); }
};

struct ScaleNode final : Node {
  NodePtr a;
  double k;
  ScaleNode(NodePtr a, double k) : a(std::move(a)), k(k) {}
  double value(double t) const override { return k * a->value(t); }
  double derivative(double t) const override { return k * a->derivative(t); }
  double t_min() const override { return a->t_min(); }
  double t_max() const override { return a->t_max(); }
  std::string describe() const override { return num(k) + "*" + a->describe(); }
};

struct RecipNode final : Node {
  NodePtr a;
  explicit RecipNode(NodePtr a) : a(std::move(a)) {}
  double value(double t) const override {
    double v = a->value(t);
    if (v == 0.0) throw DomainError("reciprocal of zero profile value at t=" + num(t));
    return 1.0 / v;
  }
  double derivative(double t) const override {
    double v = a->value(t);
    if (v == 0.0) throw DomainError("reciprocal of zero profile value at t=" + num(t));
    return -a->derivative(t) / (v * v);
  }
  double t_min() const override { return a->t_min(); }
  double t_max() const override { return a->t_max(); }
  std::string describe() const override { return "1/" + a->describe(); }
};

struct ShiftNode final : Node {
  NodePtr a;
  double t0;
  ShiftNode(NodePtr a, double t0) : a(std::move(a)), t0(t0) {}
  double value(double t) const override { return a->value(t + t0); }
  double derivative(double t) const override { return a->derivative(t + t0); }
  double t_min() const override { return a->t_min() - t0; }
  double t_max() const override { return a->t_max() - t0; }
  std::string describe() const override { return a->describe() + "@+" + num(t0); }
};

}  // namespace

TimeProfile::TimeProfile() : node_(std::make_shared<ConstNode>(0.0)) {}

TimeProfile TimeProfile::constant(double v) {
  if (!std::isfinite(v)) throw DomainError("constant profile must be finite");
  return TimeProfile(std::make_shared<ConstNode>(v));
}

TimeProfile TimeProfile::sinusoid(double amplitude, double omega, double phase, double offset) {
  if (!std::isfinite(amplitude) || !std::isfinite(omega) || !std::isfinite(phase) ||
      !std::isfinite(offset))
    throw DomainError("sinusoid parameters must be finite");
  return TimeProfile(std::make_shared<SinNode>(amplitude, omega, phase, offset));
}

TimeProfile TimeProfile::exponential(double prefactor, double rate) {
  if (!std::isfinite(prefactor) || !std::isfinite(rate))
    throw DomainError("exponential parameters must be finite");
  return TimeProfile(std::make_shared<ExpNode>(prefactor, rate));
}

TimeProfile TimeProfile::tabulated(std::vector<std::pair<double, double>> knots) {
  return TimeProfile(std::make_shared<SplineNode>(std::move(knots)));
}

double TimeProfile::value(double t) const { return node_->value(t); }
double TimeProfile::derivative(double t) const { return node_->derivative(t); }
ProfileKind TimeProfile::kind() const { return node_->kind(); }
double TimeProfile::t_min() const { return node_->t_min(); }
double TimeProfile::t_max() const { return node_->t_max(); }
bool TimeProfile::is_constant() const { return node_->constant(); }
bool TimeProfile::is_zero() const { return node_->constant() && node_->value(0.0) == 0.0; }
std::string TimeProfile::describe() const { return node_->describe(); }

TimeProfile TimeProfile::operator+(const TimeProfile& o) const {
  if (is_constant() && o.is_constant()) return constant(value(0) + o.value(0));
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return TimeProfile(std::make_shared<SumNode>(node_, o.node_, 1.0));
}

TimeProfile TimeProfile::operator-(const TimeProfile& o) const {
  if (is_constant() && o.is_constant()) return constant(value(0) - o.value(0));
  if (o.is_zero()) return *this;
  return TimeProfile(std::make_shared<SumNode>(node_, o.node_, -1.0));
}

TimeProfile TimeProfile::operator*(const TimeProfile& o) const {
  if (is_zero() || o.is_zero()) return constant(0.0);
  if (is_constant() && o.is_constant()) return constant(value(0) * o.value(0));
  if (is_constant()) return o * value(0);
  if (o.is_constant()) return *this * o.value(0);
  return TimeProfile(std::make_shared<ProdNode>(node_, o.node_));
}

TimeProfile TimeProfile::operator*(double k) const {
  if (k == 0.0 || is_zero()) return constant(0.0);
  if (k == 1.0) return *this;
  if (is_constant()) return constant(k * value(0));
  return TimeProfile(std::make_shared<ScaleNode>(node_, k));
}

TimeProfile TimeProfile::reciprocal() const {
  if (is_constant()) {
    if (value(0) == 0.0) throw DomainError("reciprocal of the zero profile");
    return constant(1.0 / value(0));
  }
  return TimeProfile(std::make_shared<RecipNode>(node_));
}

TimeProfile TimeProfile::shifted(double t0) const {
  if (t0 == 0.0 || is_constant()) return *this;
  return TimeProfile(std::make_shared<ShiftNode>(node_, t0));
}

CoefficientSet1D CoefficientSet1D::shifted(double t0) const {
  return {a.shifted(t0), b.shifted(t0), c.shifted(t0), d.shifted(t0),
          e.shifted(t0), g.shifted(t0), hbar};
}

double CoefficientSet1D::t_max() const {
  return std::min({a.t_max(), b.t_max(), c.t_max(), d.t_max(), e.t_max(), g.t_max()});
}

FieldProfile2D FieldProfile2D::shifted(double t0) const {
  return {m.shifted(t0), B.shifted(t0), K.shifted(t0), Ex.shifted(t0), Ey.shifted(t0),
          charge, hbar};
}

double FieldProfile2D::t_max() const {
  return std::min({m.t_max(), B.t_max(), K.t_max(), Ex.t_max(), Ey.t_max()});
}

Reduced2D reduce_2d(const FieldProfile2D& f) {
  const double e = f.charge;
  TimeProfile inv_m = f.m.reciprocal();
  CoefficientSet1D r;
  r.a = inv_m;
  r.b = TimeProfile::constant(0.0);
  r.c = f.K + (f.B * f.B) * inv_m * (e * e / 4.0);
  r.d = r.e = r.g = TimeProfile::constant(0.0);
  r.hbar = f.hbar;
  return {r, f.B * inv_m * (e / 2.0)};
}

void require_positive(const TimeProfile& p, double t0, double t1, const std::string& name,
                      int samples) {
  for (int i = 0; i < samples; ++i) {
    double t = samples == 1 ? t0 : t0 + (t1 - t0) * i / (samples - 1);
    double v = p.value(t);
    if (!(v > 0.0))
      throw DomainError(name + "(t) must be positive on [" + num(t0) + ", " + num(t1) +
                        "], found " + num(v) + " at t=" + num(t));
  }
}

}  // namespace liegate
