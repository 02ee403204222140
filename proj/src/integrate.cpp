#include "magflow/integrate.hpp"

#include "magflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace magflow {

namespace {

struct Recorder {
  const std::vector<AuditFunction>& audits;
  std::vector<double> baseline;
  Trajectory traj;

  explicit Recorder(const std::vector<AuditFunction>& a) : audits(a) {
    for (const auto& f : a) {
      traj.audit_names.push_back(f.name);
      traj.audits[f.name] = {};
      traj.max_drift[f.name] = 0.0;
    }
  }

  void record(double t, const std::vector<double>& x) {
    traj.times.push_back(t);
    traj.states.push_back(x);
    for (std::size_t i = 0; i < audits.size(); ++i) {
      double v = audits[i].value(t, x);
      if (baseline.size() <= i) baseline.push_back(v);
      double drift =
          std::abs(v - baseline[i]) / std::max(1.0, std::abs(baseline[i]));
      auto& series = traj.audits[audits[i].name];
      series.push_back(drift);
      auto& mx = traj.max_drift[audits[i].name];
      mx = std::max(mx, drift);
    }
  }
};

void rk4_step(const Rhs& rhs, double t, double h, const std::vector<double>& x,
              std::vector<double>& out, std::vector<double>* work) {
  std::size_t n = x.size();
  std::vector<double>&k1 = work[0], &k2 = work[1], &k3 = work[2], &k4 = work[3],
                     &tmp = work[4];
  rhs(t, x, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  rhs(t + 0.5 * h, tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  rhs(t + 0.5 * h, tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  rhs(t + h, tmp, k4);
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = x[i] + h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

Trajectory integrate(const Rhs& rhs, std::vector<double> x0,
                     const IntegrateOptions& opts,
                     const std::vector<AuditFunction>& audits) {
  if (!(opts.t1 > opts.t0)) throw std::invalid_argument("need t1 > t0");
  if (!(opts.dt > 0)) throw std::invalid_argument("need dt > 0");

  Recorder rec(audits);
  rec.record(opts.t0, x0);

  if (opts.method == Method::RK4) {
    std::vector<double> work[5];
    for (auto& w : work) w.resize(x0.size());
    double span = opts.t1 - opts.t0;
    long nsteps = static_cast<long>(std::ceil(span / opts.dt - 1e-12));
    if (nsteps > opts.max_steps) throw std::invalid_argument("too many steps");
    std::vector<double> x = std::move(x0), next;
    for (long s = 0; s < nsteps; ++s) {
      double t = opts.t0 + s * opts.dt;
      double h = std::min(opts.dt, opts.t1 - t);
      rk4_step(rhs, t, h, x, next, work);
      x.swap(next);
      bool last = (s + 1 == nsteps);
      if (last)
        rec.record(opts.t1, x);
      else if ((s + 1) % opts.stride == 0)
        rec.record(t + h, x);
    }
    return std::move(rec.traj);
  }

  // Dormand-Prince with standard error-based step control.
  std::size_t n = x0.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n),
      x5(n);
  std::vector<double> x = std::move(x0);
  double t = opts.t0;
  double h = std::min(opts.dt, opts.t1 - t);
  long steps = 0, accepted_since_record = 0;
  while (t < opts.t1 - 1e-14 * std::max(1.0, std::abs(opts.t1))) {
    if (++steps > opts.max_steps)
      throw StepRejection(t, h);
    h = std::min(h, opts.t1 - t);

    rhs(t, x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * a21 * k1[i];
    rhs(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = x[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = x[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = x[i] +
               h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = x[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                           a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      x5[i] = x[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    rhs(t + h, x5, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                      e6 * k6[i] + e7 * k7[i]);
      double sc =
          opts.atol + opts.rtol * std::max(std::abs(x[i]), std::abs(x5[i]));
      err = std::max(err, std::abs(e) / sc);
    }

    if (err <= 1.0) {
      t += h;
      x = x5;
      ++accepted_since_record;
      bool last = !(t < opts.t1 - 1e-14 * std::max(1.0, std::abs(opts.t1)));
      if (last || accepted_since_record % opts.stride == 0) rec.record(t, x);
    }

    double factor = 0.9 * std::pow(1.0 / std::max(err, 1e-300), 0.2);
    h *= std::clamp(factor, 0.2, 5.0);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) throw StepRejection(t, h);
  }
  return std::move(rec.traj);
}

}  // namespace magflow
