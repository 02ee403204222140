#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace magflow {

using Rhs = std::function<void(double t, const std::vector<double>& x,
                               std::vector<double>& dx)>;

struct AuditFunction {
  std::string name;
  std::function<double(double t, const std::vector<double>& x)> value;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<std::string> audit_names;  // insertion order
  // Relative drift series per audit: |v(t) - v(0)| / max(1, |v(0)|).
  std::map<std::string, std::vector<double>> audits;
  std::map<std::string, double> max_drift;
};

enum class Method { RK4, RK45 };

struct IntegrateOptions {
  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-3;      // RK4 step / RK45 initial step
  Method method = Method::RK4;
  double rtol = 1e-10;   // RK45 only
  double atol = 1e-12;   // RK45 only
  int stride = 1;        // record every stride-th step (first and last always)
  long max_steps = 100000000;
};

// Fixed-step classical RK4 or adaptive Dormand-Prince RK45. Throws
// StepRejection when the adaptive step underflows; rhs may throw
// OutOfChart, which propagates.
Trajectory integrate(const Rhs& rhs, std::vector<double> x0,
                     const IntegrateOptions& opts,
                     const std::vector<AuditFunction>& audits = {});

}  // namespace magflow
