#pragma once

#include <stdexcept>
#include <string>

namespace magflow {

// Malformed input files or values (bad JSON, bad rational literal, index
// out of range). CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Requested catalog id does not exist. CLI maps this to exit code 2.
struct EntryNotFound : std::runtime_error {
  explicit EntryNotFound(const std::string& id)
      : std::runtime_error("catalog entry not found: " + id), id(id) {}
  std::string id;
};

// A cochain handed to an operation that requires the closedness condition
// failed it. Carries the first violating basis triple. CLI exit code 1.
struct NotACocycle : std::runtime_error {
  NotACocycle(int a, int b, int c, const std::string& residual)
      : std::runtime_error("not a cocycle: cyclic sum over basis triple (" +
                           std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ") = " + residual),
        a(a), b(b), c(c) {}
  int a, b, c;
};

// Trajectory left the validity box of the coordinate chart.
struct OutOfChart : std::runtime_error {
  OutOfChart(int coordinate, double value, const std::string& chart)
      : std::runtime_error("trajectory left chart '" + chart +
                           "': coordinate " + std::to_string(coordinate) +
                           " = " + std::to_string(value)),
        coordinate(coordinate), value(value) {}
  int coordinate;
  double value;
};

// Adaptive integrator could not reach the accuracy target with an
// acceptable step size.
struct StepRejection : std::runtime_error {
  StepRejection(double t, double dt)
      : std::runtime_error("adaptive step size underflow at t = " +
                           std::to_string(t) + " (dt = " + std::to_string(dt) +
                           ")"),
        t(t), dt(dt) {}
  double t, dt;
};

}  // namespace magflow
