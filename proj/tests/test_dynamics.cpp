#include <doctest.h>

#include "magflow/errors.hpp"
#include "magflow/flows.hpp"
#include "magflow/integrate.hpp"
#include "magflow/models.hpp"

#include <cmath>

using namespace magflow;

namespace {

const Rhs decay = [](double, const std::vector<double>& x,
                     std::vector<double>& dx) {
  dx.resize(1);
  dx[0] = -x[0];
};

}  // namespace

TEST_CASE("fixed-step integrator hits fourth-order accuracy on exp decay") {
  IntegrateOptions opts;
  opts.t1 = 1.0;
  opts.dt = 1e-3;
  Trajectory traj = integrate(decay, {1.0}, opts);
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.times.back() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(traj.states.back()[0] - std::exp(-1.0)) < 1e-12);
}

TEST_CASE("adaptive integrator meets its tolerance on a full oscillation") {
  Rhs osc = [](double, const std::vector<double>& x, std::vector<double>& dx) {
    dx.resize(2);
    dx[0] = x[1];
    dx[1] = -x[0];
  };
  IntegrateOptions opts;
  opts.t1 = 2.0 * M_PI;
  opts.method = Method::RK45;
  opts.rtol = 1e-10;
  opts.atol = 1e-12;
  Trajectory traj = integrate(osc, {1.0, 0.0}, opts);
  CHECK(std::abs(traj.states.back()[0] - 1.0) < 1e-7);
  CHECK(std::abs(traj.states.back()[1]) < 1e-7);
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    CHECK(traj.times[i] > traj.times[i - 1]);
}

TEST_CASE("step budget exhaustion raises a rejection") {
  Rhs quad = [](double, const std::vector<double>& x, std::vector<double>& dx) {
    dx.resize(1);
    dx[0] = x[0] * x[0];
  };
  IntegrateOptions opts;
  opts.t1 = 0.5;
  opts.method = Method::RK45;
  opts.rtol = 1e-12;
  opts.max_steps = 10;
  CHECK_THROWS_AS(integrate(quad, {1.0}, opts), StepRejection);
}

TEST_CASE("audit drift is relative to the initial value, floored at one") {
  Rhs drift_rhs = [](double, const std::vector<double>&,
                     std::vector<double>& dx) {
    dx.assign(2, 1.0);
  };
  std::vector<AuditFunction> audits = {
      {"big", [](double, const std::vector<double>& x) { return x[0]; }},
      {"small", [](double, const std::vector<double>& x) { return x[1]; }},
  };
  IntegrateOptions opts;
  opts.t1 = 2.0;
  opts.dt = 0.1;
  Trajectory traj = integrate(drift_rhs, {100.0, 0.0}, opts, audits);
  // value 100 -> 102: relative drift 2/100; value 0 -> 2: denominatorized to 1
  CHECK(traj.audit_names == std::vector<std::string>{"big", "small"});
  CHECK(traj.max_drift.at("big") == doctest::Approx(0.02).epsilon(1e-10));
  CHECK(traj.max_drift.at("small") == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(traj.audits.at("big").front() == 0.0);
  CHECK(traj.audits.at("big").back() == doctest::Approx(0.02).epsilon(1e-10));
}

TEST_CASE("stride thins the record but keeps the endpoints") {
  Rhs unit = [](double, const std::vector<double>&, std::vector<double>& dx) {
    dx.assign(1, 1.0);
  };
  IntegrateOptions opts;
  opts.t1 = 1.0;
  opts.dt = 0.1;
  opts.stride = 3;
  Trajectory traj = integrate(unit, {0.0}, opts);
  REQUIRE(traj.times.size() == 5);  // t = 0, 0.3, 0.6, 0.9, 1.0
  CHECK(traj.times[0] == 0.0);
  CHECK(traj.times[1] == doctest::Approx(0.3));
  CHECK(traj.times[2] == doctest::Approx(0.6));
  CHECK(traj.times[3] == doctest::Approx(0.9));
  CHECK(traj.times[4] == doctest::Approx(1.0));
}

TEST_CASE("reduced vector field: frozen values") {
  // Flat 2-torus: df1 = F12 f0 f2, df2 = -F12 f0 f1 with F12 = 1.
  ReducedFlow torus =
      reduced_flow(torus_algebra(), torus_cocycle(), Metric::identity(2));
  std::vector<double> dx;
  torus.rhs(0.0, {-1.0, 0.3, 0.7}, dx);
  REQUIRE(dx.size() == 3);
  CHECK(dx[0] == 0.0);
  CHECK(dx[1] == doctest::Approx(-0.7).epsilon(1e-14));
  CHECK(dx[2] == doctest::Approx(0.3).epsilon(1e-14));

  // Solvable example, unit cocycle, identity metric, f = (-1, 1, 0, 0, 1).
  ReducedFlow g7 = reduced_flow(
      g7_algebra(), g7_cocycle(Rational(1), Rational(1), Rational(1)),
      Metric::identity(4));
  g7.rhs(0.0, {-1.0, 1.0, 0.0, 0.0, 1.0}, dx);
  REQUIRE(dx.size() == 5);
  CHECK(dx[0] == 0.0);
  CHECK(dx[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dx[2] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(dx[3] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dx[4] == doctest::Approx(-1.0).epsilon(1e-14));

  double E = g7.energy({-1.0, 1.0, 0.0, 0.0, 1.0});
  CHECK(E == doctest::Approx(1.0).epsilon(1e-14));  // (1 + 1) / 2 on the base
}

TEST_CASE("chart vector field: frozen values") {
  GroupChart chart = g7_chart(1.0, 1.0, 1.0);
  TwoCochain F = g7_cocycle(Rational(1), Rational(1), Rational(1));
  ChartFlow flow = magnetic_chart_flow(chart, Metric::identity(4), F, 1.0);
  CHECK(flow.n == 4);
  CHECK(flow.state == 8);

  std::vector<double> dx;
  std::vector<double> x = {0, 0, 0, 0, 1, 1, 1, 1};
  flow.rhs(0.0, x, dx);
  REQUIRE(dx.size() == 8);
  for (int i = 0; i < 4; ++i) CHECK(dx[i] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dx[4] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(dx[5] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dx[6] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dx[7] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(flow.energy(x) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("flat-torus closed form: frozen point and zero-charge lines") {
  std::vector<double> quarter = torus_closed_form({0, 0, 1, 0}, 1.0, M_PI_2);
  REQUIRE(quarter.size() == 4);
  CHECK(quarter[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(quarter[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(quarter[2]) < 1e-14);
  CHECK(quarter[3] == doctest::Approx(1.0).epsilon(1e-14));

  std::vector<double> line =
      torus_closed_form({0.2, -0.1, 0.5, 0.25}, 0.0, 2.0);
  CHECK(line[0] == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(line[1] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(line[2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(line[3] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("integrated torus flow matches the closed form") {
  GroupChart chart = torus_chart();
  ChartFlow flow =
      magnetic_chart_flow(chart, Metric::identity(2), torus_cocycle(), 1.0);
  IntegrateOptions opts;
  opts.t1 = 2.0 * M_PI;
  opts.dt = 1e-3;
  std::vector<AuditFunction> audits = {
      {"energy",
       [&](double, const std::vector<double>& x) { return flow.energy(x); }}};
  Trajectory traj = integrate(flow.rhs, {0, 0, 1, 0}, opts, audits);

  double sup = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    std::vector<double> ref = torus_closed_form({0, 0, 1, 0}, 1.0, traj.times[k]);
    for (int i = 0; i < 4; ++i)
      sup = std::max(sup, std::abs(traj.states[k][i] - ref[i]));
  }
  CHECK(sup < 1e-9);
  CHECK(traj.max_drift.at("energy") < 1e-12);
}

TEST_CASE("leaving the chart box raises an error") {
  GroupChart chart = torus_chart();
  chart.box = {{-0.5, 0.5}, {-0.5, 0.5}};
  ChartFlow flow =
      magnetic_chart_flow(chart, Metric::identity(2), torus_cocycle(), 0.0);
  IntegrateOptions opts;
  opts.t1 = 1.0;
  opts.dt = 1e-2;
  CHECK_THROWS_AS(integrate(flow.rhs, {0, 0, 1, 0}, opts), OutOfChart);
}
