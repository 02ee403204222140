#pragma once

#include "magflow/chart.hpp"
#include "magflow/integrate.hpp"
#include "magflow/metric.hpp"

namespace magflow {

// Lie-Poisson flow on the dual of the centrally extended algebra,
// state (f_0, f_1, ..., f_n):
//   df_a/dt = sum_b [ sum_c C^c_ab f_c + F_ab f_0 ] (G^{-1} f)_b,
//   df_0/dt = 0.
// The magnetic trajectories of charge e sit on the leaf f_0 = -e.
struct ReducedFlow {
  int n = 0;  // base dimension; state size n + 1
  Rhs rhs;
  std::function<double(const std::vector<double>&)> energy;  // f^T G^{-1} f / 2
};

ReducedFlow reduced_flow(const LieAlgebra& g, const TwoCochain& F,
                         const Metric& G);

// Magnetic geodesic flow in a group chart, state (g^1..g^n, p_1..p_n):
//   dg^i/dt = g^{ij}(g) p_j,
//   dp_i/dt = -dH/dg^i - e F_ij(g) dg^j/dt,
// where g^{ij} = G^{ab} eta_a^i eta_b^j and F_ij is the sigma-pullback of
// the cocycle.
struct ChartFlow {
  int n = 0;      // group dimension
  int state = 0;  // full state size
  Rhs rhs;
  std::function<double(const std::vector<double>&)> energy;
};

ChartFlow magnetic_chart_flow(const GroupChart& chart, const Metric& G,
                              const TwoCochain& F, double charge);

// Charge-free geodesic flow on the centrally extended group: the magnetic
// coupling is absorbed into the zero-components of the frame. State
// (g^1..g^n, theta, p_1..p_n, p_0); initialize p_0 = -charge.
ChartFlow extended_chart_flow(const GroupChart& chart, const Metric& G);

// Right momenta of an extended-chart state, pushed to the dual of the
// extended algebra: f_a = -(eta_a^i p_i + eta0_a p_0), f_0 = p_0. With
// p_0 = -e this solves the reduced system above exactly (the sign flips
// because conserved quantities of the right-invariant system are the
// *left* momenta, and vice versa).
std::vector<double> reduced_image(const GroupChart& chart,
                                  const std::vector<double>& ext_state);

}  // namespace magflow
