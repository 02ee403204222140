#pragma once

#include "magflow/chart.hpp"

namespace magflow {

// Chart-local magnetic vector potential in the gauge with vanishing
// circle component: A_i(g) = -eta0_a(g) sigma^a_i(g). Its exterior
// derivative reproduces the sigma-pullback of the cocycle.
struct VectorPotential {
  int dim = 0;
  // False when the chart has compact directions: the potential below is
  // still valid chart-locally, but no global potential exists on the
  // group (the magnetic 2-form has nonzero flux).
  bool global = true;
  std::function<std::vector<double>(const std::vector<double>& g)> A;
};

VectorPotential vector_potential(const GroupChart& chart);

// max over sample points and index pairs of
//   | d_i A_j - d_j A_i - F_ij(g) |,  F_ij = F_ab sigma^a_i sigma^b_j,
// with numeric (Richardson) derivatives of A.
double potential_curl_residual(const GroupChart& chart, const TwoCochain& F,
                               const VectorPotential& A, int points,
                               std::uint64_t seed);

}  // namespace magflow
