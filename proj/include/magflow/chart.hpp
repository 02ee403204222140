#pragma once

#include "magflow/cohomology.hpp"

#include <functional>
#include <string>
#include <vector>

namespace magflow {

// Coordinate chart on a Lie group together with the frame data the flows
// need. Index a runs 1..dim for the frame fields; vectors/matrices handed
// through std::function are 0-indexed.
//
// eta_a  : right-invariant frame dual to sigma^a (sigma^a(eta_b) = delta).
// xi_a   : left-invariant frame.
// eta0/xi0: zero-components (coefficient on the circle direction) of the
//          frames lifted to the one-dimensional central extension of the
//          group; the lifted center is -d/dtheta on the right side and
//          +d/dtheta on the left side.
// Ad     : adjoint matrix of the group element, Ad_g e_a = sum_b Ad[a][b] e_b.
// deta/deta0: optional analytic Jacobians; numeric differentiation
//          (Richardson-extrapolated central differences) is used when null.
struct GroupChart {
  std::string name;
  int dim = 0;

  std::function<std::vector<double>(int a, const std::vector<double>& g)> eta;
  std::function<std::vector<double>(int a, const std::vector<double>& g)> xi;
  std::function<std::vector<double>(int a, const std::vector<double>& g)> sigma;
  std::function<double(int a, const std::vector<double>& g)> eta0;
  std::function<double(int a, const std::vector<double>& g)> xi0;
  std::function<std::vector<std::vector<double>>(const std::vector<double>& g)>
      Ad;

  std::function<std::vector<std::vector<double>>(int a,
                                                 const std::vector<double>& g)>
      deta;  // J[i][k] = d eta_a^i / d g^k
  std::function<std::vector<double>(int a, const std::vector<double>& g)>
      deta0;

  // Validity box per coordinate (empty = all of R^n). Flows raise
  // OutOfChart when the trajectory leaves it.
  std::vector<std::pair<double, double>> box;
  // Compact directions: a vector potential in these coordinates cannot be
  // globally defined on the group itself.
  std::vector<bool> periodic;

  bool inside(const std::vector<double>& g) const;
  void require_inside(const std::vector<double>& g) const;  // throws OutOfChart
};

// Numeric field Jacobian: J[i][k] = d field^i / d g^k by central
// differences with one Richardson extrapolation level (h and h/2), making
// the truncation error O(h^4).
std::vector<std::vector<double>> field_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& field,
    const std::vector<double>& g, double h = 1e-4);

std::vector<std::vector<double>> eta_jacobian(const GroupChart& chart, int a,
                                              const std::vector<double>& g);
std::vector<double> eta0_gradient(const GroupChart& chart, int a,
                                  const std::vector<double>& g);

struct ChartAudit {
  double duality = 0.0;          // |sigma^a(eta_b) - delta_ab|
  double eta_commutators = 0.0;  // extended right-frame brackets vs C and F
  double xi_commutators = 0.0;   // extended left-frame brackets vs C and F
  double mixed_commutators = 0.0;  // left and right frames must commute
  int points = 0;
};

// Checks, at random points of the chart, that the declared frames realize
// the algebra: sigma-eta duality, and
//   [eta~_a, eta~_b] = sum_c C^c_ab eta~_c + F_ab eta~_0,
//   [xi~_a,  xi~_b ] = sum_c C^c_ab xi~_c  + F_ab xi~_0,
//   [eta~_a, xi~_b ] = 0.
// Commutators are evaluated with numeric Jacobians even when analytic ones
// are installed, so the audit is independent of the chart's own data.
ChartAudit audit_chart(const GroupChart& chart, const LieAlgebra& g,
                       const TwoCochain& F, int points, std::uint64_t seed);

}  // namespace magflow
