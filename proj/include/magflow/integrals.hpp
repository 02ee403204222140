#pragma once

#include "magflow/chart.hpp"
#include "magflow/flows.hpp"

namespace magflow {

// Scalar function on chart phase space (g, p) with analytic or numerically
// differentiated gradients.
struct PhaseFunction {
  std::string name;
  std::function<double(const std::vector<double>& x)> value;  // x = (g, p)
  std::function<std::vector<double>(const std::vector<double>& x)> grad_g;
  std::function<std::vector<double>(const std::vector<double>& x)> grad_p;
};

// The n first integrals of the charged flow built from the left frame and
// the adjoint transport of the extension data:
//   xi_a^(e)(g, p) = xi_a^i(g) p_i - e [ xi0_a(g) + Ad(g)_a^b eta0_b(g) ].
// Gradients in g use Richardson-extrapolated central differences; in p
// they are exact (the momentum dependence is linear).
std::vector<PhaseFunction> linear_integrals(const GroupChart& chart,
                                            double charge);

// Poisson bracket deformed by the magnetic 2-form:
//   {u, v} = du/dp_i dv/dg^i - du/dg^i dv/dp_i + e F_ij du/dp_i dv/dp_j,
// with F_ij the sigma-pullback of the cocycle at the evaluation point.
double deformed_bracket(const GroupChart& chart, const TwoCochain& F,
                        double charge, const PhaseFunction& u,
                        const PhaseFunction& v, const std::vector<double>& x);

struct BracketAudit {
  // max over sample points and pairs a < b of
  //   | {xi_a^(e), xi_b^(e)} - ( C^c_ab xi_c^(e) - e F_ab ) |
  double max_residual = 0.0;
  int points = 0;
};

// The integrals close under the deformed bracket on the algebra shifted by
// the cocycle constants; this checks that relation pointwise.
BracketAudit bracket_audit(const GroupChart& chart, const LieAlgebra& g,
                           const TwoCochain& F, double charge, int points,
                           std::uint64_t seed);

}  // namespace magflow
