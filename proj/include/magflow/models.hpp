#pragma once

#include "magflow/chart.hpp"
#include "magflow/extension.hpp"

namespace magflow {

// --- flat torus (Landau problem) -----------------------------------------
//
// Two-dimensional abelian algebra with cocycle F(e1, e2) = 1; the chart is
// the plane covering the torus (both directions periodic). The charged
// flow is circular motion, solvable in closed form.

LieAlgebra torus_algebra();
TwoCochain torus_cocycle();
GroupChart torus_chart();

// state (phi, psi, p_phi, p_psi) at time t of the charge-e flow from x0,
// identity metric
std::vector<double> torus_closed_form(const std::vector<double>& x0,
                                      double charge, double t);

// --- solvable 4-dim model (catalog id g7) ---------------------------------
//
// [e1, e4] = e4, [e2, e4] = e4; cocycle family
// F = alpha e^1^e^2 + beta e^1^e^3 + gamma e^2^e^3. The twisted index is 2
// exactly when beta = gamma (integrable branch) and 0 otherwise.

LieAlgebra g7_algebra();
TwoCochain g7_cocycle(const Rational& alpha, const Rational& beta,
                      const Rational& gamma);
GroupChart g7_chart(double alpha, double beta, double gamma);

// Casimir candidates of the extended Lie-Poisson structure, coordinates
// (f_0, f_1..f_4):
//   K0 = f_0                                  (always),
//   K1 = beta (f_1 - f_2) + alpha f_3         (beta = gamma),
//   K2 = f_4^(beta f_0) exp(-f_3), f_4 > 0    (beta = gamma).
// K2 restricted to the leaf f_0 = 1 is the familiar f_4^beta exp(-f_3);
// the f_0-dependent exponent is what makes it a Casimir on every leaf.
std::vector<DualFunction> g7_casimirs(double alpha, double beta, double gamma);

}  // namespace magflow
