#include "magflow/potential.hpp"

#include <cmath>
#include <random>

namespace magflow {

VectorPotential vector_potential(const GroupChart& chart) {
  VectorPotential pot;
  pot.dim = chart.dim;
  pot.global = true;
  for (bool per : chart.periodic)
    if (per) pot.global = false;
  int n = chart.dim;
  pot.A = [chart, n](const std::vector<double>& g) {
    std::vector<double> A(n, 0.0);
    for (int a = 1; a <= n; ++a) {
      double e0 = chart.eta0(a, g);
      if (e0 == 0.0) continue;
      auto s = chart.sigma(a, g);
      for (int i = 0; i < n; ++i) A[i] -= e0 * s[i];
    }
    return A;
  };
  return pot;
}

double potential_curl_residual(const GroupChart& chart, const TwoCochain& F,
                               const VectorPotential& A, int points,
                               std::uint64_t seed) {
  int n = chart.dim;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int p = 0; p < points; ++p) {
    std::vector<double> g(n);
    for (double& x : g) x = dist(rng);
    auto J = field_jacobian(A.A, g);  // J[i][k] = d A_i / d g^k
    std::vector<std::vector<double>> S(n + 1);
    for (int a = 1; a <= n; ++a) S[a] = chart.sigma(a, g);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double fij = 0.0;
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            double f = to_double(F(a, b));
            if (f != 0.0) fij += f * S[a][i] * S[b][j];
          }
        worst = std::max(worst, std::abs(J[j][i] - J[i][j] - fij));
      }
  }
  return worst;
}

}  // namespace magflow
