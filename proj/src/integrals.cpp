#include "magflow/integrals.hpp"

#include <cmath>
#include <random>

namespace magflow {

std::vector<PhaseFunction> linear_integrals(const GroupChart& chart,
                                            double charge) {
  int n = chart.dim;
  std::vector<PhaseFunction> out;
  for (int a = 1; a <= n; ++a) {
    // scalar part s_a(g) = xi0_a(g) + Ad(g)_a^b eta0_b(g)
    auto scalar = [chart, a, n](const std::vector<double>& g) {
      auto Adg = chart.Ad(g);
      double s = chart.xi0(a, g);
      for (int b = 1; b <= n; ++b)
        s += Adg[a - 1][b - 1] * chart.eta0(b, g);
      return s;
    };
    PhaseFunction f;
    f.name = "xi" + std::to_string(a);
    f.value = [chart, scalar, a, n, charge](const std::vector<double>& x) {
      std::vector<double> g(x.begin(), x.begin() + n);
      auto xi = chart.xi(a, g);
      double v = -charge * scalar(g);
      for (int i = 0; i < n; ++i) v += xi[i] * x[n + i];
      return v;
    };
    f.grad_p = [chart, a, n](const std::vector<double>& x) {
      std::vector<double> g(x.begin(), x.begin() + n);
      return chart.xi(a, g);
    };
    f.grad_g = [chart, scalar, a, n, charge](const std::vector<double>& x) {
      std::vector<double> g(x.begin(), x.begin() + n);
      const double* p = x.data() + n;
      auto J = field_jacobian(
          [&](const std::vector<double>& y) { return chart.xi(a, y); }, g);
      auto Ds = field_jacobian(
          [&](const std::vector<double>& y) {
            return std::vector<double>{scalar(y)};
          },
          g)[0];
      std::vector<double> grad(n, 0.0);
      for (int i = 0; i < n; ++i) {
        double w = -charge * Ds[i];
        for (int j = 0; j < n; ++j) w += J[j][i] * p[j];
        grad[i] = w;
      }
      return grad;
    };
    out.push_back(std::move(f));
  }
  return out;
}

double deformed_bracket(const GroupChart& chart, const TwoCochain& F,
                        double charge, const PhaseFunction& u,
                        const PhaseFunction& v, const std::vector<double>& x) {
  int n = chart.dim;
  std::vector<double> g(x.begin(), x.begin() + n);
  auto ug = u.grad_g(x), up = u.grad_p(x);
  auto vg = v.grad_g(x), vp = v.grad_p(x);

  double br = 0.0;
  for (int i = 0; i < n; ++i) br += up[i] * vg[i] - ug[i] * vp[i];

  std::vector<std::vector<double>> S(n + 1);
  for (int a = 1; a <= n; ++a) S[a] = chart.sigma(a, g);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      double f = to_double(F(a, b));
      if (f == 0.0) continue;
      double sa = 0.0, sb = 0.0;
      for (int i = 0; i < n; ++i) {
        sa += S[a][i] * up[i];
        sb += S[b][i] * vp[i];
      }
      br += charge * f * sa * sb;
    }
  return br;
}

BracketAudit bracket_audit(const GroupChart& chart, const LieAlgebra& g,
                           const TwoCochain& F, double charge, int points,
                           std::uint64_t seed) {
  int n = chart.dim;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  auto integrals = linear_integrals(chart, charge);

  BracketAudit audit;
  audit.points = points;
  for (int p = 0; p < points; ++p) {
    std::vector<double> x(2 * n);
    for (double& y : x) y = dist(rng);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        double lhs = deformed_bracket(chart, F, charge, integrals[a - 1],
                                      integrals[b - 1], x);
        double rhs = -charge * to_double(F(a, b));
        for (int c = 1; c <= n; ++c) {
          double C = to_double(g.structure_constant(a, b, c));
          if (C != 0.0) rhs += C * integrals[c - 1].value(x);
        }
        audit.max_residual = std::max(audit.max_residual, std::abs(lhs - rhs));
      }
  }
  return audit;
}

}  // namespace magflow
