#include "magflow/chart.hpp"

#include "magflow/errors.hpp"

#include <cmath>
#include <random>

namespace magflow {

bool GroupChart::inside(const std::vector<double>& g) const {
  if (box.empty()) return true;
  for (std::size_t i = 0; i < box.size() && i < g.size(); ++i)
    if (g[i] < box[i].first || g[i] > box[i].second) return false;
  return true;
}

void GroupChart::require_inside(const std::vector<double>& g) const {
  if (box.empty()) return;
  for (std::size_t i = 0; i < box.size() && i < g.size(); ++i)
    if (g[i] < box[i].first || g[i] > box[i].second)
      throw OutOfChart(static_cast<int>(i), g[i], name);
}

std::vector<std::vector<double>> field_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& field,
    const std::vector<double>& g, double h) {
  std::size_t n = g.size();
  std::size_t m = field(g).size();
  std::vector<std::vector<double>> J(m, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    double hk = h * std::max(1.0, std::abs(g[k]));
    auto diff = [&](double step) {
      std::vector<double> gp = g, gm = g;
      gp[k] += step;
      gm[k] -= step;
      std::vector<double> fp = field(gp), fm = field(gm);
      std::vector<double> d(m);
      for (std::size_t i = 0; i < m; ++i) d[i] = (fp[i] - fm[i]) / (2 * step);
      return d;
    };
    std::vector<double> d1 = diff(hk), d2 = diff(hk / 2);
    for (std::size_t i = 0; i < m; ++i) J[i][k] = (4 * d2[i] - d1[i]) / 3;
  }
  return J;
}

std::vector<std::vector<double>> eta_jacobian(const GroupChart& chart, int a,
                                              const std::vector<double>& g) {
  if (chart.deta) return chart.deta(a, g);
  return field_jacobian([&](const std::vector<double>& x) { return chart.eta(a, x); },
                        g);
}

std::vector<double> eta0_gradient(const GroupChart& chart, int a,
                                  const std::vector<double>& g) {
  if (chart.deta0) return chart.deta0(a, g);
  auto J = field_jacobian(
      [&](const std::vector<double>& x) {
        return std::vector<double>{chart.eta0(a, x)};
      },
      g);
  return J[0];
}

namespace {

// [X, Y]^i = X^k d_k Y^i - Y^k d_k X^i for the chart components, plus the
// same expression for the scalar zero-components (nothing depends on the
// circle coordinate, so no transport term appears there).
struct ExtendedField {
  std::vector<double> comp;  // n chart components
  double zero;               // coefficient on d/dtheta
};

}  // namespace

ChartAudit audit_chart(const GroupChart& chart, const LieAlgebra& alg,
                       const TwoCochain& F, int points, std::uint64_t seed) {
  int n = chart.dim;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  ChartAudit audit;
  audit.points = points;

  auto eval_pair = [&](auto frame, auto frame0, double center_sign,
                       const std::vector<double>& g, int a, int b,
                       double& worst) {
    auto Xa = frame(a, g), Xb = frame(b, g);
    auto Ja = field_jacobian(
        [&](const std::vector<double>& x) { return frame(a, x); }, g);
    auto Jb = field_jacobian(
        [&](const std::vector<double>& x) { return frame(b, x); }, g);
    auto Da = field_jacobian(
        [&](const std::vector<double>& x) {
          return std::vector<double>{frame0(a, x)};
        },
        g)[0];
    auto Db = field_jacobian(
        [&](const std::vector<double>& x) {
          return std::vector<double>{frame0(b, x)};
        },
        g)[0];

    for (int i = 0; i < n; ++i) {
      double lie = 0.0;
      for (int k = 0; k < n; ++k) lie += Xa[k] * Jb[i][k] - Xb[k] * Ja[i][k];
      double expect = 0.0;
      for (int c = 1; c <= n; ++c) {
        double C = to_double(alg.structure_constant(a, b, c));
        if (C != 0.0) expect += C * frame(c, g)[i];
      }
      worst = std::max(worst, std::abs(lie - expect));
    }
    double lie0 = 0.0;
    for (int k = 0; k < n; ++k) lie0 += Xa[k] * Db[k] - Xb[k] * Da[k];
    double expect0 = to_double(F(a, b)) * center_sign;
    for (int c = 1; c <= n; ++c) {
      double C = to_double(alg.structure_constant(a, b, c));
      if (C != 0.0) expect0 += C * frame0(c, g);
    }
    worst = std::max(worst, std::abs(lie0 - expect0));
  };

  for (int p = 0; p < points; ++p) {
    std::vector<double> g(n);
    for (double& x : g) x = dist(rng);

    for (int a = 1; a <= n; ++a) {
      auto s = chart.sigma(a, g);
      for (int b = 1; b <= n; ++b) {
        auto e = chart.eta(b, g);
        double pairing = 0.0;
        for (int i = 0; i < n; ++i) pairing += s[i] * e[i];
        audit.duality =
            std::max(audit.duality, std::abs(pairing - (a == b ? 1.0 : 0.0)));
      }
    }

    auto eta = [&](int a, const std::vector<double>& x) { return chart.eta(a, x); };
    auto eta0 = [&](int a, const std::vector<double>& x) { return chart.eta0(a, x); };
    auto xi = [&](int a, const std::vector<double>& x) { return chart.xi(a, x); };
    auto xi0 = [&](int a, const std::vector<double>& x) { return chart.xi0(a, x); };

    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        eval_pair(eta, eta0, -1.0, g, a, b, audit.eta_commutators);
        eval_pair(xi, xi0, +1.0, g, a, b, audit.xi_commutators);
      }

    // mixed brackets: left and right translations commute, so the frames
    // (and their central lifts) must too
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        auto Xa = chart.eta(a, g);
        auto Xb = chart.xi(b, g);
        auto Ja = field_jacobian(
            [&](const std::vector<double>& x) { return chart.eta(a, x); }, g);
        auto Jb = field_jacobian(
            [&](const std::vector<double>& x) { return chart.xi(b, x); }, g);
        for (int i = 0; i < n; ++i) {
          double lie = 0.0;
          for (int k = 0; k < n; ++k)
            lie += Xa[k] * Jb[i][k] - Xb[k] * Ja[i][k];
          audit.mixed_commutators =
              std::max(audit.mixed_commutators, std::abs(lie));
        }
        auto Da = field_jacobian(
            [&](const std::vector<double>& x) {
              return std::vector<double>{chart.eta0(a, x)};
            },
            g)[0];
        auto Db = field_jacobian(
            [&](const std::vector<double>& x) {
              return std::vector<double>{chart.xi0(b, x)};
            },
            g)[0];
        double lie0 = 0.0;
        for (int k = 0; k < n; ++k) lie0 += Xa[k] * Db[k] - Xb[k] * Da[k];
        audit.mixed_commutators =
            std::max(audit.mixed_commutators, std::abs(lie0));
      }
  }
  return audit;
}

}  // namespace magflow
