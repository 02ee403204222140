#include "magflow/flows.hpp"

#include "magflow/errors.hpp"

#include <cmath>

namespace magflow {

ReducedFlow reduced_flow(const LieAlgebra& g, const TwoCochain& F,
                         const Metric& G) {
  if (g.base_index() != 1)
    throw std::invalid_argument("reduced_flow expects the base algebra");
  if (F.dim != g.dim() || G.dim() != g.dim())
    throw ParseError("algebra, cocycle and metric dimensions disagree");
  int n = g.dim();

  auto C = std::make_shared<std::vector<std::vector<std::vector<double>>>>(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        (*C)[a][b][c] =
            to_double(g.structure_constant(a + 1, b + 1, c + 1));
  auto Fd = std::make_shared<std::vector<std::vector<double>>>(
      n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) (*Fd)[a][b] = to_double(F(a + 1, b + 1));
  auto Gi = std::make_shared<std::vector<std::vector<double>>>(G.G_inv_d());

  ReducedFlow flow;
  flow.n = n;
  flow.rhs = [n, C, Fd, Gi](double, const std::vector<double>& x,
                            std::vector<double>& dx) {
    dx.assign(n + 1, 0.0);
    const double f0 = x[0];
    // v = G^{-1} f over the base components
    std::vector<double> v(n, 0.0);
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) v[b] += (*Gi)[b][d] * x[1 + d];
    for (int a = 0; a < n; ++a) {
      double acc = 0.0;
      for (int b = 0; b < n; ++b) {
        if (v[b] == 0.0) continue;
        double q = (*Fd)[a][b] * f0;
        for (int c = 0; c < n; ++c)
          if ((*C)[a][b][c] != 0.0) q += (*C)[a][b][c] * x[1 + c];
        acc += q * v[b];
      }
      dx[1 + a] = acc;
    }
  };
  flow.energy = [n, Gi](const std::vector<double>& x) {
    double h = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) h += (*Gi)[a][b] * x[1 + a] * x[1 + b];
    return 0.5 * h;
  };
  return flow;
}

namespace {

struct ChartTables {
  int n;
  std::vector<std::vector<double>> Gi;
  std::vector<std::vector<double>> Fab;  // cocycle constants (may be empty)
};

// right momenta M_a = eta_a^i p_i
std::vector<double> right_momenta(const GroupChart& chart,
                                  const std::vector<double>& g,
                                  const double* p) {
  int n = chart.dim;
  std::vector<double> M(n, 0.0);
  for (int a = 1; a <= n; ++a) {
    auto e = chart.eta(a, g);
    double m = 0.0;
    for (int i = 0; i < n; ++i) m += e[i] * p[i];
    M[a - 1] = m;
  }
  return M;
}

}  // namespace

ChartFlow magnetic_chart_flow(const GroupChart& chart, const Metric& G,
                              const TwoCochain& F, double charge) {
  int n = chart.dim;
  if (G.dim() != n || F.dim != n)
    throw ParseError("chart, metric and cocycle dimensions disagree");

  auto tab = std::make_shared<ChartTables>();
  tab->n = n;
  tab->Gi = G.G_inv_d();
  tab->Fab.assign(n, std::vector<double>(n, 0.0));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) tab->Fab[a - 1][b - 1] = to_double(F(a, b));

  ChartFlow flow;
  flow.n = n;
  flow.state = 2 * n;
  flow.rhs = [chart, tab, charge](double, const std::vector<double>& x,
                                   std::vector<double>& dx) {
    int n = tab->n;
    std::vector<double> g(x.begin(), x.begin() + n);
    chart.require_inside(g);
    const double* p = x.data() + n;
    dx.assign(2 * n, 0.0);

    std::vector<double> M = right_momenta(chart, g, p);
    // u_a = G^{ab} M_b
    std::vector<double> u(n, 0.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) u[a] += tab->Gi[a][b] * M[b];

    // dg^i = sum_a u_a eta_a^i
    for (int a = 1; a <= n; ++a) {
      auto e = chart.eta(a, g);
      for (int i = 0; i < n; ++i) dx[i] += u[a - 1] * e[i];
    }

    // dH/dg^i = sum_ab G^{ab} (J_a p)^i M_b with J_a the eta_a Jacobian
    std::vector<double> dHdg(n, 0.0);
    for (int a = 1; a <= n; ++a) {
      if (u[a - 1] == 0.0) continue;
      auto J = eta_jacobian(chart, a, g);
      for (int i = 0; i < n; ++i) {
        double w = 0.0;
        for (int j = 0; j < n; ++j) w += J[j][i] * p[j];
        dHdg[i] += u[a - 1] * w;
      }
    }

    // F_ij(g) = F_ab sigma^a_i sigma^b_j (sum over all a, b)
    std::vector<std::vector<double>> S(n + 1);
    for (int a = 1; a <= n; ++a) S[a] = chart.sigma(a, g);
    for (int i = 0; i < n; ++i) {
      double lorentz = 0.0;
      for (int a = 1; a <= n; ++a) {
        if (S[a][i] == 0.0) continue;
        for (int b = 1; b <= n; ++b) {
          double f = tab->Fab[a - 1][b - 1];
          if (f == 0.0) continue;
          double sbj_dgj = 0.0;
          for (int j = 0; j < n; ++j) sbj_dgj += S[b][j] * dx[j];
          lorentz += f * S[a][i] * sbj_dgj;
        }
      }
      dx[n + i] = -dHdg[i] - charge * lorentz;
    }
  };
  flow.energy = [chart, tab](const std::vector<double>& x) {
    int n = tab->n;
    std::vector<double> g(x.begin(), x.begin() + n);
    std::vector<double> M = right_momenta(chart, g, x.data() + n);
    double h = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) h += tab->Gi[a][b] * M[a] * M[b];
    return 0.5 * h;
  };
  return flow;
}

ChartFlow extended_chart_flow(const GroupChart& chart, const Metric& G) {
  int n = chart.dim;
  if (G.dim() != n) throw ParseError("chart and metric dimensions disagree");
  auto Gi = std::make_shared<std::vector<std::vector<double>>>(G.G_inv_d());

  ChartFlow flow;
  flow.n = n;
  flow.state = 2 * n + 2;
  flow.rhs = [chart, Gi, n](double, const std::vector<double>& x,
                             std::vector<double>& dx) {
    std::vector<double> g(x.begin(), x.begin() + n);
    chart.require_inside(g);
    const double* p = x.data() + n + 1;
    const double p0 = x[2 * n + 1];
    dx.assign(2 * n + 2, 0.0);

    // Mt_a = eta_a^i p_i + eta0_a p_0 (right momenta on the extension)
    std::vector<double> Mt = right_momenta(chart, g, p);
    std::vector<double> eta0(n);
    for (int a = 1; a <= n; ++a) {
      eta0[a - 1] = chart.eta0(a, g);
      Mt[a - 1] += eta0[a - 1] * p0;
    }
    std::vector<double> u(n, 0.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) u[a] += (*Gi)[a][b] * Mt[b];

    for (int a = 1; a <= n; ++a) {
      auto e = chart.eta(a, g);
      for (int i = 0; i < n; ++i) dx[i] += u[a - 1] * e[i];
    }
    // circle direction: dtheta = dH/dp_0; the center contributes p_0
    double dtheta = p0;
    for (int a = 0; a < n; ++a) dtheta += u[a] * eta0[a];
    dx[n] = dtheta;

    for (int a = 1; a <= n; ++a) {
      if (u[a - 1] == 0.0) continue;
      auto J = eta_jacobian(chart, a, g);
      auto D = eta0_gradient(chart, a, g);
      for (int i = 0; i < n; ++i) {
        double w = D[i] * p0;
        for (int j = 0; j < n; ++j) w += J[j][i] * p[j];
        dx[n + 1 + i] -= u[a - 1] * w;
      }
    }
    dx[2 * n + 1] = 0.0;  // p_0 conserved: nothing depends on theta
  };
  flow.energy = [chart, Gi, n](const std::vector<double>& x) {
    std::vector<double> g(x.begin(), x.begin() + n);
    const double* p = x.data() + n + 1;
    const double p0 = x[2 * n + 1];
    std::vector<double> Mt = right_momenta(chart, g, p);
    for (int a = 1; a <= n; ++a) Mt[a - 1] += chart.eta0(a, g) * p0;
    double h = p0 * p0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) h += (*Gi)[a][b] * Mt[a] * Mt[b];
    return 0.5 * h;
  };
  return flow;
}

std::vector<double> reduced_image(const GroupChart& chart,
                                  const std::vector<double>& ext_state) {
  int n = chart.dim;
  std::vector<double> g(ext_state.begin(), ext_state.begin() + n);
  const double* p = ext_state.data() + n + 1;
  const double p0 = ext_state[2 * n + 1];
  std::vector<double> f(n + 1, 0.0);
  f[0] = p0;
  for (int a = 1; a <= n; ++a) {
    auto e = chart.eta(a, g);
    double m = chart.eta0(a, g) * p0;
    for (int i = 0; i < n; ++i) m += e[i] * p[i];
    f[a] = -m;
  }
  return f;
}

}  // namespace magflow
