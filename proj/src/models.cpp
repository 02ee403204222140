#include "magflow/models.hpp"

#include <cmath>

namespace magflow {

LieAlgebra torus_algebra() {
  return LieAlgebra("torus", 2);  // abelian
}

TwoCochain torus_cocycle() {
  TwoCochain F;
  F.dim = 2;
  F.set(1, 2, 1);
  return F;
}

GroupChart torus_chart() {
  GroupChart c;
  c.name = "torus";
  c.dim = 2;
  c.eta = [](int a, const std::vector<double>&) {
    std::vector<double> v(2, 0.0);
    v[a - 1] = -1.0;
    return v;
  };
  c.xi = [](int a, const std::vector<double>&) {
    std::vector<double> v(2, 0.0);
    v[a - 1] = 1.0;
    return v;
  };
  c.sigma = [](int a, const std::vector<double>&) {
    std::vector<double> v(2, 0.0);
    v[a - 1] = -1.0;
    return v;
  };
  // central lift of the Heisenberg group law (a,b,c)(a',b',c') =
  // (a+a'-cb', b+b', c+c'): right frame picks up +g^1 on the circle in the
  // second slot, left frame -g^2 in the first.
  c.eta0 = [](int a, const std::vector<double>& g) {
    return a == 2 ? g[0] : 0.0;
  };
  c.xi0 = [](int a, const std::vector<double>& g) {
    return a == 1 ? -g[1] : 0.0;
  };
  c.Ad = [](const std::vector<double>&) {
    return std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0}};
  };
  c.deta = [](int, const std::vector<double>&) {
    return std::vector<std::vector<double>>(2, std::vector<double>(2, 0.0));
  };
  c.deta0 = [](int a, const std::vector<double>&) {
    std::vector<double> d(2, 0.0);
    if (a == 2) d[0] = 1.0;
    return d;
  };
  c.periodic = {true, true};
  return c;
}

std::vector<double> torus_closed_form(const std::vector<double>& x0,
                                      double charge, double t) {
  double phi0 = x0[0], psi0 = x0[1], pphi0 = x0[2], ppsi0 = x0[3];
  if (std::abs(charge) < 1e-300) {
    return {phi0 + pphi0 * t, psi0 + ppsi0 * t, pphi0, ppsi0};
  }
  double s = std::sin(charge * t), cm1 = std::cos(charge * t) - 1.0;
  return {
      phi0 + (pphi0 * s + ppsi0 * cm1) / charge,
      psi0 + (-pphi0 * cm1 + ppsi0 * s) / charge,
      pphi0 * (cm1 + 1.0) - ppsi0 * s,
      pphi0 * s + ppsi0 * (cm1 + 1.0),
  };
}

LieAlgebra g7_algebra() {
  LieAlgebra g("g7", 4);
  g.set_bracket(1, 4, {{4, Rational(1)}});
  g.set_bracket(2, 4, {{4, Rational(1)}});
  return g;
}

TwoCochain g7_cocycle(const Rational& alpha, const Rational& beta,
                      const Rational& gamma) {
  TwoCochain F;
  F.dim = 4;
  F.set(1, 2, alpha);
  F.set(1, 3, beta);
  F.set(2, 3, gamma);
  return F;
}

GroupChart g7_chart(double alpha, double beta, double gamma) {
  GroupChart c;
  c.name = "g7";
  c.dim = 4;
  // X = g^1 + g^2 scales the nilpotent direction: sigma^4 = -exp(X) dg^4,
  // eta_4 = -exp(-X) d/dg^4.
  c.eta = [](int a, const std::vector<double>& g) {
    std::vector<double> v(4, 0.0);
    if (a == 4)
      v[3] = -std::exp(-(g[0] + g[1]));
    else
      v[a - 1] = -1.0;
    return v;
  };
  c.xi = [](int a, const std::vector<double>& g) {
    std::vector<double> v(4, 0.0);
    if (a <= 2) {
      v[a - 1] = 1.0;
      v[3] = -g[3];
    } else {
      v[a - 1] = 1.0;
    }
    return v;
  };
  c.sigma = [](int a, const std::vector<double>& g) {
    std::vector<double> v(4, 0.0);
    if (a == 4)
      v[3] = -std::exp(g[0] + g[1]);
    else
      v[a - 1] = -1.0;
    return v;
  };
  c.eta0 = [alpha, beta, gamma](int a, const std::vector<double>& g) {
    switch (a) {
      case 2: return alpha * g[0];
      case 3: return beta * g[0] + gamma * g[1];
      default: return 0.0;
    }
  };
  c.xi0 = [alpha, beta, gamma](int a, const std::vector<double>& g) {
    switch (a) {
      case 1: return -(alpha * g[1] + beta * g[2]);
      case 2: return -gamma * g[2];
      default: return 0.0;
    }
  };
  c.Ad = [](const std::vector<double>& g) {
    double E = std::exp(g[0] + g[1]);
    std::vector<std::vector<double>> m(4, std::vector<double>(4, 0.0));
    m[0][0] = m[1][1] = m[2][2] = 1.0;
    m[0][3] = m[1][3] = -g[3] * E;
    m[3][3] = E;
    return m;
  };
  c.deta = [](int a, const std::vector<double>& g) {
    std::vector<std::vector<double>> J(4, std::vector<double>(4, 0.0));
    if (a == 4) {
      double e = std::exp(-(g[0] + g[1]));
      J[3][0] = e;  // d(-exp(-X))/dg^1
      J[3][1] = e;
    }
    return J;
  };
  c.deta0 = [alpha, beta, gamma](int a, const std::vector<double>&) {
    std::vector<double> d(4, 0.0);
    if (a == 2) d[0] = alpha;
    if (a == 3) {
      d[0] = beta;
      d[1] = gamma;
    }
    return d;
  };
  c.periodic = {false, false, false, false};
  return c;
}

std::vector<DualFunction> g7_casimirs(double alpha, double beta,
                                      double gamma) {
  std::vector<DualFunction> out;

  DualFunction K0;
  K0.name = "K0";
  K0.value = [](const std::vector<double>& f) { return f[0]; };
  K0.gradient = [](const std::vector<double>& f) {
    std::vector<double> g(f.size(), 0.0);
    g[0] = 1.0;
    return g;
  };
  out.push_back(std::move(K0));

  if (beta != gamma) return out;  // only the central Casimir survives

  bool k1_nontrivial = (beta != 0.0 || alpha != 0.0);
  if (k1_nontrivial) {
    DualFunction K1;
    K1.name = "K1";
    K1.value = [alpha, beta](const std::vector<double>& f) {
      return beta * (f[1] - f[2]) + alpha * f[3];
    };
    K1.gradient = [alpha, beta](const std::vector<double>& f) {
      std::vector<double> g(f.size(), 0.0);
      g[1] = beta;
      g[2] = -beta;
      g[3] = alpha;
      return g;
    };
    out.push_back(std::move(K1));
  }

  DualFunction K2;
  K2.name = "K2";
  K2.domain_note = "f4 > 0";
  K2.in_domain = [](const std::vector<double>& f) { return f[4] > 1e-9; };
  K2.value = [beta](const std::vector<double>& f) {
    return std::pow(f[4], beta * f[0]) * std::exp(-f[3]);
  };
  K2.gradient = [beta](const std::vector<double>& f) {
    std::vector<double> g(f.size(), 0.0);
    double K = std::pow(f[4], beta * f[0]) * std::exp(-f[3]);
    g[0] = beta * std::log(f[4]) * K;
    g[3] = -K;
    g[4] = beta * f[0] * K / f[4];
    return g;
  };
  out.push_back(std::move(K2));

  return out;
}

}  // namespace magflow
