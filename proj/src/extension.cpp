#include "magflow/extension.hpp"

#include "magflow/errors.hpp"

#include <cmath>
#include <random>

namespace magflow {

CentralExtension central_extension(const LieAlgebra& g, const TwoCochain& F) {
  if (g.base_index() != 1)
    throw std::invalid_argument("central_extension expects a 1-based algebra");
  auto violations = cocycle_violations(g, F);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw NotACocycle(v.a, v.b, v.c, format_rational(v.residual));
  }

  LieAlgebra ext(g.name() + "~", g.dim() + 1, 0);
  for (int a = 1; a <= g.dim(); ++a)
    for (int b = a + 1; b <= g.dim(); ++b) {
      std::vector<BracketTerm> terms;
      for (int c = 1; c <= g.dim(); ++c) {
        Rational v = g.structure_constant(a, b, c);
        if (v != 0) terms.push_back({c, v});
      }
      Rational f = F(a, b);
      if (f != 0) terms.push_back({0, f});
      if (!terms.empty()) ext.set_bracket(a, b, std::move(terms));
    }
  return {g, F, std::move(ext)};
}

std::pair<LieAlgebra, TwoCochain> split_extension(const LieAlgebra& extended) {
  if (extended.base_index() != 0)
    throw ParseError("split_extension expects a 0-based extended algebra");
  int n = extended.dim() - 1;
  if (n < 1) throw ParseError("extended algebra must have dim >= 2");
  for (int b = 1; b <= n; ++b)
    for (int c = 0; c <= n; ++c)
      if (extended.structure_constant(0, b, c) != 0)
        throw ParseError("index 0 is not central in the given algebra");

  LieAlgebra base(extended.name() + ".base", n, 1);
  TwoCochain F;
  F.dim = n;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      std::vector<BracketTerm> terms;
      for (int c = 1; c <= n; ++c) {
        Rational v = extended.structure_constant(a, b, c);
        if (v != 0) terms.push_back({c, v});
      }
      if (!terms.empty()) base.set_bracket(a, b, std::move(terms));
      Rational f = extended.structure_constant(a, b, 0);
      if (f != 0) F.entries[{a, b}] = f;
    }
  return {std::move(base), std::move(F)};
}

IndexReport extended_annihilator_dim(const CentralExtension& ext,
                                     const IndexOptions& opts) {
  return algebra_index(ext.extended, opts);
}

CasimirAudit verify_casimir(const LieAlgebra& extended, const DualFunction& K,
                            int points, std::uint64_t seed) {
  int lo = extended.base_index();
  int n = extended.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);

  // Structure constants as doubles, 0-indexed slots.
  std::vector<std::vector<std::vector<double>>> C(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        C[a][b][c] =
            to_double(extended.structure_constant(lo + a, lo + b, lo + c));

  CasimirAudit audit;
  int accepted = 0;
  int attempts = 0;
  while (accepted < points && attempts < points * 100) {
    ++attempts;
    std::vector<double> f(n);
    for (double& x : f) x = dist(rng);
    if (K.in_domain && !K.in_domain(f)) continue;
    ++accepted;

    std::vector<double> grad = K.gradient(f);

    // analytic gradient vs 4th-order central differences
    for (int b = 0; b < n; ++b) {
      double h = 1e-5 * std::max(1.0, std::abs(f[b]));
      auto at = [&](double x) {
        std::vector<double> ff = f;
        ff[b] = x;
        return K.value(ff);
      };
      double d = (at(f[b] - 2 * h) - 8 * at(f[b] - h) + 8 * at(f[b] + h) -
                  at(f[b] + 2 * h)) /
                 (12 * h);
      double scale = std::max(1.0, std::abs(grad[b]));
      audit.max_gradient_error =
          std::max(audit.max_gradient_error, std::abs(d - grad[b]) / scale);
    }

    for (int a = 0; a < n; ++a) {
      double r = 0.0;
      for (int b = 0; b < n; ++b) {
        if (grad[b] == 0.0) continue;
        double bracket_ab = 0.0;
        for (int c = 0; c < n; ++c)
          if (C[a][b][c] != 0.0) bracket_ab += C[a][b][c] * f[c];
        r += bracket_ab * grad[b];
      }
      audit.max_residual = std::max(audit.max_residual, std::abs(r));
    }
  }
  audit.points = accepted;
  if (accepted < points)
    throw std::runtime_error("verify_casimir: domain too restrictive to sample");
  return audit;
}

}  // namespace magflow
