#include <doctest.h>

#include "magflow/flows.hpp"
#include "magflow/integrals.hpp"
#include "magflow/models.hpp"
#include "magflow/potential.hpp"

#include <cmath>

using namespace magflow;

TEST_CASE("numeric field Jacobian is accurate on a smooth map") {
  auto field = [](const std::vector<double>& g) {
    return std::vector<double>{std::sin(g[0]) * std::cos(g[1]),
                               g[0] * g[0] * g[1] * g[1] * g[1]};
  };
  std::vector<double> g = {0.7, -0.3};
  auto J = field_jacobian(field, g);
  double x = g[0], y = g[1];
  CHECK(std::abs(J[0][0] - std::cos(x) * std::cos(y)) < 1e-9);
  CHECK(std::abs(J[0][1] + std::sin(x) * std::sin(y)) < 1e-9);
  CHECK(std::abs(J[1][0] - 2 * x * y * y * y) < 1e-9);
  CHECK(std::abs(J[1][1] - 3 * x * x * y * y) < 1e-9);
}

TEST_CASE("installed frame Jacobian agrees with numeric differentiation") {
  GroupChart chart = g7_chart(1.0, 2.0, 3.0);
  std::vector<double> g = {0.3, -0.2, 0.5, 0.1};
  for (int a = 1; a <= 4; ++a) {
    auto analytic = eta_jacobian(chart, a, g);
    auto numeric = field_jacobian(
        [&](const std::vector<double>& q) { return chart.eta(a, q); }, g);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        CHECK(std::abs(analytic[i][k] - numeric[i][k]) < 1e-9);
  }
  // spot value: the scaled direction differentiates to exp(-(g1+g2))
  auto J4 = eta_jacobian(chart, 4, g);
  CHECK(J4[3][0] == doctest::Approx(std::exp(-0.1)).epsilon(1e-12));
  CHECK(J4[3][1] == doctest::Approx(std::exp(-0.1)).epsilon(1e-12));
}

TEST_CASE("declared frames realize the algebra at random points") {
  {
    ChartAudit audit = audit_chart(torus_chart(), torus_algebra(),
                                   torus_cocycle(), 40, 42);
    CHECK(audit.points == 40);
    CHECK(audit.duality < 1e-12);
    CHECK(audit.eta_commutators < 1e-6);
    CHECK(audit.xi_commutators < 1e-6);
    CHECK(audit.mixed_commutators < 1e-6);
  }
  {
    ChartAudit audit = audit_chart(
        g7_chart(1.0, 2.0, 3.0), g7_algebra(),
        g7_cocycle(Rational(1), Rational(2), Rational(3)), 40, 42);
    CHECK(audit.points == 40);
    CHECK(audit.duality < 1e-12);
    CHECK(audit.eta_commutators < 1e-6);
    CHECK(audit.xi_commutators < 1e-6);
    CHECK(audit.mixed_commutators < 1e-6);
  }
}

TEST_CASE("vector potential: exact coefficients and global flag") {
  GroupChart chart = g7_chart(1.0, 2.0, 3.0);
  VectorPotential pot = vector_potential(chart);
  CHECK(pot.global);
  std::vector<double> g = {0.3, 0.5, -0.7, 0.2};
  auto A = pot.A(g);
  REQUIRE(A.size() == 4);
  CHECK(std::abs(A[0]) < 1e-14);
  CHECK(A[1] == doctest::Approx(0.3).epsilon(1e-14));          // alpha g1
  CHECK(A[2] == doctest::Approx(2 * 0.3 + 3 * 0.5).epsilon(1e-14));
  CHECK(std::abs(A[3]) < 1e-14);

  double curl = potential_curl_residual(
      chart, g7_cocycle(Rational(1), Rational(2), Rational(3)), pot, 40, 42);
  CHECK(curl < 1e-9);

  VectorPotential torus_pot = vector_potential(torus_chart());
  CHECK_FALSE(torus_pot.global);  // compact directions carry flux
  auto At = torus_pot.A({0.4, -0.3});
  CHECK(std::abs(At[0]) < 1e-14);
  CHECK(At[1] == doctest::Approx(0.4).epsilon(1e-14));
  double curl_t =
      potential_curl_residual(torus_chart(), torus_cocycle(), torus_pot, 40, 7);
  CHECK(curl_t < 1e-9);
}

TEST_CASE("linear integrals: frozen values") {
  // flat torus, charge 2: xi1 = p_phi + e psi, xi2 = p_psi - e phi
  auto torus_ints = linear_integrals(torus_chart(), 2.0);
  REQUIRE(torus_ints.size() == 2);
  CHECK(torus_ints[0].name == "xi1");
  CHECK(torus_ints[1].name == "xi2");
  std::vector<double> x = {0.4, -0.3, 0.7, 0.2};
  CHECK(torus_ints[0].value(x) == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(torus_ints[1].value(x) == doctest::Approx(-0.6).epsilon(1e-13));

  // the solvable chart at the identity reduces them to the bare momenta
  auto g7_ints = linear_integrals(g7_chart(1.0, 1.0, 1.0), 1.0);
  REQUIRE(g7_ints.size() == 4);
  std::vector<double> xe = {0, 0, 0, 0, 0.5, -1.0, 2.0, 0.25};
  for (int a = 0; a < 4; ++a)
    CHECK(g7_ints[a].value(xe) == doctest::Approx(xe[4 + a]).epsilon(1e-13));
}

TEST_CASE("integrals close under the magnetic bracket") {
  GroupChart chart = torus_chart();
  TwoCochain F = torus_cocycle();
  double e = 2.0;
  auto ints = linear_integrals(chart, e);
  std::vector<double> x = {0.4, -0.3, 0.7, 0.2};
  // abelian base: {xi1, xi2} = -e F_12 = -e
  double br = deformed_bracket(chart, F, e, ints[0], ints[1], x);
  CHECK(br == doctest::Approx(-2.0).epsilon(1e-9));

  BracketAudit audit = bracket_audit(chart, torus_algebra(), F, e, 100, 42);
  CHECK(audit.points == 100);
  CHECK(audit.max_residual < 1e-9);

  BracketAudit g7_audit = bracket_audit(
      g7_chart(1.0, 1.0, 1.0), g7_algebra(),
      g7_cocycle(Rational(1), Rational(1), Rational(1)), 1.0, 100, 42);
  CHECK(g7_audit.max_residual < 1e-9);
}

TEST_CASE("momenta of the extended state project onto the coadjoint flow") {
  GroupChart chart = torus_chart();
  // extended state (phi, psi, theta, p_phi, p_psi, p0)
  std::vector<double> xe = {0.4, -0.3, 0.0, 0.7, 0.2, -1.0};
  std::vector<double> f = reduced_image(chart, xe);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(f[1] == doctest::Approx(0.7).epsilon(1e-14));   // p_phi
  CHECK(f[2] == doctest::Approx(0.6).epsilon(1e-14));   // p_psi - phi p0

  // along the extended flow the image satisfies the reduced equations
  ChartFlow ext = extended_chart_flow(chart, Metric::identity(2));
  ReducedFlow red =
      reduced_flow(torus_algebra(), torus_cocycle(), Metric::identity(2));
  std::vector<double> dxe, df_expect;
  ext.rhs(0.0, xe, dxe);
  red.rhs(0.0, f, df_expect);
  // numeric push of the image: f(x + h dx) - f(x - h dx) / 2h
  double h = 1e-6;
  std::vector<double> xp = xe, xm = xe;
  for (std::size_t i = 0; i < xe.size(); ++i) {
    xp[i] += h * dxe[i];
    xm[i] -= h * dxe[i];
  }
  std::vector<double> fp = reduced_image(chart, xp);
  std::vector<double> fm = reduced_image(chart, xm);
  for (int a = 0; a <= 2; ++a) {
    double dfa = (fp[a] - fm[a]) / (2 * h);
    CHECK(std::abs(dfa - df_expect[a]) < 1e-7);
  }
}
