// End-to-end acceptance checks. Each numbered criterion prints a single
// PASS/FAIL line with the measured value against its tolerance; the process
// exit code is the number of failures.

#include "magflow/catalog.hpp"
#include "magflow/extension.hpp"
#include "magflow/flows.hpp"
#include "magflow/integrals.hpp"
#include "magflow/models.hpp"
#include "magflow/potential.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace magflow;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& what,
            const std::string& detail) {
  if (!ok) ++failures;
  std::printf("[%2d] %s  %s: %s\n", num, ok ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

TwoCochain random_cochain(int dim, std::mt19937_64& rng) {
  TwoCochain F(dim);
  for (int a = 1; a <= dim; ++a)
    for (int b = a + 1; b <= dim; ++b) F.set(a, b, random_rational(rng));
  return F;
}

LieAlgebra manual_extension(const LieAlgebra& g, const TwoCochain& F) {
  int n = g.dim();
  LieAlgebra ext("manual", n + 1, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      std::vector<BracketTerm> terms;
      Rational f = F(a, b);
      if (f != 0) terms.push_back({0, f});
      for (int c = 1; c <= n; ++c) {
        Rational v = g.structure_constant(a, b, c);
        if (v != 0) terms.push_back({c, v});
      }
      if (!terms.empty()) ext.set_bracket(a, b, std::move(terms));
    }
  return ext;
}

// --- criteria --------------------------------------------------------------

void criterion_1_cohomology() {
  auto t0 = std::chrono::steady_clock::now();
  CohomologyReport rep = cohomology(g7_algebra());
  double secs = seconds_since(t0);

  TwoCochain f14_24(4);
  f14_24.set(1, 4, Rational(1));
  f14_24.set(2, 4, Rational(1));
  TwoCochain e12(4), e13(4), e23(4);
  e12.set(1, 2, Rational(1));
  e13.set(1, 3, Rational(1));
  e23.set(2, 3, Rational(1));

  bool dims = rep.dim_Z2 == 4 && rep.dim_B2 == 1 && rep.dim_H2 == 3;
  bool bases = rep.Z2_basis.size() == 4 && rep.Z2_basis[0] == e12 &&
               rep.Z2_basis[1] == e13 && rep.Z2_basis[2] == f14_24 &&
               rep.Z2_basis[3] == e23 && rep.B2_basis.size() == 1 &&
               rep.B2_basis[0] == f14_24 && rep.H2_representatives.size() == 3;
  report(1, dims && bases && secs < 1.0,
         "cocycle space of the solvable model, exact bases",
         "dims (" + std::to_string(rep.dim_Z2) + "," +
             std::to_string(rep.dim_B2) + "," + std::to_string(rep.dim_H2) +
             ") want (4,1,3), canonical bases " +
             (bases ? "exact" : "WRONG") + ", " + fmt(secs) + "s (limit 1s)");
}

void criterion_2_dichotomy() {
  IndexOptions opts;
  opts.certify = true;
  int checked = 0, good = 0;
  LieAlgebra g = g7_algebra();
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        TwoCochain F = g7_cocycle(Rational(a), Rational(b), Rational(c));
        IndexReport r = cohomology_index(g, F, opts);
        int want = (b == c) ? 2 : 0;
        ++checked;
        if (r.index == want && r.certified) ++good;
      }
  report(2, checked == 27 && good == 27,
         "twisted index dichotomy over the full parameter grid",
         std::to_string(good) + "/" + std::to_string(checked) +
             " triples in {0,1,2}^3 match (index 2 iff beta = gamma, else 0), "
             "certified");
}

void criterion_3_catalog() {
  auto t0 = std::chrono::steady_clock::now();
  CatalogReport rep = verify_catalog(42);
  double secs = seconds_since(t0);
  bool ok = rep.pass && rep.claims_passed == rep.claims_total &&
            rep.claims_flagged == 5 && secs < 30.0;
  report(3, ok, "full classification table verified",
         std::to_string(rep.claims_passed) + "/" +
             std::to_string(rep.claims_total) + " claims pass, " +
             std::to_string(rep.claims_flagged) +
             " flagged (reported with corrected conditions), " + fmt(secs) +
             "s (limit 30s)");
}

void criterion_4_torus_closed_form() {
  GroupChart chart = torus_chart();
  ChartFlow flow =
      magnetic_chart_flow(chart, Metric::identity(2), torus_cocycle(), 1.0);
  IntegrateOptions opts;
  opts.t1 = 2.0 * M_PI;
  opts.dt = 1e-3;
  std::vector<double> x0 = {0, 0, 1, 0};
  Trajectory traj = integrate(flow.rhs, x0, opts);
  double sup = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    std::vector<double> ref = torus_closed_form(x0, 1.0, traj.times[k]);
    for (int i = 0; i < 4; ++i)
      sup = std::max(sup, std::abs(traj.states[k][i] - ref[i]));
  }
  double ret = 0.0;
  for (int i = 0; i < 4; ++i)
    ret = std::max(ret, std::abs(traj.states.back()[i] - x0[i]));
  report(4, sup < 1e-6 && ret < 1e-6,
         "charged torus flow vs closed form over one period",
         "sup deviation " + fmt(sup) + " (limit 1e-6), return-to-start " +
             fmt(ret) + " (limit 1e-6)");
}

void criterion_5_chart_integrals() {
  GroupChart chart = g7_chart(1.0, 1.0, 1.0);
  TwoCochain F = g7_cocycle(Rational(1), Rational(1), Rational(1));
  ChartFlow flow = magnetic_chart_flow(chart, Metric::identity(4), F, 1.0);
  std::vector<AuditFunction> audits;
  for (auto& xi : linear_integrals(chart, 1.0))
    audits.push_back(
        {xi.name, [v = xi.value](double, const std::vector<double>& x) {
           return v(x);
         }});
  IntegrateOptions opts;
  opts.t1 = 10.0;
  opts.dt = 1e-3;
  opts.stride = 100;
  Trajectory traj =
      integrate(flow.rhs, {0, 0, 0, 0, 1, 1, 1, 1}, opts, audits);
  double worst = 0.0;
  for (const auto& [name, v] : traj.max_drift) worst = std::max(worst, v);
  report(5, traj.max_drift.size() == 4 && worst < 1e-8,
         "four linear integrals conserved along the chart flow",
         "max relative drift " + fmt(worst) + " over t in [0,10] (limit 1e-8)");
}

void criterion_6_casimirs() {
  ReducedFlow flow = reduced_flow(
      g7_algebra(), g7_cocycle(Rational(1), Rational(1), Rational(1)),
      Metric::identity(4));
  auto casimirs = g7_casimirs(1.0, 1.0, 1.0);
  std::vector<AuditFunction> audits;
  for (auto& K : casimirs)
    audits.push_back(
        {K.name, [v = K.value](double, const std::vector<double>& x) {
           return v(x);
         }});
  IntegrateOptions opts;
  opts.t1 = 10.0;
  opts.dt = 1e-3;
  opts.stride = 100;
  Trajectory traj =
      integrate(flow.rhs, {-1.0, 0.7, -0.4, 0.3, 1.2}, opts, audits);
  double worst = 0.0;
  for (const auto& [name, v] : traj.max_drift) worst = std::max(worst, v);
  report(6, audits.size() == 3 && worst < 1e-8,
         "all three conserved functions hold on the coadjoint flow",
         "max relative drift " + fmt(worst) + " over t in [0,10] (limit 1e-8)");
}

void criterion_7_bracket_audit() {
  BracketAudit g7a = bracket_audit(
      g7_chart(1.0, 1.0, 1.0), g7_algebra(),
      g7_cocycle(Rational(1), Rational(1), Rational(1)), 1.0, 100, 42);
  BracketAudit tor = bracket_audit(torus_chart(), torus_algebra(),
                                   torus_cocycle(), 1.0, 100, 42);
  double worst = std::max(g7a.max_residual, tor.max_residual);
  report(7, g7a.points == 100 && tor.points == 100 && worst < 1e-9,
         "integrals close under the magnetic bracket",
         "max residual " + fmt(worst) +
             " over 100 points per chart, seed 42 (limit 1e-9)");
}

void criterion_8_moment_map() {
  GroupChart chart = g7_chart(1.0, 1.0, 1.0);
  ChartFlow ext = extended_chart_flow(chart, Metric::identity(4));
  ReducedFlow red = reduced_flow(
      g7_algebra(), g7_cocycle(Rational(1), Rational(1), Rational(1)),
      Metric::identity(4));

  std::vector<double> xe = {0, 0, 0, 0, 0, 1, 1, 1, 1, -1.0};
  std::vector<double> f0 = reduced_image(chart, xe);

  IntegrateOptions opts;
  opts.t1 = 5.0;
  opts.dt = 1e-3;
  opts.stride = 10;
  Trajectory te = integrate(ext.rhs, xe, opts);
  Trajectory tr = integrate(red.rhs, f0, opts);

  double sup = 0.0;
  bool aligned = te.times.size() == tr.times.size();
  if (aligned)
    for (std::size_t k = 0; k < te.times.size(); ++k) {
      std::vector<double> img = reduced_image(chart, te.states[k]);
      for (std::size_t a = 0; a < img.size(); ++a)
        sup = std::max(sup, std::abs(img[a] - tr.states[k][a]));
    }
  report(8, aligned && sup < 1e-6,
         "extended flow projects onto the coadjoint flow",
         "sup momentum mismatch " + fmt(sup) +
             " over t in [0,5] (limit 1e-6)");
}

void criterion_9_potential() {
  GroupChart chart = g7_chart(1.0, 2.0, 3.0);
  VectorPotential pot = vector_potential(chart);
  double curl = potential_curl_residual(
      chart, g7_cocycle(Rational(1), Rational(2), Rational(3)), pot, 100, 42);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  double coeff = 0.0;
  for (int k = 0; k < 20; ++k) {
    std::vector<double> g(4);
    for (double& v : g) v = dist(rng);
    std::vector<double> A = pot.A(g);
    coeff = std::max(coeff, std::abs(A[0]));
    coeff = std::max(coeff, std::abs(A[1] - 1.0 * g[0]));
    coeff = std::max(coeff, std::abs(A[2] - (2.0 * g[0] + 3.0 * g[1])));
    coeff = std::max(coeff, std::abs(A[3]));
  }
  report(9, curl < 1e-9 && coeff < 1e-12 && pot.global,
         "vector potential differentiates to the magnetic form",
         "curl residual " + fmt(curl) +
             " at 100 points (limit 1e-9); closed-form coefficients (0, g1, "
             "2g1+3g2, 0) off by " +
             fmt(coeff));
}

void criterion_10_properties() {
  std::mt19937_64 rng(20240815);
  long equiv_checked = 0, equiv_good = 0;
  int closed_seen = 0, open_seen = 0;
  for (const auto& entry : catalog_entries()) {
    ParamMap params;
    for (const auto& spec : entry.algebra_params)
      params[spec.name] =
          spec.kind == ParamKind::Sign ? Rational(1) : Rational(2);
    LieAlgebra g = entry.build(params);
    for (int k = 0; k < 500; ++k) {
      TwoCochain F = random_cochain(g.dim(), rng);
      bool closed = is_cocycle(g, F);
      bool jacobi = validate_algebra(manual_extension(g, F)).empty();
      ++equiv_checked;
      if (closed == jacobi) ++equiv_good;
      (closed ? closed_seen : open_seen)++;
    }
  }

  IndexOptions opts;
  opts.certify = true;
  LieAlgebra g = g7_algebra();
  TwoCochain base = g7_cocycle(Rational(1), Rational(1), Rational(1));
  int base_index = cohomology_index(g, base, opts).index;
  int shifts_checked = 0, shifts_good = 0;
  bool parity_ok = true;
  for (int k = 0; k < 50; ++k) {
    Covector lam;
    lam.components.resize(4);
    for (auto& c : lam.components) c = random_rational(rng);
    TwoCochain dl = trivial_cocycle(g, lam);
    TwoCochain shifted(4);
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b) {
        Rational v = base(a, b) + dl(a, b);
        if (v != 0) shifted.set(a, b, v);
      }
    IndexReport r = cohomology_index(g, shifted, opts);
    ++shifts_checked;
    if (r.index == base_index) ++shifts_good;
    if ((r.dim - r.index) % 2 != 0) parity_ok = false;
  }

  int plain = algebra_index(g, opts).index;
  int pure_checked = 0, pure_good = 0;
  for (int k = 0; k < 25; ++k) {
    Covector lam;
    lam.components.resize(4);
    for (auto& c : lam.components) c = random_rational(rng);
    ++pure_checked;
    if (cohomology_index(g, trivial_cocycle(g, lam), opts).index == plain)
      ++pure_good;
  }

  bool ok = equiv_good == equiv_checked && closed_seen > 0 && open_seen > 0 &&
            shifts_good == shifts_checked && pure_good == pure_checked &&
            parity_ok;
  report(10, ok, "structural properties hold exactly",
         std::to_string(equiv_good) + "/" + std::to_string(equiv_checked) +
             " extension-Jacobi equivalences (" + std::to_string(closed_seen) +
             " closed), " + std::to_string(shifts_good) + "/" +
             std::to_string(shifts_checked) + " coboundary shifts, " +
             std::to_string(pure_good) + "/" + std::to_string(pure_checked) +
             " pure coboundaries at the plain index, parity " +
             (parity_ok ? "even" : "BROKEN"));
}

void criterion_11_convergence() {
  ReducedFlow flow = reduced_flow(
      g7_algebra(), g7_cocycle(Rational(1), Rational(1), Rational(1)),
      Metric::identity(4));
  std::vector<AuditFunction> audits = {
      {"H", [&](double, const std::vector<double>& x) {
         return flow.energy(x);
       }}};
  auto drift_at = [&](double dt) {
    IntegrateOptions opts;
    opts.t1 = 10.0;
    opts.dt = dt;
    opts.stride = 100;
    Trajectory t =
        integrate(flow.rhs, {-1.0, 0.7, -0.4, 0.3, 1.2}, opts, audits);
    return t.max_drift.at("H");
  };
  double coarse = drift_at(4e-3);
  double fine = drift_at(2e-3);
  double ratio = coarse / std::max(fine, 1e-300);
  report(11, ratio >= 8.0, "energy drift shrinks at fourth order",
         "drift(dt=4e-3) = " + fmt(coarse) + ", drift(dt=2e-3) = " +
             fmt(fine) + ", ratio " + fmt(ratio) + " (want >= 8)");
}

}  // namespace

int main() {
  std::printf("acceptance checks\n");
  criterion_1_cohomology();
  criterion_2_dichotomy();
  criterion_3_catalog();
  criterion_4_torus_closed_form();
  criterion_5_chart_integrals();
  criterion_6_casimirs();
  criterion_7_bracket_audit();
  criterion_8_moment_map();
  criterion_9_potential();
  criterion_10_properties();
  criterion_11_convergence();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
