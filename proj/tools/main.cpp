// Command-line front end: exact Lie-algebra cohomology, central extensions,
// integrability verdicts, magnetic geodesic simulation, and verification of
// the built-in classification catalog.
//
// Exit codes: 0 = success (including "not integrable" verdicts),
//             1 = mathematical failure (Jacobi violation, non-closed
//                 cochain, failed catalog claims, drift over threshold,
//                 integration breakdown),
//             2 = usage or input errors (bad files, unknown ids).

#include "magflow/catalog.hpp"
#include "magflow/errors.hpp"
#include "magflow/extension.hpp"
#include "magflow/flows.hpp"
#include "magflow/integrals.hpp"
#include "magflow/json_io.hpp"
#include "magflow/models.hpp"
#include "magflow/potential.hpp"
#include "magflow/rational.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace magflow;

namespace {

// ---------------------------------------------------------------- helpers

std::vector<double> parse_csv_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not a number in --init: '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("--init must be a comma-separated list");
  return out;
}

ParamMap parse_alg_params(const std::vector<std::string>& kvs) {
  ParamMap m;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ParseError("--alg-param expects name=value, got '" + kv + "'");
    auto v = parse_rational(kv.substr(eq + 1));
    if (!v) throw ParseError("bad rational in --alg-param: '" + kv + "'");
    m[kv.substr(0, eq)] = *v;
  }
  return m;
}

// --algebra accepts a JSON file or a catalog id (with --alg-param for
// parameterized entries).
LieAlgebra resolve_algebra(const std::string& arg,
                           const std::vector<std::string>& alg_params) {
  if (std::filesystem::exists(arg)) return load_algebra(arg);
  for (const auto& e : catalog_entries()) {
    if (e.id != arg) continue;
    ParamMap m = parse_alg_params(alg_params);
    for (const auto& spec : e.algebra_params)
      if (!m.count(spec.name))
        throw ParseError("catalog entry " + arg + " needs --alg-param " +
                         spec.name + "=<rational>");
    try {
      return e.build(m);
    } catch (const std::logic_error& err) {
      throw ParseError(err.what());
    }
  }
  throw EntryNotFound(arg);
}

Metric resolve_metric(const std::string& arg, int n) {
  if (arg.empty() || arg == "identity") return Metric::identity(n);
  Metric G = load_metric(arg);
  if (G.dim() != n)
    throw ParseError("metric dimension " + std::to_string(G.dim()) +
                     " does not match algebra dimension " + std::to_string(n));
  return G;
}

std::string fmt_cochain(const TwoCochain& F) {
  if (F.entries.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [ab, v] : F.entries) {
    if (v == 0) continue;
    std::string coef = format_rational(v);
    std::string term;
    if (coef == "1")
      term = "";
    else if (coef == "-1")
      term = "-";
    else
      term = coef + " ";
    term += "e" + std::to_string(ab.first) + "^e" + std::to_string(ab.second);
    if (first) {
      s = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
  }
  return s.empty() ? "0" : s;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, out);
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw ParseError("cannot open output file: " + out);
    os << text;
  }
}

struct SimCommon {
  std::string metric = "identity";
  std::string init;
  double charge = 1.0;
  double t1 = 1.0;
  double dt = 1e-3;
  std::string method = "rk4";
  double rtol = 1e-10;
  double atol = 1e-12;
  int stride = 1;
  bool audit = false;
  double max_drift = -1.0;  // < 0 disables the gate
  std::string format = "json";
  std::string out;
};

void add_sim_flags(CLI::App* cmd, SimCommon& s) {
  cmd->add_option("--metric", s.metric,
                  "metric JSON file or 'identity' (default)");
  cmd->add_option("--init", s.init, "comma-separated initial state")
      ->required();
  cmd->add_option("--charge", s.charge, "magnetic coupling e (default 1)");
  cmd->add_option("--t", s.t1, "final time (default 1)");
  cmd->add_option("--dt", s.dt, "step size / initial step (default 1e-3)");
  cmd->add_option("--method", s.method, "rk4 (fixed) or rk45 (adaptive)")
      ->check(CLI::IsMember({"rk4", "rk45"}));
  cmd->add_option("--rtol", s.rtol, "rk45 relative tolerance");
  cmd->add_option("--atol", s.atol, "rk45 absolute tolerance");
  cmd->add_option("--stride", s.stride, "record every n-th step (default 1)");
  cmd->add_flag("--audit", s.audit,
                "attach conserved-quantity audits beyond the energy");
  cmd->add_option("--max-drift", s.max_drift,
                  "exit 1 when any audit drift exceeds this bound");
  cmd->add_option("--format", s.format, "json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", s.out, "write the report to a file");
}

IntegrateOptions sim_options(const SimCommon& s) {
  IntegrateOptions io;
  io.t1 = s.t1;
  io.dt = s.dt;
  io.method = s.method == "rk45" ? Method::RK45 : Method::RK4;
  io.rtol = s.rtol;
  io.atol = s.atol;
  io.stride = s.stride;
  return io;
}

// Returns the process exit code (drift gate can demote success to 1).
int finish_sim(const Trajectory& traj, const SimCommon& s) {
  bool drift_ok = true;
  if (s.max_drift >= 0)
    for (const auto& [name, v] : traj.max_drift)
      if (!(v <= s.max_drift)) drift_ok = false;

  if (s.format == "json") {
    emit(trajectory_to_json(traj), s.out);
  } else if (s.format == "csv") {
    std::ostringstream os;
    trajectory_to_csv(traj, os);
    emit_text(os.str(), s.out);
  } else {
    std::ostringstream os;
    os << "steps recorded: " << traj.times.size() << "\n";
    os << "final t = " << traj.times.back() << "\nfinal state =";
    for (double v : traj.states.back()) os << " " << v;
    os << "\n";
    for (const auto& name : traj.audit_names)
      os << "max relative drift " << name << " = "
         << traj.max_drift.at(name) << "\n";
    emit_text(os.str(), s.out);
  }
  if (!drift_ok) {
    std::cerr << "audit drift exceeded --max-drift = " << s.max_drift << "\n";
    return 1;
  }
  return 0;
}

IndexOptions index_options(std::uint64_t seed, int trials, bool certified) {
  IndexOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.certify = certified;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "magflow: magnetic geodesic flows on Lie groups via 2-cocycle "
      "cohomology"};
  app.require_subcommand(1);

  std::string algebra_arg, cocycle_arg, out_arg, format = "text";
  std::vector<std::string> alg_params;
  std::uint64_t seed = 42;
  int trials = 8;
  bool certified = false;

  auto add_common = [&](CLI::App* cmd, bool with_cocycle) {
    cmd->add_option("--algebra", algebra_arg,
                    "algebra JSON file or catalog id")
        ->required();
    cmd->add_option("--alg-param", alg_params,
                    "catalog algebra parameter, name=value (repeatable)");
    if (with_cocycle)
      cmd->add_option("--cocycle", cocycle_arg, "2-cochain JSON file")
          ->required();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_arg, "write the report to a file");
  };

  // ---- algebra validate ----
  auto* c_algebra = app.add_subcommand("algebra", "algebra-level operations");
  auto* c_validate =
      c_algebra->add_subcommand("validate", "check the Jacobi identity");
  add_common(c_validate, false);

  // ---- cocycle basis / check ----
  auto* c_cocycle = app.add_subcommand("cocycle", "closed 2-cochain tools");
  auto* c_basis = c_cocycle->add_subcommand(
      "basis", "canonical basis of the closed 2-cochains");
  add_common(c_basis, false);
  auto* c_check =
      c_cocycle->add_subcommand("check", "closedness of a given 2-cochain");
  add_common(c_check, true);

  // ---- cohomology ----
  auto* c_cohom = app.add_subcommand(
      "cohomology", "dimensions and bases of Z2, B2 and the quotient");
  add_common(c_cohom, false);

  // ---- index / cohomology-index / integrable ----
  auto* c_index = app.add_subcommand("index", "algebra index");
  add_common(c_index, false);
  c_index->add_option("--seed", seed, "randomized-evaluation seed");
  c_index->add_option("--trials", trials, "randomized trials (default 8)");
  c_index->add_flag("--certified", certified,
                    "also certify by exact grid search (dim <= 6)");

  auto* c_tindex =
      app.add_subcommand("cohomology-index", "index twisted by a cocycle");
  add_common(c_tindex, true);
  c_tindex->add_option("--seed", seed, "randomized-evaluation seed");
  c_tindex->add_option("--trials", trials, "randomized trials (default 8)");
  c_tindex->add_flag("--certified", certified,
                     "also certify by exact grid search (dim <= 6)");

  auto* c_integrable = app.add_subcommand(
      "integrable", "integrability verdict for the magnetic flow");
  add_common(c_integrable, true);
  c_integrable->add_option("--seed", seed, "randomized-evaluation seed");
  c_integrable->add_option("--trials", trials, "randomized trials");
  c_integrable->add_flag("--certified", certified,
                         "also certify by exact grid search (dim <= 6)");

  // ---- extend ----
  auto* c_extend = app.add_subcommand(
      "extend", "one-dimensional central extension by a cocycle");
  add_common(c_extend, true);

  // ---- simulate ----
  auto* c_sim = app.add_subcommand("simulate", "numerical flows");
  SimCommon sr;
  auto* c_sim_red = c_sim->add_subcommand(
      "reduced", "Lie-Poisson flow on the extended dual, state (f0, f)");
  c_sim_red->add_option("--algebra", algebra_arg,
                        "algebra JSON file or catalog id")
      ->required();
  c_sim_red->add_option("--alg-param", alg_params,
                        "catalog algebra parameter, name=value (repeatable)");
  c_sim_red->add_option("--cocycle", cocycle_arg, "2-cochain JSON file")
      ->required();
  add_sim_flags(c_sim_red, sr);

  SimCommon sc;
  std::string chart_arg;
  std::string alpha = "1", beta = "1", gamma = "1";
  bool extended = false;
  auto* c_sim_chart = c_sim->add_subcommand(
      "chart", "coordinate-level magnetic geodesic flow, state (g, p)");
  c_sim_chart->add_option("--chart", chart_arg, "torus or g7")
      ->required()
      ->check(CLI::IsMember({"torus", "g7"}));
  c_sim_chart->add_option("--alpha", alpha, "g7 cocycle coefficient F(e1,e2)");
  c_sim_chart->add_option("--beta", beta, "g7 cocycle coefficient F(e1,e3)");
  c_sim_chart->add_option("--gamma", gamma, "g7 cocycle coefficient F(e2,e3)");
  c_sim_chart->add_flag(
      "--extended", extended,
      "integrate the charge-free geodesic flow on the extended group");
  add_sim_flags(c_sim_chart, sc);

  // ---- catalog ----
  auto* c_catalog =
      app.add_subcommand("catalog", "built-in classification table");
  std::string cat_format = "text", cat_out, cat_entry;
  auto* c_list = c_catalog->add_subcommand("list", "entries and charts");
  c_list->add_option("--format", cat_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  c_list->add_option("--out", cat_out, "write the listing to a file");
  auto* c_verify = c_catalog->add_subcommand(
      "verify", "machine-check every family and index claim");
  c_verify->add_option("--entry", cat_entry, "restrict to one entry or chart");
  c_verify->add_option("--seed", seed, "sampling seed (default 42)");
  c_verify->add_option("--format", cat_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  c_verify->add_option("--out", cat_out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    // ---- algebra validate ----
    if (c_validate->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      auto viols = validate_algebra(g);
      if (format == "json") {
        Json j;
        j["algebra"] = g.name();
        j["dim"] = g.dim();
        j["jacobi_ok"] = viols.empty();
        j["violations"] = Json::array();
        for (const auto& v : viols)
          j["violations"].push_back({{"a", v.a},
                                     {"b", v.b},
                                     {"c", v.c},
                                     {"component", v.e},
                                     {"residual", format_rational(v.residual)}});
        emit(j, out_arg);
      } else {
        std::ostringstream os;
        if (viols.empty()) {
          os << "Jacobi identity holds (" << g.name() << ", dim " << g.dim()
             << ")\n";
        } else {
          os << "Jacobi identity FAILS (" << g.name() << "): "
             << viols.size() << " residual(s)\n";
          for (const auto& v : viols)
            os << "  triple (" << v.a << "," << v.b << "," << v.c
               << "): component e" << v.e << " residual "
               << format_rational(v.residual) << "\n";
        }
        emit_text(os.str(), out_arg);
      }
      return viols.empty() ? 0 : 1;
    }

    // ---- cocycle basis ----
    if (c_basis->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      auto basis = cocycle_basis(g);
      if (format == "json") {
        Json j;
        j["algebra"] = g.name();
        j["dim_Z2"] = basis.size();
        j["basis"] = Json::array();
        for (const auto& F : basis) j["basis"].push_back(cochain_to_json(F));
        emit(j, out_arg);
      } else {
        std::ostringstream os;
        os << "dim Z2(" << g.name() << ") = " << basis.size() << "\n";
        for (const auto& F : basis) os << "  " << fmt_cochain(F) << "\n";
        emit_text(os.str(), out_arg);
      }
      return 0;
    }

    // ---- cocycle check ----
    if (c_check->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      TwoCochain F = load_cochain(cocycle_arg);
      auto viols = cocycle_violations(g, F);
      if (format == "json") {
        Json j;
        j["algebra"] = g.name();
        j["closed"] = viols.empty();
        j["violations"] = Json::array();
        for (const auto& v : viols)
          j["violations"].push_back({{"a", v.a},
                                     {"b", v.b},
                                     {"c", v.c},
                                     {"residual", format_rational(v.residual)}});
        emit(j, out_arg);
      } else {
        std::ostringstream os;
        if (viols.empty()) {
          os << "closed: cyclic condition holds on all basis triples\n";
        } else {
          os << "NOT closed: " << viols.size() << " violating triple(s)\n";
          for (const auto& v : viols)
            os << "  (" << v.a << "," << v.b << "," << v.c << "): "
               << format_rational(v.residual) << "\n";
        }
        emit_text(os.str(), out_arg);
      }
      return viols.empty() ? 0 : 1;
    }

    // ---- cohomology ----
    if (c_cohom->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      CohomologyReport rep = cohomology(g);
      if (format == "json") {
        emit(cohomology_to_json(g.name(), rep), out_arg);
      } else {
        std::ostringstream os;
        os << g.name() << ": dim Z2 = " << rep.dim_Z2
           << ", dim B2 = " << rep.dim_B2 << ", dim H2 = " << rep.dim_H2
           << "\n";
        os << "Z2 basis:\n";
        for (const auto& F : rep.Z2_basis) os << "  " << fmt_cochain(F) << "\n";
        os << "B2 basis:\n";
        for (const auto& F : rep.B2_basis) os << "  " << fmt_cochain(F) << "\n";
        os << "H2 representatives:\n";
        for (const auto& F : rep.H2_representatives)
          os << "  " << fmt_cochain(F) << "\n";
        emit_text(os.str(), out_arg);
      }
      return 0;
    }

    // ---- index ----
    if (c_index->parsed() || c_tindex->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      IndexReport rep;
      if (c_tindex->parsed()) {
        TwoCochain F = load_cochain(cocycle_arg);
        rep = cohomology_index(g, F, index_options(seed, trials, certified));
      } else {
        rep = algebra_index(g, index_options(seed, trials, certified));
      }
      if (format == "json") {
        emit(index_to_json(g.name(), rep), out_arg);
      } else {
        std::ostringstream os;
        os << (c_tindex->parsed() ? "twisted index " : "index ") << rep.index
           << " (max rank " << rep.max_rank << ", dim " << rep.dim
           << ", trials " << rep.trials << ", seed " << rep.seed
           << ", log2 miss probability <= " << rep.log2_failure_bound
           << (rep.certified ? ", certified exact)" : ")") << "\n";
        emit_text(os.str(), out_arg);
      }
      return 0;
    }

    // ---- integrable ----
    if (c_integrable->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      TwoCochain F = load_cochain(cocycle_arg);
      IntegrabilityVerdict v =
          is_integrable(g, F, index_options(seed, trials, certified));
      if (format == "json") {
        Json j;
        j["algebra"] = g.name();
        j["dim"] = v.dim;
        j["twisted_index"] = v.index_report.index;
        j["needed_quadratures"] = format_rational(v.lhs);
        j["integrable"] = v.integrable;
        j["certified"] = v.index_report.certified;
        j["log2_failure_bound"] = v.index_report.log2_failure_bound;
        emit(j, out_arg);
      } else {
        std::ostringstream os;
        os << "dim " << v.dim << ", twisted index " << v.index_report.index
           << ", (dim - index)/2 = " << format_rational(v.lhs)
           << ", integrable in quadratures: " << (v.integrable ? "yes" : "no")
           << "\n";
        emit_text(os.str(), out_arg);
      }
      return 0;
    }

    // ---- extend ----
    if (c_extend->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      TwoCochain F = load_cochain(cocycle_arg);
      CentralExtension ext = central_extension(g, F);  // throws NotACocycle
      Json j = algebra_to_json(ext.extended);
      if (format == "text") {
        std::ostringstream os;
        os << "extended algebra " << ext.extended.name() << " (dim "
           << ext.extended.dim() << ", center index 0)\n";
        for (const auto& en : ext.extended.entries()) {
          os << "  [e" << en.a << ",e" << en.b << "] =";
          bool first = true;
          for (const auto& t : en.terms) {
            os << (first ? " " : " + ") << format_rational(t.v) << " e" << t.c;
            first = false;
          }
          os << "\n";
        }
        emit_text(os.str(), out_arg);
      } else {
        emit(j, out_arg);
      }
      return 0;
    }

    // ---- simulate reduced ----
    if (c_sim_red->parsed()) {
      LieAlgebra g = resolve_algebra(algebra_arg, alg_params);
      TwoCochain F = load_cochain(cocycle_arg);
      if (F.dim != g.dim())
        throw ParseError("cocycle dimension does not match the algebra");
      Metric G = resolve_metric(sr.metric, g.dim());
      std::vector<double> f = parse_csv_doubles(sr.init);
      if (static_cast<int>(f.size()) != g.dim())
        throw ParseError("--init needs " + std::to_string(g.dim()) +
                         " components (f_1..f_n); f_0 = -charge is prepended");
      std::vector<double> x0;
      x0.push_back(-sr.charge);
      x0.insert(x0.end(), f.begin(), f.end());

      ReducedFlow flow = reduced_flow(g, F, G);
      std::vector<AuditFunction> audits;
      audits.push_back({"energy", [flow](double, const std::vector<double>& x) {
                          return flow.energy(x);
                        }});
      if (sr.audit && algebra_arg == "g7") {
        double a = to_double(F(1, 2)), b = to_double(F(1, 3)),
               c = to_double(F(2, 3));
        for (const auto& K : g7_casimirs(a, b, c))
          audits.push_back(
              {K.name, [K](double, const std::vector<double>& x) {
                 return K.value(x);
               }});
      }
      Trajectory traj = integrate(flow.rhs, x0, sim_options(sr), audits);
      return finish_sim(traj, sr);
    }

    // ---- simulate chart ----
    if (c_sim_chart->parsed()) {
      auto ra = parse_rational(alpha), rb = parse_rational(beta),
           rg = parse_rational(gamma);
      if (!ra || !rb || !rg)
        throw ParseError("--alpha/--beta/--gamma must be rationals");

      GroupChart chart;
      LieAlgebra g("unset", 1);
      TwoCochain F(1);
      if (chart_arg == "torus") {
        chart = torus_chart();
        g = torus_algebra();
        F = torus_cocycle();
      } else {
        chart = g7_chart(to_double(*ra), to_double(*rb), to_double(*rg));
        g = g7_algebra();
        F = g7_cocycle(*ra, *rb, *rg);
      }
      Metric G = resolve_metric(sc.metric, chart.dim);
      std::vector<double> init = parse_csv_doubles(sc.init);
      if (static_cast<int>(init.size()) != 2 * chart.dim)
        throw ParseError("--init needs " + std::to_string(2 * chart.dim) +
                         " components (g, p)");

      std::vector<AuditFunction> audits;
      Trajectory traj;
      if (extended) {
        ChartFlow flow = extended_chart_flow(chart, G);
        std::vector<double> x0(init.begin(), init.begin() + chart.dim);
        x0.push_back(0.0);  // theta
        x0.insert(x0.end(), init.begin() + chart.dim, init.end());
        x0.push_back(-sc.charge);  // p_0
        audits.push_back(
            {"energy", [flow](double, const std::vector<double>& x) {
               return flow.energy(x);
             }});
        traj = integrate(flow.rhs, x0, sim_options(sc), audits);
      } else {
        ChartFlow flow = magnetic_chart_flow(chart, G, F, sc.charge);
        audits.push_back(
            {"energy", [flow](double, const std::vector<double>& x) {
               return flow.energy(x);
             }});
        if (sc.audit)
          for (const auto& pf : linear_integrals(chart, sc.charge))
            audits.push_back(
                {pf.name, [pf](double, const std::vector<double>& x) {
                   return pf.value(x);
                 }});
        traj = integrate(flow.rhs, init, sim_options(sc), audits);
      }
      return finish_sim(traj, sc);
    }

    // ---- catalog list ----
    if (c_list->parsed()) {
      if (cat_format == "json") {
        emit(catalog_to_json(), cat_out);
      } else {
        std::ostringstream os;
        for (const auto& e : catalog_entries()) {
          os << e.id;
          for (const auto& p : e.algebra_params)
            os << "(" << p.name
               << (p.kind == ParamKind::Sign ? ": sign" : "") << ")";
          os << "  " << e.description << "\n    " << e.printed_brackets
             << "\n";
          for (const auto& f : e.families)
            os << "    " << f.name << " = " << f.printed
               << (f.note.empty() ? "" : "   [" + f.note + "]") << "\n";
          for (const auto& c : e.claims) {
            os << "    claim: index " << c.claimed_index << " when "
               << (c.printed_condition.empty() ? "always"
                                               : c.printed_condition)
               << " (" << c.family << ")";
            if (!c.corrected_condition.empty())
              os << "  [corrected: " << c.corrected_condition << "]";
            os << "\n";
          }
          for (const auto& n : e.notes) os << "    note: " << n << "\n";
        }
        for (const auto& c : catalog_charts()) {
          os << c.id << "  " << c.description << "\n";
          for (const auto& n : c.notes) os << "    note: " << n << "\n";
        }
        emit_text(os.str(), cat_out);
      }
      return 0;
    }

    // ---- catalog verify ----
    if (c_verify->parsed()) {
      std::optional<std::string> only;
      if (!cat_entry.empty()) only = cat_entry;
      CatalogReport rep = verify_catalog(seed, only);
      if (cat_format == "json") {
        emit(catalog_report_to_json(rep), cat_out);
      } else {
        std::ostringstream os;
        print_catalog_report(rep, os);
        emit_text(os.str(), cat_out);
      }
      return rep.pass ? 0 : 1;
    }
  } catch (const EntryNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotACocycle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OutOfChart& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const StepRejection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
