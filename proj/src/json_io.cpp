#include "magflow/json_io.hpp"

#include "magflow/errors.hpp"

#include <fstream>
#include <ostream>

namespace magflow {

namespace {

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);
  const Json& v = j.at(key);
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = std::to_string(v.get<long long>());
  else
    throw ParseError(std::string("field ") + key +
                     " must be a rational string or integer");
  auto r = parse_rational(text);
  if (!r) throw ParseError("bad rational literal: \"" + text + "\"");
  return *r;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string("missing or non-integer field: ") + key);
  return j.at(key).get<int>();
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json out;
  out["name"] = g.name();
  out["dim"] = g.dim();
  if (g.base_index() == 0) out["center_index"] = 0;
  Json brackets = Json::array();
  for (const auto& e : g.entries()) {
    Json terms = Json::array();
    for (const auto& t : e.terms)
      terms.push_back({{"c", t.c}, {"v", format_rational(t.v)}});
    brackets.push_back({{"a", e.a}, {"b", e.b}, {"terms", std::move(terms)}});
  }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  std::string name = j.contains("name") && j.at("name").is_string()
                         ? j.at("name").get<std::string>()
                         : "";
  if (name.empty()) throw ParseError("algebra needs a nonempty name");
  int dim = int_field(j, "dim");
  int base = 1;
  if (j.contains("center_index")) {
    if (!j.at("center_index").is_number_integer() ||
        j.at("center_index").get<int>() != 0)
      throw ParseError("center_index, when present, must be 0");
    base = 0;
  }
  LieAlgebra g(name, dim, base);
  if (!j.contains("brackets") || !j.at("brackets").is_array())
    throw ParseError("algebra needs a brackets array");
  for (const Json& e : j.at("brackets")) {
    int a = int_field(e, "a"), b = int_field(e, "b");
    if (!e.contains("terms") || !e.at("terms").is_array())
      throw ParseError("bracket entry needs a terms array");
    std::vector<BracketTerm> terms;
    for (const Json& t : e.at("terms"))
      terms.push_back({int_field(t, "c"), rational_field(t, "v")});
    g.set_bracket(a, b, std::move(terms));
  }
  return g;
}

Json cochain_to_json(const TwoCochain& F) {
  Json out;
  out["dim"] = F.dim;
  Json entries = Json::array();
  for (const auto& [key, v] : F.entries)
    entries.push_back(
        {{"a", key.first}, {"b", key.second}, {"v", format_rational(v)}});
  out["entries"] = std::move(entries);
  return out;
}

TwoCochain cochain_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("cocycle file must be a JSON object");
  TwoCochain F;
  F.dim = int_field(j, "dim");
  if (F.dim < 1) throw ParseError("cochain dimension must be positive");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw ParseError("cochain needs an entries array");
  for (const Json& e : j.at("entries")) {
    int a = int_field(e, "a"), b = int_field(e, "b");
    Rational v = rational_field(e, "v");
    if (a == b) throw ParseError("cochain entry requires a != b");
    F.set(a, b, F(a, b) + v);  // accumulate duplicate entries
  }
  return F;
}

Metric metric_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("metric file must be a JSON object");
  int dim = int_field(j, "dim");
  if (!j.contains("rows") || !j.at("rows").is_array() ||
      static_cast<int>(j.at("rows").size()) != dim)
    throw ParseError("metric needs a rows array of size dim");
  RatMat G(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j.at("rows").at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("metric rows must have length dim");
    for (int k = 0; k < dim; ++k) {
      const Json& cell = row.at(k);
      std::string text = cell.is_string() ? cell.get<std::string>()
                         : cell.is_number_integer()
                             ? std::to_string(cell.get<long long>())
                             : "";
      auto r = parse_rational(text);
      if (!r) throw ParseError("bad rational in metric row");
      G.at(i, k) = *r;
    }
  }
  return Metric(std::move(G));
}

Json cohomology_to_json(const std::string& algebra_name,
                        const CohomologyReport& rep) {
  Json out;
  out["algebra"] = algebra_name;
  out["dim"] = rep.dim;
  out["dim_Z2"] = rep.dim_Z2;
  out["dim_B2"] = rep.dim_B2;
  out["dim_H2"] = rep.dim_H2;
  auto basis = [](const std::vector<TwoCochain>& fs) {
    Json arr = Json::array();
    for (const TwoCochain& f : fs) arr.push_back(cochain_to_json(f));
    return arr;
  };
  out["Z2_basis"] = basis(rep.Z2_basis);
  out["B2_basis"] = basis(rep.B2_basis);
  out["H2_representatives"] = basis(rep.H2_representatives);
  return out;
}

Json index_to_json(const std::string& algebra_name, const IndexReport& rep) {
  Json out;
  out["algebra"] = algebra_name;
  out["dim"] = rep.dim;
  out["index"] = rep.index;
  out["max_rank"] = rep.max_rank;
  out["trials"] = rep.trials;
  out["seed"] = rep.seed;
  out["log2_failure_bound"] = rep.log2_failure_bound;
  out["certified"] = rep.certified;
  return out;
}

Json trajectory_to_json(const Trajectory& t) {
  Json out;
  out["times"] = t.times;
  out["states"] = t.states;
  Json audits = Json::object();
  for (const std::string& name : t.audit_names)
    audits[name] = t.audits.at(name);
  out["audits"] = std::move(audits);
  return out;
}

void trajectory_to_csv(const Trajectory& t, std::ostream& os) {
  os << "t";
  if (!t.states.empty())
    for (std::size_t i = 0; i < t.states.front().size(); ++i) os << ",x" << i;
  for (const std::string& name : t.audit_names) os << ",drift_" << name;
  os << "\n";
  os.precision(17);
  for (std::size_t r = 0; r < t.times.size(); ++r) {
    os << t.times[r];
    for (double v : t.states[r]) os << "," << v;
    for (const std::string& name : t.audit_names)
      os << "," << t.audits.at(name)[r];
    os << "\n";
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
  return j;
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

LieAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json(path));
}
TwoCochain load_cochain(const std::string& path) {
  return cochain_from_json(load_json(path));
}
Metric load_metric(const std::string& path) {
  return metric_from_json(load_json(path));
}

}  // namespace magflow
