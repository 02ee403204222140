#pragma once

#include "magflow/cohomology.hpp"
#include "magflow/integrate.hpp"
#include "magflow/metric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace magflow {

// Insertion-ordered JSON keeps every report byte-stable across runs.
using Json = nlohmann::ordered_json;

// {"name": ..., "dim": n, "brackets": [{"a": 1, "b": 4,
//   "terms": [{"c": 4, "v": "1"}]}]}
// Extended (0-based) algebras carry "center_index": 0.
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

// {"dim": n, "entries": [{"a": 1, "b": 2, "v": "1"}]}
Json cochain_to_json(const TwoCochain& F);
TwoCochain cochain_from_json(const Json& j);

// {"dim": n, "rows": [["1", "0"], ["0", "1"]]}
Metric metric_from_json(const Json& j);

Json cohomology_to_json(const std::string& algebra_name,
                        const CohomologyReport& rep);
Json index_to_json(const std::string& algebra_name, const IndexReport& rep);

// {"times": [...], "states": [[...]], "audits": {"H": [...]}}
Json trajectory_to_json(const Trajectory& t);
void trajectory_to_csv(const Trajectory& t, std::ostream& os);

Json load_json(const std::string& path);       // throws ParseError
void save_json(const Json& j, const std::string& path);
LieAlgebra load_algebra(const std::string& path);
TwoCochain load_cochain(const std::string& path);
Metric load_metric(const std::string& path);

}  // namespace magflow
