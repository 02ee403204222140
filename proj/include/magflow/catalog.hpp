#pragma once

#include "magflow/cohomology.hpp"
#include "magflow/json_io.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magflow {

// Built-in transcription of the classification table of four-dimensional
// real Lie algebras with their closed 2-cochain families and twisted-index
// statements. Parameter names are ASCII: a (alpha), eps (epsilon), d
// (delta, a sign), k/k1/k2/k3 (kappa), c/c1/c2 (free constants).
//
// Where the tabulated text is internally inconsistent (a condition naming
// a parameter the family does not contain, a condition on a coboundary
// coefficient that provably cannot matter), the entry keeps the printed
// text verbatim *and* carries a corrected condition derived by exact
// Pfaffian analysis; verification reports both outcomes and gates on the
// corrected one. Every such spot is flagged in `notes`.

using ParamMap = std::map<std::string, Rational>;

enum class ParamKind { Real, Sign };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Real;
};

struct CocycleFamily {
  std::string name;     // "F1"
  std::string printed;  // formula as tabulated (ASCII names)
  std::vector<ParamSpec> params;
  // restriction on algebra parameters, e.g. a != 0; null = always
  std::function<bool(const ParamMap& alg)> applicable;
  std::function<TwoCochain(const ParamMap& alg, const ParamMap& fam)> build;
  std::string note;
};

struct IndexClaim {
  std::string family;
  int claimed_index = 2;
  // The table reads as "index = claimed exactly when the condition holds";
  // when exclusive, combos violating the condition must give a different
  // index.
  bool exclusive = true;
  std::string printed_condition;  // empty = unconditional
  std::function<bool(const ParamMap& alg, const ParamMap& fam)> printed_holds;
  std::string corrected_condition;  // nonempty only when flagged
  std::function<bool(const ParamMap& alg, const ParamMap& fam)> corrected_holds;
  std::string note;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string printed_brackets;
  std::vector<std::string> notes;
  std::vector<ParamSpec> algebra_params;
  std::function<LieAlgebra(const ParamMap&)> build;
  std::vector<CocycleFamily> families;
  std::vector<IndexClaim> claims;
};

struct ChartEntry {
  std::string id;  // "torus-chart", "g7-chart"
  std::string description;
  std::vector<std::string> notes;
};

const std::vector<CatalogEntry>& catalog_entries();
const std::vector<ChartEntry>& catalog_charts();

// --- verification ----------------------------------------------------------

struct ConditionStats {
  int on_checked = 0, on_pass = 0;    // combos where the condition holds
  int off_checked = 0, off_pass = 0;  // combos where it does not (exclusive)
  bool ok() const {
    return on_pass == on_checked && off_pass == off_checked;
  }
};

struct ClaimResult {
  std::string family;
  int claimed_index = 2;
  std::string printed_condition;
  ConditionStats printed;
  std::string corrected_condition;
  std::optional<ConditionStats> corrected;
  std::string note;
  bool flagged = false;
  bool pass = false;  // corrected outcome when flagged, printed otherwise
};

struct FamilyResult {
  std::string name;
  int instances = 0;
  int cocycle_pass = 0;
  bool pass = false;
};

struct EntryResult {
  std::string id;
  bool jacobi_ok = false;
  int algebra_instances = 0;
  std::vector<FamilyResult> families;
  std::vector<ClaimResult> claims;
  bool pass = false;
  double seconds = 0.0;
};

struct ChartResult {
  std::string id;
  // audit name -> worst value; names are stable and ordered
  std::vector<std::pair<std::string, double>> audits;
  bool pass = false;
  double seconds = 0.0;
};

struct CatalogReport {
  std::uint64_t seed = 0;
  std::vector<EntryResult> entries;
  std::vector<ChartResult> charts;
  int claims_total = 0;
  int claims_passed = 0;
  int claims_flagged = 0;
  int failures = 0;
  bool pass = false;
};

EntryResult verify_entry(const CatalogEntry& entry, std::uint64_t seed);
ChartResult verify_chart(const std::string& id, std::uint64_t seed);

// Entries are independent and verified concurrently; results are collected
// in catalog order so reports are deterministic. `only` restricts to a
// single entry or chart id and throws EntryNotFound for unknown ids.
CatalogReport verify_catalog(std::uint64_t seed,
                             const std::optional<std::string>& only = {});

Json catalog_to_json();
Json catalog_report_to_json(const CatalogReport& rep);
void print_catalog_report(const CatalogReport& rep, std::ostream& os);

}  // namespace magflow
