#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symgraph/subgroup_search.hpp"

namespace symgraph {

// One machine-checkable claim: an id, the location in the source text it
// is keyed to, and the parameters of the bound computation.
struct Claim {
  std::string id;
  std::string paper_location;
  std::string kind;  // subgroup-census | feasibility | arithmetic | parity | graph-property
  nlohmann::json params;
  nlohmann::json expected;
  std::optional<uint64_t> scan_budget;
  std::optional<uint64_t> seed;
  // Set when the source text is internally inconsistent but the computation
  // is definitive; a matching result then reports DISCREPANCY-NOTED.
  std::string discrepancy_note;
};

struct ClaimReport {
  std::string id;
  std::string status;  // PASS | FAIL | DISCREPANCY-NOTED | SKIPPED(reason)
  nlohmann::ordered_json body;  // deterministic given the seed
  double wall_ms = 0;
  bool failed() const { return status == "FAIL"; }
};

struct Manifest {
  int schema_version = 1;
  uint64_t default_seed = 20177;
  std::vector<Claim> claims;
};

Manifest manifest_from_json_text(const std::string& text);
Manifest load_manifest(const std::string& path);
// data_dir/claims.json
Manifest load_default_manifest(const std::string& data_dir = "");

bool glob_match(const std::string& pattern, const std::string& text);

class ClaimRunner {
public:
  explicit ClaimRunner(Manifest manifest, std::string data_dir = "");

  ClaimReport run(const std::string& id);
  std::vector<ClaimReport> run_suite(const std::string& filter = "",
                                     bool parallel = false);
  const Manifest& manifest() const { return manifest_; }

  static bool suite_passed(const std::vector<ClaimReport>& reports);

private:
  ClaimReport run_claim(const Claim& claim);
  std::vector<SubgroupClass> census_cached(const std::string& ambient,
                                           const std::string& target,
                                           const CensusOptions& opts);
  uint64_t effective_seed(const Claim& claim) const;

  Manifest manifest_;
  std::string data_dir_;
  std::mutex cache_mutex_;
  std::map<std::string, std::vector<SubgroupClass>> census_cache_;
};

std::string report_body_text(const ClaimReport& report);
std::string report_to_json_text(const ClaimReport& report);
std::string suite_to_json_text(const std::vector<ClaimReport>& reports);

// Re-derives every witness in a report from scratch; used by the
// verification suites, never by the claim runners themselves.
bool revalidate_report(const ClaimReport& report, const std::string& data_dir = "");

}  // namespace symgraph
