#pragma once

// Seeded verification campaigns per model case and their JSON reports.
//
// Exit-code contract of the command-line tool: 0 all checks pass, 1 some check failed,
// 2 usage or parse error, 3 internal error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagcert/io.hpp"
#include "flagcert/orbits.hpp"

namespace flagcert {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInternal = 3 };

inline constexpr const char* kReportSchema = "flagcert-report/1";
inline constexpr const char* kToolVersion = FLAGCERT_VERSION;

/// Invalid configuration or unreadable input; maps to kExitUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CampaignConfig {
  std::string case_name;
  std::optional<size_t> n, p, q;
  size_t samples = 25;
  uint64_t seed = 1;
  long bound = 5;
  bool strict = false;  // fail-fast: checks after the first failure are skipped
};

/// Fills case defaults (projective-split n=2; projective-pq p=q=1; isotropic n=2, p=2,
/// q=2n-1-p) and validates. Throws UsageError.
CampaignConfig resolve_config(CampaignConfig cfg);
/// Model for a resolved configuration.
StandardModel model_for(const CampaignConfig& resolved);

struct CheckRecord {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::skipped;
  Json details = Json::object();
};
const char* to_string(CheckRecord::Status s);

struct Report {
  CampaignConfig config;
  std::vector<CheckRecord> checks;
  size_t count(CheckRecord::Status s) const;
  bool passed() const { return count(CheckRecord::Status::fail) == 0; }
};

/// Runs every check of the configured case. Exceptions inside a check fail that check;
/// exceptions outside checks (model construction, a wrong derivation dimension) propagate.
Report run_campaign(const CampaignConfig& cfg);
Json report_to_json(const Report& r);
/// Pretty-printed JSON with a trailing newline; identical inputs give identical bytes.
std::string render_report(const Report& r);

Json orbit_report_to_json(const OrbitReport& r);
Json onishchik_to_json(const OnishchikReport& r);

struct WitnessFileResult {
  int exit_code = kExitUsage;
  std::string message;
};
/// Parses and re-verifies a serialized witness from scratch.
WitnessFileResult verify_witness_file(const std::string& path);

}  // namespace flagcert
