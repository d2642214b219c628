#pragma once

// Per-case certification pipeline over fixture files, and the batch run that
// regenerates the report bundle for both rational-surface families.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rbd/blowdown.hpp"
#include "rbd/json_io.hpp"

namespace rbd {

/// One case as stored in fixtures/family{1,2}/a{K}.json.
struct Fixture {
  int fixture_version = 1;
  int family = 0;
  int a = 0;
  long p = 0;
  std::size_t n = 0;
  std::vector<ClassVector> classes;
  ClassVector K;
  ClassVector H;
  /// Absent: the H_1 witness is searched for.
  std::optional<ClassVector> delta;
  /// Which H_1 condition delta is declared to satisfy (1 or 2); 0 = unchecked.
  int delta_condition = 0;
  std::optional<HandleInput> handles;
  std::optional<HandleCounts> expected_handle_counts;
  /// The parsed file, echoed verbatim into reports.
  Json source;
};

Fixture fixture_from_json(const Json& j);
Fixture load_fixture(const std::filesystem::path& path);

enum class StageStatus { pass, fail, skipped, not_run };
std::string to_string(StageStatus s);

struct StageResult {
  std::string name;
  StageStatus status = StageStatus::not_run;
  std::string message;
  Json certificate;
};

struct CaseReport {
  std::string id;  // "family1/a3"
  int family = 0;
  int a = 0;
  bool passed = false;
  std::optional<std::string> failed_stage;
  std::vector<StageResult> stages;
  std::optional<std::string> homeo_type;
  std::optional<Integer> sw_value;
  std::optional<HandleCounts> handle_counts;
  Json input;
};

/// Stage names, in execution order.
const std::vector<std::string>& pipeline_stages();

/// Runs every stage; the first failing stage stops the case and later stages
/// are reported as not run.
CaseReport run_case(const Fixture& fixture, const WitnessSearchOptions& witness = {});

Json to_json(const CaseReport& r);

struct ReproduceOptions {
  std::filesystem::path fixtures_dir;
  /// When set, reports are written to <out>/family{f}/a{a}.json plus <out>/summary.json.
  std::optional<std::filesystem::path> out_dir;
  std::optional<int> only_a;
  std::optional<int> only_family;
  unsigned jobs = 1;
};

struct ReproduceResult {
  std::vector<CaseReport> cases;
  bool all_passed = false;
  Json summary;
};

/// Runs all fixtures under fixtures_dir (sorted by family, then a).
/// Throws DomainError if the directory holds no matching fixture.
ReproduceResult reproduce_paper(const ReproduceOptions& options);

/// Parses "a=5,family=2" style filters into options.
void apply_only_filter(const std::string& filter, ReproduceOptions& options);

}  // namespace rbd
