#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "faultlines/corpus.hpp"
#include "faultlines/metrics.hpp"
#include "faultlines/model_gateway.hpp"
#include "faultlines/runstore.hpp"

namespace faultlines {

struct RunConfig {
  std::filesystem::path run_dir;
  std::map<Language, std::filesystem::path> corpus_paths;
  int min_loc = 50;
  int max_tokens = 100000;

  std::vector<FaultKind> fault_kinds{std::begin(kAllFaultKinds), std::end(kAllFaultKinds)};
  std::vector<Quartile> fault_quartiles{std::begin(kAllQuartiles), std::end(kAllQuartiles)};
  int per_combination = 1;
  bool quartile_fallback = false;
  bool kill_check = true;

  std::string spm_plans = "standard";  // standard | single:<kind> | sweep
  std::vector<int> spm_strengths{1};
  std::vector<Quartile> spm_quartiles{std::begin(kAllQuartiles), std::end(kAllQuartiles)};
  std::string content_mode = "template";  // template | model:<name>
  bool preservation_check = false;

  std::vector<std::string> models;
  std::vector<std::string> panel;  // empty = every evaluated model
  std::map<std::string, ProviderProfile> profiles;
  std::vector<std::pair<std::string, std::string>> longitudinal_pairs;

  int parallel = 4;
  uint64_t seed = 42;
  double temperature = 0.0;
  int tolerance = 0;
  int sandbox_timeout_ms = 10000;
};

RunConfig load_config(const std::filesystem::path& file);
nlohmann::json config_snapshot(const RunConfig& config);
// Stable identity of a run; excludes knobs that may change between
// resumptions (parallelism, run_dir).
std::string config_hash(const RunConfig& config);

std::unique_ptr<RunStore> open_run(const RunConfig& config);

struct StageStats {
  long produced = 0;
  long skipped_existing = 0;
  long logged = 0;  // combos without sites, per-mutant errors, ...
};

// Outstanding work per stage: declared minus stored. Exact for stages whose
// work items are enumerable from the store (evaluation answers, scores);
// an upper bound for generation stages, whose empty combinations only
// reveal themselves when attempted.
struct ResumePlan {
  long seeds_outstanding = 0;
  long fault_combinations_outstanding = 0;  // (seed, kind, quartile) without a fault
  long baseline_answers_outstanding = 0;
  long verdicts_outstanding = 0;
  long spm_answers_outstanding = 0;
  long scores_outstanding = 0;
  bool empty() const {
    return seeds_outstanding == 0 && fault_combinations_outstanding == 0 &&
           baseline_answers_outstanding == 0 && verdicts_outstanding == 0 &&
           spm_answers_outstanding == 0 && scores_outstanding == 0;
  }
};

ResumePlan resume_plan(RunStore& store, const RunConfig& config);

StageStats stage_ingest(RunStore& store, const RunConfig& config);
StageStats stage_inject(RunStore& store, const RunConfig& config);
StageStats stage_evaluate(RunStore& store, const RunConfig& config, Phase phase);
StageStats stage_filter(RunStore& store, const RunConfig& config);
StageStats stage_mutate(RunStore& store, const RunConfig& config);
StageStats stage_report(RunStore& store, const RunConfig& config);

void run_pipeline(RunStore& store, const RunConfig& config);

// Record <-> domain converters shared by stages, tools and tests.
nlohmann::json seed_to_record(const SeedProgram& seed);
SeedProgram seed_from_record(const nlohmann::json& record);
FaultLocTask task_from_record(const nlohmann::json& record, RunStore& store);
ScoreRecord score_from_record(const nlohmann::json& record);
std::vector<ScoreRecord> load_scores(RunStore& store);

// Panel of record: explicit config list, or every model in the roster.
std::vector<std::string> effective_panel(const RunConfig& config);

}  // namespace faultlines
