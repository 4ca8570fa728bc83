#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faultlines/model_gateway.hpp"

namespace faultlines {

struct ScoreRecord {
  std::string task_id;
  std::string model;
  Phase phase = Phase::Baseline;
  Language language = Language::PY;
  FaultKind fault_kind = FaultKind::OffByOne;
  Quartile fault_quartile = Quartile::Q1;
  std::optional<int> predicted_line;
  int ground_truth_line = 0;
  bool correct = false;           // exact line match
  bool within_tolerance = false;  // secondary +-k column
  bool unparsed = false;
  std::string status = "ok";
  // Spm phase only:
  std::vector<SpmKind> spm_kinds;
  std::vector<int> spm_strengths;  // requested
  std::vector<int> spm_effective;
  std::vector<Quartile> spm_quartiles;
  std::string plan_signature;  // "M_c", "M_v+M_c", ...
};

// Exact-match scoring; unparsed answers are incorrect.
ScoreRecord score_answer(const FaultLocTask& task, const ModelAnswer& answer, int tolerance);

struct Cell {
  long correct = 0;
  long total = 0;
  long unparsed = 0;
  long tolerant = 0;
  double pct() const { return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / total; }
};

enum class Axis { Model, Language, FaultKind, FaultQuartile, PlanSignature, Strength, Phase };

std::string axis_name(Axis axis);
std::string axis_value(const ScoreRecord& score, Axis axis);

// Accuracy cells grouped by the given axes; only populated cells appear.
using Table = std::map<std::vector<std::string>, Cell>;
Table group_cells(const std::vector<ScoreRecord>& scores, const std::vector<Axis>& axes);

Table baseline_accuracy(const std::vector<ScoreRecord>& scores, const std::vector<Axis>& axes);

struct RobustnessSummary {
  Table per_model;          // model (x axes) -> cell whose "correct" counts failures
  double micro_failure_pct = 0.0;  // task-weighted, the headline number
  double macro_failure_pct = 0.0;  // mean of per-model rates
};

// Failure fraction over SPM tasks whose parent baseline was localized
// correctly (enforced upstream by gating).
RobustnessSummary robustness_failure_rate(const std::vector<ScoreRecord>& spm_scores,
                                          const std::vector<Axis>& axes);

struct StrengthCurve {
  std::map<int, Cell> by_strength;
  double slope_pp_per_step = 0.0;      // least-squares, negative = decline
  double avg_step_decrease_pp = 0.0;   // (first - last) / steps
  double overall_decrease_pp = 0.0;    // first - last
};

// Accuracy across strengths 1..8 for single-operator plans of one SPM kind.
// Throws InsufficientStrengths with fewer than two populated strengths.
StrengthCurve strength_curve(const std::vector<ScoreRecord>& spm_scores,
                             const std::string& model, SpmKind kind, Language language);

struct HeatmapResult {
  Table cells;                                // (fault_kind, quartile) -> accuracy
  std::map<std::string, double> correct_share_by_quartile;  // share of all correct answers
};

HeatmapResult location_heatmap(const std::vector<ScoreRecord>& scores);

Table spm_type_accuracy(const std::vector<ScoreRecord>& spm_scores);

struct LongitudinalDelta {
  std::string older;
  std::string newer;
  std::string phase;
  double older_pct = 0.0;
  double newer_pct = 0.0;
  double delta_pp = 0.0;
};

std::vector<LongitudinalDelta> longitudinal(
    const std::vector<ScoreRecord>& scores,
    const std::vector<std::pair<std::string, std::string>>& model_pairs);

// Writes every CSV plus summary.json; output is byte-stable for identical
// score sets. Returns the list of files written.
std::vector<std::filesystem::path> emit_report(
    const std::vector<ScoreRecord>& scores, const std::filesystem::path& report_dir,
    const std::vector<std::pair<std::string, std::string>>& longitudinal_pairs, int tolerance);

}  // namespace faultlines
