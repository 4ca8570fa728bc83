#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faultlines/model_gateway.hpp"

namespace faultlines {

struct FilterVerdict {
  std::string fault_task_id;
  bool retained = false;
  std::vector<std::string> localizing_models;
  std::vector<std::string> panel;
};

// Parsed predictions keyed "task_id|model".
using AnswerTable = std::map<std::string, std::optional<int>>;

struct FilterResult {
  std::vector<FaultLocTask> retained;
  std::vector<FaultLocTask> excluded;
  std::vector<FilterVerdict> verdicts;
};

// A task survives when at least one panel model predicted its ground-truth
// line. Throws MissingAnswers listing (task, model) pairs without answers.
FilterResult filter_underspecified(const std::vector<FaultLocTask>& baseline_tasks,
                                   const std::vector<std::string>& panel_models,
                                   const AnswerTable& answers);

// Tasks the named model localized correctly at baseline; the only tasks
// whose mutants that model is asked about later.
std::vector<FaultLocTask> gate_for_model(const std::vector<FaultLocTask>& retained_tasks,
                                         const std::string& model_name,
                                         const AnswerTable& answers);

}  // namespace faultlines
