#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "faultlines/common.hpp"
#include "faultlines/spm_engine.hpp"

namespace faultlines {

enum class Phase { Baseline, Spm };

std::string to_string(Phase phase);
Phase phase_from_string(std::string_view s);

enum class ProviderKind { RemoteApi, LocalRuntime, Mock };

enum class MockKind { Oracle, UniformRandom, FirstQuartileBiased, Evasive };

struct ProviderProfile {
  std::string name;
  std::string base_url;            // scheme://host[:port]
  std::string path;                // request path
  std::string wire = "openai_chat";  // or "ollama"
  std::string auth_header = "Authorization";
  std::string auth_prefix = "Bearer ";
  std::string credential_env;      // env var holding the key; empty = none needed
  std::string model_id;
  int max_context_tokens = 128000;
  int requests_per_minute = 60;
  int max_concurrent = 4;
  int max_retries = 3;
  int retry_base_ms = 250;
};

struct ModelSpec {
  std::string model_name;
  ProviderKind provider = ProviderKind::Mock;
  MockKind mock_kind = MockKind::Oracle;
  uint64_t mock_seed = 0;
  double mock_q1_bias = 0.56;  // FirstQuartileBiased: mass placed on Q1
  ProviderProfile profile;
  double temperature = 0.0;
  int max_output_tokens = 512;
};

// Resolves "mock:oracle", "mock:random", "mock:q1bias", "mock:evasive", or a
// profile name from the config roster.
ModelSpec resolve_model(const std::string& name,
                        const std::map<std::string, ProviderProfile>& profiles,
                        uint64_t mock_seed);

struct FaultLocTask {
  std::string task_id;
  Phase phase = Phase::Baseline;
  std::string source_text;  // exactly what the model sees
  std::string spec_text;
  Language subject_language = Language::PY;
  int ground_truth_line = 0;  // sidecar only; never rendered into prompts
  int line_count = 0;
  std::string seed_id;
  std::string fault_id;
  std::string mutant_id;  // empty in the baseline phase
};

// Fixed template; same bytes for the same task.
std::string build_prompt(const FaultLocTask& task);

// Marker first, prose fallback, clamped to [1, line_count]. Total.
std::optional<int> parse_answer(const std::string& raw_text, int line_count);

struct ModelAnswer {
  std::string task_id;
  std::string model_name;
  std::string raw_text;
  std::optional<int> predicted_line;
  int latency_ms = 0;
  int attempts = 1;
  int prompt_tokens_est = 0;
  std::string status = "ok";  // ok | skipped_context | provider_error
};

class ModelBackend {
 public:
  virtual ~ModelBackend() = default;
  // Raw completion text for the prompt. The task is the ground-truth
  // sidecar for mock backends; network backends must only read `prompt`.
  virtual std::string complete(const FaultLocTask& task, const std::string& prompt) = 0;
};

std::unique_ptr<ModelBackend> make_backend(const ModelSpec& spec);

// Prompt construction, context check, rate-limited dispatch with retries,
// and answer extraction for one task.
ModelAnswer run_task(const ModelSpec& spec, ModelBackend& backend, const FaultLocTask& task);

// Content provider that asks a model backend for mutation material
// (dead-code snippets, comments, names). Engine shells still apply.
std::unique_ptr<ContentProvider> make_model_provider(const ModelSpec& spec);

}  // namespace faultlines
