#pragma once

#include <optional>
#include <string>

#include "faultlines/common.hpp"

namespace faultlines {

struct ExecResult {
  int exit_code = 0;
  bool timed_out = false;
  bool spawn_failed = false;
  std::string stdout_text;
  std::string stderr_text;

  // Observable behavior: stdout bytes, exit status, and termination.
  bool same_observable(const ExecResult& other) const {
    return !spawn_failed && !other.spawn_failed && timed_out == other.timed_out &&
           (timed_out || (exit_code == other.exit_code && stdout_text == other.stdout_text));
  }
};

struct SandboxLimits {
  int wall_timeout_ms = 10000;
  size_t max_output_bytes = 4 * 1024 * 1024;
};

// Whether programs of this language can be executed on this host
// (interpreter / JDK present on PATH).
bool language_runnable(Language lang);

// Writes `source` to a scratch directory and runs it in a child process with
// stdin closed and a wall-clock limit. Never throws on program failure; the
// result records crashes and timeouts.
ExecResult run_program(Language lang, const std::string& source,
                       const SandboxLimits& limits = {});

}  // namespace faultlines
