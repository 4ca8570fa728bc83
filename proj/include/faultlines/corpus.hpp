#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "faultlines/common.hpp"

namespace faultlines {

struct SeedProgram {
  std::string seed_id;
  Language subject_language = Language::PY;
  std::string spec_text;
  std::string source_text;
  int loc = 0;             // non-blank lines
  int token_estimate = 0;  // ceil(bytes / 4)
};

enum class RejectReason { TooSmall, TooManyTokens };

struct RejectedSeed {
  SeedProgram seed;
  RejectReason reason;
};

std::string to_string(RejectReason reason);

struct FilterOutcome {
  std::vector<SeedProgram> retained;
  std::vector<RejectedSeed> rejected;
};

struct LoadOutcome {
  std::vector<SeedProgram> seeds;
  // (record index, message) for sources the frontend rejected.
  std::vector<std::pair<int, std::string>> parse_failures;
};

int estimate_tokens(const std::string& text);

// Reads the line-delimited seed file. Records that fail to parse under the
// language frontend are skipped and reported; structurally malformed
// records abort with MalformedRecord naming the record index.
LoadOutcome load_corpus(const std::filesystem::path& path, Language subject_language);

FilterOutcome filter_seeds(const std::vector<SeedProgram>& seeds, int min_loc,
                           int max_tokens);

}  // namespace faultlines
