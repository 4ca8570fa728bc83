#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "faultlines/common.hpp"

namespace faultlines {

inline constexpr const char* kToolVersion = "0.1.0";

// Append-only line-delimited stores under one run directory, plus the run
// manifest. Records are immutable; identity is a content hash except where
// a natural idempotence key exists (answers and scores: task x model).
class RunStore {
 public:
  RunStore(const RunStore&) = delete;
  RunStore& operator=(const RunStore&) = delete;
  ~RunStore();

  // Creates the directory and manifest on first open; on reopen verifies
  // that config_hash matches the stored manifest (ConfigMismatch) and
  // recovers cleanly from a torn final record in any stream.
  static std::unique_ptr<RunStore> open(const std::filesystem::path& run_dir,
                                        const nlohmann::json& config_snapshot,
                                        const std::string& config_hash,
                                        uint64_t rng_seed,
                                        const std::string& corpus_hash);

  // Durable append. Returns the record id; fills "id" when absent. Throws
  // Duplicate when the stream key already exists and SchemaViolation when
  // required fields are missing.
  std::string append(const std::string& stream, nlohmann::json record);

  bool has(const std::string& stream, const std::string& key) const;
  const std::set<std::string>& keys(const std::string& stream) const;
  std::vector<nlohmann::json> read_all(const std::string& stream) const;

  const nlohmann::json& manifest() const { return manifest_; }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path report_dir() const { return dir_ / "report"; }
  // Bumps on every append; lets read-side caches invalidate cheaply.
  uint64_t version() const { return version_; }

  static const std::vector<std::string>& stream_names();

  // Idempotence key for a record of the given stream.
  static std::string record_key(const std::string& stream, const nlohmann::json& record);

 private:
  explicit RunStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void lock_or_throw();
  void recover_stream(const std::string& stream);
  std::filesystem::path stream_path(const std::string& stream) const {
    return dir_ / (stream + ".jsonl");
  }

  std::filesystem::path dir_;
  nlohmann::json manifest_;
  int lock_fd_ = -1;
  uint64_t version_ = 0;
  mutable std::mutex mu_;
  std::map<std::string, std::set<std::string>> keys_;
};

}  // namespace faultlines
