#pragma once

#include <memory>
#include <string>
#include <vector>

#include "faultlines/fault_injector.hpp"
#include "faultlines/rng.hpp"
#include "faultlines/sandbox.hpp"
#include "faultlines/source_model.hpp"

namespace faultlines {

struct SpmStep {
  SpmKind kind = SpmKind::DeadCode;
  int strength = 1;  // requested applications, 1..8
  Quartile quartile = Quartile::Q1;
};

struct AppliedStep {
  SpmStep requested;
  int effective_strength = 0;
};

// Supplies the text material for mutations. Engine-side shells guarantee
// the inserted code never executes regardless of what the provider returns.
class ContentProvider {
 public:
  virtual ~ContentProvider() = default;
  virtual std::string misleading_comment(Language lang, Rng& rng) = 0;
  virtual std::string misleading_name(Rng& rng) = 0;
  virtual std::vector<std::string> dead_code_statements(Language lang, Rng& rng) = 0;
  virtual std::string mode() const = 0;  // "template" or "model:<name>"
};

// Seeded pools; fully deterministic.
std::unique_ptr<ContentProvider> make_template_provider();

struct MutantProgram {
  std::string source_text;
  FaultyProgram parent;
  std::vector<AppliedStep> plan;
  int tracked_fault_line = 0;
  LineLedger cumulative_ledger;  // faulty source -> mutant source
  std::vector<std::pair<std::string, std::string>> renames;
  std::vector<std::string> introduced_names;  // from inserted dead code
  std::string content_mode;
};

// Zero-step mutant over the faulty source; the basis for apply_spm chains.
MutantProgram initial_mutant(const FaultyProgram& faulty);

// One operator applied `strength` times inside the quartile. Deterministic
// for fixed inputs in template mode. Throws NoApplicableTarget when the
// quartile offers nothing; fewer targets than strength is recorded in
// effective_strength rather than raised.
MutantProgram apply_spm(const MutantProgram& base, SpmKind kind, int strength,
                        Quartile quartile, ContentProvider& provider, uint64_t rng_seed);

inline MutantProgram apply_spm(const FaultyProgram& faulty, SpmKind kind, int strength,
                               Quartile quartile, ContentProvider& provider,
                               uint64_t rng_seed) {
  return apply_spm(initial_mutant(faulty), kind, strength, quartile, provider, rng_seed);
}

struct MutantSetResult {
  std::vector<MutantProgram> mutants;
  std::vector<std::string> errors;  // per-mutant failures, recorded not fatal
};

// The six-variant composition family: the four single operators (function
// shuffle only where the language allows it) plus M_c(M_v(P)) and
// M_c(M_v(M_d(P))).
MutantSetResult standard_mutant_set(const FaultyProgram& faulty, int strength,
                                    Quartile quartile, ContentProvider& provider,
                                    uint64_t rng_seed);

struct PreservationEvidence {
  bool equivalent = false;
  std::string detail;
};

// Differential execution of parent and mutant on the embedded driver input.
// `parent_result` may carry a cached parent execution; when null the parent
// is run twice and NonDeterministicSeed is raised if the runs disagree.
PreservationEvidence verify_preservation(const FaultyProgram& parent,
                                         const MutantProgram& mutant,
                                         const SandboxLimits& limits = {},
                                         const ExecResult* parent_result = nullptr);

// after_snippet with the mutant's rename map applied, word-bounded.
std::string rename_adjusted(const std::string& text,
                            const std::vector<std::pair<std::string, std::string>>& renames);

}  // namespace faultlines
