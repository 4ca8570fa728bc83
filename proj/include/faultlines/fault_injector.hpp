#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faultlines/corpus.hpp"
#include "faultlines/source_model.hpp"

namespace faultlines {

// A concrete place where one fault kind can be applied. Span edits carry
// candidate replacements; return insertions carry the rendered statement.
struct FaultSite {
  FaultKind kind = FaultKind::OffByOne;
  int line = 0;  // position in the original source
  Span target_span;
  std::string original_text;
  std::vector<std::string> replacements;
  bool bound_is_int_literal = false;  // OffByOne only
  StatementBoundary boundary;         // MisplacedReturn only
  std::string return_statement;       // MisplacedReturn only, without indentation
};

struct InjectedFault {
  std::string seed_id;
  FaultKind kind = FaultKind::OffByOne;
  int fault_line = 0;  // line in the faulty source
  Quartile quartile = Quartile::Q1;
  std::string before_snippet;
  std::string after_snippet;
  uint64_t rng_seed = 0;
};

struct FaultyProgram {
  std::string source_text;
  InjectedFault fault;
  SeedProgram parent;
};

std::vector<FaultSite> discover_fault_sites(const SyntaxIndex& index, FaultKind kind);

// Applies exactly one fault, chosen uniformly among the in-quartile sites.
// Deterministic for identical (program, kind, quartile, rng_seed). Throws
// NoApplicableSite when the quartile offers nothing.
FaultyProgram inject_fault(const SeedProgram& program, FaultKind kind, Quartile quartile,
                           uint64_t rng_seed);

struct GenerationLog {
  std::string seed_id;
  FaultKind kind = FaultKind::OffByOne;
  Quartile quartile = Quartile::Q1;
  std::string reason;
};

struct FaultBatch {
  std::vector<FaultyProgram> faults;
  std::vector<GenerationLog> skipped;
};

// Up to per_combination distinct faults for every (seed, kind, quartile)
// with applicable sites; combinations without sites are logged, not fatal.
// With quartile_fallback, an empty quartile borrows a site from the next
// populated one (the recorded quartile is where the fault actually landed).
FaultBatch generate_fault_tasks(const std::vector<SeedProgram>& seeds,
                                const std::vector<FaultKind>& kinds,
                                const std::vector<Quartile>& quartiles,
                                int per_combination, uint64_t rng_seed,
                                bool quartile_fallback = false);

}  // namespace faultlines
