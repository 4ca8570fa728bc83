#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace faultlines {

enum class Language { PY, JAVA };

enum class Quartile { Q1 = 1, Q2 = 2, Q3 = 3, Q4 = 4 };

enum class FaultKind {
  OffByOne,
  MisplacedReturn,
  IncorrectBooleanLogic,
  OperatorSwap,
};

enum class SpmKind {
  DeadCode,
  MisleadingComments,
  MisleadingVariableNames,
  FunctionShuffle,
};

inline constexpr FaultKind kAllFaultKinds[] = {
    FaultKind::OffByOne,
    FaultKind::MisplacedReturn,
    FaultKind::IncorrectBooleanLogic,
    FaultKind::OperatorSwap,
};

inline constexpr SpmKind kAllSpmKinds[] = {
    SpmKind::DeadCode,
    SpmKind::MisleadingComments,
    SpmKind::MisleadingVariableNames,
    SpmKind::FunctionShuffle,
};

inline constexpr Quartile kAllQuartiles[] = {
    Quartile::Q1, Quartile::Q2, Quartile::Q3, Quartile::Q4};

enum class ErrorCode {
  MalformedRecord,
  ParseFailure,
  OverlappingEdits,
  SpanOutOfRange,
  LineOutOfRange,
  NoApplicableSite,
  NoApplicableTarget,
  RenameCollision,
  ProviderError,
  AuthMissing,
  ContextOverflow,
  MissingAnswers,
  SchemaViolation,
  RunLocked,
  Duplicate,
  ConfigMismatch,
  DependencyMissing,
  ExecutionTimeout,
  NonDeterministicSeed,
  InsufficientStrengths,
  UnknownModelPair,
  IoError,
  BadArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

std::string to_string(Language lang);
std::string to_string(Quartile q);
std::string to_string(FaultKind kind);
std::string to_string(SpmKind kind);
std::string to_string(ErrorCode code);

Language language_from_string(std::string_view s);
Quartile quartile_from_string(std::string_view s);
FaultKind fault_kind_from_string(std::string_view s);
SpmKind spm_kind_from_string(std::string_view s);

// Short algebraic tag used in plan signatures and report keys (M_d, M_c, ...).
std::string spm_tag(SpmKind kind);

}  // namespace faultlines
