#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vulnloc {

enum class ErrorKind {
  // corpus
  MalformedDiff,
  ContextMismatch,
  EmptyFix,
  DuplicateRecord,
  ValidationFailure,
  // probe
  ContractViolation,
  EmptyInput,
  // haystack
  BlockNotExtractable,
  InfeasiblePadding,
  MissingCell,
  // chunker
  IncompleteCoverage,
  MissingBaseline,
  // llmgw
  ProviderError,
  RetriesExhausted,
  ContextOverflow,
  BudgetExceeded,
  // stats
  PerfectSeparation,
  ConstantOutcome,
  Singular,
  // cli
  ConfigError,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure the library reports is an Error carrying a kind, so callers
/// can branch on the category and still print a human-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The reason without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace vulnloc
