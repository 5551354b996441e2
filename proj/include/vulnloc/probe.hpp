#pragma once

#include "vulnloc/corpus.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vulnloc::probe {

/// Strips surrounding backticks and matching quotes, collapses whitespace runs
/// to a single space and trims. Idempotent.
std::string normalize_line(std::string_view line);

struct PromptSpec {
  corpus::CweId cwe;
  std::string cwe_label;
  std::string_view file_content;
};

/// Human label used in the prompt for the CWEs the benchmark knows about;
/// falls back to "CWE-<id>".
std::string default_cwe_label(corpus::CweId cwe);

/// Instantiates the fixed detection prompt. The in-context example is the
/// CWE-79 'user_input' one whatever CWE is queried.
std::string render_prompt(const PromptSpec& spec);

/// Marker preceding the file content in every rendered prompt.
inline constexpr std::string_view kFileContentMarker = "File Content:\n";

/// Recovers the file content from a rendered prompt (empty when absent).
std::string_view prompt_file_content(std::string_view prompt);

enum class Verdict { Yes, No, Unparseable };
std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view s);

struct ModelResponse {
  std::string raw;
  std::optional<std::string> explanation;
  std::optional<std::string> reported_line;  // BL field, may span several lines
  Verdict verdict = Verdict::Unparseable;

  /// Normalized, non-empty candidate lines from the BL field.
  std::vector<std::string> candidate_lines() const;
};

ModelResponse parse_response(std::string_view raw);

enum class Classification { TP, FP, TN, FN };
std::string_view to_string(Classification c) noexcept;
Classification classification_from_string(std::string_view s);

/// True when a normalized reported line designates a normalized ground-truth
/// line: equality, or containment at whole-line granularity.
bool lines_match(std::string_view reported, std::string_view truth);

/// First ground-truth line matched by any BL candidate.
std::optional<std::string> find_match(const ModelResponse& response, const corpus::GroundTruth& truth);

struct ProbeOutcome {
  std::string record_id;
  bool is_vulnerable_input = false;
  ModelResponse response;
  Classification classification = Classification::FN;
  std::optional<std::string> matched_line;
  std::string note;  // e.g. "yes-without-line"
};

/// `truth` must be non-null exactly when the input is vulnerable
/// (ContractViolation otherwise).
Classification classify(bool is_vulnerable_input, const ModelResponse& response,
                        const corpus::GroundTruth* truth);

/// classify() plus the matched line and diagnostic note.
ProbeOutcome evaluate(std::string record_id, bool is_vulnerable_input, ModelResponse response,
                      const corpus::GroundTruth* truth);

struct MetricsReport {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  double precision = 0, recall = 0, accuracy = 0, f1 = 0;
  std::size_t n_files = 0;
  // Set when the rate's denominator was zero and 0 was reported instead.
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;
};

MetricsReport metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn);

/// Throws EmptyInput on an empty collection.
MetricsReport compute_metrics(std::span<const ProbeOutcome> outcomes);

}  // namespace vulnloc::probe
