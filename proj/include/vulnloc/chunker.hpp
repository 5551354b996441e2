#pragma once

#include "vulnloc/corpus.hpp"
#include "vulnloc/probe.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vulnloc::chunker {

/// k value meaning "do not chunk": the whole file is one chunk.
inline constexpr std::size_t kWholeFile = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultSizes[] = {6500, 3000, 1500, 500};

struct Chunk {
  std::size_t offset = 0;
  std::string text;
};

struct ChunkPlan {
  std::size_t k = 0;
  std::vector<Chunk> chunks;
  std::string source_record_id;
};

/// Greedy line packing: lines (newline included) are appended while the
/// chunk stays within k characters. A line longer than k is a chunk alone.
ChunkPlan plan_chunks(std::string_view file, std::size_t k, std::string source_record_id = {});

/// Folds per-chunk outcomes into one file outcome. A vulnerable file is TP
/// when any chunk is TP; a patched file is FP when any chunk is FP.
/// A missing chunk outcome throws IncompleteCoverage.
probe::ProbeOutcome aggregate_file_verdict(std::span<const std::optional<probe::ProbeOutcome>> chunk_outcomes,
                                           const corpus::GroundTruth* truth);

struct SweepResult {
  std::string model;
  corpus::CweId cwe;
  std::size_t k = 0;
  double recall = 0;
  double accuracy = 0;
  double baseline_recall = 0;
  double recall_improvement_pct = 0;  // NaN when the baseline recall is 0
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

/// Throws MissingBaseline when `baseline` is null.
SweepResult make_sweep_result(std::string model, corpus::CweId cwe, std::size_t k, const probe::MetricsReport& chunked,
                              const probe::MetricsReport* baseline);

struct SweepFile {
  std::string record_id;
  bool vulnerable = false;
  std::string_view content;
  const corpus::GroundTruth* truth = nullptr;  // set for vulnerable files
};

/// Answers a batch of prompts; nullopt marks a prompt that got no answer.
using BatchProbe = std::function<std::vector<std::optional<std::string>>(std::span<const std::string> prompts)>;

/// File-level outcomes for one k, in `files` order.
std::vector<probe::ProbeOutcome> run_chunked(std::span<const SweepFile> files, corpus::CweId cwe, std::size_t k,
                                             const BatchProbe& probe_batch);

/// One result per k, sorted by recall descending (ties: larger k first).
std::vector<SweepResult> sweep(const std::string& model, corpus::CweId cwe, std::span<const std::size_t> k_values,
                               std::span<const SweepFile> files, const BatchProbe& probe_batch,
                               const probe::MetricsReport* baseline);

/// k with the highest recall, ties toward the largest k. Throws EmptyInput.
std::size_t best_k(std::span<const SweepResult> results);

}  // namespace vulnloc::chunker
