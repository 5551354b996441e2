#pragma once

#include "vulnloc/chunker.hpp"
#include "vulnloc/corpus.hpp"
#include "vulnloc/haystack.hpp"
#include "vulnloc/llmgw.hpp"
#include "vulnloc/probe.hpp"
#include "vulnloc/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vulnloc::experiment {

struct MockSettings {
  std::size_t horizon = 6000;
  bool decoy_on_miss = false;
  double p_detect_inside = 1.0;
  double p_detect_outside = 0.0;
};

struct ProviderSpec {
  llmgw::ProviderConfig config;
  MockSettings mock;
  std::filesystem::path replay_from;  // output directory whose query logs a replay provider serves
};

struct ExperimentConfig {
  std::filesystem::path corpus_dir = "corpus";
  std::filesystem::path output_dir = "out";
  std::vector<ProviderSpec> providers;
  std::vector<corpus::CweId> cwe_filter;  // empty: every CWE with at least min_records records
  std::size_t min_records = 1;
  std::vector<std::size_t> haystack_sizes{haystack::kStandardSizes.begin(), haystack::kStandardSizes.end()};
  std::size_t haystack_records = 5;
  std::size_t tolerance = haystack::kDefaultTolerance;
  std::vector<std::size_t> chunk_sizes{6500, 3000, 1500, 500};
  std::size_t runs = 5;
  std::uint64_t seed = 0;
  bool cache = true;
  std::optional<std::size_t> max_requests;

  /// Throws ConfigError naming the offending field.
  void validate(bool need_corpus = true) const;
};

/// Reads a JSON config; relative paths resolve against the file's directory.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parses "6500", "500" or "inf" (chunker::kWholeFile).
std::size_t parse_chunk_size(std::string_view s);
std::string chunk_size_label(std::size_t k);

/// Process exit code for a failure kind: 2 config, 3 provider, 4 incomplete, 1 other.
int exit_code_for(ErrorKind kind) noexcept;

struct IngestSummary {
  std::size_t accepted = 0;
  std::size_t already_present = 0;  // identical records ingested by an earlier run
  std::vector<std::string> rejected;  // "<dir>: <reason>"
};

/// Ingests every record directory under `input` (a directory holding
/// meta.json, or a directory of such directories).
IngestSummary run_ingest(const std::filesystem::path& input, const std::filesystem::path& corpus_dir);

/// Writes stats/corpus_stats.csv and returns the table.
corpus::CorpusStats run_stats(const ExperimentConfig& config);

struct BenchSummary {
  std::vector<std::pair<std::string, std::map<corpus::CweId, probe::MetricsReport>>> per_model;
  std::size_t provider_calls = 0;
  std::size_t excluded = 0;  // files over a model's character ceiling
};

/// Probes every vulnerable and patched file once per model; writes
/// bench/outcomes_<model>.jsonl and bench/metrics.csv.
BenchSummary run_bench(const ExperimentConfig& config, std::ostream& log);

struct GeneratedSet {
  std::vector<haystack::HaystackInstance> instances;
  std::map<corpus::CweId, std::vector<std::string>> records;   // selected base records
  std::map<corpus::CweId, std::vector<std::string>> skipped;   // "<record>: <reason>"
};

/// Builds the position grids and writes haystack/<cwe>/<record>/<S>/<n>.txt
/// with haystack/<cwe>/manifest.jsonl.
GeneratedSet run_haystack_gen(const ExperimentConfig& config, std::ostream& log);

struct HaystackSummary {
  std::vector<haystack::HaystackScore> scores;
  std::map<std::string, haystack::PositionHistogram> histograms;  // per "model/cwe"
  std::vector<stats::CellFit> fits;
  std::size_t probes = 0;
};

/// Probes every instance `runs` times per model and writes heatmaps,
/// wrong-position histograms and regressions under haystack_runs/.
HaystackSummary run_haystack(const ExperimentConfig& config, std::ostream& log);

struct SweepSummary {
  std::vector<chunker::SweepResult> results;
  std::map<std::pair<std::string, corpus::CweId>, std::size_t> best;
  double mean_best_improvement = 0;  // over cells with a defined improvement
};

/// Needs bench outcomes as the whole-file baseline; writes chunks/sweep.csv.
SweepSummary run_chunk_sweep(const ExperimentConfig& config, std::ostream& log);

/// Regressions of detection on position and size over the bench outcomes
/// (and haystack outcomes when present); writes analysis/*.csv.
std::vector<stats::CellFit> run_analyze(const ExperimentConfig& config, std::ostream& log);

/// Collects the CSV outputs into report/summary.md plus SVG heatmaps.
void run_report(const ExperimentConfig& config, std::ostream& log);

// --- report writers ----------------------------------------------------------

std::string metrics_csv(const BenchSummary& summary);
std::string sweep_csv(std::span<const chunker::SweepResult> results);
/// Rows are position indices n, columns the sizes S; empty where n > S/500.
std::string heatmap_csv(std::span<const haystack::HaystackScore> scores, const std::string& model, corpus::CweId cwe,
                        std::span<const std::size_t> sizes);
std::string heatmap_svg(std::span<const haystack::HaystackScore> scores, const std::string& model, corpus::CweId cwe,
                        std::span<const std::size_t> sizes);
std::string histogram_csv(const haystack::PositionHistogram& h);

}  // namespace vulnloc::experiment
