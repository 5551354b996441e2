#include "CLI11.hpp"

#include "vulnloc/experiment.hpp"
#include "vulnloc/text.hpp"

#include <fmt/format.h>

#include <iostream>

namespace ex = vulnloc::experiment;
using vulnloc::ErrorKind;

namespace {

struct Overrides {
  std::string config;
  std::string corpus;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string provider;
  std::string model;
  std::optional<std::size_t> max_in_flight;
  std::optional<std::size_t> max_requests;
  std::optional<std::size_t> horizon;
  std::string replay_from;
  std::string cwes;
  bool dry_run = false;
  bool no_cache = false;
  // command specific
  std::optional<std::size_t> records;
  std::string sizes;
  std::optional<std::size_t> runs;
  std::string k_values;
};

std::vector<std::string> list(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& part : vulnloc::text::split(s, ',')) {
    if (!vulnloc::text::trim(part).empty()) out.emplace_back(vulnloc::text::trim(part));
  }
  return out;
}

ex::ExperimentConfig resolve(const Overrides& o) {
  ex::ExperimentConfig c = o.config.empty() ? ex::ExperimentConfig{} : ex::load_config(o.config);
  if (!o.corpus.empty()) c.corpus_dir = o.corpus;
  if (!o.out.empty()) c.output_dir = o.out;
  if (o.seed) c.seed = *o.seed;
  if (o.max_requests) c.max_requests = o.max_requests;
  if (o.no_cache) c.cache = false;
  if (o.records) c.haystack_records = *o.records;
  if (o.runs) c.runs = *o.runs;
  try {
    if (!o.cwes.empty()) {
      c.cwe_filter.clear();
      for (const auto& s : list(o.cwes)) c.cwe_filter.push_back(vulnloc::corpus::CweId::parse(s));
    }
    if (!o.sizes.empty()) {
      c.haystack_sizes.clear();
      for (const auto& s : list(o.sizes)) c.haystack_sizes.push_back(std::stoul(s));
    }
  } catch (const std::exception& e) {
    vulnloc::fail(ErrorKind::ConfigError, std::string("bad list option: ") + e.what());
  }
  if (!o.k_values.empty()) {
    c.chunk_sizes.clear();
    for (const auto& s : list(o.k_values)) c.chunk_sizes.push_back(ex::parse_chunk_size(s));
  }

  if (c.providers.empty() && o.model.empty()) c.providers.push_back(ex::ProviderSpec{});
  if (!o.model.empty()) {
    std::vector<ex::ProviderSpec> kept;
    for (const auto& p : c.providers) {
      if (p.config.model_name == o.model) kept.push_back(p);
    }
    if (kept.empty()) {
      ex::ProviderSpec spec;
      spec.config.model_name = o.model;
      spec.config.provider_name = o.provider.empty() ? "mock" : o.provider;
      kept.push_back(spec);
    }
    c.providers = kept;
  }
  for (auto& p : c.providers) {
    if (!o.provider.empty()) p.config.provider_name = o.provider;
    if (o.dry_run) p.config.provider_name = "mock";
    if (o.max_in_flight) p.config.max_in_flight = *o.max_in_flight;
    if (o.horizon) p.mock.horizon = *o.horizon;
    if (!o.replay_from.empty()) p.replay_from = o.replay_from;
    if (p.config.provider_name == "replay" && p.replay_from.empty()) p.replay_from = c.output_dir;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark harness for in-file vulnerability localization by chat LLMs"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  app.add_option("--config", o.config, "JSON experiment config");
  app.add_option("--corpus", o.corpus, "corpus directory");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--seed", o.seed, "seed for artifact-side randomness");
  app.add_option("--provider", o.provider, "mock | openai | replay");
  app.add_option("--model", o.model, "restrict to / add this model");
  app.add_option("--max-in-flight", o.max_in_flight, "concurrent requests per model");
  app.add_option("--max-requests", o.max_requests, "abort before exceeding this many provider calls");
  app.add_option("--horizon", o.horizon, "mock inspection horizon in characters");
  app.add_option("--replay-from", o.replay_from, "output directory whose query logs a replay provider serves");
  app.add_option("--cwe", o.cwes, "comma-separated CWE ids");
  app.add_flag("--dry-run", o.dry_run, "answer every prompt with the offline mock provider");
  app.add_flag("--no-cache", o.no_cache, "do not reuse answers for identical prompts");

  std::string ingest_input;
  auto* ingest = app.add_subcommand("ingest", "validate and store record directories");
  auto* ingest_pos = ingest->add_option("input", ingest_input, "record directory or directory of records");
  auto* ingest_in = ingest->add_option("--in", ingest_input, "record directory or directory of records");
  ingest_pos->excludes(ingest_in);
  ingest_in->excludes(ingest_pos);
  auto* stats = app.add_subcommand("stats", "corpus statistics");
  auto* bench = app.add_subcommand("bench", "whole-file detection benchmark");
  auto* hgen = app.add_subcommand("haystack-gen", "generate code-in-the-haystack instances");
  hgen->add_option("--records", o.records, "base records per CWE");
  hgen->add_option("--sizes", o.sizes, "comma-separated target sizes");
  auto* hrun = app.add_subcommand("haystack-run", "probe haystack instances");
  hrun->add_option("--runs", o.runs, "repetitions per instance");
  hrun->add_option("--records", o.records, "base records per CWE");
  hrun->add_option("--sizes", o.sizes, "comma-separated target sizes");
  auto* sweep = app.add_subcommand("chunk-sweep", "chunk-size sweep against the whole-file baseline");
  sweep->add_option("--k", o.k_values, "comma-separated chunk sizes, 'inf' for no chunking");
  auto* analyze = app.add_subcommand("analyze", "logistic regressions of detection on position and size");
  auto* report = app.add_subcommand("report", "collect outputs into report/summary.md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ingest->parsed()) {
      const std::string corpus = o.corpus.empty() ? (o.config.empty() ? "corpus" : ex::load_config(o.config).corpus_dir.string())
                                                  : o.corpus;
      if (ingest_input.empty()) throw vulnloc::Error(vulnloc::ErrorKind::ConfigError, "ingest needs an input directory");
      const auto s = ex::run_ingest(ingest_input, corpus);
      for (const auto& r : s.rejected) std::cerr << "rejected " << r << "\n";
      std::cout << s.accepted << " records ingested, " << s.already_present << " already present, "
                << s.rejected.size() << " rejected\n";
      return s.rejected.empty() ? 0 : 1;
    }
    const ex::ExperimentConfig config = resolve(o);
    if (stats->parsed()) {
      const auto s = ex::run_stats(config);
      for (const auto& row : s.per_cwe) {
        std::cout << fmt::format("{}: {} files, median {} chars (IQR {}-{}), median function {} chars\n", row.cwe.str(),
                                 row.file_count, row.median_file_size, row.file_size_q1, row.file_size_q3,
                                 row.median_function_size);
      }
    } else if (bench->parsed()) {
      const auto s = ex::run_bench(config, std::cerr);
      std::cout << vulnloc::text::read_file(config.output_dir / "bench" / "metrics.csv");
      std::cerr << s.provider_calls << " provider calls, " << s.excluded << " files over a context ceiling\n";
    } else if (hgen->parsed()) {
      const auto s = ex::run_haystack_gen(config, std::cerr);
      std::cout << s.instances.size() << " instances written\n";
    } else if (hrun->parsed()) {
      const auto s = ex::run_haystack(config, std::cerr);
      std::cout << s.probes << " probes, " << s.scores.size() << " heatmap cells\n";
    } else if (sweep->parsed()) {
      const auto s = ex::run_chunk_sweep(config, std::cerr);
      std::cout << vulnloc::text::read_file(config.output_dir / "chunks" / "sweep.csv");
      std::cout << fmt::format("mean recall improvement at best k: {:.2f}%\n", s.mean_best_improvement);
    } else if (analyze->parsed()) {
      ex::run_analyze(config, std::cerr);
      std::cout << vulnloc::text::read_file(config.output_dir / "analysis" / "regressions.csv");
    } else if (report->parsed()) {
      ex::run_report(config, std::cerr);
    }
  } catch (const vulnloc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ex::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
