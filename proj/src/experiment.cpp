#include "vulnloc/experiment.hpp"

#include "json_io.hpp"
#include "vulnloc/text.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace vulnloc::experiment {

namespace fs = std::filesystem;

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "NA";
  return fmt::format("{:.6f}", v);
}

std::string file_safe(std::string_view name) {
  std::string out(name);
  for (char& c : out) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
  }
  return out;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!text::trim(line).empty()) out.push_back(line);
  }
  return out;
}

corpus::Corpus open_corpus(const ExperimentConfig& config) {
  config.validate(true);
  corpus::Corpus c = corpus::Corpus::open(config.corpus_dir);
  if (c.empty()) fail(ErrorKind::ConfigError, "corpus " + config.corpus_dir.string() + " holds no records");
  return c;
}

std::vector<corpus::CweId> selected_cwes(const corpus::Corpus& c, const ExperimentConfig& config) {
  const auto available = c.filter_corpus(config.min_records);
  if (config.cwe_filter.empty()) return available;
  std::vector<corpus::CweId> out;
  for (const auto& cwe : config.cwe_filter) {
    if (std::find(available.begin(), available.end(), cwe) == available.end()) {
      fail(ErrorKind::ConfigError, cwe.str() + " has fewer than " + std::to_string(config.min_records) +
                                       " records in the corpus");
    }
    out.push_back(cwe);
  }
  return out;
}

fs::path query_log_path(const fs::path& out_dir, const std::string& model) {
  return out_dir / "queries" / (file_safe(model) + ".jsonl");
}

std::shared_ptr<llmgw::Provider> make_provider(const ProviderSpec& spec, const corpus::Corpus& c,
                                               const ExperimentConfig& config) {
  const std::string& kind = spec.config.provider_name;
  if (kind == "mock") {
    llmgw::MockScript script;
    script.horizon = spec.mock.horizon;
    script.decoy_on_miss = spec.mock.decoy_on_miss;
    script.p_detect_inside = spec.mock.p_detect_inside;
    script.p_detect_outside = spec.mock.p_detect_outside;
    script.seed = config.seed;
    for (const auto& e : c.entries()) script.needles.insert(e.truth.removed_lines.begin(), e.truth.removed_lines.end());
    return std::make_shared<llmgw::MockProvider>(std::move(script));
  }
  if (kind == "replay") {
    const fs::path log = query_log_path(spec.replay_from, spec.config.model_name);
    if (!fs::exists(log)) fail(ErrorKind::ConfigError, "replay log not found: " + log.string());
    const auto records = llmgw::read_query_log(log);
    return std::make_shared<llmgw::ReplayProvider>(records);
  }
  if (kind == "openai" || kind == "http") return llmgw::make_http_provider();
  fail(ErrorKind::ConfigError, "unknown provider '" + kind + "'");
}

llmgw::Gateway make_gateway(const ProviderSpec& spec, const corpus::Corpus& c, const ExperimentConfig& config,
                            bool cache) {
  llmgw::GatewayOptions options;
  options.cache = cache && config.cache;
  options.max_requests = config.max_requests;
  return llmgw::Gateway(spec.config, make_provider(spec, c, config),
                        query_log_path(config.output_dir, spec.config.model_name), options);
}

/// Provider failures end the model's run; overflows are the caller's business.
void raise_provider_failure(const llmgw::Result& r) {
  if (r.ok() || *r.error == ErrorKind::ContextOverflow) return;
  fail(*r.error, r.request_id + ": " + r.message);
}

std::string csv_to_markdown(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string row = "|";
    std::size_t cols = 0;
    for (const auto& cell : text::split(line, ',')) {
      row += " " + cell + " |";
      ++cols;
    }
    out += row + "\n";
    if (header) {
      out += "|";
      for (std::size_t i = 0; i < cols; ++i) out += " --- |";
      out += "\n";
      header = false;
    }
  }
  return out;
}

struct BenchRow {
  std::string model;
  corpus::CweId cwe;
  probe::ProbeOutcome outcome;
};

std::vector<BenchRow> read_bench_outcomes(const fs::path& path, const std::string& model) {
  std::vector<BenchRow> rows;
  for (const auto& line : read_lines(path)) {
    const json j = json::parse(line);
    rows.push_back(BenchRow{model, corpus::CweId::parse(j.at("cwe").get<std::string>()), probe::outcome_from_json(j)});
  }
  return rows;
}

struct ManifestRow {
  corpus::CweId cwe;
  std::string record_id;
  std::size_t target_size = 0;
  std::size_t position = 0;
  std::size_t core_offset = 0;
  fs::path file;
};

std::vector<ManifestRow> read_manifest(const fs::path& cwe_dir, corpus::CweId cwe) {
  std::vector<ManifestRow> rows;
  for (const auto& line : read_lines(cwe_dir / "manifest.jsonl")) {
    const json j = json::parse(line);
    rows.push_back(ManifestRow{cwe, j.at("record_id").get<std::string>(), j.at("target_size").get<std::size_t>(),
                               j.at("position").get<std::size_t>(), j.at("core_offset").get<std::size_t>(),
                               cwe_dir / j.at("path").get<std::string>()});
  }
  return rows;
}

std::string instance_key(corpus::CweId cwe, std::string_view record, std::size_t s, std::size_t n) {
  return fmt::format("{}/{}/{}/{}", cwe.str(), record, s, n);
}

std::vector<stats::Observation> haystack_observations(const fs::path& outcomes_path, const std::string& model) {
  std::vector<stats::Observation> obs;
  for (const auto& line : read_lines(outcomes_path)) {
    const json j = json::parse(line);
    stats::Observation o;
    o.model = model;
    o.cwe = corpus::CweId::parse(j.at("cwe").get<std::string>());
    o.detected = j.at("classification").get<std::string>() == "TP";
    o.position = j.at("position").get<double>();
    o.file_size = j.at("file_size").get<double>();
    obs.push_back(o);
  }
  return obs;
}

}  // namespace

// --- configuration -----------------------------------------------------------

void ExperimentConfig::validate(bool need_corpus) const {
  if (need_corpus && (!fs::is_directory(corpus_dir))) {
    fail(ErrorKind::ConfigError, "corpus directory not found: " + corpus_dir.string());
  }
  if (providers.empty()) fail(ErrorKind::ConfigError, "no providers configured");
  std::set<std::string> models;
  for (const auto& p : providers) {
    p.config.validate();
    if (!models.insert(p.config.model_name).second) {
      fail(ErrorKind::ConfigError, "model " + p.config.model_name + " configured twice");
    }
  }
  for (std::size_t s : haystack_sizes) {
    if (s == 0 || s % haystack::kCellWidth != 0) {
      fail(ErrorKind::ConfigError, "haystack size " + std::to_string(s) + " is not a positive multiple of 500");
    }
  }
  for (std::size_t k : chunk_sizes) {
    if (k == 0) fail(ErrorKind::ConfigError, "chunk size must be positive");
  }
  if (runs == 0) fail(ErrorKind::ConfigError, "runs must be at least 1");
  if (haystack_records == 0) fail(ErrorKind::ConfigError, "haystack_records must be at least 1");
}

std::size_t parse_chunk_size(std::string_view s) {
  const std::string t = text::to_lower(text::trim(s));
  if (t == "inf" || t == "infinity") return chunker::kWholeFile;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(t, &used);
    if (used != t.size() || v <= 0) throw std::invalid_argument(t);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    fail(ErrorKind::ConfigError, "invalid chunk size '" + std::string(s) + "'");
  }
}

std::string chunk_size_label(std::size_t k) { return k == chunker::kWholeFile ? "inf" : std::to_string(k); }

ExperimentConfig load_config(const fs::path& path) {
  json j;
  try {
    j = json::parse(text::read_file(path));
  } catch (const json::exception& e) {
    fail(ErrorKind::ConfigError, path.string() + ": " + e.what());
  } catch (const Error& e) {
    fail(ErrorKind::ConfigError, e.detail());
  }
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };

  ExperimentConfig c;
  try {
    if (j.contains("corpus_dir")) c.corpus_dir = resolve(j["corpus_dir"].get<std::string>());
    if (j.contains("output_dir")) c.output_dir = resolve(j["output_dir"].get<std::string>());
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("runs")) c.runs = j["runs"].get<std::size_t>();
    if (j.contains("cache")) c.cache = j["cache"].get<bool>();
    if (j.contains("min_records")) c.min_records = j["min_records"].get<std::size_t>();
    if (j.contains("haystack_records")) c.haystack_records = j["haystack_records"].get<std::size_t>();
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<std::size_t>();
    if (j.contains("max_requests") && !j["max_requests"].is_null()) c.max_requests = j["max_requests"].get<std::size_t>();
    if (j.contains("haystack_sizes")) c.haystack_sizes = j["haystack_sizes"].get<std::vector<std::size_t>>();
    if (j.contains("cwe_filter")) {
      for (const auto& v : j["cwe_filter"]) {
        c.cwe_filter.push_back(v.is_number() ? corpus::CweId(v.get<int>()) : corpus::CweId::parse(v.get<std::string>()));
      }
    }
    if (j.contains("chunk_sizes")) {
      c.chunk_sizes.clear();
      for (const auto& v : j["chunk_sizes"]) {
        c.chunk_sizes.push_back(v.is_number() ? v.get<std::size_t>() : parse_chunk_size(v.get<std::string>()));
      }
    }
    for (const auto& p : j.value("providers", json::array())) {
      ProviderSpec spec;
      auto& pc = spec.config;
      pc.provider_name = p.value("provider", std::string("mock"));
      pc.model_name = p.value("model", pc.provider_name);
      pc.endpoint_url = p.value("endpoint_url", std::string());
      pc.api_key_ref = p.value("api_key_env", std::string());
      pc.temperature = p.value("temperature", 0.0);
      pc.max_in_flight = p.value("max_in_flight", std::size_t{4});
      pc.timeout_s = p.value("timeout_s", 120.0);
      pc.retry_budget = p.value("retry_budget", std::size_t{3});
      if (p.contains("max_chars") && !p["max_chars"].is_null()) pc.max_chars = p["max_chars"].get<std::size_t>();
      if (p.contains("mock")) {
        const auto& m = p["mock"];
        spec.mock.horizon = m.value("horizon", spec.mock.horizon);
        spec.mock.decoy_on_miss = m.value("decoy_on_miss", false);
        spec.mock.p_detect_inside = m.value("p_detect_inside", 1.0);
        spec.mock.p_detect_outside = m.value("p_detect_outside", 0.0);
      }
      if (p.contains("replay_from")) spec.replay_from = resolve(p["replay_from"].get<std::string>());
      c.providers.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ConfigError, path.string() + ": " + e.what());
  } catch (const Error& e) {
    fail(ErrorKind::ConfigError, path.string() + ": " + e.detail());
  }
  return c;
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::Io:
      return 2;
    case ErrorKind::ProviderError:
    case ErrorKind::RetriesExhausted:
      return 3;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::MissingCell:
    case ErrorKind::IncompleteCoverage:
    case ErrorKind::MissingBaseline:
      return 4;
    default:
      return 1;
  }
}

// --- ingest / stats ------------------------------------------------------------

IngestSummary run_ingest(const fs::path& input, const fs::path& corpus_dir) {
  if (!fs::is_directory(input)) fail(ErrorKind::ConfigError, "input directory not found: " + input.string());
  std::vector<fs::path> dirs;
  if (fs::exists(input / "meta.json")) {
    dirs.push_back(input);
  } else {
    for (const auto& e : fs::directory_iterator(input)) {
      if (e.is_directory() && fs::exists(e.path() / "meta.json")) dirs.push_back(e.path());
    }
  }
  std::sort(dirs.begin(), dirs.end());
  corpus::Corpus c = corpus::Corpus::open(corpus_dir);
  IngestSummary summary;
  for (const auto& d : dirs) {
    std::optional<corpus::VulnRecord> record;
    try {
      record = corpus::load_record_dir(d);
      c.ingest(*record);
      ++summary.accepted;
    } catch (const Error& e) {
      const corpus::Entry* stored = record ? c.find(record->record_id) : nullptr;
      if (e.kind() == ErrorKind::DuplicateRecord && stored && stored->record.pre_file == record->pre_file &&
          stored->record.post_file == record->post_file && stored->record.diff == record->diff &&
          stored->record.cwe == record->cwe) {
        ++summary.already_present;
        continue;
      }
      summary.rejected.push_back(d.filename().string() + ": " + e.what());
    } catch (const json::exception& e) {
      summary.rejected.push_back(d.filename().string() + ": meta.json: " + e.what());
    }
  }
  return summary;
}

corpus::CorpusStats run_stats(const ExperimentConfig& config) {
  if (!fs::is_directory(config.corpus_dir)) fail(ErrorKind::ConfigError, "corpus directory not found: " + config.corpus_dir.string());
  const corpus::Corpus c = corpus::Corpus::open(config.corpus_dir);
  const corpus::CorpusStats s = c.compute_stats();
  std::string csv = "cwe,file_count,median_file_size,file_size_q1,file_size_q3,median_function_size,median_functions_per_file\n";
  for (const auto& row : s.per_cwe) {
    csv += fmt::format("{},{},{},{},{},{},{}\n", row.cwe.str(), row.file_count, row.median_file_size, row.file_size_q1,
                       row.file_size_q3, row.median_function_size, row.median_functions_per_file);
  }
  text::write_file(config.output_dir / "stats" / "corpus_stats.csv", csv);
  return s;
}

// --- bench -------------------------------------------------------------------

std::string metrics_csv(const BenchSummary& summary) {
  std::string csv = "cwe,model,f1,accuracy,precision,recall,n_files\n";
  std::set<corpus::CweId> cwes;
  for (const auto& [model, per_cwe] : summary.per_model) {
    for (const auto& [cwe, m] : per_cwe) cwes.insert(cwe);
  }
  for (const auto& cwe : cwes) {
    for (const auto& [model, per_cwe] : summary.per_model) {
      auto it = per_cwe.find(cwe);
      if (it == per_cwe.end()) continue;
      const auto& m = it->second;
      csv += fmt::format("{},{},{},{},{},{},{}\n", cwe.str(), model, num(m.f1), num(m.accuracy), num(m.precision),
                         num(m.recall), m.n_files);
    }
  }
  return csv;
}

BenchSummary run_bench(const ExperimentConfig& config, std::ostream& log) {
  const corpus::Corpus c = open_corpus(config);
  const auto cwes = selected_cwes(c, config);
  BenchSummary summary;
  const fs::path dir = config.output_dir / "bench";

  for (const auto& spec : config.providers) {
    const std::string& model = spec.config.model_name;
    llmgw::Gateway gw = make_gateway(spec, c, config, true);

    struct Job {
      const corpus::Entry* entry;
      bool vulnerable;
    };
    std::vector<Job> jobs;
    std::vector<llmgw::Request> requests;
    for (const auto& cwe : cwes) {
      const std::string label = probe::default_cwe_label(cwe);
      for (const corpus::Entry* e : c.entries_for(cwe)) {
        for (bool vulnerable : {true, false}) {
          const std::string& content = vulnerable ? e->record.pre_file : e->record.post_file;
          jobs.push_back({e, vulnerable});
          requests.push_back({fmt::format("bench/{}/{}/{}", cwe.str(), e->record.record_id, vulnerable ? "pre" : "post"),
                              probe::render_prompt({cwe, label, content})});
        }
      }
    }
    const std::size_t calls_before = gw.calls_made();
    const auto results = gw.batch(requests);
    summary.provider_calls += gw.calls_made() - calls_before;

    std::string outcomes_jsonl;
    std::map<corpus::CweId, std::vector<probe::ProbeOutcome>> per_cwe;
    std::optional<llmgw::Result> failure;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      if (!r.ok()) {
        if (*r.error == ErrorKind::ContextOverflow) {
          ++summary.excluded;
          log << model << ": excluded " << r.request_id << " (" << r.message << ")\n";
        } else if (!failure) {
          failure = r;
        }
        continue;
      }
      const Job& job = jobs[i];
      auto outcome = probe::evaluate(job.entry->record.record_id, job.vulnerable, probe::parse_response(*r.text),
                                     job.vulnerable ? &job.entry->truth : nullptr);
      json j = probe::to_json(outcome);
      j["cwe"] = job.entry->record.cwe.str();
      j["model"] = model;
      j["position"] = job.entry->truth.first_changed_offset;
      j["file_size"] = job.vulnerable ? job.entry->record.pre_file.size() : job.entry->record.post_file.size();
      outcomes_jsonl += j.dump() + "\n";
      per_cwe[job.entry->record.cwe].push_back(std::move(outcome));
    }
    text::write_file(dir / ("outcomes_" + file_safe(model) + ".jsonl"), outcomes_jsonl);
    if (failure) raise_provider_failure(*failure);

    std::map<corpus::CweId, probe::MetricsReport> metrics;
    for (const auto& [cwe, outs] : per_cwe) metrics[cwe] = probe::compute_metrics(outs);
    summary.per_model.emplace_back(model, std::move(metrics));
    log << model << ": " << results.size() << " files probed\n";
  }
  text::write_file(dir / "metrics.csv", metrics_csv(summary));
  return summary;
}

// --- haystack ----------------------------------------------------------------

GeneratedSet run_haystack_gen(const ExperimentConfig& config, std::ostream& log) {
  const corpus::Corpus c = open_corpus(config);
  GeneratedSet set;
  for (const auto& cwe : selected_cwes(c, config)) {
    const fs::path cwe_dir = config.output_dir / "haystack" / cwe.str();
    fs::remove_all(cwe_dir);
    auto order = haystack::select_records(c.entries_for(cwe), static_cast<std::size_t>(-1));
    std::string manifest;
    std::size_t taken = 0;
    for (const corpus::Entry* e : order) {
      if (taken == config.haystack_records) break;
      std::vector<haystack::HaystackInstance> grid;
      try {
        const auto block = haystack::extract_block(e->record, e->truth);
        const auto pool = haystack::padding_pool(e->record, e->truth, block);
        for (std::size_t s : config.haystack_sizes) {
          auto g = haystack::build_grid(*e, block, s, pool, config.tolerance);
          grid.insert(grid.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
        }
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::BlockNotExtractable && err.kind() != ErrorKind::InfeasiblePadding) throw;
        set.skipped[cwe].push_back(e->record.record_id + ": " + err.what());
        log << cwe.str() << ": skipped " << e->record.record_id << " (" << err.what() << ")\n";
        continue;
      }
      ++taken;
      set.records[cwe].push_back(e->record.record_id);
      for (auto& inst : grid) {
        const std::string rel = fmt::format("{}/{}/{}.txt", inst.base_record_id, inst.target_size, inst.position);
        text::write_file(cwe_dir / rel, inst.content);
        const json row{
            {"cwe", cwe.str()},
            {"record_id", inst.base_record_id},
            {"target_size", inst.target_size},
            {"position", inst.position},
            {"path", rel},
            {"size", inst.content.size()},
            {"block_offset", inst.block_offset},
            {"core_offset", inst.core_offset},
            {"block_size", inst.block_size},
            {"filler", inst.filler},
            {"core_line", inst.core_line},
            {"before_units", inst.before_units},
            {"after_units", inst.after_units},
        };
        manifest += row.dump() + "\n";
        set.instances.push_back(std::move(inst));
      }
    }
    if (taken < config.haystack_records) {
      log << cwe.str() << ": only " << taken << " of " << config.haystack_records << " records usable\n";
    }
    text::write_file(cwe_dir / "manifest.jsonl", manifest);
  }
  return set;
}

std::string heatmap_csv(std::span<const haystack::HaystackScore> scores, const std::string& model, corpus::CweId cwe,
                        std::span<const std::size_t> sizes) {
  std::map<std::pair<std::size_t, std::size_t>, double> cell;
  std::size_t max_n = 0;
  for (const auto& s : scores) {
    if (s.model != model || s.cwe != cwe) continue;
    cell[{s.position, s.target_size}] = s.mean_score;
  }
  for (std::size_t s : sizes) max_n = std::max(max_n, s / haystack::kCellWidth);
  std::string csv = "n";
  for (std::size_t s : sizes) csv += "," + std::to_string(s);
  csv += "\n";
  for (std::size_t n = 1; n <= max_n; ++n) {
    csv += std::to_string(n);
    for (std::size_t s : sizes) {
      auto it = cell.find({n, s});
      csv += ",";
      if (it != cell.end()) csv += num(it->second);
    }
    csv += "\n";
  }
  return csv;
}

std::string heatmap_svg(std::span<const haystack::HaystackScore> scores, const std::string& model, corpus::CweId cwe,
                        std::span<const std::size_t> sizes) {
  constexpr int kCell = 14, kLeft = 40, kTop = 40, kColWidth = 70;
  std::size_t max_n = 0;
  for (std::size_t s : sizes) max_n = std::max(max_n, s / haystack::kCellWidth);
  const int width = kLeft + kColWidth * static_cast<int>(sizes.size()) + 10;
  const int height = kTop + kCell * static_cast<int>(max_n) + 10;
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" font-size=\"10\">\n"
      "<text x=\"{}\" y=\"14\">{} {}</text>\n",
      width, height, kLeft, model, cwe.str());
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    svg += fmt::format("<text x=\"{}\" y=\"{}\">S={}</text>\n", kLeft + kColWidth * static_cast<int>(c), kTop - 6, sizes[c]);
  }
  for (const auto& s : scores) {
    if (s.model != model || s.cwe != cwe) continue;
    const auto col = std::find(sizes.begin(), sizes.end(), s.target_size);
    if (col == sizes.end()) continue;
    // -1 red, 0 white, +1 green
    const double v = std::clamp(s.mean_score, -1.0, 1.0);
    const int r = v < 0 ? 255 : static_cast<int>(255 * (1 - v));
    const int g = v > 0 ? 255 : static_cast<int>(255 * (1 + v));
    const int b = static_cast<int>(255 * (1 - std::abs(v)));
    svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"rgb({},{},{})\"/>\n",
                       kLeft + kColWidth * static_cast<int>(col - sizes.begin()),
                       kTop + kCell * static_cast<int>(s.position - 1), kColWidth - 2, kCell - 1, r, g, b);
  }
  for (std::size_t n = 1; n <= max_n; n += 5) {
    svg += fmt::format("<text x=\"4\" y=\"{}\">n={}</text>\n", kTop + kCell * static_cast<int>(n) - 3, n);
  }
  svg += "</svg>\n";
  return svg;
}

std::string histogram_csv(const haystack::PositionHistogram& h) {
  std::string csv = "target_size,bucket_start,bucket_end,count\n";
  std::set<std::size_t> sizes;
  for (const auto& [s, _] : h.buckets) sizes.insert(s);
  for (const auto& [s, _] : h.not_in_file) sizes.insert(s);
  for (std::size_t s : sizes) {
    if (auto it = h.buckets.find(s); it != h.buckets.end()) {
      for (const auto& [start, count] : it->second) {
        csv += fmt::format("{},{},{},{}\n", s, start, start + h.bucket_width, count);
      }
    }
    if (auto it = h.not_in_file.find(s); it != h.not_in_file.end()) {
      csv += fmt::format("{},not-in-file,,{}\n", s, it->second);
    }
  }
  return csv;
}

HaystackSummary run_haystack(const ExperimentConfig& config, std::ostream& log) {
  const corpus::Corpus c = open_corpus(config);
  const auto cwes = selected_cwes(c, config);
  bool have_manifests = true;
  for (const auto& cwe : cwes) {
    have_manifests = have_manifests && fs::exists(config.output_dir / "haystack" / cwe.str() / "manifest.jsonl");
  }
  if (!have_manifests) run_haystack_gen(config, log);

  std::vector<ManifestRow> rows;
  std::map<std::string, std::string> contents;
  for (const auto& cwe : cwes) {
    for (auto& r : read_manifest(config.output_dir / "haystack" / cwe.str(), cwe)) {
      contents[instance_key(r.cwe, r.record_id, r.target_size, r.position)] = text::read_file(r.file);
      rows.push_back(std::move(r));
    }
  }

  HaystackSummary summary;
  std::vector<haystack::InstanceOutcome> all;
  std::vector<stats::Observation> observations;
  for (const auto& spec : config.providers) {
    const std::string& model = spec.config.model_name;
    llmgw::Gateway gw = make_gateway(spec, c, config, false);
    std::vector<llmgw::Request> requests;
    for (std::size_t run = 1; run <= config.runs; ++run) {
      for (const auto& r : rows) {
        const std::string key = instance_key(r.cwe, r.record_id, r.target_size, r.position);
        requests.push_back({fmt::format("haystack/{}/run{}", key, run),
                            probe::render_prompt({r.cwe, probe::default_cwe_label(r.cwe), contents.at(key)})});
      }
    }
    const auto results = gw.batch(requests);
    summary.probes += results.size();

    std::string outcomes_jsonl;
    std::vector<haystack::InstanceOutcome> model_outcomes;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& res = results[i];
      raise_provider_failure(res);
      if (!res.ok()) {
        log << model << ": " << res.request_id << " exceeds the context window\n";
        continue;
      }
      const ManifestRow& r = rows[i % rows.size()];
      const corpus::Entry* e = c.find(r.record_id);
      if (!e) fail(ErrorKind::ConfigError, "haystack manifest names unknown record " + r.record_id);
      haystack::InstanceOutcome o;
      o.model = model;
      o.cwe = r.cwe;
      o.record_id = r.record_id;
      o.target_size = r.target_size;
      o.position = r.position;
      o.run = i / rows.size() + 1;
      o.outcome = probe::evaluate(r.record_id, true, probe::parse_response(*res.text), &e->truth);
      const std::size_t file_size = contents.at(instance_key(r.cwe, r.record_id, r.target_size, r.position)).size();

      json j = probe::to_json(o.outcome);
      j["model"] = model;
      j["cwe"] = r.cwe.str();
      j["target_size"] = r.target_size;
      j["n"] = r.position;
      j["run"] = o.run;
      j["position"] = r.core_offset;
      j["file_size"] = file_size;
      outcomes_jsonl += j.dump() + "\n";

      observations.push_back(stats::Observation{o.outcome.classification == probe::Classification::TP,
                                                static_cast<double>(r.core_offset), static_cast<double>(file_size),
                                                r.cwe, model});
      model_outcomes.push_back(std::move(o));
    }
    const fs::path model_dir = config.output_dir / "haystack_runs" / file_safe(model);
    text::write_file(model_dir / "outcomes.jsonl", outcomes_jsonl);

    auto scores = haystack::score_run(model_outcomes, config.haystack_sizes);
    for (const auto& cwe : cwes) {
      std::vector<haystack::InstanceOutcome> of_cwe;
      for (const auto& o : model_outcomes) {
        if (o.cwe == cwe) of_cwe.push_back(o);
      }
      const auto hist = haystack::wrong_position_distribution(of_cwe, [&](const haystack::InstanceOutcome& o) {
        return std::string_view(contents.at(instance_key(o.cwe, o.record_id, o.target_size, o.position)));
      });
      text::write_file(model_dir / ("heatmap_" + cwe.str() + ".csv"), heatmap_csv(scores, model, cwe, config.haystack_sizes));
      text::write_file(model_dir / ("heatmap_" + cwe.str() + ".svg"), heatmap_svg(scores, model, cwe, config.haystack_sizes));
      text::write_file(model_dir / ("wrong_positions_" + cwe.str() + ".csv"), histogram_csv(hist));
      summary.histograms[model + "/" + cwe.str()] = hist;
    }
    summary.scores.insert(summary.scores.end(), scores.begin(), scores.end());
    all.insert(all.end(), model_outcomes.begin(), model_outcomes.end());
    log << model << ": " << results.size() << " haystack probes\n";
  }

  summary.fits = stats::fit_all(observations);
  text::write_file(config.output_dir / "haystack_runs" / "regressions.csv", stats::regression_csv(summary.fits));
  text::write_file(config.output_dir / "haystack_runs" / "curves.csv", stats::curves_csv(summary.fits));
  return summary;
}

// --- chunk sweep -------------------------------------------------------------

std::string sweep_csv(std::span<const chunker::SweepResult> results) {
  std::map<std::pair<std::string, corpus::CweId>, std::vector<chunker::SweepResult>> cells;
  for (const auto& r : results) cells[{r.model, r.cwe}].push_back(r);
  std::string csv = "cwe,model,k,accuracy,recall,recall_improvement_pct,tp,fp,tn,fn,best\n";
  for (const auto& [key, rs] : cells) {
    const std::size_t best = chunker::best_k(rs);
    for (const auto& r : rs) {
      csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.cwe.str(), r.model, chunk_size_label(r.k),
                         num(r.accuracy), num(r.recall), num(r.recall_improvement_pct), r.tp, r.fp, r.tn, r.fn,
                         r.k == best ? "true" : "false");
    }
  }
  return csv;
}

SweepSummary run_chunk_sweep(const ExperimentConfig& config, std::ostream& log) {
  const corpus::Corpus c = open_corpus(config);
  const auto cwes = selected_cwes(c, config);
  SweepSummary summary;
  double improvement_sum = 0;
  std::size_t improvement_cells = 0;

  for (const auto& spec : config.providers) {
    const std::string& model = spec.config.model_name;
    const fs::path baseline_path = config.output_dir / "bench" / ("outcomes_" + file_safe(model) + ".jsonl");
    if (!fs::exists(baseline_path)) {
      fail(ErrorKind::MissingBaseline, model + ": run bench first (" + baseline_path.string() + " missing)");
    }
    const auto rows = read_bench_outcomes(baseline_path, model);
    llmgw::Gateway gw = make_gateway(spec, c, config, true);

    for (const auto& cwe : cwes) {
      std::vector<probe::ProbeOutcome> base;
      std::vector<chunker::SweepFile> files;
      for (const auto& row : rows) {
        if (row.cwe != cwe) continue;
        const corpus::Entry* e = c.find(row.outcome.record_id);
        if (!e) continue;
        base.push_back(row.outcome);
        const bool vulnerable = row.outcome.is_vulnerable_input;
        files.push_back({e->record.record_id, vulnerable, vulnerable ? e->record.pre_file : e->record.post_file,
                         vulnerable ? &e->truth : nullptr});
      }
      if (base.empty()) fail(ErrorKind::MissingBaseline, model + " " + cwe.str() + ": no bench outcomes");
      const probe::MetricsReport baseline = probe::compute_metrics(base);

      std::size_t k_index = 0;
      std::vector<std::size_t> ks = config.chunk_sizes;
      chunker::BatchProbe probe_batch = [&](std::span<const std::string> prompts) {
        std::vector<llmgw::Request> requests;
        for (std::size_t i = 0; i < prompts.size(); ++i) {
          requests.push_back({fmt::format("chunk/{}/k{}/{}", cwe.str(), chunk_size_label(ks[k_index]), i), prompts[i]});
        }
        ++k_index;
        const auto results = gw.batch(requests);
        std::vector<std::optional<std::string>> out;
        for (const auto& r : results) {
          raise_provider_failure(r);
          out.push_back(r.text);
        }
        return out;
      };
      auto results = chunker::sweep(model, cwe, ks, files, probe_batch, &baseline);
      const std::size_t best = chunker::best_k(results);
      summary.best[{model, cwe}] = best;
      for (const auto& r : results) {
        if (r.k == best && !std::isnan(r.recall_improvement_pct)) {
          improvement_sum += r.recall_improvement_pct;
          ++improvement_cells;
        }
      }
      log << fmt::format("{} {}: best k={} \n", model, cwe.str(), chunk_size_label(best));
      summary.results.insert(summary.results.end(), results.begin(), results.end());
    }
  }
  summary.mean_best_improvement = improvement_cells ? improvement_sum / static_cast<double>(improvement_cells) : std::nan("");
  text::write_file(config.output_dir / "chunks" / "sweep.csv", sweep_csv(summary.results));
  log << "mean recall improvement at best k: " << num(summary.mean_best_improvement) << "%\n";
  return summary;
}

// --- analysis / report -------------------------------------------------------

std::vector<stats::CellFit> run_analyze(const ExperimentConfig& config, std::ostream& log) {
  const corpus::Corpus c = open_corpus(config);
  std::vector<stats::Observation> obs, hay;
  for (const auto& spec : config.providers) {
    const std::string& model = spec.config.model_name;
    const fs::path bench = config.output_dir / "bench" / ("outcomes_" + file_safe(model) + ".jsonl");
    if (fs::exists(bench)) {
      for (const auto& row : read_bench_outcomes(bench, model)) {
        if (!row.outcome.is_vulnerable_input) continue;
        const corpus::Entry* e = c.find(row.outcome.record_id);
        if (!e) continue;
        obs.push_back(stats::Observation{row.outcome.classification == probe::Classification::TP,
                                         static_cast<double>(e->truth.first_changed_offset),
                                         static_cast<double>(e->record.pre_file.size()), row.cwe, model});
      }
    }
    const fs::path hs = config.output_dir / "haystack_runs" / file_safe(model) / "outcomes.jsonl";
    if (fs::exists(hs)) {
      auto more = haystack_observations(hs, model);
      hay.insert(hay.end(), more.begin(), more.end());
    }
  }
  if (obs.empty() && hay.empty()) fail(ErrorKind::MissingBaseline, "no bench or haystack outcomes to analyze");
  const fs::path dir = config.output_dir / "analysis";
  std::vector<stats::CellFit> fits = stats::fit_all(obs);
  text::write_file(dir / "regressions.csv", stats::regression_csv(fits));
  text::write_file(dir / "curves.csv", stats::curves_csv(fits));
  if (!hay.empty()) {
    const auto hfits = stats::fit_all(hay);
    text::write_file(dir / "haystack_regressions.csv", stats::regression_csv(hfits));
    text::write_file(dir / "haystack_curves.csv", stats::curves_csv(hfits));
  }
  std::size_t failed = 0;
  for (const auto& f : fits) failed += f.error ? 1 : 0;
  log << fits.size() << " regression fits on real files, " << failed << " not estimable\n";
  return fits;
}

void run_report(const ExperimentConfig& config, std::ostream& log) {
  const fs::path out = config.output_dir;
  std::string md = "# Experiment report\n\n";
  auto section = [&](const std::string& title, const fs::path& csv) {
    if (!fs::exists(csv)) return;
    md += "## " + title + "\n\n" + csv_to_markdown(text::read_file(csv)) + "\n";
  };
  section("Corpus statistics", out / "stats" / "corpus_stats.csv");
  section("Whole-file detection", out / "bench" / "metrics.csv");
  section("Chunk-size sweep", out / "chunks" / "sweep.csv");
  section("Regressions on real files", out / "analysis" / "regressions.csv");
  section("Regressions on haystack instances", out / "haystack_runs" / "regressions.csv");
  const fs::path runs = out / "haystack_runs";
  if (fs::is_directory(runs)) {
    std::vector<fs::path> svgs;
    for (const auto& e : fs::recursive_directory_iterator(runs)) {
      if (e.path().extension() == ".svg") svgs.push_back(fs::relative(e.path(), out / "report"));
    }
    std::sort(svgs.begin(), svgs.end());
    if (!svgs.empty()) md += "## Heatmaps\n\n";
    for (const auto& s : svgs) md += "![" + s.stem().string() + "](" + s.generic_string() + ")\n";
  }
  text::write_file(out / "report" / "summary.md", md);
  log << "wrote " << (out / "report" / "summary.md").string() << "\n";
}

}  // namespace vulnloc::experiment
