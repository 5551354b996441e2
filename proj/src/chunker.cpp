#include "vulnloc/chunker.hpp"

#include "vulnloc/error.hpp"
#include "vulnloc/text.hpp"

#include <algorithm>
#include <cmath>

namespace vulnloc::chunker {

ChunkPlan plan_chunks(std::string_view file, std::size_t k, std::string source_record_id) {
  if (k == 0) fail(ErrorKind::ContractViolation, "chunk size k must be at least 1");
  ChunkPlan plan;
  plan.k = k;
  plan.source_record_id = std::move(source_record_id);
  if (k == kWholeFile || file.size() <= k) {
    if (!file.empty()) plan.chunks.push_back(Chunk{0, std::string(file)});
    return plan;
  }
  std::size_t start = 0, end = 0;
  for (const auto& line : text::split_lines(file)) {
    if (end > start && end - start + line.text.size() > k) {
      plan.chunks.push_back(Chunk{start, std::string(file.substr(start, end - start))});
      start = end;
    }
    end = line.offset + line.text.size();
  }
  if (end > start) plan.chunks.push_back(Chunk{start, std::string(file.substr(start, end - start))});
  return plan;
}

probe::ProbeOutcome aggregate_file_verdict(std::span<const std::optional<probe::ProbeOutcome>> chunk_outcomes,
                                           const corpus::GroundTruth* truth) {
  using probe::Classification;
  if (chunk_outcomes.empty()) fail(ErrorKind::IncompleteCoverage, "no chunk outcomes");
  for (std::size_t i = 0; i < chunk_outcomes.size(); ++i) {
    if (!chunk_outcomes[i]) fail(ErrorKind::IncompleteCoverage, "chunk " + std::to_string(i) + " has no outcome");
  }
  const bool vulnerable = truth != nullptr;
  const Classification hit = vulnerable ? Classification::TP : Classification::FP;
  const Classification miss = vulnerable ? Classification::FN : Classification::TN;

  const probe::ProbeOutcome* chosen = nullptr;
  for (const auto& o : chunk_outcomes) {
    if (o->classification == hit) {
      chosen = &*o;
      break;
    }
  }
  if (!chosen) {
    for (const auto& o : chunk_outcomes) {
      if (o->response.verdict == probe::Verdict::Yes) {
        chosen = &*o;
        break;
      }
    }
  }
  if (!chosen) chosen = &*chunk_outcomes.front();

  probe::ProbeOutcome file = *chosen;
  file.is_vulnerable_input = vulnerable;
  file.classification = chosen->classification == hit ? hit : miss;
  if (file.classification != Classification::TP) file.matched_line.reset();
  return file;
}

SweepResult make_sweep_result(std::string model, corpus::CweId cwe, std::size_t k, const probe::MetricsReport& chunked,
                              const probe::MetricsReport* baseline) {
  if (!baseline) {
    fail(ErrorKind::MissingBaseline, "no whole-file baseline for " + model + " " + cwe.str());
  }
  SweepResult r;
  r.model = std::move(model);
  r.cwe = cwe;
  r.k = k;
  r.recall = chunked.recall;
  r.accuracy = chunked.accuracy;
  r.baseline_recall = baseline->recall;
  r.recall_improvement_pct =
      baseline->recall > 0 ? 100.0 * (chunked.recall - baseline->recall) / baseline->recall : std::nan("");
  r.tp = chunked.tp;
  r.fp = chunked.fp;
  r.tn = chunked.tn;
  r.fn = chunked.fn;
  return r;
}

std::vector<probe::ProbeOutcome> run_chunked(std::span<const SweepFile> files, corpus::CweId cwe, std::size_t k,
                                             const BatchProbe& probe_batch) {
  std::vector<ChunkPlan> plans;
  std::vector<std::string> prompts;
  const std::string label = probe::default_cwe_label(cwe);
  for (const auto& f : files) {
    plans.push_back(plan_chunks(f.content, k, f.record_id));
    for (const auto& c : plans.back().chunks) prompts.push_back(probe::render_prompt({cwe, label, c.text}));
  }
  const auto answers = probe_batch(prompts);
  if (answers.size() != prompts.size()) fail(ErrorKind::IncompleteCoverage, "probe returned a short batch");

  std::vector<probe::ProbeOutcome> out;
  std::size_t at = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::vector<std::optional<probe::ProbeOutcome>> per_chunk;
    for (std::size_t c = 0; c < plans[i].chunks.size(); ++c, ++at) {
      if (!answers[at]) {
        per_chunk.emplace_back();
        continue;
      }
      per_chunk.push_back(probe::evaluate(files[i].record_id, files[i].vulnerable, probe::parse_response(*answers[at]),
                                          files[i].vulnerable ? files[i].truth : nullptr));
    }
    try {
      out.push_back(aggregate_file_verdict(per_chunk, files[i].vulnerable ? files[i].truth : nullptr));
    } catch (const Error& e) {
      fail(e.kind(), files[i].record_id + " k=" + std::to_string(k) + ": " + e.detail());
    }
  }
  return out;
}

std::vector<SweepResult> sweep(const std::string& model, corpus::CweId cwe, std::span<const std::size_t> k_values,
                               std::span<const SweepFile> files, const BatchProbe& probe_batch,
                               const probe::MetricsReport* baseline) {
  if (!baseline) fail(ErrorKind::MissingBaseline, "no whole-file baseline for " + model + " " + cwe.str());
  std::vector<SweepResult> results;
  for (std::size_t k : k_values) {
    const auto outcomes = run_chunked(files, cwe, k, probe_batch);
    results.push_back(make_sweep_result(model, cwe, k, probe::compute_metrics(outcomes), baseline));
  }
  std::stable_sort(results.begin(), results.end(), [](const SweepResult& a, const SweepResult& b) {
    if (a.recall != b.recall) return a.recall > b.recall;
    return a.k > b.k;
  });
  return results;
}

std::size_t best_k(std::span<const SweepResult> results) {
  if (results.empty()) fail(ErrorKind::EmptyInput, "no sweep results");
  const SweepResult* best = &results.front();
  for (const auto& r : results) {
    if (r.recall > best->recall || (r.recall == best->recall && r.k > best->k)) best = &r;
  }
  return best->k;
}

}  // namespace vulnloc::chunker
