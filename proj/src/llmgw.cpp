#include "vulnloc/llmgw.hpp"

#include "json.hpp"
#include "vulnloc/probe.hpp"
#include "vulnloc/text.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace vulnloc::llmgw {

using json = nlohmann::json;

std::optional<std::size_t> default_char_ceiling(std::string_view model_name) {
  // Longest keys first so "mixtral-8x22b" is not shadowed by a shorter key.
  static const std::vector<std::pair<std::string_view, std::size_t>> kCeilings = {
      {"mixtral-8x22b", 250000}, {"gpt-3.5-turbo", 60000}, {"mixtral-8x7b", 120000},
      {"gpt-4-turbo", 500000},   {"llama-3-70b", 30000},   {"gpt-4o", 500000},
  };
  const std::string lower = text::to_lower(model_name);
  for (const auto& [key, chars] : kCeilings) {
    if (lower.find(key) != std::string::npos) return chars;
  }
  return std::nullopt;
}

void ProviderConfig::validate() const {
  if (max_in_flight == 0) fail(ErrorKind::ConfigError, model_name + ": max_in_flight must be at least 1");
  if (temperature < 0) fail(ErrorKind::ConfigError, model_name + ": temperature must be non-negative");
  if (model_name.empty()) fail(ErrorKind::ConfigError, "provider without a model name");
}

std::optional<std::size_t> ProviderConfig::char_limit() const {
  return max_chars ? max_chars : default_char_ceiling(model_name);
}

std::chrono::milliseconds backoff_delay(const ProviderConfig& config, std::size_t attempt) {
  auto delay = config.backoff_base;
  for (std::size_t i = 1; i < attempt && delay < config.backoff_cap; ++i) delay *= 2;
  return std::min(delay, config.backoff_cap);
}

// --- mock -------------------------------------------------------------------

MockProvider::MockProvider(MockScript script) : script_(std::move(script)) {}

std::size_t MockProvider::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

namespace {

std::string yes_answer(const std::vector<std::string_view>& lines) {
  std::string out = "SE: Untrusted input reaches a sensitive operation without validation.\nBL: ";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += text::trim(lines[i]);
  }
  out += "\nBUG FOUND: YES";
  return out;
}

double unit_interval(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace

Reply MockProvider::complete(const ProviderConfig&, std::string_view prompt) {
  {
    std::lock_guard lock(mu_);
    ++calls_;
  }
  if (script_.canned) return Reply{*script_.canned, std::nullopt};

  const std::string_view content = probe::prompt_file_content(prompt);
  std::vector<std::string_view> visible, anywhere, decoys;
  for (const auto& line : text::split_lines(content)) {
    const std::string n = probe::normalize_line(line.text);
    const bool before_horizon = line.offset < script_.horizon;
    if (script_.needles.count(n)) {
      anywhere.push_back(line.body());
      if (before_horizon) visible.push_back(line.body());
      continue;
    }
    if (before_horizon && text::has_alnum(n)) decoys.push_back(line.body());
  }

  const double p = visible.empty() ? script_.p_detect_outside : script_.p_detect_inside;
  const bool detect = unit_interval(text::fnv1a64(prompt, script_.seed)) < p;
  if (detect && !visible.empty()) return Reply{yes_answer(visible), std::nullopt};
  if (detect && !anywhere.empty()) return Reply{yes_answer(anywhere), std::nullopt};
  if (detect || script_.decoy_on_miss) {
    // First line at or after a hashed start that could not be taken for a needle.
    const std::size_t start = decoys.empty() ? 0 : text::fnv1a64(prompt, script_.seed ^ 0x9e3779b97f4a7c15ULL) % decoys.size();
    for (std::size_t i = 0; i < decoys.size(); ++i) {
      const std::string_view line = decoys[(start + i) % decoys.size()];
      const std::string n = probe::normalize_line(line);
      const bool near_miss = std::any_of(script_.needles.begin(), script_.needles.end(),
                                         [&](const std::string& needle) { return probe::lines_match(n, needle); });
      if (!near_miss) return Reply{yes_answer({line}), std::nullopt};
    }
  }
  return Reply{"SE: No vulnerable code was found.\nBL: none\nBUG FOUND: NO", std::nullopt};
}

// --- query log --------------------------------------------------------------

std::string to_jsonl(const QueryRecord& r) {
  json j{
      {"request_id", r.request_id},
      {"prompt_hash", r.prompt_hash},
      {"model_name", r.model_name},
      {"raw_response", r.raw_response ? json(*r.raw_response) : json(nullptr)},
      {"latency", r.latency_s},
      {"token_counts", r.tokens ? json{{"prompt", r.tokens->prompt}, {"completion", r.tokens->completion}}
                                : json(nullptr)},
      {"attempt", r.attempt},
      {"status", r.status},
      {"error", r.error},
      {"cached", r.cached},
  };
  return j.dump();
}

QueryRecord query_record_from_jsonl(std::string_view line) {
  const json j = json::parse(line);
  QueryRecord r;
  r.request_id = j.at("request_id").get<std::string>();
  r.prompt_hash = j.at("prompt_hash").get<std::string>();
  r.model_name = j.at("model_name").get<std::string>();
  if (!j.at("raw_response").is_null()) r.raw_response = j.at("raw_response").get<std::string>();
  r.latency_s = j.value("latency", 0.0);
  if (j.contains("token_counts") && !j.at("token_counts").is_null()) {
    r.tokens = TokenCounts{j.at("token_counts").at("prompt").get<std::int64_t>(),
                           j.at("token_counts").at("completion").get<std::int64_t>()};
  }
  r.attempt = j.value("attempt", std::size_t{0});
  r.status = j.at("status").get<std::string>();
  r.error = j.value("error", std::string());
  r.cached = j.value("cached", false);
  return r;
}

std::vector<QueryRecord> read_query_log(const std::filesystem::path& path) {
  std::vector<QueryRecord> out;
  std::ifstream in(path, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    try {
      out.push_back(query_record_from_jsonl(line));
    } catch (const json::exception&) {
      // A torn final line from an interrupted run; the request is redone.
      if (in.peek() != std::char_traits<char>::eof()) fail(ErrorKind::Io, path.string() + ": corrupt query log line");
    }
  }
  return out;
}

// --- replay -----------------------------------------------------------------

ReplayProvider::ReplayProvider(std::span<const QueryRecord> records) {
  for (const auto& r : records) {
    if (r.status == "ok" && r.raw_response) by_hash_.emplace(r.prompt_hash, *r.raw_response);
  }
}

Reply ReplayProvider::complete(const ProviderConfig&, std::string_view prompt) {
  auto it = by_hash_.find(text::sha256_hex(prompt));
  if (it == by_hash_.end()) fail(ErrorKind::ProviderError, "replay: prompt not in the query log");
  return Reply{it->second, std::nullopt};
}

// --- gateway ----------------------------------------------------------------

Gateway::Gateway(ProviderConfig config, std::shared_ptr<Provider> provider, std::filesystem::path log_path,
                 GatewayOptions options)
    : config_(std::move(config)), provider_(std::move(provider)), log_path_(std::move(log_path)),
      options_(std::move(options)) {
  config_.validate();
  if (!options_.sleep) options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  if (!log_path_.empty() && std::filesystem::exists(log_path_)) {
    for (auto& r : read_query_log(log_path_)) {
      const std::size_t at = log_.size();
      by_id_[r.request_id] = at;
      if (r.status == "ok") by_hash_.emplace(r.prompt_hash, at);
      log_.push_back(std::move(r));
    }
  }
}

void Gateway::commit(const QueryRecord& record) {
  // caller holds mu_
  const std::size_t at = log_.size();
  log_.push_back(record);
  by_id_[record.request_id] = at;
  if (record.status == "ok") by_hash_.emplace(record.prompt_hash, at);
  if (log_path_.empty()) return;
  if (log_path_.has_parent_path()) std::filesystem::create_directories(log_path_.parent_path());
  std::ofstream out(log_path_, std::ios::app | std::ios::binary);
  out << to_jsonl(record) << '\n';
  out.flush();
  if (!out) fail(ErrorKind::Io, "cannot append to " + log_path_.string());
}

namespace {

Result result_from_record(const QueryRecord& r, bool from_log) {
  Result out;
  out.request_id = r.request_id;
  out.from_log = from_log;
  if (r.status == "ok") {
    out.text = r.raw_response;
  } else if (r.status == "context_overflow") {
    out.error = ErrorKind::ContextOverflow;
    out.message = r.error;
  } else {
    out.error = r.error.rfind("RetriesExhausted", 0) == 0 ? ErrorKind::RetriesExhausted : ErrorKind::ProviderError;
    out.message = r.error;
  }
  return out;
}

enum class Plan { FromLog, Cached, Overflow, Call, SameAsEarlier };

// A logged request counts as answered only for the same prompt; a failed one
// is retried on resume.
bool answered(const QueryRecord& r, const std::string& hash) { return r.status != "error" && r.prompt_hash == hash; }

}  // namespace

std::size_t Gateway::pending_calls(std::span<const Request> requests) const {
  std::lock_guard lock(mu_);
  std::set<std::string> seen;
  std::size_t pending = 0;
  const auto limit = config_.char_limit();
  for (const auto& r : requests) {
    const std::string hash = text::sha256_hex(r.prompt);
    auto it = by_id_.find(r.request_id);
    if (it != by_id_.end() && answered(log_[it->second], hash)) continue;
    if (limit && r.prompt.size() > *limit) continue;
    if (options_.cache && (by_hash_.count(hash) || !seen.insert(hash).second)) continue;
    ++pending;
  }
  return pending;
}

Gateway::Attempt Gateway::run(const Request& request) {
  const std::string hash = text::sha256_hex(request.prompt);
  std::size_t prior_attempts = 0;
  {
    std::lock_guard lock(mu_);
    auto it = by_id_.find(request.request_id);
    if (it != by_id_.end()) prior_attempts = log_[it->second].attempt;
    ++calls_;
    max_in_flight_seen_ = std::max(max_in_flight_seen_, ++in_flight_);
  }

  QueryRecord rec;
  rec.request_id = request.request_id;
  rec.prompt_hash = hash;
  rec.model_name = config_.model_name;

  const auto start = std::chrono::steady_clock::now();
  std::size_t attempt = 0;
  for (;;) {
    ++attempt;
    try {
      Reply reply = provider_->complete(config_, request.prompt);
      rec.raw_response = std::move(reply.text);
      rec.tokens = reply.tokens;
      rec.status = "ok";
      break;
    } catch (const TransientFailure& e) {
      if (attempt > config_.retry_budget) {
        rec.status = "error";
        rec.error = "RetriesExhausted: " + std::string(e.what());
        break;
      }
      options_.sleep(backoff_delay(config_, attempt));
    } catch (const Error& e) {
      rec.status = e.kind() == ErrorKind::ContextOverflow ? "context_overflow" : "error";
      rec.error = e.kind() == ErrorKind::ContextOverflow ? e.detail() : e.what();
      break;
    } catch (const std::exception& e) {
      rec.status = "error";
      rec.error = "ProviderError: " + std::string(e.what());
      break;
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  rec.latency_s = provider_->deterministic() ? 0.0 : elapsed.count();
  rec.attempt = prior_attempts + attempt;
  {
    std::lock_guard lock(mu_);
    --in_flight_;
  }
  return Attempt{result_from_record(rec, false), rec};
}

Result Gateway::complete(const Request& request) { return batch(std::span<const Request>(&request, 1)).front(); }

std::vector<Result> Gateway::batch(std::span<const Request> requests) {
  if (options_.max_requests) {
    const std::size_t pending = pending_calls(requests);
    if (calls_made() + pending > *options_.max_requests) {
      fail(ErrorKind::BudgetExceeded, std::to_string(pending) + " provider calls needed, " +
                                          std::to_string(*options_.max_requests - std::min(calls_made(), *options_.max_requests)) +
                                          " left under --max-requests");
    }
  }

  const std::size_t n = requests.size();
  std::vector<Plan> plan(n, Plan::Call);
  std::vector<std::size_t> source(n, 0);
  std::vector<std::string> hashes(n);
  std::vector<std::size_t> to_call;
  {
    std::lock_guard lock(mu_);
    std::unordered_map<std::string, std::size_t> first_call;
    const auto limit = config_.char_limit();
    for (std::size_t i = 0; i < n; ++i) {
      const Request& r = requests[i];
      hashes[i] = text::sha256_hex(r.prompt);
      auto by_id = by_id_.find(r.request_id);
      if (by_id != by_id_.end() && answered(log_[by_id->second], hashes[i])) {
        plan[i] = Plan::FromLog;
        source[i] = by_id->second;
      } else if (limit && r.prompt.size() > *limit) {
        plan[i] = Plan::Overflow;
      } else if (options_.cache && by_hash_.count(hashes[i])) {
        plan[i] = Plan::Cached;
        source[i] = by_hash_.at(hashes[i]);
      } else if (auto f = first_call.find(hashes[i]); options_.cache && f != first_call.end()) {
        plan[i] = Plan::SameAsEarlier;
        source[i] = f->second;
      } else {
        first_call.emplace(hashes[i], i);
        to_call.push_back(i);
      }
    }
  }

  std::vector<std::optional<Attempt>> done(n);
  std::vector<Result> results(n);
  std::size_t next_commit = 0;
  std::mutex commit_mu;

  // Finalizes every request up to the first one still in flight, appending
  // log records strictly in submission order.
  auto advance = [&] {
    std::lock_guard commit_lock(commit_mu);
    while (next_commit < n) {
      const std::size_t i = next_commit;
      const Request& r = requests[i];
      std::optional<QueryRecord> rec;
      switch (plan[i]) {
        case Plan::Call:
          if (!done[i]) return;
          results[i] = done[i]->result;
          rec = done[i]->record;
          break;
        case Plan::FromLog: {
          std::lock_guard lock(mu_);
          results[i] = result_from_record(log_[source[i]], true);
          break;
        }
        case Plan::Overflow: {
          QueryRecord q;
          q.request_id = r.request_id;
          q.prompt_hash = hashes[i];
          q.model_name = config_.model_name;
          q.status = "context_overflow";
          q.error = "prompt of " + std::to_string(r.prompt.size()) + " characters exceeds the " +
                    std::to_string(*config_.char_limit()) + "-character limit of " + config_.model_name;
          results[i] = result_from_record(q, false);
          rec = q;
          break;
        }
        case Plan::Cached:
        case Plan::SameAsEarlier: {
          QueryRecord q;
          if (plan[i] == Plan::Cached) {
            std::lock_guard lock(mu_);
            q = log_[source[i]];
          } else {
            q = *done[source[i]]->record;
          }
          q.request_id = r.request_id;
          q.latency_s = 0;
          q.attempt = 0;
          q.cached = true;
          results[i] = result_from_record(q, true);
          rec = q;
          break;
        }
      }
      results[i].request_id = r.request_id;
      if (rec) {
        std::lock_guard lock(mu_);
        commit(*rec);
      }
      ++next_commit;
    }
  };

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t j = cursor++; j < to_call.size(); j = cursor++) {
      const std::size_t i = to_call[j];
      Attempt a = run(requests[i]);
      {
        std::lock_guard commit_lock(commit_mu);
        done[i] = std::move(a);
      }
      advance();
    }
  };
  const std::size_t workers = std::min(config_.max_in_flight, to_call.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  advance();
  return results;
}

std::size_t Gateway::calls_made() const {
  std::lock_guard lock(mu_);
  return calls_;
}

std::size_t Gateway::max_in_flight_seen() const {
  std::lock_guard lock(mu_);
  return max_in_flight_seen_;
}

std::vector<QueryRecord> Gateway::records() const {
  std::lock_guard lock(mu_);
  return log_;
}

}  // namespace vulnloc::llmgw
