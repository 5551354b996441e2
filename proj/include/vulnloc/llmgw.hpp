#pragma once

#include "vulnloc/error.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vulnloc::llmgw {

/// Character ceiling for the models of the original benchmark, matched on a
/// case-insensitive substring of the model name.
std::optional<std::size_t> default_char_ceiling(std::string_view model_name);

struct ProviderConfig {
  std::string provider_name = "mock";  // mock | openai | replay
  std::string model_name = "mock";
  std::string endpoint_url;            // chat-completions URL for HTTP providers
  std::string api_key_ref;             // name of the environment variable holding the key
  double temperature = 0.0;
  std::size_t max_in_flight = 4;
  double timeout_s = 120.0;
  std::size_t retry_budget = 3;
  std::optional<std::size_t> max_chars;  // overrides default_char_ceiling
  std::chrono::milliseconds backoff_base{500};
  std::chrono::milliseconds backoff_cap{30000};

  /// Throws ConfigError on max_in_flight == 0 or a negative temperature.
  void validate() const;
  std::optional<std::size_t> char_limit() const;
};

/// Deterministic backoff before retry number `attempt` (1-based).
std::chrono::milliseconds backoff_delay(const ProviderConfig& config, std::size_t attempt);

struct TokenCounts {
  std::int64_t prompt = 0;
  std::int64_t completion = 0;
};

struct Reply {
  std::string text;
  std::optional<TokenCounts> tokens;
};

/// Thrown by providers for failures worth retrying (timeouts, 429, 5xx).
class TransientFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Provider {
 public:
  virtual ~Provider() = default;
  /// Throws TransientFailure or Error(ProviderError).
  virtual Reply complete(const ProviderConfig& config, std::string_view prompt) = 0;
  /// Deterministic providers report zero latency so logs are reproducible.
  virtual bool deterministic() const { return false; }
};

/// OpenAI-style chat completion over HTTP(S): a single user message.
std::unique_ptr<Provider> make_http_provider();

struct MockScript {
  std::size_t horizon = static_cast<std::size_t>(-1);  // characters of file content inspected
  std::set<std::string> needles;                       // normalized ground-truth lines
  bool decoy_on_miss = false;    // answer YES with a wrong line instead of NO
  double p_detect_inside = 1.0;  // detection probability with a needle before the horizon
  double p_detect_outside = 0.0; // detection probability otherwise
  std::uint64_t seed = 0;
  std::optional<std::string> canned;  // returned verbatim when set
};

/// Reads the file content out of the prompt and answers as if it had looked
/// only at the first `horizon` characters.
class MockProvider : public Provider {
 public:
  explicit MockProvider(MockScript script);
  Reply complete(const ProviderConfig& config, std::string_view prompt) override;
  bool deterministic() const override { return true; }
  std::size_t calls() const;

 private:
  MockScript script_;
  mutable std::mutex mu_;
  std::size_t calls_ = 0;
};

struct QueryRecord {
  std::string request_id;
  std::string prompt_hash;
  std::string model_name;
  std::optional<std::string> raw_response;
  double latency_s = 0;
  std::optional<TokenCounts> tokens;
  std::size_t attempt = 0;   // attempts spent so far on this request; 0 when served from cache
  std::string status;        // ok | context_overflow | error
  std::string error;
  bool cached = false;
};

std::string to_jsonl(const QueryRecord& r);
QueryRecord query_record_from_jsonl(std::string_view line);
std::vector<QueryRecord> read_query_log(const std::filesystem::path& path);

/// Serves answers recorded in a query log, keyed by prompt hash; anything
/// else is a ProviderError. Used to rebuild reports with the network off.
class ReplayProvider : public Provider {
 public:
  explicit ReplayProvider(std::span<const QueryRecord> records);
  Reply complete(const ProviderConfig& config, std::string_view prompt) override;
  bool deterministic() const override { return true; }

 private:
  std::unordered_map<std::string, std::string> by_hash_;
};

struct Request {
  std::string request_id;
  std::string prompt;
};

struct Result {
  std::string request_id;
  std::optional<std::string> text;  // absent on failure
  std::optional<ErrorKind> error;
  std::string message;
  bool from_log = false;  // answered without calling the provider

  bool ok() const noexcept { return text.has_value(); }
};

struct GatewayOptions {
  bool cache = true;  // reuse an answer logged for the same (model, prompt)
  std::optional<std::size_t> max_requests;
  std::function<void(std::chrono::milliseconds)> sleep;  // defaults to std::this_thread::sleep_for
};

/// Front door to one provider/model. Every request leaves exactly one record
/// in the append-only log; requests whose id is already answered in the log
/// are served from it, so reruns resume instead of repeating calls.
class Gateway {
 public:
  Gateway(ProviderConfig config, std::shared_ptr<Provider> provider, std::filesystem::path log_path = {},
          GatewayOptions options = {});

  Result complete(const Request& request);

  /// Runs up to max_in_flight requests concurrently. Results and log records
  /// come back in submission order. Throws BudgetExceeded before any call
  /// when the provider calls needed would pass max_requests.
  std::vector<Result> batch(std::span<const Request> requests);

  /// Requests in `requests` that would reach the provider.
  std::size_t pending_calls(std::span<const Request> requests) const;

  std::size_t calls_made() const;
  std::size_t max_in_flight_seen() const;
  const ProviderConfig& config() const noexcept { return config_; }
  std::vector<QueryRecord> records() const;

 private:
  struct Attempt {
    Result result;
    std::optional<QueryRecord> record;  // absent when served from the log by id
  };

  Attempt run(const Request& request);
  std::optional<Result> lookup(const Request& request, const std::string& hash, QueryRecord* cached) const;
  void commit(const QueryRecord& record);

  ProviderConfig config_;
  std::shared_ptr<Provider> provider_;
  std::filesystem::path log_path_;
  GatewayOptions options_;

  mutable std::mutex mu_;
  std::vector<QueryRecord> log_;
  std::unordered_map<std::string, std::size_t> by_id_;    // latest record per request id
  std::unordered_map<std::string, std::size_t> by_hash_;  // first ok record per prompt hash
  std::size_t calls_ = 0;
  std::size_t in_flight_ = 0;
  std::size_t max_in_flight_seen_ = 0;
};

}  // namespace vulnloc::llmgw
