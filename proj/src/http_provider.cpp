// The only translation unit that includes httplib.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#include "json.hpp"

#include "vulnloc/llmgw.hpp"

#include <cstdlib>

namespace vulnloc::llmgw {
namespace {

using json = nlohmann::json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) fail(ErrorKind::ConfigError, "endpoint_url needs a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

class HttpProvider : public Provider {
 public:
  Reply complete(const ProviderConfig& config, std::string_view prompt) override {
    if (config.endpoint_url.empty()) fail(ErrorKind::ConfigError, config.model_name + ": no endpoint_url");
    const Endpoint ep = split_url(config.endpoint_url);
    httplib::Client client(ep.origin);
    const auto secs = static_cast<time_t>(config.timeout_s);
    client.set_connection_timeout(secs, 0);
    client.set_read_timeout(secs, 0);
    client.set_write_timeout(secs, 0);

    httplib::Headers headers;
    if (!config.api_key_ref.empty()) {
      const char* key = std::getenv(config.api_key_ref.c_str());
      if (!key || !*key) fail(ErrorKind::ConfigError, "environment variable " + config.api_key_ref + " is not set");
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    const json body{
        {"model", config.model_name},
        {"temperature", config.temperature},
        {"messages", json::array({json{{"role", "user"}, {"content", std::string(prompt)}}})},
    };
    auto res = client.Post(ep.path, headers, body.dump(), "application/json");
    if (!res) throw TransientFailure("transport error: " + httplib::to_string(res.error()));
    const int status = res->status;
    if (status == 408 || status == 409 || status == 429 || status >= 500) {
      throw TransientFailure("HTTP " + std::to_string(status));
    }
    if (status != 200) {
      const bool overflow = res->body.find("context_length") != std::string::npos ||
                            res->body.find("maximum context") != std::string::npos;
      fail(overflow ? ErrorKind::ContextOverflow : ErrorKind::ProviderError,
           "HTTP " + std::to_string(status) + ": " + res->body.substr(0, 300));
    }
    const json j = json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || j["choices"].empty()) {
      fail(ErrorKind::ProviderError, "unexpected response body: " + res->body.substr(0, 300));
    }
    Reply reply;
    const json& content = j["choices"][0]["message"]["content"];
    reply.text = content.is_string() ? content.get<std::string>() : std::string();
    if (j.contains("usage") && j["usage"].is_object()) {
      reply.tokens = TokenCounts{j["usage"].value("prompt_tokens", std::int64_t{0}),
                                 j["usage"].value("completion_tokens", std::int64_t{0})};
    }
    return reply;
  }
};

}  // namespace

std::unique_ptr<Provider> make_http_provider() { return std::make_unique<HttpProvider>(); }

}  // namespace vulnloc::llmgw
