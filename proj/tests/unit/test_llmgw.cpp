#include "support.hpp"
#include "vulnloc/error.hpp"
#include "vulnloc/llmgw.hpp"
#include "vulnloc/probe.hpp"
#include "vulnloc/text.hpp"

#include <doctest.h>

#include <atomic>
#include <thread>

using namespace vulnloc;
using namespace vulnloc::llmgw;
using namespace std::chrono_literals;

namespace {

std::string prompt_for(const std::string& content) {
  return probe::render_prompt({corpus::CweId(79), "Cross-site Scripting", content});
}

// A file with `needle` starting at byte `offset`.
std::string file_with(const std::string& needle, std::size_t offset, std::size_t size) {
  std::string f;
  for (int i = 0; f.size() + 20 < offset; ++i) f += "render_row(" + std::to_string(i % 1000) + ");\n";
  f.append(offset - f.size(), '\n');
  f += needle + "\n";
  while (f.size() < size) f += "footer();\n";
  return f;
}

class Flaky : public Provider {
 public:
  explicit Flaky(int failures) : failures_(failures) {}
  Reply complete(const ProviderConfig&, std::string_view prompt) override {
    ++calls;
    if (failures_-- > 0) throw TransientFailure("503 from upstream");
    return Reply{"BUG FOUND: NO " + std::to_string(prompt.size()), TokenCounts{10, 3}};
  }
  std::atomic<int> calls{0};

 private:
  std::atomic<int> failures_;
};

class Rejecting : public Provider {
 public:
  Reply complete(const ProviderConfig&, std::string_view) override {
    ++calls;
    fail(ErrorKind::ProviderError, "HTTP 401 unauthorized");
  }
  int calls = 0;
};

class Slow : public Provider {
 public:
  Reply complete(const ProviderConfig&, std::string_view prompt) override {
    const int now = ++active;
    int seen = peak.load();
    while (now > seen && !peak.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2 + prompt.size() % 5));
    --active;
    return Reply{std::string(prompt.substr(prompt.size() - 4)), std::nullopt};
  }
  bool deterministic() const override { return true; }
  std::atomic<int> active{0}, peak{0};
};

GatewayOptions no_sleep(std::vector<std::chrono::milliseconds>* slept = nullptr) {
  GatewayOptions o;
  o.sleep = [slept](std::chrono::milliseconds d) {
    if (slept) slept->push_back(d);
  };
  return o;
}

ProviderConfig config(const std::string& model = "mock") {
  ProviderConfig c;
  c.model_name = model;
  return c;
}

}  // namespace

TEST_CASE("character ceilings of the benchmark models") {
  CHECK(default_char_ceiling("mixtral-8x7b") == 120000u);
  CHECK(default_char_ceiling("open-mixtral-8x22b") == 250000u);
  CHECK(default_char_ceiling("Meta-Llama-3-70B-Instruct") == 30000u);
  CHECK(default_char_ceiling("gpt-3.5-turbo-0125") == 60000u);
  CHECK(default_char_ceiling("gpt-4-turbo") == 500000u);
  CHECK(default_char_ceiling("gpt-4o") == 500000u);
  CHECK_FALSE(default_char_ceiling("mock"));
  auto c = config("llama-3-70b");
  c.max_chars = 100;
  CHECK(c.char_limit() == 100u);
}

TEST_CASE("config validation and defaults") {
  ProviderConfig c;
  CHECK(c.temperature == 0.0);
  CHECK(c.max_in_flight >= 1);
  c.max_in_flight = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK_THROWS_AS(Gateway(c, std::make_shared<Slow>()), Error);
}

TEST_CASE("backoff doubles up to the cap") {
  auto c = config();
  c.backoff_base = 500ms;
  c.backoff_cap = 3000ms;
  CHECK(backoff_delay(c, 1) == 500ms);
  CHECK(backoff_delay(c, 2) == 1000ms);
  CHECK(backoff_delay(c, 3) == 2000ms);
  CHECK(backoff_delay(c, 4) == 3000ms);
  CHECK(backoff_delay(c, 40) == 3000ms);
}

TEST_CASE("mock with a 6,000-character horizon") {
  MockScript s;
  s.horizon = 6000;
  s.needles = {"echo $_GET['name'];"};
  MockProvider mock(s);
  const auto early = probe::parse_response(mock.complete(config(), prompt_for(file_with("echo $_GET['name'];", 5000, 15000))).text);
  CHECK(early.verdict == probe::Verdict::Yes);
  CHECK(early.candidate_lines() == std::vector<std::string>{"echo $_GET['name'];"});

  const auto late = probe::parse_response(mock.complete(config(), prompt_for(file_with("echo $_GET['name'];", 12000, 15000))).text);
  CHECK(late.verdict == probe::Verdict::No);
  CHECK(mock.calls() == 2);

  const std::string p = prompt_for(file_with("echo $_GET['name'];", 100, 400));
  CHECK(mock.complete(config(), p).text == mock.complete(config(), p).text);
}

TEST_CASE("decoys name a prefix line that is not a needle") {
  MockScript s;
  s.horizon = 6000;
  s.needles = {"echo $_GET['name'];"};
  s.decoy_on_miss = true;
  MockProvider mock(s);
  for (int i = 0; i < 20; ++i) {
    const std::string content = file_with("echo $_GET['name'];", 7000 + 37 * i, 12000);
    const auto r = probe::parse_response(mock.complete(config(), prompt_for(content)).text);
    REQUIRE(r.verdict == probe::Verdict::Yes);
    const auto lines = r.candidate_lines();
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] != "echo $_GET['name'];");
    const auto at = content.find(lines[0]);
    REQUIRE(at != std::string::npos);
    CHECK(at < 6000);
  }
}

TEST_CASE("canned answers are returned verbatim") {
  MockScript s;
  s.canned = "SE: x\nBL: `y`\nBUG FOUND: YES";
  MockProvider mock(s);
  Gateway gw(config(), std::make_shared<MockProvider>(s));
  CHECK(gw.complete({"r1", "anything"}).text == s.canned);
}

TEST_CASE("every request leaves one record and reruns resume from the log") {
  testing::TempDir dir("gw");
  const auto log = dir / "queries.jsonl";
  std::vector<Request> reqs;
  for (int i = 0; i < 12; ++i) reqs.push_back({"req/" + std::to_string(i), "prompt " + std::to_string(i % 6)});

  auto slow = std::make_shared<Slow>();
  {
    GatewayOptions o = no_sleep();
    o.cache = false;
    Gateway gw(config(), slow, log, o);
    const auto res = gw.batch(reqs);
    REQUIRE(res.size() == reqs.size());
    for (std::size_t i = 0; i < res.size(); ++i) {
      CHECK(res[i].request_id == reqs[i].request_id);
      CHECK(res[i].ok());
      CHECK_FALSE(res[i].from_log);
    }
    CHECK(gw.calls_made() == 12);
  }
  const auto records = read_query_log(log);
  REQUIRE(records.size() == 12);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].request_id == reqs[i].request_id);  // submission order
    CHECK(records[i].prompt_hash == text::sha256_hex(reqs[i].prompt));
    CHECK(records[i].status == "ok");
    CHECK(records[i].attempt == 1);
    CHECK(records[i].latency_s == 0.0);
  }

  Gateway again(config(), slow, log, no_sleep());
  const auto res = again.batch(reqs);
  CHECK(again.calls_made() == 0);
  for (const auto& r : res) CHECK(r.from_log);
  CHECK(read_query_log(log).size() == 12);

  // A reused id with a different prompt is not an answer to it.
  std::vector<Request> changed = {{"req/0", "a different prompt"}};
  CHECK(again.pending_calls(changed) == 1);
  CHECK(again.batch(changed)[0].text == std::optional<std::string>("ompt"));
  CHECK(again.calls_made() == 1);
}

TEST_CASE("identical prompts are answered once when caching") {
  auto slow = std::make_shared<Slow>();
  Gateway gw(config(), slow, {}, no_sleep());
  std::vector<Request> reqs = {{"a", "same prompt"}, {"b", "same prompt"}, {"c", "other prompt"}};
  CHECK(gw.pending_calls(reqs) == 2);
  const auto res = gw.batch(reqs);
  CHECK(gw.calls_made() == 2);
  CHECK(res[0].text == res[1].text);
  CHECK(res[1].from_log);
  const auto recs = gw.records();
  REQUIRE(recs.size() == 3);
  CHECK(recs[1].cached);
  CHECK(recs[0].prompt_hash == recs[1].prompt_hash);
  CHECK(gw.complete({"d", "other prompt"}).from_log);
  CHECK(gw.calls_made() == 2);
}

TEST_CASE("prompts over the model's ceiling overflow without a call") {
  auto slow = std::make_shared<Slow>();
  Gateway gw(config("llama-3-70b"), slow, {}, no_sleep());
  const auto r = gw.complete({"big", std::string(30001, 'x')});
  CHECK_FALSE(r.ok());
  CHECK(r.error == ErrorKind::ContextOverflow);
  CHECK(gw.calls_made() == 0);
  CHECK(gw.records().at(0).status == "context_overflow");
  CHECK(gw.complete({"fits", std::string(30000, 'x')}).ok());
}

TEST_CASE("transient failures are retried with backoff") {
  std::vector<std::chrono::milliseconds> slept;
  auto flaky = std::make_shared<Flaky>(2);
  Gateway gw(config(), flaky, {}, no_sleep(&slept));
  const auto r = gw.complete({"r", "p"});
  CHECK(r.ok());
  CHECK(flaky->calls == 3);
  CHECK(slept == std::vector<std::chrono::milliseconds>{500ms, 1000ms});
  REQUIRE(gw.records().size() == 1);
  CHECK(gw.records()[0].attempt == 3);
  CHECK(gw.records()[0].tokens->prompt == 10);
}

TEST_CASE("retries stop at the budget") {
  auto flaky = std::make_shared<Flaky>(100);
  auto c = config();
  c.retry_budget = 3;
  Gateway gw(c, flaky, {}, no_sleep());
  const auto r = gw.complete({"r", "p"});
  CHECK(r.error == ErrorKind::RetriesExhausted);
  CHECK(flaky->calls == 4);
  REQUIRE(gw.records().size() == 1);
  CHECK(gw.records()[0].status == "error");

  // A later run retries the failed request and numbers attempts onward.
  const auto again = gw.complete({"r", "p"});
  CHECK(again.error == ErrorKind::RetriesExhausted);
  REQUIRE(gw.records().size() == 2);
  CHECK(gw.records()[1].attempt == 8);
}

TEST_CASE("non-retryable provider errors fail at once") {
  auto rejecting = std::make_shared<Rejecting>();
  Gateway gw(config(), rejecting, {}, no_sleep());
  const auto r = gw.complete({"r", "p"});
  CHECK(r.error == ErrorKind::ProviderError);
  CHECK(rejecting->calls == 1);
}

TEST_CASE("concurrency stays within max_in_flight") {
  for (std::size_t limit : {1, 3, 6}) {
    auto slow = std::make_shared<Slow>();
    auto c = config();
    c.max_in_flight = limit;
    GatewayOptions o = no_sleep();
    o.cache = false;
    Gateway gw(c, slow, {}, o);
    std::vector<Request> reqs;
    for (int i = 0; i < 40; ++i) reqs.push_back({"r" + std::to_string(i), "prompt-" + std::to_string(1000 + i)});
    const auto res = gw.batch(reqs);
    CHECK(static_cast<std::size_t>(slow->peak.load()) <= limit);
    CHECK(gw.max_in_flight_seen() <= limit);
    for (std::size_t i = 0; i < reqs.size(); ++i) CHECK(res[i].text == reqs[i].prompt.substr(reqs[i].prompt.size() - 4));
    const auto recs = gw.records();
    for (std::size_t i = 0; i < reqs.size(); ++i) CHECK(recs[i].request_id == reqs[i].request_id);
  }
}

TEST_CASE("the request budget is checked before any call") {
  auto slow = std::make_shared<Slow>();
  GatewayOptions o = no_sleep();
  o.max_requests = 3;
  Gateway gw(config(), slow, {}, o);
  std::vector<Request> reqs = {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}};
  try {
    gw.batch(reqs);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK(gw.calls_made() == 0);
  CHECK(gw.records().empty());
  reqs.pop_back();
  CHECK(gw.batch(reqs).size() == 3);
}

TEST_CASE("replay serves logged answers by prompt hash") {
  auto slow = std::make_shared<Slow>();
  Gateway live(config(), slow, {}, no_sleep());
  std::vector<Request> reqs = {{"a", "alpha"}, {"b", "beta"}};
  const auto first = live.batch(reqs);
  const auto recs = live.records();

  Gateway replay(config(), std::make_shared<ReplayProvider>(recs), {}, no_sleep());
  const auto second = replay.batch(reqs);
  for (std::size_t i = 0; i < reqs.size(); ++i) CHECK(second[i].text == first[i].text);
  const auto missing = replay.complete({"c", "gamma"});
  CHECK(missing.error == ErrorKind::ProviderError);
}

TEST_CASE("query records round-trip through JSONL") {
  QueryRecord r;
  r.request_id = "bench/CWE-79/x/pre";
  r.prompt_hash = text::sha256_hex("p");
  r.model_name = "gpt-4o";
  r.raw_response = "BL: \"quoted\"\nBUG FOUND: YES";
  r.latency_s = 1.25;
  r.tokens = TokenCounts{1200, 40};
  r.attempt = 2;
  r.status = "ok";
  const auto back = query_record_from_jsonl(to_jsonl(r));
  CHECK(back.request_id == r.request_id);
  CHECK(back.raw_response == r.raw_response);
  CHECK(back.tokens->completion == 40);
  CHECK(back.attempt == 2);
  CHECK(back.latency_s == 1.25);
  CHECK(to_jsonl(back) == to_jsonl(r));
}

TEST_CASE("a torn last log line is dropped, a corrupt middle line is not") {
  testing::TempDir dir("log");
  QueryRecord r;
  r.request_id = "a";
  r.prompt_hash = "h";
  r.model_name = "m";
  r.status = "ok";
  r.raw_response = "x";
  text::write_file(dir / "torn.jsonl", to_jsonl(r) + "\n" + to_jsonl(r).substr(0, 20));
  CHECK(read_query_log(dir / "torn.jsonl").size() == 1);
  text::write_file(dir / "bad.jsonl", "{oops\n" + to_jsonl(r) + "\n");
  CHECK_THROWS_AS(read_query_log(dir / "bad.jsonl"), Error);
}
