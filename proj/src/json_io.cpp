#include "json_io.hpp"

namespace vulnloc {

namespace corpus {

json to_json(const Entry& entry) {
  const VulnRecord& r = entry.record;
  json pool = json::array();
  for (const auto& p : r.pool_files) pool.push_back({{"name", p.name}, {"text", p.text}});
  return json{
      {"record_id", r.record_id},
      {"cwe", r.cwe.str()},
      {"language", std::string(to_string(r.language))},
      {"extension", r.extension},
      {"source_ref", r.source_ref},
      {"pre_file", r.pre_file},
      {"post_file", r.post_file},
      {"diff", r.diff},
      {"pool_files", pool},
      {"dedupe_key", entry.dedupe_key},
      {"ground_truth",
       {{"removed_lines", entry.truth.removed_lines},
        {"first_changed_offset", entry.truth.first_changed_offset},
        {"changed_lines", entry.truth.changed_lines}}},
  };
}

Entry entry_from_json(const json& j) {
  Entry e;
  VulnRecord& r = e.record;
  r.record_id = j.at("record_id").get<std::string>();
  r.cwe = CweId::parse(j.at("cwe").get<std::string>());
  r.language = language_from_name(j.at("language").get<std::string>());
  r.extension = j.value("extension", std::string());
  r.source_ref = j.value("source_ref", std::string());
  r.pre_file = j.at("pre_file").get<std::string>();
  r.post_file = j.at("post_file").get<std::string>();
  r.diff = j.at("diff").get<std::string>();
  if (j.contains("pool_files")) {
    for (const auto& p : j.at("pool_files")) {
      r.pool_files.push_back(PoolFile{p.at("name").get<std::string>(), p.at("text").get<std::string>()});
    }
  }
  e.dedupe_key = j.value("dedupe_key", std::string());
  const auto& gt = j.at("ground_truth");
  e.truth.removed_lines = gt.at("removed_lines").get<std::set<std::string>>();
  e.truth.first_changed_offset = gt.at("first_changed_offset").get<std::size_t>();
  e.truth.changed_lines = gt.at("changed_lines").get<std::vector<std::size_t>>();
  return e;
}

}  // namespace corpus

namespace probe {

namespace {
json opt(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }
std::optional<std::string> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}
}  // namespace

json to_json(const ProbeOutcome& o) {
  return json{
      {"record_id", o.record_id},
      {"is_vulnerable_input", o.is_vulnerable_input},
      {"verdict", std::string(to_string(o.response.verdict))},
      {"explanation", opt(o.response.explanation)},
      {"reported_line", opt(o.response.reported_line)},
      {"classification", std::string(to_string(o.classification))},
      {"matched_line", opt(o.matched_line)},
      {"note", o.note},
      {"raw", o.response.raw},
  };
}

ProbeOutcome outcome_from_json(const json& j) {
  ProbeOutcome o;
  o.record_id = j.at("record_id").get<std::string>();
  o.is_vulnerable_input = j.at("is_vulnerable_input").get<bool>();
  o.response.raw = j.value("raw", std::string());
  o.response.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  o.response.explanation = opt_from(j, "explanation");
  o.response.reported_line = opt_from(j, "reported_line");
  o.classification = classification_from_string(j.at("classification").get<std::string>());
  o.matched_line = opt_from(j, "matched_line");
  o.note = j.value("note", std::string());
  return o;
}

}  // namespace probe
}  // namespace vulnloc
