#include "vulnloc/corpus.hpp"

#include "json_io.hpp"
#include "vulnloc/diff.hpp"
#include "vulnloc/error.hpp"
#include "vulnloc/haystack.hpp"
#include "vulnloc/probe.hpp"
#include "vulnloc/text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

namespace vulnloc::corpus {

namespace fs = std::filesystem;

CweId::CweId(int id) : id_(id) {
  if (id <= 0) fail(ErrorKind::ValidationFailure, "CWE id must be positive, got " + std::to_string(id));
}

CweId CweId::parse(std::string_view text) {
  std::string_view s = text::trim(text);
  if (s.size() > 4 && text::iequals(s.substr(0, 4), "cwe-")) s.remove_prefix(4);
  int id = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorKind::ValidationFailure, "not a CWE id: " + std::string(text));
  }
  return CweId(id);
}

std::string CweId::str() const { return "CWE-" + std::to_string(id_); }

std::string_view to_string(Language lang) noexcept {
  switch (lang) {
    case Language::PHP: return "PHP";
    case Language::TypeScript: return "TypeScript";
    case Language::JavaScript: return "JavaScript";
    case Language::HTML: return "HTML";
    case Language::Java: return "Java";
    case Language::Go: return "Go";
    case Language::Python: return "Python";
    case Language::Ruby: return "Ruby";
    case Language::C: return "C";
    case Language::Other: return "Other";
  }
  return "Other";
}

Language language_from_name(std::string_view name) {
  for (Language l : {Language::PHP, Language::TypeScript, Language::JavaScript, Language::HTML, Language::Java,
                     Language::Go, Language::Python, Language::Ruby, Language::C, Language::Other}) {
    if (text::iequals(to_string(l), name)) return l;
  }
  return Language::Other;
}

std::optional<Language> language_from_extension(std::string_view ext) {
  static const std::map<std::string, std::optional<Language>, std::less<>> kByExt = {
      {"php", Language::PHP},        {"phtml", Language::PHP},      {"inc", Language::PHP},
      {"ts", Language::TypeScript},  {"tsx", Language::TypeScript}, {"mts", Language::TypeScript},
      {"js", Language::JavaScript},  {"jsx", Language::JavaScript}, {"mjs", Language::JavaScript},
      {"cjs", Language::JavaScript}, {"html", Language::HTML},      {"htm", Language::HTML},
      {"java", Language::Java},      {"go", Language::Go},          {"py", Language::Python},
      {"rb", Language::Ruby},        {"c", Language::C},
      // documentation and data
      {"txt", std::nullopt}, {"svg", std::nullopt}, {"md", std::nullopt}, {"xml", std::nullopt},
      {"json", std::nullopt},
      // C++ sources and headers
      {"cpp", std::nullopt}, {"cc", std::nullopt}, {"cxx", std::nullopt}, {"c++", std::nullopt},
      {"h", std::nullopt},   {"hh", std::nullopt}, {"hpp", std::nullopt}, {"hxx", std::nullopt},
  };
  auto it = kByExt.find(text::to_lower(ext));
  if (it == kByExt.end()) return Language::Other;
  return it->second;
}

GroundTruth parse_unified_diff(std::string_view diff_text, std::string_view pre_file) {
  const diff::UnifiedDiff d = diff::parse(diff_text);
  GroundTruth truth;
  bool any = false;
  for (const auto& r : diff::removed_lines(d, pre_file)) {
    std::string n = probe::normalize_line(r.text);
    if (n.empty()) continue;
    if (!any || r.offset < truth.first_changed_offset) truth.first_changed_offset = r.offset;
    any = true;
    truth.removed_lines.insert(std::move(n));
    truth.changed_lines.push_back(r.line_index + 1);
  }
  if (!any) fail(ErrorKind::EmptyFix, "diff changes no pre-patch line");
  return truth;
}

GroundTruth validate(const VulnRecord& r) {
  auto reject = [&](const std::string& why) {
    fail(ErrorKind::ValidationFailure, r.record_id + ": " + why);
  };
  if (r.record_id.empty()) reject("empty record_id");
  if (r.record_id.find_first_of("/\\\n") != std::string::npos) reject("record_id must be a plain name");
  if (r.cwe.value() <= 0) reject("missing CWE");
  if (r.pre_file == r.post_file) reject("pre_file equals post_file");
  if (!r.extension.empty() && !language_from_extension(r.extension)) {
    reject("excluded file extension ." + r.extension);
  }
  GroundTruth truth;
  try {
    const diff::UnifiedDiff d = diff::parse(r.diff);
    if (diff::apply(d, r.pre_file) != r.post_file) reject("diff does not reproduce post_file");
    truth = parse_unified_diff(r.diff, r.pre_file);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationFailure) throw;
    reject(e.what());
  }
  return truth;
}

VulnRecord load_record_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) fail(ErrorKind::Io, "not a record directory: " + dir.string());
  VulnRecord r;
  fs::path pre, post;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::string stem = e.path().stem().string();
    if (stem == "pre") pre = e.path();
    if (stem == "post") post = e.path();
  }
  if (pre.empty() || post.empty()) fail(ErrorKind::ValidationFailure, dir.string() + ": missing pre.* or post.*");
  if (pre.extension() != post.extension()) fail(ErrorKind::ValidationFailure, dir.string() + ": pre/post extensions differ");

  const json meta = json::parse(text::read_file(dir / "meta.json"));
  r.record_id = meta.value("record_id", dir.filename().string());
  const json& cwe = meta.at("cwe");
  r.cwe = cwe.is_number() ? CweId(cwe.get<int>()) : CweId::parse(cwe.get<std::string>());
  r.source_ref = meta.value("source_ref", std::string());
  r.extension = pre.extension().string().substr(1);
  r.language = language_from_extension(r.extension).value_or(Language::Other);
  r.pre_file = text::read_file(pre);
  r.post_file = text::read_file(post);
  r.diff = text::read_file(dir / "fix.diff");

  const fs::path pool = dir / "pool";
  if (fs::is_directory(pool)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(pool)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) r.pool_files.push_back(PoolFile{f.filename().string(), text::read_file(f)});
  }
  return r;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

Corpus::Corpus(fs::path dir) : dir_(std::move(dir)) {}

Corpus Corpus::open(const fs::path& dir) {
  Corpus c(dir);
  if (!fs::is_directory(dir)) return c;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".jsonl") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string line;
    while (std::getline(in, line)) {
      if (text::trim(line).empty()) continue;
      c.index(entry_from_json(json::parse(line)));
    }
  }
  return c;
}

void Corpus::index(Entry entry) {
  const std::size_t at = entries_.size();
  by_key_.emplace(entry.dedupe_key, at);
  by_id_.emplace(entry.record.record_id, at);
  entries_.push_back(std::move(entry));
}

void Corpus::persist(const Entry& entry) const {
  if (dir_.empty()) return;
  fs::create_directories(dir_);
  std::ofstream out(dir_ / (entry.record.cwe.str() + ".jsonl"), std::ios::app | std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot append to corpus in " + dir_.string());
  out << to_json(entry).dump() << '\n';
}

std::string Corpus::ingest(VulnRecord record) {
  Entry e;
  e.truth = validate(record);
  e.dedupe_key = text::sha256_hex(record.pre_file + '\0' + record.diff);
  if (by_key_.count(e.dedupe_key)) fail(ErrorKind::DuplicateRecord, record.record_id + ": (pre_file, diff) already stored");
  if (by_id_.count(record.record_id)) fail(ErrorKind::DuplicateRecord, "record_id " + record.record_id + " already used");
  e.record = std::move(record);
  persist(e);
  std::string id = e.record.cwe.str() + "/" + e.record.record_id;
  index(std::move(e));
  return id;
}

std::vector<CweId> Corpus::filter_corpus(std::size_t min_records) const {
  std::map<CweId, std::size_t> counts;
  for (const auto& e : entries_) ++counts[e.record.cwe];
  std::vector<std::pair<CweId, std::size_t>> kept;
  for (const auto& [cwe, n] : counts) {
    if (n >= min_records) kept.emplace_back(cwe, n);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<CweId> out;
  for (const auto& [cwe, n] : kept) out.push_back(cwe);
  return out;
}

CorpusStats Corpus::compute_stats() const {
  if (entries_.empty()) fail(ErrorKind::EmptyInput, "corpus is empty");
  std::map<CweId, std::vector<const Entry*>> groups;
  for (const auto& e : entries_) groups[e.record.cwe].push_back(&e);
  CorpusStats stats;
  for (const auto& [cwe, group] : groups) {
    std::vector<double> file_sizes, unit_sizes, units_per_file;
    for (const Entry* e : group) {
      file_sizes.push_back(static_cast<double>(e->record.pre_file.size()));
      const auto units = haystack::segment_units(e->record.pre_file, e->record.language);
      units_per_file.push_back(static_cast<double>(units.size()));
      for (const auto& u : units) unit_sizes.push_back(static_cast<double>(u.size()));
    }
    CweStats s;
    s.cwe = cwe;
    s.file_count = group.size();
    s.median_file_size = median(file_sizes);
    s.file_size_q1 = quantile(file_sizes, 0.25);
    s.file_size_q3 = quantile(file_sizes, 0.75);
    s.median_function_size = median(unit_sizes);
    s.median_functions_per_file = median(units_per_file);
    stats.per_cwe.push_back(s);
  }
  return stats;
}

std::vector<const Entry*> Corpus::entries_for(CweId cwe) const {
  std::vector<const Entry*> out;
  for (const auto& e : entries_) {
    if (e.record.cwe == cwe) out.push_back(&e);
  }
  return out;
}

const Entry* Corpus::find(std::string_view record_id) const {
  auto it = by_id_.find(std::string(record_id));
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

}  // namespace vulnloc::corpus
