#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vulnloc::corpus {

/// A CWE weakness class, rendered canonically as "CWE-<id>".
class CweId {
 public:
  CweId() = default;
  explicit CweId(int id);

  /// Accepts "79", "CWE-79" and "cwe-79".
  static CweId parse(std::string_view text);

  int value() const noexcept { return id_; }
  std::string str() const;

  auto operator<=>(const CweId&) const = default;

 private:
  int id_ = 0;
};

enum class Language { PHP, TypeScript, JavaScript, HTML, Java, Go, Python, Ruby, C, Other };

std::string_view to_string(Language lang) noexcept;
Language language_from_name(std::string_view name);

/// nullopt for documentation/data files and C++ sources, which the corpus
/// refuses; Other for any remaining extension.
std::optional<Language> language_from_extension(std::string_view ext);

/// A sibling file from the same repository, used as haystack padding.
struct PoolFile {
  std::string name;
  std::string text;
};

struct VulnRecord {
  std::string record_id;
  CweId cwe;
  Language language = Language::Other;
  std::string extension;  // without the dot
  std::string pre_file;
  std::string post_file;
  std::string diff;
  std::string source_ref;
  std::vector<PoolFile> pool_files;
};

/// The pre-patch lines changed by the fix; reporting any one of them counts.
struct GroundTruth {
  std::set<std::string> removed_lines;       // normalized, non-blank
  std::size_t first_changed_offset = 0;      // bytes before the earliest changed line
  std::vector<std::size_t> changed_lines;    // 1-based pre-file line numbers, ascending

  bool contains(std::string_view normalized_line) const {
    return removed_lines.find(std::string(normalized_line)) != removed_lines.end();
  }
};

/// Derives ground truth from a unified diff against the pre-patch file.
/// Throws MalformedDiff, ContextMismatch or EmptyFix.
GroundTruth parse_unified_diff(std::string_view diff, std::string_view pre_file);

/// Checks every VulnRecord invariant; throws ValidationFailure with the reason.
GroundTruth validate(const VulnRecord& record);

/// Reads one input record directory: pre.<ext>, post.<ext>, fix.diff,
/// meta.json and an optional pool/ directory.
VulnRecord load_record_dir(const std::filesystem::path& dir);

/// Linear interpolation between order statistics: h = (n-1)p.
double quantile(std::vector<double> values, double p);
double median(std::vector<double> values);

struct CweStats {
  CweId cwe;
  std::size_t file_count = 0;
  double median_file_size = 0;
  double file_size_q1 = 0;
  double file_size_q3 = 0;
  double median_function_size = 0;
  double median_functions_per_file = 0;
};

struct CorpusStats {
  std::vector<CweStats> per_cwe;  // ascending CWE id
};

struct Entry {
  VulnRecord record;
  GroundTruth truth;
  std::string dedupe_key;
};

/// Validated, persisted collection of records. One JSONL file per CWE under
/// the corpus directory; an empty directory path keeps the corpus in memory.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::filesystem::path dir);

  /// Loads every CWE-*.jsonl under `dir`. A missing directory is an empty corpus.
  static Corpus open(const std::filesystem::path& dir);

  /// Validates and stores the record, returning "CWE-<id>/<record_id>".
  /// Throws DuplicateRecord or ValidationFailure; on error nothing changes.
  std::string ingest(VulnRecord record);

  /// CWEs with at least `min_records` records, by count descending (ties by id).
  std::vector<CweId> filter_corpus(std::size_t min_records) const;

  CorpusStats compute_stats() const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::vector<const Entry*> entries_for(CweId cwe) const;
  const Entry* find(std::string_view record_id) const;
  bool empty() const noexcept { return entries_.empty(); }
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  void index(Entry entry);
  void persist(const Entry& entry) const;

  std::filesystem::path dir_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace vulnloc::corpus
