#pragma once

#include "vulnloc/corpus.hpp"
#include "vulnloc/probe.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vulnloc::haystack {

/// Grid pitch: instance n places the block at 500*(n-1) characters.
inline constexpr std::size_t kCellWidth = 500;
inline constexpr std::size_t kDefaultTolerance = 200;
inline constexpr std::size_t kBlockMin = 400;
inline constexpr std::size_t kBlockMax = 600;
inline constexpr std::array<std::size_t, 4> kStandardSizes = {4000, 8000, 16000, 25000};

enum class Origin { SameFile, SameRepoPool };
std::string_view to_string(Origin o) noexcept;

struct CodeUnit {
  std::string text;
  Origin origin = Origin::SameFile;
  std::string id;

  std::size_t size() const noexcept { return text.size(); }
};

/// Splits a file into function-like units whose concatenation restores it.
/// Brace depth drives C-family languages, indentation drives Python and
/// Ruby, blank-line groups drive the rest; classes and namespaces are
/// descended into so their methods become units.
std::vector<CodeUnit> segment_units(std::string_view file, corpus::Language language);

struct VulnBlock {
  std::string text;
  std::string core_line;          // normalized
  std::size_t core_offset = 0;    // bytes from block start to the core line
  bool whole_unit = false;        // enclosing unit taken as-is
  std::size_t source_unit = 0;    // index of the enclosing unit in segment_units(pre_file)

  std::size_t size() const noexcept { return text.size(); }
};

/// Isolates the vulnerable block: the enclosing unit when it is shorter than
/// 500 characters, else a window of lines around the core line wrapped into
/// a standalone function of roughly 500 characters.
VulnBlock extract_block(const corpus::VulnRecord& record, const corpus::GroundTruth& truth);

struct PackResult {
  std::vector<std::size_t> selected;  // ascending indices into the input
  std::size_t achieved = 0;
};

/// Relaxed 0/1 knapsack: the subset whose size is closest to `capacity`,
/// overshooting by at most `max_over` and undershooting by at most
/// `max_under`. Ties go to fewer units, then to the earliest units.
/// Throws InfeasiblePadding when no subset lands inside the window.
PackResult pack_sizes(std::span<const std::size_t> sizes, std::size_t capacity, std::size_t max_over,
                      std::size_t max_under);

PackResult pack_padding(std::span<const CodeUnit> units, std::size_t capacity, std::size_t tolerance);
PackResult pack_padding_window(std::span<const CodeUnit> units, std::size_t capacity, std::size_t max_over,
                               std::size_t max_under);

/// Padding candidates: the rest of the file first, then same-repository
/// files. Units holding any ground-truth line are left out.
std::vector<CodeUnit> padding_pool(const corpus::VulnRecord& record, const corpus::GroundTruth& truth,
                                   const VulnBlock& block);

struct HaystackInstance {
  corpus::CweId cwe;
  std::string base_record_id;
  std::size_t target_size = 0;    // S
  std::size_t position = 0;       // n, 1-based
  std::string content;
  std::size_t block_offset = 0;   // == 500*(n-1)
  std::size_t core_offset = 0;    // offset of the core line in content
  std::size_t filler = 0;         // newline characters topping up the before-segment
  std::vector<std::string> before_units;
  std::vector<std::string> after_units;
  std::string core_line;
  std::size_t block_size = 0;
};

/// One instance per grid position for target size S.
std::vector<HaystackInstance> build_grid(const corpus::Entry& entry, const VulnBlock& block, std::size_t target_size,
                                         std::span<const CodeUnit> pool,
                                         std::size_t tolerance = kDefaultTolerance);

/// The `count` records of a CWE closest to its median pre-file size.
std::vector<const corpus::Entry*> select_records(std::vector<const corpus::Entry*> entries, std::size_t count);

/// A probe of one haystack instance in one run.
struct InstanceOutcome {
  std::string model;
  corpus::CweId cwe;
  std::string record_id;
  std::size_t target_size = 0;
  std::size_t position = 0;
  std::size_t run = 0;
  probe::ProbeOutcome outcome;

  int score() const noexcept { return outcome.classification == probe::Classification::TP ? 1 : -1; }
};

struct HaystackScore {
  std::string model;
  corpus::CweId cwe;
  std::size_t target_size = 0;
  std::size_t position = 0;
  double mean_score = 0;
  std::size_t runs = 0;
  std::size_t instances = 0;
};

/// Mean over instances per run, then over runs, for every (model, cwe, S, n)
/// cell. Throws MissingCell when a grid cell of `sizes` has no outcome.
std::vector<HaystackScore> score_run(std::span<const InstanceOutcome> outcomes, std::span<const std::size_t> sizes);

/// Offset of the first content line designated by `reported` (normalized match).
std::optional<std::size_t> locate_line(std::string_view content, std::string_view reported);

struct PositionHistogram {
  std::size_t bucket_width = 1000;
  std::map<std::size_t, std::map<std::size_t, std::size_t>> buckets;  // S -> bucket start -> count
  std::map<std::size_t, std::size_t> not_in_file;                      // S -> count
};

using ContentLookup = std::function<std::string_view(const InstanceOutcome&)>;

/// Where incorrect YES answers pointed, bucketed per S.
PositionHistogram wrong_position_distribution(std::span<const InstanceOutcome> outcomes, const ContentLookup& content,
                                              std::size_t bucket_width = 1000);

}  // namespace vulnloc::haystack
