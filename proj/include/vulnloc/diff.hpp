#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vulnloc::diff {

struct HunkLine {
  char op = ' ';     // ' ' context, '-' removed, '+' added
  std::string text;  // includes the '\n' unless marked "\ No newline at end of file"
};

struct Hunk {
  std::size_t old_start = 0;
  std::size_t old_count = 0;
  std::size_t new_start = 0;
  std::size_t new_count = 0;
  std::vector<HunkLine> lines;

  /// 0-based index of the first pre-file line this hunk covers.
  std::size_t old_begin() const noexcept { return old_count == 0 ? old_start : old_start - 1; }
};

struct UnifiedDiff {
  std::string old_path;
  std::string new_path;
  std::vector<Hunk> hunks;
};

/// A '-' line located in the pre-image.
struct RemovedLine {
  std::size_t line_index = 0;  // 0-based
  std::size_t offset = 0;      // byte offset of the line in the pre-image
  std::string text;            // raw line including terminator
};

/// Parses a single-file unified diff. Throws MalformedDiff for unparseable
/// hunks, ValidationFailure for multi-file diffs, renames, copies, creations
/// and deletions.
UnifiedDiff parse(std::string_view diff_text);

/// Applies the diff with exact context matching at the stated line numbers.
/// Throws ContextMismatch when a context or removed line differs from `pre`.
std::string apply(const UnifiedDiff& diff, std::string_view pre);

/// Locates every '-' line in the pre-image, checking context along the way.
std::vector<RemovedLine> removed_lines(const UnifiedDiff& diff, std::string_view pre);

}  // namespace vulnloc::diff
