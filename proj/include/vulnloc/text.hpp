#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vulnloc::text {

/// A line of a file: its byte offset and its text including the trailing
/// '\n' when present. Concatenating all lines restores the file.
struct Line {
  std::size_t offset = 0;
  std::string_view text;

  /// Text without the line terminator ("\n" or "\r\n").
  std::string_view body() const noexcept;
};

std::vector<Line> split_lines(std::string_view file);

bool is_space(char c) noexcept;
bool has_alnum(std::string_view s) noexcept;
std::string_view trim(std::string_view s) noexcept;
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b) noexcept;
std::vector<std::string> split(std::string_view s, char sep);

std::string sha256_hex(std::string_view data);
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0) noexcept;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace vulnloc::text
