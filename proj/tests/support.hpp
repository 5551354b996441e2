#pragma once

#include "vulnloc/corpus.hpp"

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace vulnloc::testing {

std::filesystem::path fixture_dir();
std::filesystem::path records_dir();
std::filesystem::path bad_records_dir();
std::filesystem::path cli_path();

/// Every fixture record directory, sorted by name.
std::vector<std::filesystem::path> record_dirs();

/// The fixture records ingested into an in-memory corpus, loaded once.
const corpus::Corpus& fixture_corpus();

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout and stderr interleaved
};

/// Runs a shell command, capturing stdout and stderr.
CommandResult run_shell(const std::string& command);

/// Runs the CLI with `args` (already shell-quoted where needed).
CommandResult run_cli(const std::string& args);

/// Every regular file under `dir` with one of `extensions`, keyed by relative path.
std::map<std::string, std::string> read_tree(const std::filesystem::path& dir, const std::vector<std::string>& extensions);

std::string random_text(std::mt19937_64& rng, std::size_t max_lines, std::size_t max_line_len);

}  // namespace vulnloc::testing
