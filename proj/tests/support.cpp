#include "support.hpp"

#include "vulnloc/text.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace vulnloc::testing {

fs::path fixture_dir() { return VULNLOC_FIXTURE_DIR; }
fs::path records_dir() { return fixture_dir() / "records"; }
fs::path bad_records_dir() { return fixture_dir() / "bad"; }
fs::path cli_path() { return VULNLOC_CLI; }

std::vector<fs::path> record_dirs() {
  std::vector<fs::path> dirs;
  for (const auto& e : fs::directory_iterator(records_dir())) {
    if (e.is_directory()) dirs.push_back(e.path());
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

const corpus::Corpus& fixture_corpus() {
  static const corpus::Corpus c = [] {
    corpus::Corpus out;
    for (const auto& d : record_dirs()) out.ingest(corpus::load_record_dir(d));
    return out;
  }();
  return c;
}

TempDir::TempDir(const std::string& tag) {
  std::string pattern = (fs::temp_directory_path() / ("vulnloc-" + tag + "-XXXXXX")).string();
  if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed for " + pattern);
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

CommandResult run_cli(const std::string& args) { return run_shell("'" + cli_path().string() + "' " + args); }

CommandResult run_shell(const std::string& command) {
  const std::string cmd = command + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  CommandResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::map<std::string, std::string> read_tree(const fs::path& dir, const std::vector<std::string>& extensions) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string ext = e.path().extension().string();
    if (std::find(extensions.begin(), extensions.end(), ext) == extensions.end()) continue;
    out[fs::relative(e.path(), dir).generic_string()] = text::read_file(e.path());
  }
  return out;
}

std::string random_text(std::mt19937_64& rng, std::size_t max_lines, std::size_t max_line_len) {
  static constexpr std::string_view alphabet = "abcxyz019 \t{}();=\"'`$_-";
  std::uniform_int_distribution<std::size_t> lines(0, max_lines);
  std::uniform_int_distribution<std::size_t> len(0, max_line_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> crlf(0, 9);
  std::string out;
  const std::size_t n = lines(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t l = len(rng);
    for (std::size_t j = 0; j < l; ++j) out.push_back(alphabet[pick(rng)]);
    const bool last = i + 1 == n;
    if (last && crlf(rng) < 3) break;  // sometimes no trailing newline
    out += crlf(rng) == 0 ? "\r\n" : "\n";
  }
  return out;
}

}  // namespace vulnloc::testing
