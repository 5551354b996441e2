#include "vulnloc/text.hpp"

#include "vulnloc/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>

namespace vulnloc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedDiff: return "MalformedDiff";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::EmptyFix: return "EmptyFix";
    case ErrorKind::DuplicateRecord: return "DuplicateRecord";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BlockNotExtractable: return "BlockNotExtractable";
    case ErrorKind::InfeasiblePadding: return "InfeasiblePadding";
    case ErrorKind::MissingCell: return "MissingCell";
    case ErrorKind::IncompleteCoverage: return "IncompleteCoverage";
    case ErrorKind::MissingBaseline: return "MissingBaseline";
    case ErrorKind::ProviderError: return "ProviderError";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::ContextOverflow: return "ContextOverflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PerfectSeparation: return "PerfectSeparation";
    case ErrorKind::ConstantOutcome: return "ConstantOutcome";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace text {

std::string_view Line::body() const noexcept {
  std::string_view b = text;
  if (!b.empty() && b.back() == '\n') b.remove_suffix(1);
  if (!b.empty() && b.back() == '\r') b.remove_suffix(1);
  return b;
}

std::vector<Line> split_lines(std::string_view file) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos < file.size()) {
    std::size_t nl = file.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? file.size() : nl + 1;
    lines.push_back(Line{pos, file.substr(pos, end - pos)});
    pos = end;
  }
  return lines;
}

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool has_alnum(std::string_view s) noexcept {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); });
  return out;
}

bool iequals(std::string_view a, std::string_view b) noexcept {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    parts.emplace_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    fail(ErrorKind::Io, "sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) noexcept {
  std::uint64_t h = 14695981039346656037ULL ^ (seed * 0x9E3779B97F4A7C15ULL);
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace text
}  // namespace vulnloc
