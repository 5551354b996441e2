#include "vulnloc/haystack.hpp"
#include "vulnloc/text.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace vulnloc::haystack {
namespace {

using Range = std::pair<std::size_t, std::size_t>;  // [first line, last line)

struct LineInfo {
  std::string_view text;
  std::string_view code;  // trimmed text
  bool blank = false;
  bool neutral = false;   // blank, comment-only or inside a multi-line string
  int depth_before = 0;
  int depth_after = 0;
  int max_depth = 0;
  int indent = 0;
};

bool starts_with_word(std::string_view s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  return s.size() == word.size() || !(std::isalnum(static_cast<unsigned char>(s[word.size()])) || s[word.size()] == '_');
}

bool contains_word(std::string_view s, std::string_view word) {
  for (std::size_t at = s.find(word); at != std::string_view::npos; at = s.find(word, at + 1)) {
    bool left_ok = at == 0 || !(std::isalnum(static_cast<unsigned char>(s[at - 1])) || s[at - 1] == '_');
    if (left_ok && starts_with_word(s.substr(at), word)) return true;
  }
  return false;
}

// --- brace-delimited languages ----------------------------------------------

class BraceScanner {
 public:
  BraceScanner(bool hash_comments, bool raw_backticks) : hash_comments_(hash_comments), raw_backticks_(raw_backticks) {}

  void scan(LineInfo& info) {
    const std::string_view line = info.text;
    info.depth_before = depth_;
    int max_depth = depth_;
    bool saw_code = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      const char next = i + 1 < line.size() ? line[i + 1] : '\0';
      if (in_block_comment_) {
        if (c == '*' && next == '/') {
          in_block_comment_ = false;
          ++i;
        }
        continue;
      }
      if (in_string_ != '\0') {
        if (c == '\\' && !(in_string_ == '`' && raw_backticks_)) {
          ++i;
        } else if (c == in_string_) {
          in_string_ = '\0';
        }
        continue;
      }
      if (text::is_space(c)) continue;
      if (c == '/' && next == '/') break;
      if (c == '#' && hash_comments_) break;
      if (c == '/' && next == '*') {
        in_block_comment_ = true;
        ++i;
        continue;
      }
      saw_code = true;
      if (c == '"' || c == '\'' || c == '`') {
        in_string_ = c;
      } else if (c == '{') {
        max_depth = std::max(max_depth, ++depth_);
      } else if (c == '}') {
        depth_ = std::max(0, depth_ - 1);
      }
    }
    // Quoted strings rarely span lines; stray apostrophes in markup must not
    // poison the rest of the file. Template/raw strings do span lines.
    if (in_string_ == '"' || in_string_ == '\'') in_string_ = '\0';
    info.depth_after = depth_;
    info.max_depth = max_depth;
    info.neutral = info.blank || !saw_code;
  }

 private:
  bool hash_comments_;
  bool raw_backticks_;
  bool in_block_comment_ = false;
  char in_string_ = '\0';
  int depth_ = 0;
};

bool is_container_header(std::string_view code) {
  for (std::string_view kw : {"class", "interface", "trait", "namespace", "module", "impl", "object"}) {
    if (contains_word(code, kw)) return true;
  }
  return false;
}

std::vector<Range> split_braces(const std::vector<LineInfo>& lines, Range range, int base);

// Splits a class/namespace body into its members when it holds several.
std::vector<Range> descend_braces(const std::vector<LineInfo>& lines, Range unit, int base) {
  auto [first, last] = unit;
  std::size_t header = first;
  while (header < last && lines[header].max_depth <= base) ++header;
  if (header >= last || lines[header].depth_after != base + 1) return {unit};
  std::string header_code;
  for (std::size_t i = first; i <= header; ++i) header_code.append(lines[i].code).push_back(' ');
  if (!is_container_header(header_code)) return {unit};
  std::size_t footer = last;
  while (footer > header + 1 && lines[footer - 1].blank) --footer;
  if (footer <= header + 1) return {unit};
  --footer;
  if (lines[footer].depth_before != base + 1 || lines[footer].depth_after != base) return {unit};
  auto inner = split_braces(lines, {header + 1, footer}, base + 1);
  if (inner.size() < 2) return {unit};
  inner.front().first = first;
  inner.back().second = last;
  return inner;
}

std::vector<Range> split_braces(const std::vector<LineInfo>& lines, Range range, int base) {
  std::vector<Range> units;
  std::size_t start = range.first;
  bool went_deeper = false;
  bool has_content = false;
  for (std::size_t i = range.first; i < range.second; ++i) {
    const LineInfo& l = lines[i];
    if (l.max_depth > base) went_deeper = true;
    bool close = false;
    if (l.depth_after <= base) {
      if (went_deeper && !l.blank) close = true;
      else if (l.blank && has_content && !went_deeper) close = true;
    }
    if (!l.blank) has_content = true;
    if (close) {
      units.emplace_back(start, i + 1);
      start = i + 1;
      went_deeper = false;
      has_content = false;
    }
  }
  if (start < range.second) {
    if (!has_content && !units.empty()) units.back().second = range.second;
    else units.emplace_back(start, range.second);
  }
  std::vector<Range> out;
  for (const Range& u : units) {
    auto sub = descend_braces(lines, u, base);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// --- indentation languages --------------------------------------------------

int indent_of(std::string_view line) {
  int n = 0;
  for (char c : line) {
    if (c == ' ') ++n;
    else if (c == '\t') n = (n / 8 + 1) * 8;
    else break;
  }
  return n;
}

void scan_indentation(std::vector<LineInfo>& lines, bool python) {
  bool in_string = false;
  for (LineInfo& l : lines) {
    l.indent = indent_of(l.text);
    const bool was_in_string = in_string;
    if (python) {
      std::size_t quotes = 0;
      for (std::string_view q : {"\"\"\"", "'''"}) {
        for (std::size_t at = l.text.find(q); at != std::string_view::npos; at = l.text.find(q, at + 3)) ++quotes;
      }
      if (quotes % 2 == 1) in_string = !in_string;
    }
    l.neutral = l.blank || was_in_string || l.code.front() == '#';
  }
}

bool is_ruby_end(std::string_view code) { return starts_with_word(code, "end"); }

bool is_python_continuation(std::string_view code) {
  for (std::string_view kw : {"else", "elif", "except", "finally"}) {
    if (starts_with_word(code, kw)) return true;
  }
  return !code.empty() && (code.front() == ')' || code.front() == ']' || code.front() == '}');
}

std::vector<Range> split_indent(const std::vector<LineInfo>& lines, Range range, int base, bool python);

std::vector<Range> descend_indent(const std::vector<LineInfo>& lines, Range unit, int base, bool python) {
  auto [first, last] = unit;
  std::size_t header = first;
  while (header < last && lines[header].neutral) ++header;
  if (header >= last) return {unit};
  std::string_view code = lines[header].code;
  if (!(starts_with_word(code, "class") || (!python && starts_with_word(code, "module")))) return {unit};
  std::size_t inner_first = header + 1;
  while (inner_first < last && lines[inner_first].neutral) ++inner_first;
  if (inner_first >= last || lines[inner_first].indent <= base) return {unit};
  std::size_t inner_last = last;
  if (!python) {
    while (inner_last > inner_first && lines[inner_last - 1].neutral) --inner_last;
    if (inner_last > inner_first && is_ruby_end(lines[inner_last - 1].code) && lines[inner_last - 1].indent <= base) {
      --inner_last;
    }
  }
  auto inner = split_indent(lines, {header + 1, inner_last}, lines[inner_first].indent, python);
  if (inner.size() < 2) return {unit};
  inner.front().first = first;
  inner.back().second = last;
  return inner;
}

std::vector<Range> split_indent(const std::vector<LineInfo>& lines, Range range, int base, bool python) {
  std::vector<Range> units;
  std::size_t start = range.first;
  bool went_deeper = false;
  bool has_code = false;
  bool blank_gap = false;
  for (std::size_t i = range.first; i < range.second; ++i) {
    const LineInfo& l = lines[i];
    if (l.neutral) {
      if (l.blank && has_code) blank_gap = true;
      continue;
    }
    if (l.indent <= base && has_code) {
      const bool continuation = python ? is_python_continuation(l.code) : is_ruby_end(l.code);
      if (!continuation && (went_deeper || blank_gap)) {
        // Comments above the next unit travel with it; blank lines stay behind.
        std::size_t boundary = i;
        while (boundary > start + 1 && lines[boundary - 1].neutral) --boundary;
        while (boundary < i && lines[boundary].blank) ++boundary;
        units.emplace_back(start, boundary);
        start = boundary;
        went_deeper = false;
      }
    }
    if (l.indent > base) went_deeper = true;
    has_code = true;
    blank_gap = false;
    if (!python && l.indent <= base && is_ruby_end(l.code)) {
      units.emplace_back(start, i + 1);
      start = i + 1;
      went_deeper = false;
      has_code = false;
    }
  }
  if (start < range.second) {
    if (!has_code && !units.empty()) units.back().second = range.second;
    else units.emplace_back(start, range.second);
  }
  std::vector<Range> out;
  for (const Range& u : units) {
    auto sub = descend_indent(lines, u, base, python);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<Range> fixed_groups(std::size_t line_count, std::size_t group) {
  std::vector<Range> out;
  for (std::size_t i = 0; i < line_count; i += group) out.emplace_back(i, std::min(line_count, i + group));
  return out;
}

}  // namespace

std::vector<CodeUnit> segment_units(std::string_view file, corpus::Language language) {
  using corpus::Language;
  const auto raw = text::split_lines(file);
  std::vector<LineInfo> lines(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    lines[i].text = raw[i].text;
    lines[i].code = text::trim(raw[i].text);
    lines[i].blank = lines[i].code.empty();
  }

  std::vector<Range> ranges;
  const Range all{0, lines.size()};
  switch (language) {
    case Language::Python:
    case Language::Ruby:
      scan_indentation(lines, language == Language::Python);
      ranges = split_indent(lines, all, 0, language == Language::Python);
      break;
    case Language::HTML:
      for (auto& l : lines) l.neutral = l.blank;
      ranges = split_braces(lines, all, 0);
      break;
    default: {
      BraceScanner scanner(language == Language::PHP, language == Language::Go);
      for (auto& l : lines) scanner.scan(l);
      ranges = split_braces(lines, all, 0);
      break;
    }
  }
  if (ranges.size() <= 1 && lines.size() > 40) ranges = fixed_groups(lines.size(), 20);

  std::vector<CodeUnit> units;
  units.reserve(ranges.size());
  for (const auto& [first, last] : ranges) {
    if (first >= last) continue;
    const std::size_t begin = raw[first].offset;
    const std::size_t end = raw[last - 1].offset + raw[last - 1].text.size();
    units.push_back(CodeUnit{std::string(file.substr(begin, end - begin)), Origin::SameFile,
                             "file:" + std::to_string(units.size())});
  }
  return units;
}

}  // namespace vulnloc::haystack
