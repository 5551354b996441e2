#include "vulnloc/diff.hpp"

#include "vulnloc/error.hpp"
#include "vulnloc/text.hpp"

#include <charconv>
#include <optional>

namespace vulnloc::diff {
namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::optional<std::size_t> read_number(std::string_view& s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

// "-l[,s]" or "+l[,s]"
bool read_range(std::string_view& s, char sign, std::size_t& start, std::size_t& count) {
  if (s.empty() || s.front() != sign) return false;
  s.remove_prefix(1);
  auto l = read_number(s);
  if (!l) return false;
  start = *l;
  count = 1;
  if (!s.empty() && s.front() == ',') {
    s.remove_prefix(1);
    auto c = read_number(s);
    if (!c) return false;
    count = *c;
  }
  return true;
}

Hunk parse_hunk_header(std::string_view line) {
  std::string_view s = text::trim(line);
  Hunk h;
  auto bad = [&] { fail(ErrorKind::MalformedDiff, "bad hunk header: " + std::string(s)); };
  if (!starts_with(s, "@@ ")) bad();
  s.remove_prefix(3);
  if (!read_range(s, '-', h.old_start, h.old_count)) bad();
  if (!starts_with(s, " ")) bad();
  s.remove_prefix(1);
  if (!read_range(s, '+', h.new_start, h.new_count)) bad();
  if (!starts_with(s, " @@")) bad();
  if (h.old_count > 0 && h.old_start == 0) bad();
  return h;
}

std::string strip_path(std::string_view header_rest) {
  std::string_view p = text::trim(header_rest);
  std::size_t tab = p.find('\t');
  if (tab != std::string_view::npos) p = p.substr(0, tab);
  return std::string(p);
}

}  // namespace

UnifiedDiff parse(std::string_view diff_text) {
  UnifiedDiff out;
  const auto lines = text::split_lines(diff_text);
  std::size_t i = 0;
  int file_headers = 0;

  auto check_header_line = [&](std::string_view raw) {
    std::string_view l = raw;
    for (std::string_view banned : {"rename from", "rename to", "copy from", "copy to",
                                    "new file mode", "deleted file mode", "similarity index",
                                    "Binary files"}) {
      if (starts_with(l, banned)) {
        fail(ErrorKind::ValidationFailure, "unsupported diff header: " + std::string(text::trim(l)));
      }
    }
    if (starts_with(l, "--- ")) {
      if (++file_headers > 1) fail(ErrorKind::ValidationFailure, "diff touches more than one file");
      out.old_path = strip_path(l.substr(4));
      if (out.old_path == "/dev/null") fail(ErrorKind::ValidationFailure, "file creation is not a fix");
    } else if (starts_with(l, "+++ ")) {
      out.new_path = strip_path(l.substr(4));
      if (out.new_path == "/dev/null") fail(ErrorKind::ValidationFailure, "file deletion is not a fix");
    } else if (starts_with(l, "diff ") && !out.hunks.empty()) {
      fail(ErrorKind::ValidationFailure, "diff touches more than one file");
    }
  };

  while (i < lines.size()) {
    std::string_view l = lines[i].text;
    if (!starts_with(l, "@@")) {
      if (!out.hunks.empty() && !text::trim(l).empty() && !starts_with(l, "diff ") &&
          !starts_with(l, "--- ") && !starts_with(l, "+++ ") && !starts_with(l, "index ")) {
        fail(ErrorKind::MalformedDiff, "unexpected line after hunk: " + std::string(text::trim(l)));
      }
      check_header_line(l);
      ++i;
      continue;
    }

    Hunk h = parse_hunk_header(l);
    ++i;
    std::size_t old_seen = 0;
    std::size_t new_seen = 0;
    while (old_seen < h.old_count || new_seen < h.new_count) {
      if (i >= lines.size()) fail(ErrorKind::MalformedDiff, "hunk truncated before its line counts");
      std::string_view hl = lines[i].text;
      ++i;
      if (starts_with(hl, "\\")) {
        if (h.lines.empty()) fail(ErrorKind::MalformedDiff, "no-newline marker without a line");
        auto& last = h.lines.back().text;
        if (!last.empty() && last.back() == '\n') last.pop_back();
        continue;
      }
      char op = hl.empty() ? ' ' : hl.front();
      std::string body = hl.empty() ? std::string() : std::string(hl.substr(1));
      // Some tools strip the single space of empty context lines.
      if (hl == "\n" || hl == "\r\n") {
        op = ' ';
        body = std::string(hl);
      }
      switch (op) {
        case ' ': ++old_seen; ++new_seen; break;
        case '-': ++old_seen; break;
        case '+': ++new_seen; break;
        default:
          fail(ErrorKind::MalformedDiff, "bad hunk line prefix: " + std::string(text::trim(hl)));
      }
      if (old_seen > h.old_count || new_seen > h.new_count) {
        fail(ErrorKind::MalformedDiff, "hunk body longer than its header counts");
      }
      h.lines.push_back(HunkLine{op, std::move(body)});
    }
    if (i < lines.size() && starts_with(lines[i].text, "\\")) {
      auto& last = h.lines.back().text;
      if (!last.empty() && last.back() == '\n') last.pop_back();
      ++i;
    }
    if (!out.hunks.empty()) {
      const Hunk& prev = out.hunks.back();
      if (h.old_begin() < prev.old_begin() + prev.old_count) {
        fail(ErrorKind::MalformedDiff, "overlapping or out-of-order hunks");
      }
    }
    out.hunks.push_back(std::move(h));
  }
  if (out.hunks.empty()) fail(ErrorKind::MalformedDiff, "diff contains no hunks");
  return out;
}

namespace {

// Walks the pre-image hunk by hunk; `emit` receives output text, `removed`
// receives each '-' line with its location.
template <typename Emit, typename Removed>
void walk(const UnifiedDiff& diff, std::string_view pre, Emit&& emit, Removed&& removed) {
  const auto pre_lines = text::split_lines(pre);
  std::size_t cursor = 0;
  for (const Hunk& h : diff.hunks) {
    std::size_t begin = h.old_begin();
    if (begin > pre_lines.size()) {
      fail(ErrorKind::ContextMismatch, "hunk starts past end of file at line " + std::to_string(h.old_start));
    }
    for (; cursor < begin; ++cursor) emit(pre_lines[cursor].text);
    for (const HunkLine& hl : h.lines) {
      if (hl.op == '+') {
        emit(hl.text);
        continue;
      }
      if (cursor >= pre_lines.size() || pre_lines[cursor].text != hl.text) {
        fail(ErrorKind::ContextMismatch,
             "line " + std::to_string(cursor + 1) + " does not match hunk @@ -" + std::to_string(h.old_start));
      }
      if (hl.op == ' ') {
        emit(pre_lines[cursor].text);
      } else {
        removed(RemovedLine{cursor, pre_lines[cursor].offset, hl.text});
      }
      ++cursor;
    }
  }
  for (; cursor < pre_lines.size(); ++cursor) emit(pre_lines[cursor].text);
}

}  // namespace

std::string apply(const UnifiedDiff& diff, std::string_view pre) {
  std::string out;
  out.reserve(pre.size());
  walk(diff, pre, [&](std::string_view s) { out.append(s); }, [](const RemovedLine&) {});
  return out;
}

std::vector<RemovedLine> removed_lines(const UnifiedDiff& diff, std::string_view pre) {
  std::vector<RemovedLine> out;
  walk(diff, pre, [](std::string_view) {}, [&](RemovedLine r) { out.push_back(std::move(r)); });
  return out;
}

}  // namespace vulnloc::diff
