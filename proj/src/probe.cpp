#include "vulnloc/probe.hpp"

#include "vulnloc/error.hpp"
#include "vulnloc/text.hpp"

#include <algorithm>
#include <cctype>

namespace vulnloc::probe {

std::string normalize_line(std::string_view line) {
  std::string_view s = text::trim(line);
  while (true) {
    if (!s.empty() && (s.front() == '`' || s.back() == '`')) {
      while (!s.empty() && s.front() == '`') s.remove_prefix(1);
      while (!s.empty() && s.back() == '`') s.remove_suffix(1);
    } else if (s.size() >= 2 && s.front() == s.back() && (s.front() == '"' || s.front() == '\'')) {
      s.remove_prefix(1);
      s.remove_suffix(1);
    } else {
      break;
    }
    s = text::trim(s);
  }
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (char c : s) {
    if (text::is_space(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

std::string default_cwe_label(corpus::CweId cwe) {
  switch (cwe.value()) {
    case 22: return "Path Traversal";
    case 79: return "Cross-site Scripting";
    case 89: return "SQL Injection";
    case 78: return "OS Command Injection";
    case 352: return "Cross-Site Request Forgery";
    default: return cwe.str();
  }
}

std::string render_prompt(const PromptSpec& spec) {
  static constexpr std::string_view kHead =
      "Analyze the file content below and tell me if there's any line that may contain a bug of type CWE-";
  static constexpr std::string_view kBody =
      "). Your output must adhere to the following structure.\n"
      "\n"
      "Expected Output Structure:\n"
      "SE: very Short Explanation of why the line may contain a bug of given type (e.g., The 'user_input' is "
      "directly concatenated into HTML content without sanitation).\n"
      "BL: the Bugged Line, if any is found, else none (e.g., `response = \"<html><body><h1>Welcome, \" + "
      "user_input + \"!</h1></body></html>\"`).\n"
      "BUG FOUND: YES if a bug is found, else NO.\n"
      "\n"
      "Example output:\n"
      "SE: The 'user_input' is directly concatenated into HTML content without sanitation.\n"
      "BL: `response = \"<html><body><h1>Welcome, \" + user_input + \"!</h1></body></html>\"`\n"
      "BUG FOUND: YES\n"
      "\n";
  std::string id = std::to_string(spec.cwe.value());
  std::string out;
  out.reserve(kHead.size() + id.size() + spec.cwe_label.size() + kBody.size() + kFileContentMarker.size() +
              spec.file_content.size() + 2);
  out.append(kHead).append(id).append(" (").append(spec.cwe_label).append(kBody);
  out.append(kFileContentMarker).append(spec.file_content);
  return out;
}

std::string_view prompt_file_content(std::string_view prompt) {
  std::size_t at = prompt.find(kFileContentMarker);
  if (at == std::string_view::npos) return {};
  return prompt.substr(at + kFileContentMarker.size());
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unparseable: return "UNPARSEABLE";
  }
  return "UNPARSEABLE";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "YES") return Verdict::Yes;
  if (s == "NO") return Verdict::No;
  return Verdict::Unparseable;
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::TP: return "TP";
    case Classification::FP: return "FP";
    case Classification::TN: return "TN";
    case Classification::FN: return "FN";
  }
  return "FN";
}

Classification classification_from_string(std::string_view s) {
  if (s == "TP") return Classification::TP;
  if (s == "FP") return Classification::FP;
  if (s == "TN") return Classification::TN;
  if (s == "FN") return Classification::FN;
  fail(ErrorKind::ValidationFailure, "unknown classification " + std::string(s));
}

namespace {

enum class Label { SE, BL, BugFound };

struct LabelHit {
  Label label;
  std::size_t cut;          // where the previous field's value ends
  std::size_t value_begin;  // first byte after the colon
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

bool is_decoration(char c) { return c == '*' || c == '_' || c == '`' || c == '#' || c == '>' || c == '-'; }

// Matches a label (case-insensitive) at `i`; returns the index past it.
std::optional<std::pair<Label, std::size_t>> match_label(std::string_view raw, std::size_t i) {
  auto ieq_at = [&](std::size_t at, std::string_view word) {
    return at + word.size() <= raw.size() && text::iequals(raw.substr(at, word.size()), word);
  };
  if (ieq_at(i, "bug")) {
    std::size_t j = i + 3;
    std::size_t ws = j;
    while (j < raw.size() && (raw[j] == ' ' || raw[j] == '\t' || raw[j] == '_')) ++j;
    if (j > ws && ieq_at(j, "found")) return std::pair{Label::BugFound, j + 5};
  }
  if (ieq_at(i, "bl")) return std::pair{Label::BL, i + 2};
  if (ieq_at(i, "se")) return std::pair{Label::SE, i + 2};
  return std::nullopt;
}

std::vector<LabelHit> find_labels(std::string_view raw) {
  std::vector<LabelHit> hits;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && word_char(raw[i - 1])) continue;
    auto m = match_label(raw, i);
    if (!m) continue;
    std::size_t j = m->second;
    if (j < raw.size() && word_char(raw[j]) && raw[j] != '_') continue;
    while (j < raw.size() && (raw[j] == '*' || raw[j] == '_' || raw[j] == '`' || raw[j] == ' ')) ++j;
    if (j >= raw.size() || raw[j] != ':') continue;
    ++j;
    while (j < raw.size() && raw[j] == '*') ++j;
    std::size_t cut = i;
    while (cut > 0 && (is_decoration(raw[cut - 1]) || raw[cut - 1] == ' ' || raw[cut - 1] == '\t')) --cut;
    hits.push_back(LabelHit{m->first, cut, j});
    i = j - 1;
  }
  return hits;
}

std::string strip_value(std::string_view v) {
  v = text::trim(v);
  while (!v.empty() && (v.back() == '*' || text::is_space(v.back()))) v.remove_suffix(1);
  return std::string(v);
}

bool is_none(std::string_view value) {
  std::string n = text::to_lower(normalize_line(value));
  while (!n.empty() && (n.back() == '.' || n.back() == '*')) n.pop_back();
  while (!n.empty() && n.front() == '*') n.erase(n.begin());
  return n.empty() || n == "none" || n == "n/a" || n == "no line" || n == "null";
}

}  // namespace

ModelResponse parse_response(std::string_view raw) {
  ModelResponse r;
  r.raw = std::string(raw);
  const auto hits = find_labels(raw);
  std::optional<std::string> se, bl, found;
  for (std::size_t k = 0; k < hits.size(); ++k) {
    std::size_t end = k + 1 < hits.size() ? hits[k + 1].cut : raw.size();
    std::size_t begin = std::min(hits[k].value_begin, end);
    std::string value = strip_value(raw.substr(begin, end - begin));
    switch (hits[k].label) {
      case Label::SE: se = std::move(value); break;
      case Label::BL: bl = std::move(value); break;
      case Label::BugFound: found = std::move(value); break;
    }
  }
  if (se && !se->empty()) r.explanation = se;
  if (bl && !is_none(*bl)) r.reported_line = bl;
  if (found) {
    std::string_view v = *found;
    while (!v.empty() && (is_decoration(v.front()) || v.front() == '"' || v.front() == '\'' ||
                          text::is_space(v.front()))) {
      v.remove_prefix(1);
    }
    std::size_t n = 0;
    while (n < v.size() && std::isalpha(static_cast<unsigned char>(v[n]))) ++n;
    std::string word = text::to_lower(v.substr(0, n));
    if (word == "yes") r.verdict = Verdict::Yes;
    else if (word == "no") r.verdict = Verdict::No;
  }
  return r;
}

std::vector<std::string> ModelResponse::candidate_lines() const {
  std::vector<std::string> out;
  if (!reported_line) return out;
  for (const auto& part : text::split(*reported_line, '\n')) {
    std::string_view t = text::trim(part);
    if (t.substr(0, 3) == "```") continue;
    std::string n = normalize_line(t);
    if (!n.empty() && !is_none(n)) out.push_back(std::move(n));
  }
  return out;
}

bool lines_match(std::string_view reported, std::string_view truth) {
  if (reported.empty() || truth.empty()) return false;
  if (reported == truth) return true;
  if (text::has_alnum(truth) && reported.find(truth) != std::string_view::npos) return true;
  return text::has_alnum(reported) && 2 * reported.size() >= truth.size() &&
         truth.find(reported) != std::string_view::npos;
}

std::optional<std::string> find_match(const ModelResponse& response, const corpus::GroundTruth& truth) {
  const auto candidates = response.candidate_lines();
  for (const auto& c : candidates) {
    if (truth.contains(c)) return c;
  }
  for (const auto& c : candidates) {
    for (const auto& t : truth.removed_lines) {
      if (lines_match(c, t)) return t;
    }
  }
  return std::nullopt;
}

namespace {

void check_contract(bool is_vulnerable_input, const corpus::GroundTruth* truth) {
  if (is_vulnerable_input != (truth != nullptr)) {
    fail(ErrorKind::ContractViolation, is_vulnerable_input ? "vulnerable input without ground truth"
                                                           : "patched input must not carry ground truth");
  }
}

}  // namespace

Classification classify(bool is_vulnerable_input, const ModelResponse& response,
                        const corpus::GroundTruth* truth) {
  return evaluate({}, is_vulnerable_input, response, truth).classification;
}

ProbeOutcome evaluate(std::string record_id, bool is_vulnerable_input, ModelResponse response,
                      const corpus::GroundTruth* truth) {
  check_contract(is_vulnerable_input, truth);
  ProbeOutcome o;
  o.record_id = std::move(record_id);
  o.is_vulnerable_input = is_vulnerable_input;
  if (is_vulnerable_input) {
    if (response.verdict != Verdict::Yes) {
      o.classification = Classification::FN;
      if (response.verdict == Verdict::Unparseable) o.note = "unparseable";
    } else if (auto m = find_match(response, *truth)) {
      o.classification = Classification::TP;
      o.matched_line = std::move(m);
    } else {
      o.classification = Classification::FN;
      o.note = response.candidate_lines().empty() ? "yes-without-line" : "wrong-line";
    }
  } else {
    switch (response.verdict) {
      case Verdict::No: o.classification = Classification::TN; break;
      case Verdict::Yes: o.classification = Classification::FP; break;
      case Verdict::Unparseable:
        o.classification = Classification::FP;
        o.note = "unparseable";
        break;
    }
  }
  o.response = std::move(response);
  return o;
}

MetricsReport metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn) {
  MetricsReport m;
  m.tp = tp;
  m.fp = fp;
  m.tn = tn;
  m.fn = fn;
  m.n_files = tp + fp + tn + fn;
  auto ratio = [](std::size_t num, std::size_t den, bool& undefined) {
    if (den == 0) {
      undefined = true;
      return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
  };
  m.precision = ratio(tp, tp + fp, m.precision_undefined);
  m.recall = ratio(tp, tp + fn, m.recall_undefined);
  bool acc_undefined = false;
  m.accuracy = ratio(tp + tn, m.n_files, acc_undefined);
  if (m.precision + m.recall > 0) {
    m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
  } else {
    m.f1_undefined = true;
  }
  return m;
}

MetricsReport compute_metrics(std::span<const ProbeOutcome> outcomes) {
  if (outcomes.empty()) fail(ErrorKind::EmptyInput, "no outcomes to score");
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& o : outcomes) ++counts[static_cast<int>(o.classification)];
  return metrics_from_counts(counts[static_cast<int>(Classification::TP)],
                             counts[static_cast<int>(Classification::FP)],
                             counts[static_cast<int>(Classification::TN)],
                             counts[static_cast<int>(Classification::FN)]);
}

}  // namespace vulnloc::probe
