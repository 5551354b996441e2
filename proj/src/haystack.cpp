#include "vulnloc/haystack.hpp"

#include "vulnloc/error.hpp"
#include "vulnloc/text.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>

namespace vulnloc::haystack {

std::string_view to_string(Origin o) noexcept {
  return o == Origin::SameFile ? "same_file" : "same_repo_pool";
}

namespace {

using corpus::Language;

struct Wrapper {
  std::string_view header;
  std::string_view footer;
};

Wrapper wrapper_for(Language lang) {
  switch (lang) {
    case Language::PHP: return {"function relocated_block() {\n", "}\n"};
    case Language::JavaScript:
    case Language::TypeScript: return {"function relocatedBlock() {\n", "}\n"};
    case Language::Java: return {"void relocatedBlock() {\n", "}\n"};
    case Language::Go: return {"func relocatedBlock() {\n", "}\n"};
    case Language::C: return {"static void relocated_block(void) {\n", "}\n"};
    case Language::Python: return {"def relocated_block():\n", ""};
    case Language::Ruby: return {"def relocated_block\n", "end\n"};
    case Language::HTML:
    case Language::Other: break;
  }
  return {"", ""};
}

std::string with_newline(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out.back() != '\n') out.push_back('\n');
  return out;
}

bool mentions_truth(std::string_view unit, const corpus::GroundTruth& truth) {
  for (const auto& line : text::split_lines(unit)) {
    if (truth.contains(probe::normalize_line(line.text))) return true;
  }
  return false;
}

}  // namespace

VulnBlock extract_block(const corpus::VulnRecord& record, const corpus::GroundTruth& truth) {
  const std::string& pre = record.pre_file;
  const auto lines = text::split_lines(pre);

  std::optional<std::size_t> core;
  if (!truth.changed_lines.empty()) {
    const std::size_t idx = truth.changed_lines.front() - 1;
    if (truth.changed_lines.front() >= 1 && idx < lines.size() &&
        truth.contains(probe::normalize_line(lines[idx].text))) {
      core = idx;
    }
  }
  for (std::size_t i = 0; !core && i < lines.size(); ++i) {
    if (truth.contains(probe::normalize_line(lines[i].text))) core = i;
  }
  if (!core) fail(ErrorKind::BlockNotExtractable, record.record_id + ": vulnerable line not found in pre_file");

  const std::size_t core_offset = lines[*core].offset;
  const auto units = segment_units(pre, record.language);
  std::size_t unit_begin = 0;
  std::size_t unit_index = units.size();
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (core_offset < unit_begin + units[u].size()) {
      unit_index = u;
      break;
    }
    unit_begin += units[u].size();
  }
  if (unit_index == units.size()) {
    fail(ErrorKind::BlockNotExtractable, record.record_id + ": vulnerable line outside every code unit");
  }

  VulnBlock block;
  block.core_line = probe::normalize_line(lines[*core].text);
  block.source_unit = unit_index;
  const CodeUnit& unit = units[unit_index];
  if (unit.size() < kCellWidth) {
    block.text = with_newline(unit.text);
    block.core_offset = core_offset - unit_begin;
    block.whole_unit = true;
    return block;
  }

  // Contiguous window of unit lines around the core line, grown one line at a
  // time alternating above and below.
  std::size_t first_line = *core, last_line = *core;
  while (first_line > 0 && lines[first_line - 1].offset >= unit_begin) --first_line;
  while (last_line + 1 < lines.size() && lines[last_line + 1].offset < unit_begin + unit.size()) ++last_line;

  const Wrapper wrap = wrapper_for(record.language);
  auto line_size = [&](std::size_t i) { return with_newline(lines[i].text).size(); };
  std::size_t lo = *core, hi = *core;
  std::size_t size = wrap.header.size() + wrap.footer.size() + line_size(*core);

  auto grow = [&](std::size_t limit) {
    bool up_open = true, down_open = true;
    bool take_up = true;
    while (up_open || down_open) {
      if (take_up && up_open) {
        if (lo > first_line && size + line_size(lo - 1) <= limit) {
          size += line_size(--lo);
        } else {
          up_open = false;
        }
      } else if (!take_up && down_open) {
        if (hi < last_line && size + line_size(hi + 1) <= limit) {
          size += line_size(++hi);
        } else {
          down_open = false;
        }
      }
      take_up = !take_up;
    }
  };
  grow(kCellWidth);
  if (size < kBlockMin) grow(kBlockMax);

  block.text.assign(wrap.header);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (i == *core) block.core_offset = block.text.size();
    block.text += with_newline(lines[i].text);
  }
  block.text.append(wrap.footer);
  return block;
}

PackResult pack_sizes(std::span<const std::size_t> sizes, std::size_t capacity, std::size_t max_over,
                      std::size_t max_under) {
  constexpr std::uint16_t kNone = std::numeric_limits<std::uint16_t>::max();
  const std::size_t n = sizes.size();
  const std::size_t top = capacity + max_over;
  const std::size_t bottom = capacity > max_under ? capacity - max_under : 0;
  const std::size_t width = top + 1;

  // fewest[i*width + s]: fewest units among sizes[i..] summing to exactly s.
  std::vector<std::uint16_t> fewest((n + 1) * width, kNone);
  fewest[n * width] = 0;
  for (std::size_t i = n; i-- > 0;) {
    const std::uint16_t* next = &fewest[(i + 1) * width];
    std::uint16_t* cur = &fewest[i * width];
    std::copy(next, next + width, cur);
    const std::size_t w = sizes[i];
    if (w > top) continue;
    for (std::size_t s = w; s <= top; ++s) {
      if (next[s - w] != kNone && next[s - w] + 1 < cur[s]) cur[s] = static_cast<std::uint16_t>(next[s - w] + 1);
    }
  }

  auto reconstruct = [&](std::size_t sum) {
    std::vector<std::size_t> picked;
    std::size_t remaining = sum;
    std::uint16_t count = fewest[sum];
    for (std::size_t i = 0; i < n && count > 0; ++i) {
      const std::size_t w = sizes[i];
      if (w <= remaining && fewest[(i + 1) * width + remaining - w] == count - 1) {
        picked.push_back(i);
        remaining -= w;
        --count;
      }
    }
    return picked;
  };

  std::optional<std::tuple<std::size_t, std::uint16_t, std::vector<std::size_t>, std::size_t>> best;
  for (std::size_t s = bottom; s <= top; ++s) {
    if (fewest[s] == kNone) continue;
    const std::size_t gap = s > capacity ? s - capacity : capacity - s;
    if (best && std::make_tuple(gap, fewest[s]) > std::make_tuple(std::get<0>(*best), std::get<1>(*best))) continue;
    auto picked = reconstruct(s);
    auto candidate = std::make_tuple(gap, fewest[s], std::move(picked), s);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  if (!best) {
    fail(ErrorKind::InfeasiblePadding, "no padding subset within [" + std::to_string(bottom) + ", " +
                                           std::to_string(top) + "] characters");
  }
  return PackResult{std::get<2>(*best), std::get<3>(*best)};
}

PackResult pack_padding(std::span<const CodeUnit> units, std::size_t capacity, std::size_t tolerance) {
  std::vector<std::size_t> sizes;
  sizes.reserve(units.size());
  for (const auto& u : units) sizes.push_back(u.size());
  return pack_sizes(sizes, capacity, tolerance, tolerance);
}

std::vector<CodeUnit> padding_pool(const corpus::VulnRecord& record, const corpus::GroundTruth& truth,
                                   const VulnBlock& block) {
  std::vector<CodeUnit> pool;
  auto add = [&](CodeUnit u) {
    u.text = with_newline(u.text);
    if (!text::has_alnum(u.text) || mentions_truth(u.text, truth)) return;
    pool.push_back(std::move(u));
  };
  auto file_units = segment_units(record.pre_file, record.language);
  for (std::size_t i = 0; i < file_units.size(); ++i) {
    if (i == block.source_unit) continue;
    file_units[i].id = "file:" + std::to_string(i);
    add(std::move(file_units[i]));
  }
  for (const auto& f : record.pool_files) {
    const auto dot = f.name.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : f.name.substr(dot + 1);
    const Language lang = corpus::language_from_extension(ext).value_or(Language::Other);
    auto units = segment_units(f.text, lang);
    for (std::size_t i = 0; i < units.size(); ++i) {
      units[i].origin = Origin::SameRepoPool;
      units[i].id = "pool:" + f.name + ":" + std::to_string(i);
      add(std::move(units[i]));
    }
  }
  return pool;
}

std::vector<HaystackInstance> build_grid(const corpus::Entry& entry, const VulnBlock& block, std::size_t target_size,
                                         std::span<const CodeUnit> pool, std::size_t tolerance) {
  if (target_size == 0 || target_size % kCellWidth != 0) {
    fail(ErrorKind::InfeasiblePadding, "target size must be a positive multiple of 500, got " + std::to_string(target_size));
  }
  const std::size_t positions = target_size / kCellWidth;
  std::vector<HaystackInstance> out;
  out.reserve(positions);
  for (std::size_t n = 1; n <= positions; ++n) {
    const std::string where = entry.record.record_id + " S=" + std::to_string(target_size) + " n=" + std::to_string(n);
    HaystackInstance inst;
    inst.cwe = entry.record.cwe;
    inst.base_record_id = entry.record.record_id;
    inst.target_size = target_size;
    inst.position = n;
    inst.block_offset = kCellWidth * (n - 1);
    inst.core_line = block.core_line;
    inst.block_size = block.size();

    try {
      // Before-segment: never overshoot, so newline filler can land the block
      // exactly on its grid offset.
      const PackResult before = pack_padding_window(pool, inst.block_offset, 0, tolerance);
      std::vector<bool> used(pool.size(), false);
      for (std::size_t i : before.selected) {
        used[i] = true;
        inst.before_units.push_back(pool[i].id);
        inst.content += pool[i].text;
      }
      inst.filler = inst.block_offset - before.achieved;
      inst.content.append(inst.filler, '\n');
      inst.content += block.text;
      inst.core_offset = inst.block_offset + block.core_offset;

      std::vector<std::size_t> rest;
      std::vector<std::size_t> rest_sizes;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        rest.push_back(i);
        rest_sizes.push_back(pool[i].size());
      }
      const PackResult after = pack_sizes(rest_sizes, target_size - kCellWidth * n, tolerance, tolerance);
      for (std::size_t k : after.selected) {
        inst.after_units.push_back(pool[rest[k]].id);
        inst.content += pool[rest[k]].text;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InfeasiblePadding) throw;
      fail(ErrorKind::InfeasiblePadding, where + ": " + e.detail());
    }
    out.push_back(std::move(inst));
  }
  return out;
}

PackResult pack_padding_window(std::span<const CodeUnit> units, std::size_t capacity, std::size_t max_over,
                               std::size_t max_under) {
  std::vector<std::size_t> sizes;
  sizes.reserve(units.size());
  for (const auto& u : units) sizes.push_back(u.size());
  return pack_sizes(sizes, capacity, max_over, max_under);
}

std::vector<const corpus::Entry*> select_records(std::vector<const corpus::Entry*> entries, std::size_t count) {
  std::vector<double> sizes;
  for (const auto* e : entries) sizes.push_back(static_cast<double>(e->record.pre_file.size()));
  const double mid = corpus::median(sizes);
  std::stable_sort(entries.begin(), entries.end(), [mid](const corpus::Entry* a, const corpus::Entry* b) {
    const double da = std::abs(static_cast<double>(a->record.pre_file.size()) - mid);
    const double db = std::abs(static_cast<double>(b->record.pre_file.size()) - mid);
    if (da != db) return da < db;
    return a->record.record_id < b->record.record_id;
  });
  if (entries.size() > count) entries.resize(count);
  return entries;
}

std::vector<HaystackScore> score_run(std::span<const InstanceOutcome> outcomes, std::span<const std::size_t> sizes) {
  using Cell = std::tuple<std::string, corpus::CweId, std::size_t, std::size_t>;
  struct RunSum {
    double sum = 0;
    std::size_t count = 0;
  };
  std::map<Cell, std::map<std::size_t, RunSum>> cells;
  std::map<std::pair<std::string, corpus::CweId>, bool> series;
  for (const auto& o : outcomes) {
    auto& r = cells[{o.model, o.cwe, o.target_size, o.position}][o.run];
    r.sum += o.score();
    ++r.count;
    series[{o.model, o.cwe}] = true;
  }
  std::vector<HaystackScore> out;
  for (const auto& [key, _] : series) {
    const auto& [model, cwe] = key;
    for (std::size_t s : sizes) {
      for (std::size_t n = 1; n <= s / kCellWidth; ++n) {
        auto it = cells.find({model, cwe, s, n});
        if (it == cells.end()) {
          fail(ErrorKind::MissingCell, model + " " + cwe.str() + ": no outcome for S=" + std::to_string(s) +
                                           " n=" + std::to_string(n));
        }
        HaystackScore score{model, cwe, s, n, 0.0, it->second.size(), 0};
        for (const auto& [run, r] : it->second) {
          score.mean_score += r.sum / static_cast<double>(r.count);
          score.instances = std::max(score.instances, r.count);
        }
        score.mean_score /= static_cast<double>(it->second.size());
        out.push_back(score);
      }
    }
  }
  return out;
}

std::optional<std::size_t> locate_line(std::string_view content, std::string_view reported) {
  const std::string wanted = probe::normalize_line(reported);
  if (wanted.empty()) return std::nullopt;
  const auto lines = text::split_lines(content);
  for (const auto& l : lines) {
    if (probe::normalize_line(l.text) == wanted) return l.offset;
  }
  for (const auto& l : lines) {
    const std::string have = probe::normalize_line(l.text);
    if (!have.empty() && probe::lines_match(wanted, have)) return l.offset;
  }
  return std::nullopt;
}

PositionHistogram wrong_position_distribution(std::span<const InstanceOutcome> outcomes, const ContentLookup& content,
                                              std::size_t bucket_width) {
  PositionHistogram h;
  h.bucket_width = bucket_width;
  for (const auto& o : outcomes) {
    const auto& r = o.outcome.response;
    if (r.verdict != probe::Verdict::Yes || o.outcome.classification == probe::Classification::TP) continue;
    const auto candidates = r.candidate_lines();
    if (candidates.empty()) continue;
    const auto at = locate_line(content(o), candidates.front());
    if (at) {
      ++h.buckets[o.target_size][*at / bucket_width * bucket_width];
    } else {
      ++h.not_in_file[o.target_size];
    }
  }
  return h;
}

}  // namespace vulnloc::haystack
