#include "idbg/statistics.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "idbg/errors.hpp"
#include "idbg/escape.hpp"

namespace idbg {

namespace {

std::string render_display_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string render_exact(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::size_t line_no) {
  double value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number: '" + std::string(text) + "'", line_no);
  }
  return value;
}

std::uint64_t parse_count(std::string_view text, std::size_t line_no) {
  std::uint64_t value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad count: '" + std::string(text) + "'", line_no);
  }
  return value;
}

std::string report_line(const StatisticState& s) {
  std::string line;
  line += s.descriptor.id;
  line += ": ";
  line += render_display_value(s.value);
  line += ' ';
  line += s.descriptor.unit;
  line += " (updates: ";
  line += std::to_string(s.update_count);
  line += ") — ";
  line += s.descriptor.description;
  return line;
}

}  // namespace

StatisticsRegistry::StatisticsRegistry(StatisticsRegistry&& other) noexcept {
  std::lock_guard<std::mutex> lock(other.mutex_);
  stats_ = std::move(other.stats_);
}

StatisticsRegistry& StatisticsRegistry::operator=(
    StatisticsRegistry&& other) noexcept {
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    stats_ = std::move(other.stats_);
  }
  return *this;
}

void StatisticsRegistry::define(StatisticDescriptor d) {
  if (d.id.empty()) {
    throw UsageError("statistic id must be non-empty");
  }
  if (d.scale == 0.0 || !std::isfinite(d.scale)) {
    throw UsageError("statistic scale must be finite and nonzero: " + d.id);
  }
  if (!std::isfinite(d.initial_value) || !std::isfinite(d.default_increment) ||
      !std::isfinite(d.default_decrement)) {
    throw UsageError("statistic defaults must be finite: " + d.id);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  std::string key = d.id;
  double initial = d.initial_value;
  auto [it, inserted] =
      stats_.emplace(std::move(key), StatisticState{std::move(d), initial, 0});
  if (!inserted) {
    throw UsageError("statistic already defined: " + it->first);
  }
}

void StatisticsRegistry::restore(StatisticState state) {
  define(state.descriptor);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = stats_.find(state.descriptor.id);
  it->second.value = state.value;
  it->second.update_count = state.update_count;
}

bool StatisticsRegistry::defined(std::string_view id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_.find(id) != stats_.end();
}

namespace {

StatisticState& find_stat(std::map<std::string, StatisticState, std::less<>>& stats,
                          std::string_view id) {
  auto it = stats.find(id);
  if (it == stats.end()) {
    throw UsageError("unknown statistic: " + std::string(id));
  }
  return it->second;
}

const StatisticState& find_stat(
    const std::map<std::string, StatisticState, std::less<>>& stats,
    std::string_view id) {
  auto it = stats.find(id);
  if (it == stats.end()) {
    throw UsageError("unknown statistic: " + std::string(id));
  }
  return it->second;
}

}  // namespace

double StatisticsRegistry::increment(std::string_view id) {
  std::lock_guard<std::mutex> lock(mutex_);
  StatisticState& s = find_stat(stats_, id);
  s.value += s.descriptor.default_increment * s.descriptor.scale;
  ++s.update_count;
  return s.value;
}

double StatisticsRegistry::decrement(std::string_view id) {
  std::lock_guard<std::mutex> lock(mutex_);
  StatisticState& s = find_stat(stats_, id);
  s.value -= s.descriptor.default_decrement * s.descriptor.scale;
  ++s.update_count;
  return s.value;
}

void StatisticsRegistry::set_value(std::string_view id, double v) {
  if (!std::isfinite(v)) {
    throw UsageError("statistic value must be finite");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  find_stat(stats_, id).value = v;
}

void StatisticsRegistry::reset(std::string_view id) {
  std::lock_guard<std::mutex> lock(mutex_);
  StatisticState& s = find_stat(stats_, id);
  s.value = s.descriptor.initial_value;
  s.update_count = 0;
}

double StatisticsRegistry::value(std::string_view id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return find_stat(stats_, id).value;
}

std::uint64_t StatisticsRegistry::update_count(std::string_view id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return find_stat(stats_, id).update_count;
}

StatisticState StatisticsRegistry::state(std::string_view id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return find_stat(stats_, id);
}

std::vector<StatisticState> StatisticsRegistry::states() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<StatisticState> out;
  out.reserve(stats_.size());
  for (const auto& [id, s] : stats_) {
    out.push_back(s);
  }
  return out;
}

std::string StatisticsRegistry::report(std::string_view id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return report_line(find_stat(stats_, id));
}

std::string StatisticsRegistry::report_all() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::string out;
  for (const auto& [id, s] : stats_) {
    out += report_line(s);
    out += '\n';
  }
  return out;
}

std::string save_statistics(const StatisticsRegistry& reg) {
  std::string out(kStatsMagic);
  out += '\n';
  for (const StatisticState& s : reg.states()) {
    const StatisticDescriptor& d = s.descriptor;
    out += escape_field(d.id);
    out += '\t';
    out += escape_field(d.description);
    out += '\t';
    out += escape_field(d.unit);
    out += '\t';
    out += render_exact(d.scale);
    out += '\t';
    out += render_exact(d.initial_value);
    out += '\t';
    out += render_exact(d.default_increment);
    out += '\t';
    out += render_exact(d.default_decrement);
    out += '\t';
    out += render_exact(s.value);
    out += '\t';
    out += std::to_string(s.update_count);
    out += '\n';
  }
  return out;
}

StatisticsRegistry load_statistics(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kStatsMagic) {
    throw ParseError("expected statistics header " + std::string(kStatsMagic), 1);
  }
  StatisticsRegistry reg;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t line_no = i + 1;
    auto fields = split_fields(lines[i], '\t');
    if (fields.size() != 9) {
      throw ParseError("expected 9 statistic fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    StatisticDescriptor d;
    d.id = unescape_field(fields[0], line_no);
    d.description = unescape_field(fields[1], line_no);
    d.unit = unescape_field(fields[2], line_no);
    d.scale = parse_double(fields[3], line_no);
    d.initial_value = parse_double(fields[4], line_no);
    d.default_increment = parse_double(fields[5], line_no);
    d.default_decrement = parse_double(fields[6], line_no);
    StatisticState state;
    state.value = parse_double(fields[7], line_no);
    state.update_count = parse_count(fields[8], line_no);
    if (!std::isfinite(state.value)) {
      throw ParseError("statistic value must be finite", line_no);
    }
    state.descriptor = std::move(d);
    try {
      reg.restore(std::move(state));
    } catch (const UsageError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return reg;
}

}  // namespace idbg
