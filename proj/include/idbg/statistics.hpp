#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace idbg {

/// Definition of one statistic: identity, display unit, the scale applied to
/// every default increment/decrement, and the defaults themselves.
struct StatisticDescriptor {
  std::string id;
  std::string description;
  std::string unit;  // e.g. "messages per second"
  double scale = 1.0;
  double initial_value = 0.0;  // display units
  double default_increment = 1.0;
  double default_decrement = 1.0;

  bool operator==(const StatisticDescriptor&) const = default;
};

struct StatisticState {
  StatisticDescriptor descriptor;
  double value = 0.0;  // display units
  std::uint64_t update_count = 0;

  bool operator==(const StatisticState&) const = default;
};

/// Registry of named statistics. Values live in display units: each default
/// increment moves the value by increment * scale, so a descriptor with
/// increment 0.001 and scale 1000 gains 1 display unit per increment.
/// Mutators are atomic per statistic.
class StatisticsRegistry {
 public:
  StatisticsRegistry() = default;
  StatisticsRegistry(StatisticsRegistry&& other) noexcept;
  StatisticsRegistry& operator=(StatisticsRegistry&& other) noexcept;

  /// UsageError on duplicate or empty id, zero or non-finite scale, or
  /// non-finite numeric defaults.
  void define(StatisticDescriptor d);
  /// define() plus value and update count, wholesale; persistence surface.
  void restore(StatisticState state);
  bool defined(std::string_view id) const;

  double increment(std::string_view id);  // returns the new value
  double decrement(std::string_view id);
  void set_value(std::string_view id, double v);  // UsageError when not finite
  /// Back to initial_value with update_count zeroed.
  void reset(std::string_view id);

  double value(std::string_view id) const;
  std::uint64_t update_count(std::string_view id) const;
  StatisticState state(std::string_view id) const;
  std::vector<StatisticState> states() const;  // sorted by id

  /// `<id>: <value> <unit> (updates: <n>) — <description>`, value rendered
  /// with up to 6 significant digits, trailing zeros trimmed.
  std::string report(std::string_view id) const;
  /// One report line per statistic in lexicographic id order.
  std::string report_all() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, StatisticState, std::less<>> stats_;
};

/// Magic first line of statistics snapshot files.
inline constexpr std::string_view kStatsMagic = "IDBGSTAT/1";

/// Tab-separated snapshot: one descriptor+value record per statistic, field
/// escaping as in event lines, numbers rendered round-trip exact.
std::string save_statistics(const StatisticsRegistry& reg);

/// Inverse of save_statistics; ParseError on malformed input.
StatisticsRegistry load_statistics(std::string_view text);

}  // namespace idbg
