#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idbg {

class Semantics;

/// An integer priority handle tied to the Semantics that minted it. Levels
/// from one Semantics form a total order under integer comparison.
class Level {
 public:
  int value() const noexcept { return value_; }
  std::uint64_t owner_id() const noexcept { return owner_; }

 private:
  friend class Semantics;
  Level(int value, std::uint64_t owner) : value_(value), owner_(owner) {}

  int value_;
  std::uint64_t owner_;
};

/// Total order on levels of one Semantics. Comparing levels minted by
/// different Semantics instances is a UsageError.
std::strong_ordering compare_levels(Level a, Level b);

// Level names every valid Semantics must define.
inline constexpr std::string_view kLevelNotice = "NOTICE";
inline constexpr std::string_view kLevelWarning = "WARNING";
inline constexpr std::string_view kLevelError = "ERROR";
inline constexpr std::string_view kLevelCritical = "CRITICAL";
inline constexpr std::string_view kLevelFailure = "FAILURE";

// Base categories shipped with the bundled semantics sets.
inline constexpr std::string_view kCategoryNetwork = "NETWORK";
inline constexpr std::string_view kCategoryGarbageCollector = "GARBAGE_COLLECTOR";
inline constexpr std::string_view kCategoryAssertion = "ASSERTION";

/// Template key used when composing assertion-failure messages.
inline constexpr std::string_view kTemplateAssertionFailed = "assertion.failed";

using NameValueMap = std::map<std::string, int, std::less<>>;
using TemplateMap = std::map<std::string, std::string, std::less<>>;

/// The replaceable constants bundle of the framework: level range, named
/// levels, base categories with their levels, and localized message
/// templates. Values are immutable once constructed and freely shareable
/// between threads; a context's semantics never changes after construction.
///
/// Construction does not validate; validate_semantics() reports violations
/// as data so broken bundles can be inspected rather than thrown away.
class Semantics {
 public:
  Semantics(int min_level, int max_level, NameValueMap named_levels,
            NameValueMap categories, TemplateMap message_templates = {},
            std::string locale_tag = "en");

  int min_level() const noexcept { return min_level_; }
  int max_level() const noexcept { return max_level_; }
  const NameValueMap& named_levels() const noexcept { return named_levels_; }
  const NameValueMap& categories() const noexcept { return categories_; }
  const TemplateMap& message_templates() const noexcept { return templates_; }
  const std::string& locale_tag() const noexcept { return locale_tag_; }

  /// Identity used to detect cross-semantics level comparisons. Copies keep
  /// their source's id; only fresh constructions mint a new one.
  std::uint64_t id() const noexcept { return id_; }

  bool in_range(int value) const noexcept;

  /// Mints a Level; UsageError when `value` is outside [min, max].
  Level level(int value) const;

  /// Level of a named entry; UsageError when the name is not defined.
  Level named_level(std::string_view name) const;

  /// Reverse lookup: lexicographically first name mapped to `value`.
  std::optional<std::string> name_of(int value) const;

  /// Display label for a level value: its name when one exists, else "L<value>".
  std::string level_label(int value) const;

  /// Renders template `key`, substituting positional {0}..{9} placeholders
  /// from `args`. Empty result when the key is not defined.
  std::optional<std::string> render_template(std::string_view key,
                                             std::span<const std::string> args) const;

  /// Field equality; the mint id does not participate.
  bool operator==(const Semantics& other) const;

 private:
  int min_level_;
  int max_level_;
  NameValueMap named_levels_;
  NameValueMap categories_;
  TemplateMap templates_;
  std::string locale_tag_;
  std::uint64_t id_;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks every Semantics invariant: min < max, the five required names
/// present, every named level and category level in range, category names
/// non-empty and free of whitespace. Violations are data, not errors.
ValidationResult validate_semantics(const Semantics& s);

/// Levels 1..9 with NOTICE(1), WARNING(3), ERROR(5), CRITICAL(7), FAILURE(9)
/// and the base categories NETWORK, GARBAGE_COLLECTOR, ASSERTION at NOTICE.
Semantics make_default_semantics();

/// A 1..100 bundle demonstrating semantics replacement: the five required
/// names are spread evenly across the range (1, 25, 50, 75, 100), base
/// categories at NOTICE.
Semantics make_wide_semantics();

}  // namespace idbg
