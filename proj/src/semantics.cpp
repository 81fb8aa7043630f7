#include "idbg/semantics.hpp"

#include <atomic>
#include <cctype>

#include "idbg/errors.hpp"

namespace idbg {

namespace {

std::uint64_t next_semantics_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

bool has_whitespace(std::string_view s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::strong_ordering compare_levels(Level a, Level b) {
  if (a.owner_id() != b.owner_id()) {
    throw UsageError("cannot compare levels from different semantics");
  }
  return a.value() <=> b.value();
}

Semantics::Semantics(int min_level, int max_level, NameValueMap named_levels,
                     NameValueMap categories, TemplateMap message_templates,
                     std::string locale_tag)
    : min_level_(min_level),
      max_level_(max_level),
      named_levels_(std::move(named_levels)),
      categories_(std::move(categories)),
      templates_(std::move(message_templates)),
      locale_tag_(std::move(locale_tag)),
      id_(next_semantics_id()) {}

bool Semantics::in_range(int value) const noexcept {
  return value >= min_level_ && value <= max_level_;
}

Level Semantics::level(int value) const {
  if (!in_range(value)) {
    throw UsageError("level " + std::to_string(value) + " outside range [" +
                     std::to_string(min_level_) + ", " +
                     std::to_string(max_level_) + "]");
  }
  return Level(value, id_);
}

Level Semantics::named_level(std::string_view name) const {
  auto it = named_levels_.find(name);
  if (it == named_levels_.end()) {
    throw UsageError("unknown level name: " + std::string(name));
  }
  return Level(it->second, id_);
}

std::optional<std::string> Semantics::name_of(int value) const {
  for (const auto& [name, level] : named_levels_) {
    if (level == value) {
      return name;
    }
  }
  return std::nullopt;
}

std::string Semantics::level_label(int value) const {
  if (auto name = name_of(value)) {
    return *name;
  }
  return "L" + std::to_string(value);
}

std::optional<std::string> Semantics::render_template(
    std::string_view key, std::span<const std::string> args) const {
  auto it = templates_.find(key);
  if (it == templates_.end()) {
    return std::nullopt;
  }
  const std::string& tmpl = it->second;
  std::string out;
  out.reserve(tmpl.size());
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    // Positional placeholders {0}..{9}; anything else passes through.
    if (tmpl[i] == '{' && i + 2 < tmpl.size() && tmpl[i + 2] == '}' &&
        tmpl[i + 1] >= '0' && tmpl[i + 1] <= '9') {
      std::size_t index = static_cast<std::size_t>(tmpl[i + 1] - '0');
      if (index < args.size()) {
        out += args[index];
      }
      i += 2;
      continue;
    }
    out += tmpl[i];
  }
  return out;
}

bool Semantics::operator==(const Semantics& other) const {
  return min_level_ == other.min_level_ && max_level_ == other.max_level_ &&
         named_levels_ == other.named_levels_ &&
         categories_ == other.categories_ && templates_ == other.templates_ &&
         locale_tag_ == other.locale_tag_;
}

ValidationResult validate_semantics(const Semantics& s) {
  ValidationResult result;
  auto violation = [&result](std::string text) {
    result.violations.push_back(std::move(text));
  };

  if (s.min_level() >= s.max_level()) {
    violation("level range empty: min " + std::to_string(s.min_level()) +
              " must be below max " + std::to_string(s.max_level()));
  }
  for (std::string_view required :
       {kLevelNotice, kLevelWarning, kLevelError, kLevelCritical, kLevelFailure}) {
    if (!s.named_levels().contains(required)) {
      violation("required name absent: " + std::string(required));
    }
  }
  for (const auto& [name, value] : s.named_levels()) {
    if (!s.in_range(value)) {
      violation("named level out of range: " + name + " = " +
                std::to_string(value));
    }
  }
  for (const auto& [name, value] : s.categories()) {
    if (name.empty()) {
      violation("category name empty");
    } else if (has_whitespace(name)) {
      violation("category name contains whitespace: " + name);
    }
    if (!s.in_range(value)) {
      violation("category level out of range: " + name + " = " +
                std::to_string(value));
    }
  }
  return result;
}

Semantics make_default_semantics() {
  NameValueMap levels{
      {std::string(kLevelNotice), 1},   {std::string(kLevelWarning), 3},
      {std::string(kLevelError), 5},    {std::string(kLevelCritical), 7},
      {std::string(kLevelFailure), 9},
  };
  NameValueMap categories{
      {std::string(kCategoryNetwork), 1},
      {std::string(kCategoryGarbageCollector), 1},
      {std::string(kCategoryAssertion), 1},
  };
  TemplateMap templates{
      {std::string(kTemplateAssertionFailed), "Assertion failed: {0}"},
  };
  return Semantics(1, 9, std::move(levels), std::move(categories),
                   std::move(templates), "en");
}

Semantics make_wide_semantics() {
  NameValueMap levels{
      {std::string(kLevelNotice), 1},   {std::string(kLevelWarning), 25},
      {std::string(kLevelError), 50},   {std::string(kLevelCritical), 75},
      {std::string(kLevelFailure), 100},
  };
  NameValueMap categories{
      {std::string(kCategoryNetwork), 1},
      {std::string(kCategoryGarbageCollector), 1},
      {std::string(kCategoryAssertion), 1},
  };
  TemplateMap templates{
      {std::string(kTemplateAssertionFailed), "Assertion failed: {0}"},
  };
  return Semantics(1, 100, std::move(levels), std::move(categories),
                   std::move(templates), "en");
}

}  // namespace idbg
