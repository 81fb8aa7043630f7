#include "idbg/context.hpp"

#include <atomic>

#include "idbg/errors.hpp"

namespace idbg {

namespace {

std::string next_context_id() {
  static std::atomic<std::uint64_t> counter{0};
  return "ctx-" + std::to_string(++counter);
}

}  // namespace

bool ClassFilter::admits(std::string_view class_id) const {
  bool listed = names.find(class_id) != names.end();
  return mode == FilterMode::IncludeListed ? listed : !listed;
}

void ClassFilter::add(std::string_view class_id) {
  if (mode == FilterMode::IncludeListed) {
    names.insert(std::string(class_id));
  } else {
    auto it = names.find(class_id);
    if (it != names.end()) {
      names.erase(it);
    }
  }
}

void ClassFilter::remove(std::string_view class_id) {
  if (mode == FilterMode::IncludeListed) {
    auto it = names.find(class_id);
    if (it != names.end()) {
      names.erase(it);
    }
  } else {
    names.insert(std::string(class_id));
  }
}

void ClassFilter::add_all() {
  mode = FilterMode::ExcludeListed;
  names.clear();
}

void ClassFilter::remove_all() {
  mode = FilterMode::IncludeListed;
  names.clear();
}

MonitorContext::MonitorContext(Semantics semantics, std::string channel_id)
    : context_id_(next_context_id()),
      semantics_(std::move(semantics)),
      channel_id_(std::move(channel_id)) {
  auto validation = validate_semantics(semantics_);
  if (!validation.ok()) {
    std::string detail = validation.violations.front();
    throw UsageError("invalid semantics: " + detail);
  }
  threshold_ = semantics_.named_levels().find(kLevelNotice)->second;
  for (const auto& [name, level] : semantics_.categories()) {
    categories_[name] = CategoryState{level, true};
  }
}

bool MonitorContext::enabled() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return enabled_;
}

void MonitorContext::set_enabled(bool on) {
  std::lock_guard<std::mutex> lock(mutex_);
  enabled_ = on;
}

Level MonitorContext::threshold() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return semantics_.level(threshold_);
}

void MonitorContext::set_threshold(Level level) {
  set_threshold_value(level.value());
}

void MonitorContext::set_threshold_value(int value) {
  if (!semantics_.in_range(value)) {
    throw UsageError("threshold " + std::to_string(value) +
                     " outside semantics range [" +
                     std::to_string(semantics_.min_level()) + ", " +
                     std::to_string(semantics_.max_level()) + "]");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  threshold_ = value;
}

void MonitorContext::enable_category(std::string_view name) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = categories_.find(name);
  if (it == categories_.end()) {
    throw UsageError("unknown category: " + std::string(name));
  }
  it->second.enabled = true;
}

void MonitorContext::disable_category(std::string_view name) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = categories_.find(name);
  if (it == categories_.end()) {
    throw UsageError("unknown category: " + std::string(name));
  }
  it->second.enabled = false;
}

void MonitorContext::add_category(std::string_view name, Level level) {
  if (!semantics_.in_range(level.value())) {
    throw UsageError("category level out of range");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (categories_.find(name) != categories_.end()) {
    throw UsageError("category already defined: " + std::string(name));
  }
  categories_[std::string(name)] = CategoryState{level.value(), true};
}

void MonitorContext::set_category_state(std::string_view name, int level,
                                        bool enabled) {
  if (!semantics_.in_range(level)) {
    throw UsageError("category level out of range");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  categories_[std::string(name)] = CategoryState{level, enabled};
}

bool MonitorContext::has_category(std::string_view name) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return categories_.find(name) != categories_.end();
}

bool MonitorContext::category_enabled(std::string_view name) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = categories_.find(name);
  if (it == categories_.end()) {
    throw UsageError("unknown category: " + std::string(name));
  }
  return it->second.enabled;
}

CategoryStateMap MonitorContext::category_states() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return categories_;
}

void MonitorContext::class_filter_add(std::string_view class_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  filter_.add(class_id);
}

void MonitorContext::class_filter_remove(std::string_view class_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  filter_.remove(class_id);
}

void MonitorContext::class_filter_add_all() {
  std::lock_guard<std::mutex> lock(mutex_);
  filter_.add_all();
}

void MonitorContext::class_filter_remove_all() {
  std::lock_guard<std::mutex> lock(mutex_);
  filter_.remove_all();
}

bool MonitorContext::class_filter_admits(std::string_view class_id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return filter_.admits(class_id);
}

ClassFilter MonitorContext::class_filter() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return filter_;
}

bool MonitorContext::admits(std::string_view class_id, std::string_view category,
                            int level_value) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!enabled_) {
    return false;
  }
  if (!filter_.admits(class_id)) {
    return false;
  }
  auto it = categories_.find(category);
  if (it == categories_.end() || !it->second.enabled) {
    return false;
  }
  int floor = std::max(threshold_, it->second.level);
  return level_value >= floor;
}

bool MonitorContext::checks_active(std::string_view class_id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return enabled_ && filter_.admits(class_id);
}

ContextPtr MonitorContext::clone() const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto copy = std::make_shared<MonitorContext>(semantics_, channel_id_);
  copy->enabled_ = enabled_;
  copy->threshold_ = threshold_;
  copy->categories_ = categories_;
  copy->filter_ = filter_;
  return copy;
}

ContextPtr make_context(Semantics semantics, std::string channel_id) {
  return std::make_shared<MonitorContext>(std::move(semantics),
                                          std::move(channel_id));
}

}  // namespace idbg
