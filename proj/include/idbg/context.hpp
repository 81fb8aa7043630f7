#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>

#include "idbg/semantics.hpp"

namespace idbg {

enum class FilterMode { IncludeListed, ExcludeListed };

/// Per-class admission filter, usable additively and reductively.
/// ExcludeListed with an empty set is the wildcard: it admits every class,
/// including classes that have never been seen.
struct ClassFilter {
  FilterMode mode = FilterMode::ExcludeListed;
  std::set<std::string, std::less<>> names;

  bool admits(std::string_view class_id) const;

  void add(std::string_view class_id);     // admit one more class
  void remove(std::string_view class_id);  // stop admitting it
  void add_all();     // wildcard: everything, seen or not
  void remove_all();  // nothing until classes are added back

  bool operator==(const ClassFilter&) const = default;
};

struct CategoryState {
  int level = 0;
  bool enabled = true;

  bool operator==(const CategoryState&) const = default;
};

using CategoryStateMap = std::map<std::string, CategoryState, std::less<>>;

class MonitorContext;
using ContextPtr = std::shared_ptr<MonitorContext>;

/// One execution scope's complete tuning state: enable flag, threshold,
/// per-category states and the class filter. The semantics bundle and the
/// output-channel binding are fixed at construction and have no mutators.
///
/// Contexts are shared mutable state: every mutator and reader is serialized
/// on a per-context lock, so a reader sees either the pre- or post-state of
/// any single mutation and a mutation is visible to all threads before the
/// mutator returns. admits() evaluates the whole emission decision under one
/// lock so a decision is consistent with a single point in time.
class MonitorContext {
 public:
  /// UsageError when validate_semantics(semantics) reports violations.
  MonitorContext(Semantics semantics, std::string channel_id);

  const std::string& context_id() const noexcept { return context_id_; }
  const Semantics& semantics() const noexcept { return semantics_; }
  const std::string& channel_id() const noexcept { return channel_id_; }

  bool enabled() const;
  void set_enabled(bool on);

  Level threshold() const;
  void set_threshold(Level level);      // UsageError outside semantics range
  void set_threshold_value(int value);  // same, from a raw value

  void enable_category(std::string_view name);   // UsageError when unknown
  void disable_category(std::string_view name);  // UsageError when unknown
  void add_category(std::string_view name, Level level);  // UsageError on duplicate
  /// Installs or replaces a category entry wholesale; persistence surface.
  void set_category_state(std::string_view name, int level, bool enabled);
  bool has_category(std::string_view name) const;
  bool category_enabled(std::string_view name) const;  // UsageError when unknown
  CategoryStateMap category_states() const;            // snapshot

  void class_filter_add(std::string_view class_id);
  void class_filter_remove(std::string_view class_id);
  void class_filter_add_all();
  void class_filter_remove_all();
  bool class_filter_admits(std::string_view class_id) const;
  ClassFilter class_filter() const;  // snapshot

  /// Point-in-time emission decision for this context alone: enabled, class
  /// filter, category state (unknown category never passes) and
  /// level >= max(threshold, category level).
  bool admits(std::string_view class_id, std::string_view category,
              int level_value) const;

  /// Assertion activity for a call site: enabled and class filter only;
  /// assertions bypass threshold and category tuning.
  bool checks_active(std::string_view class_id) const;

  /// Deep copy under a fresh context id; the copies tune independently.
  ContextPtr clone() const;

 private:
  std::string context_id_;
  Semantics semantics_;
  std::string channel_id_;

  mutable std::mutex mutex_;
  bool enabled_ = true;
  int threshold_;
  CategoryStateMap categories_;
  ClassFilter filter_;
};

/// Fresh context over validated semantics: enabled, threshold at NOTICE,
/// every semantics category enabled, wildcard class filter.
ContextPtr make_context(Semantics semantics, std::string channel_id);

}  // namespace idbg
