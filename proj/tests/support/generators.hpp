#pragma once

// Randomized inputs shared by the property tests and the acceptance suite.
// Everything is driven by a caller-seeded engine so failures reproduce.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "idbg/context.hpp"
#include "idbg/curried_stack.hpp"
#include "idbg/debug_log.hpp"
#include "idbg/event.hpp"
#include "idbg/semantics.hpp"

namespace idbg::testsupport {

using Rng = std::mt19937;

inline int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool random_bool(Rng& rng) { return random_int(rng, 0, 1) == 1; }

/// Arbitrary text including the characters the wire formats escape.
inline std::string random_text(Rng& rng, int min_len, int max_len) {
  static constexpr char kAlphabet[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
      " \t\n\\{}()=:/.,-_";
  int len = random_int(rng, min_len, max_len);
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out += kAlphabet[static_cast<std::size_t>(
        random_int(rng, 0, sizeof(kAlphabet) - 2))];
  }
  return out;
}

/// Uppercase identifier, the category naming convention.
inline std::string random_identifier(Rng& rng, int min_len = 1, int max_len = 10) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789";
  int len = random_int(rng, min_len, max_len);
  std::string out;
  for (int i = 0; i < len; ++i) {
    // Leading digit is fine for our formats; keep it simple.
    out += kAlphabet[static_cast<std::size_t>(
        random_int(rng, 0, sizeof(kAlphabet) - 2))];
  }
  return out;
}

inline std::string random_nonempty_text(Rng& rng, int max_len = 12) {
  return random_text(rng, 1, max_len);
}

/// A valid semantics bundle with a random range, random extra names and
/// categories, and occasional templates.
inline Semantics random_semantics(Rng& rng) {
  int min_level = random_int(rng, -5, 2);
  int max_level = min_level + random_int(rng, 4, 120);
  auto pick_level = [&] { return random_int(rng, min_level, max_level); };

  NameValueMap named{
      {std::string(kLevelNotice), pick_level()},
      {std::string(kLevelWarning), pick_level()},
      {std::string(kLevelError), pick_level()},
      {std::string(kLevelCritical), pick_level()},
      {std::string(kLevelFailure), pick_level()},
  };
  for (int i = random_int(rng, 0, 3); i > 0; --i) {
    named.emplace(random_identifier(rng, 2, 12), pick_level());
  }

  NameValueMap categories;
  for (int i = random_int(rng, 0, 5); i > 0; --i) {
    categories.emplace(random_identifier(rng, 1, 12), pick_level());
  }

  TemplateMap templates;
  for (int i = random_int(rng, 0, 3); i > 0; --i) {
    templates.emplace(random_identifier(rng, 1, 8), random_text(rng, 0, 20));
  }

  return Semantics(min_level, max_level, std::move(named), std::move(categories),
                   std::move(templates), random_text(rng, 1, 6));
}

/// A context with randomized tuning over random_semantics.
inline ContextPtr random_context(Rng& rng) {
  Semantics semantics = random_semantics(rng);
  int min_level = semantics.min_level();
  int max_level = semantics.max_level();
  ContextPtr ctx = make_context(semantics, random_text(rng, 0, 10));

  ctx->set_enabled(random_bool(rng));
  ctx->set_threshold_value(random_int(rng, min_level, max_level));

  for (int i = random_int(rng, 0, 3); i > 0; --i) {
    std::string name = random_identifier(rng, 1, 12);
    if (!ctx->has_category(name)) {
      ctx->add_category(name, semantics.level(random_int(rng, min_level, max_level)));
    }
  }
  for (const auto& [name, state] : ctx->category_states()) {
    if (random_bool(rng)) {
      ctx->disable_category(name);
    }
  }

  if (random_bool(rng)) {
    ctx->class_filter_remove_all();
    for (int i = random_int(rng, 0, 4); i > 0; --i) {
      ctx->class_filter_add(random_text(rng, 1, 10));
    }
  } else {
    ctx->class_filter_add_all();
    for (int i = random_int(rng, 0, 4); i > 0; --i) {
      ctx->class_filter_remove(random_text(rng, 1, 10));
    }
  }
  return ctx;
}

inline CallSiteFrame random_frame(Rng& rng) {
  CallSiteFrame frame;
  frame.class_id = random_nonempty_text(rng);
  frame.operation = random_text(rng, 0, 10);
  if (random_bool(rng)) {
    // "-" alone means "no location" on the wire; avoid generating it.
    std::string location = random_nonempty_text(rng);
    if (location != "-") {
      frame.location = std::move(location);
    }
  }
  return frame;
}

inline MonitorEvent random_event(Rng& rng, std::int64_t max_timestamp = 1'000) {
  MonitorEvent e;
  e.timestamp_us = random_int(rng, 0, static_cast<int>(max_timestamp));
  e.thread_id = random_text(rng, 0, 8);
  e.origin_id = random_text(rng, 0, 8);
  e.category = random_identifier(rng, 1, 10);
  e.level_value = random_int(rng, -3, 120);
  e.level_label = random_text(rng, 1, 8);
  e.call_site.class_id = random_nonempty_text(rng);
  e.call_site.operation = random_text(rng, 0, 10);
  e.message = random_text(rng, 0, 24);
  return e;
}

/// Events get positional sequence numbers, matching what import_log assigns,
/// so round-trip comparisons are exact.
inline DebugLog random_log(Rng& rng, int max_events = 12,
                           std::int64_t max_timestamp = 1'000) {
  DebugLog log;
  log.log_id = random_text(rng, 0, 10);
  log.origin_id = random_text(rng, 0, 10);
  int count = random_int(rng, 0, max_events);
  for (int i = 0; i < count; ++i) {
    MonitorEvent e = random_event(rng, max_timestamp);
    e.sequence = static_cast<std::uint64_t>(i) + 1;
    log.events.push_back(std::move(e));
  }
  return log;
}

inline StackSegment random_segment(Rng& rng, int max_frames = 8) {
  StackSegment segment;
  segment.origin_id = random_nonempty_text(rng);
  segment.thread_id = random_text(rng, 0, 8);
  segment.captured_at_us = random_int(rng, 0, 1'000'000);
  int frames = random_int(rng, 0, max_frames);
  for (int i = 0; i < frames; ++i) {
    segment.frames.push_back(random_frame(rng));
  }
  return segment;
}

inline CurriedStack random_curried(Rng& rng, int max_segments = 4,
                                   int max_frames = 8) {
  CurriedStack stack;
  int segments = random_int(rng, 0, max_segments);
  for (int i = 0; i < segments; ++i) {
    stack.segments.push_back(random_segment(rng, max_frames));
  }
  return stack;
}

/// Tuning-state equality between contexts, context id aside.
inline bool contexts_equivalent(const MonitorContext& a, const MonitorContext& b) {
  return a.semantics() == b.semantics() && a.channel_id() == b.channel_id() &&
         a.enabled() == b.enabled() &&
         a.threshold().value() == b.threshold().value() &&
         a.category_states() == b.category_states() &&
         a.class_filter() == b.class_filter();
}

/// Fresh scratch directory, removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("idbg_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(++counter));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  std::filesystem::path path(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace idbg::testsupport
