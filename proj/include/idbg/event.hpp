#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace idbg {

/// One frame of an explicit call-site stack.
struct CallSiteFrame {
  std::string class_id;  // non-empty
  std::string operation;
  std::optional<std::string> location;  // "file:line" when known

  bool operator==(const CallSiteFrame&) const = default;
};

/// A single logging or assertion occurrence.
///
/// Record identity (operator== and the wire line) covers the nine persisted
/// fields. `sequence` is per-channel delivery stamping and
/// `call_site.location` is diagnostic-only; format_event writes neither.
struct MonitorEvent {
  std::uint64_t sequence = 0;
  std::int64_t timestamp_us = 0;  // microseconds since epoch
  std::string thread_id;
  std::string origin_id;
  std::string category;
  int level_value = 0;
  std::string level_label;  // level name, or "L<value>"
  CallSiteFrame call_site;
  std::string message;

  bool operator==(const MonitorEvent& other) const;
};

/// Magic first line of debug-log files; event records follow.
inline constexpr std::string_view kLogMagic = "IDBGLOG/1";

/// Canonical tab-separated record: timestamp, origin, thread, level value,
/// level label, category, class, operation, message. Fields escape tab,
/// newline and backslash; no trailing newline.
std::string format_event(const MonitorEvent& e);

/// Inverse of format_event. ParseError on anything but nine well-formed
/// fields; `line_no` is only used for error positions.
MonitorEvent parse_event_line(std::string_view line, std::size_t line_no = 0);

std::int64_t now_micros();

/// Printable identity of the calling thread.
std::string current_thread_id();

}  // namespace idbg
