#include "idbg/event.hpp"

#include <charconv>
#include <chrono>
#include <sstream>
#include <thread>

#include "idbg/errors.hpp"
#include "idbg/escape.hpp"

namespace idbg {

namespace {

constexpr std::size_t kEventFieldCount = 9;

template <typename Int>
Int parse_int(std::string_view text, std::string_view what, std::size_t line_no) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'",
                     line_no);
  }
  return value;
}

}  // namespace

bool MonitorEvent::operator==(const MonitorEvent& other) const {
  return timestamp_us == other.timestamp_us && thread_id == other.thread_id &&
         origin_id == other.origin_id && category == other.category &&
         level_value == other.level_value && level_label == other.level_label &&
         call_site.class_id == other.call_site.class_id &&
         call_site.operation == other.call_site.operation &&
         message == other.message;
}

std::string format_event(const MonitorEvent& e) {
  std::string line;
  line += std::to_string(e.timestamp_us);
  line += '\t';
  line += escape_field(e.origin_id);
  line += '\t';
  line += escape_field(e.thread_id);
  line += '\t';
  line += std::to_string(e.level_value);
  line += '\t';
  line += escape_field(e.level_label);
  line += '\t';
  line += escape_field(e.category);
  line += '\t';
  line += escape_field(e.call_site.class_id);
  line += '\t';
  line += escape_field(e.call_site.operation);
  line += '\t';
  line += escape_field(e.message);
  return line;
}

MonitorEvent parse_event_line(std::string_view line, std::size_t line_no) {
  auto fields = split_fields(line, '\t');
  if (fields.size() != kEventFieldCount) {
    throw ParseError("expected " + std::to_string(kEventFieldCount) +
                         " event fields, got " + std::to_string(fields.size()),
                     line_no);
  }
  MonitorEvent e;
  e.timestamp_us = parse_int<std::int64_t>(fields[0], "timestamp", line_no);
  e.origin_id = unescape_field(fields[1], line_no);
  e.thread_id = unescape_field(fields[2], line_no);
  e.level_value = parse_int<int>(fields[3], "level value", line_no);
  e.level_label = unescape_field(fields[4], line_no);
  e.category = unescape_field(fields[5], line_no);
  e.call_site.class_id = unescape_field(fields[6], line_no);
  e.call_site.operation = unescape_field(fields[7], line_no);
  e.message = unescape_field(fields[8], line_no);
  if (e.call_site.class_id.empty()) {
    throw ParseError("empty class id in event record", line_no);
  }
  return e;
}

std::int64_t now_micros() {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string current_thread_id() {
  std::ostringstream os;
  os << std::this_thread::get_id();
  return os.str();
}

}  // namespace idbg
