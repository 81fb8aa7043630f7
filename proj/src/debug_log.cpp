#include "idbg/debug_log.hpp"

#include <algorithm>
#include <tuple>

#include "idbg/errors.hpp"
#include "idbg/escape.hpp"

namespace idbg {

namespace {

constexpr std::string_view kLogMetaTag = "LOG";

}  // namespace

RecordingChannel::RecordingChannel(std::string log_id, std::string origin_id)
    : OutputChannel(log_id, ChannelKind::Recording),
      origin_id_(std::move(origin_id)) {
  log_.log_id = std::move(log_id);
  log_.origin_id = origin_id_;
}

DebugLog RecordingChannel::log() const {
  std::lock_guard<std::mutex> lock(log_mutex_);
  return log_;
}

std::size_t RecordingChannel::size() const {
  std::lock_guard<std::mutex> lock(log_mutex_);
  return log_.events.size();
}

void RecordingChannel::write(const MonitorEvent& e) {
  std::lock_guard<std::mutex> lock(log_mutex_);
  log_.events.push_back(e);
  log_.events.back().origin_id = origin_id_;
}

std::shared_ptr<RecordingChannel> make_recording_channel(std::string log_id,
                                                         std::string origin_id) {
  return std::make_shared<RecordingChannel>(std::move(log_id),
                                            std::move(origin_id));
}

std::string export_log(const DebugLog& l) {
  std::string out(kLogMagic);
  out += '\n';
  out += kLogMetaTag;
  out += '\t';
  out += escape_field(l.log_id);
  out += '\t';
  out += escape_field(l.origin_id);
  out += '\n';
  for (const MonitorEvent& e : l.events) {
    out += format_event(e);
    out += '\n';
  }
  return out;
}

DebugLog import_log(std::string_view bytes) {
  auto lines = split_lines(bytes);
  if (lines.empty() || lines[0] != kLogMagic) {
    throw ParseError("expected log header " + std::string(kLogMagic), 1);
  }
  DebugLog log;
  std::size_t i = 1;
  if (i < lines.size() && lines[i].starts_with(kLogMetaTag) &&
      (lines[i].size() == kLogMetaTag.size() ||
       lines[i][kLogMetaTag.size()] == '\t')) {
    auto fields = split_fields(lines[i], '\t');
    if (fields.size() != 3) {
      throw ParseError("log metadata record needs 3 fields", i + 1);
    }
    log.log_id = unescape_field(fields[1], i + 1);
    log.origin_id = unescape_field(fields[2], i + 1);
    ++i;
  }
  std::uint64_t sequence = 0;
  for (; i < lines.size(); ++i) {
    MonitorEvent e = parse_event_line(lines[i], i + 1);
    e.sequence = ++sequence;  // positional; the wire record carries none
    log.events.push_back(std::move(e));
  }
  return log;
}

DebugLog merge_logs(const DebugLog& a, const DebugLog& b) {
  DebugLog merged;
  merged.log_id = a.log_id + "+" + b.log_id;
  merged.origin_id =
      a.origin_id == b.origin_id ? a.origin_id : a.origin_id + "+" + b.origin_id;
  merged.events.reserve(a.events.size() + b.events.size());
  merged.events.insert(merged.events.end(), a.events.begin(), a.events.end());
  merged.events.insert(merged.events.end(), b.events.begin(), b.events.end());
  std::stable_sort(merged.events.begin(), merged.events.end(),
                   [](const MonitorEvent& x, const MonitorEvent& y) {
                     return std::tie(x.timestamp_us, x.origin_id, x.sequence) <
                            std::tie(y.timestamp_us, y.origin_id, y.sequence);
                   });
  return merged;
}

}  // namespace idbg
