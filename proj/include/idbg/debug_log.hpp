#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "idbg/channel.hpp"
#include "idbg/event.hpp"

namespace idbg {

/// A serializable recorded event stream, built while disconnected and
/// inspected or merged later. Streams produced by a recording channel are
/// ordered by (timestamp, sequence) nondecreasing.
struct DebugLog {
  std::string log_id;
  std::string origin_id;
  std::vector<MonitorEvent> events;

  bool operator==(const DebugLog&) const = default;
};

/// A channel that appends every delivered event into an in-memory DebugLog,
/// stamping events with the channel's origin.
class RecordingChannel final : public OutputChannel {
 public:
  RecordingChannel(std::string log_id, std::string origin_id);

  const std::string& origin_id() const noexcept { return origin_id_; }
  DebugLog log() const;  // snapshot
  std::size_t size() const;

 protected:
  void write(const MonitorEvent& e) override;

 private:
  std::string origin_id_;
  mutable std::mutex log_mutex_;
  DebugLog log_;
};

std::shared_ptr<RecordingChannel> make_recording_channel(std::string log_id,
                                                         std::string origin_id);

/// Log file text: magic line, a `LOG <id> <origin>` metadata record, then
/// one event line per event.
std::string export_log(const DebugLog& l);

/// Inverse of export_log. The metadata record is optional so hand-made
/// fixtures stay loadable; imported events get positional sequence numbers.
DebugLog import_log(std::string_view bytes);

/// Events of both logs totally ordered by (timestamp, origin_id, sequence),
/// stable for equal keys (a's events before b's). Merged log id is
/// `<a.log_id>+<b.log_id>`; origins combine the same way when they differ.
DebugLog merge_logs(const DebugLog& a, const DebugLog& b);

}  // namespace idbg
