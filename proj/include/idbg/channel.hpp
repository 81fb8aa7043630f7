#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "idbg/event.hpp"

namespace idbg {

enum class ChannelKind { Console, Buffer, File, Recording };

/// A sink for monitor events. deliver() stamps the per-channel sequence
/// number and a nondecreasing timestamp and hands the event to the sink as
/// one atomic step, so interleaved writers never produce duplicate or
/// out-of-order sequence numbers on one channel.
class OutputChannel {
 public:
  OutputChannel(std::string channel_id, ChannelKind kind)
      : id_(std::move(channel_id)), kind_(kind) {}
  virtual ~OutputChannel() = default;

  OutputChannel(const OutputChannel&) = delete;
  OutputChannel& operator=(const OutputChannel&) = delete;

  const std::string& channel_id() const noexcept { return id_; }
  ChannelKind kind() const noexcept { return kind_; }

  /// Stamps and writes; returns the stamped sequence number.
  std::uint64_t deliver(MonitorEvent e);

 protected:
  virtual void write(const MonitorEvent& e) = 0;

 private:
  std::string id_;
  ChannelKind kind_;
  std::mutex mutex_;
  std::uint64_t next_sequence_ = 0;
  std::int64_t last_timestamp_us_ = 0;
};

using ChannelPtr = std::shared_ptr<OutputChannel>;

/// Writes one formatted line per event to an output stream.
class ConsoleChannel final : public OutputChannel {
 public:
  explicit ConsoleChannel(std::string channel_id, std::ostream& out);

 protected:
  void write(const MonitorEvent& e) override;

 private:
  std::ostream& out_;
};

/// Accumulates events in delivery order for later retrieval.
class BufferChannel final : public OutputChannel {
 public:
  explicit BufferChannel(std::string channel_id);

  std::vector<MonitorEvent> events() const;  // snapshot
  std::size_t size() const;
  void clear();

 protected:
  void write(const MonitorEvent& e) override;

 private:
  mutable std::mutex events_mutex_;
  std::vector<MonitorEvent> events_;
};

/// Appends formatted lines to a file; reopening appends across runs.
class FileChannel final : public OutputChannel {
 public:
  FileChannel(std::string channel_id, const std::string& path);  // IoError on open failure

 protected:
  void write(const MonitorEvent& e) override;  // IoError on write failure

 private:
  std::string path_;
  std::ofstream out_;
};

/// Formatted lines to standard error, channel id "console" by default.
ChannelPtr make_console_channel(std::string channel_id = "console");

ChannelPtr make_buffer_channel(std::string channel_id = "buffer");

ChannelPtr make_file_channel(const std::string& path, std::string channel_id = "file");

}  // namespace idbg
