#include "idbg/channel.hpp"

#include <algorithm>
#include <iostream>

#include "idbg/errors.hpp"

namespace idbg {

std::uint64_t OutputChannel::deliver(MonitorEvent e) {
  std::lock_guard<std::mutex> lock(mutex_);
  e.sequence = ++next_sequence_;
  // Timestamps are kept nondecreasing per channel so recorded streams stay
  // ordered by (timestamp, sequence).
  e.timestamp_us = std::max(now_micros(), last_timestamp_us_);
  last_timestamp_us_ = e.timestamp_us;
  write(e);
  return e.sequence;
}

ConsoleChannel::ConsoleChannel(std::string channel_id, std::ostream& out)
    : OutputChannel(std::move(channel_id), ChannelKind::Console), out_(out) {}

void ConsoleChannel::write(const MonitorEvent& e) {
  out_ << format_event(e) << '\n' << std::flush;
}

BufferChannel::BufferChannel(std::string channel_id)
    : OutputChannel(std::move(channel_id), ChannelKind::Buffer) {}

std::vector<MonitorEvent> BufferChannel::events() const {
  std::lock_guard<std::mutex> lock(events_mutex_);
  return events_;
}

std::size_t BufferChannel::size() const {
  std::lock_guard<std::mutex> lock(events_mutex_);
  return events_.size();
}

void BufferChannel::clear() {
  std::lock_guard<std::mutex> lock(events_mutex_);
  events_.clear();
}

void BufferChannel::write(const MonitorEvent& e) {
  std::lock_guard<std::mutex> lock(events_mutex_);
  events_.push_back(e);
}

FileChannel::FileChannel(std::string channel_id, const std::string& path)
    : OutputChannel(std::move(channel_id), ChannelKind::File),
      path_(path),
      out_(path, std::ios::app) {
  if (!out_.is_open()) {
    throw IoError("cannot open log file: " + path);
  }
}

void FileChannel::write(const MonitorEvent& e) {
  out_ << format_event(e) << '\n';
  out_.flush();
  if (!out_) {
    throw IoError("write failed: " + path_);
  }
}

ChannelPtr make_console_channel(std::string channel_id) {
  return std::make_shared<ConsoleChannel>(std::move(channel_id), std::cerr);
}

ChannelPtr make_buffer_channel(std::string channel_id) {
  return std::make_shared<BufferChannel>(std::move(channel_id));
}

ChannelPtr make_file_channel(const std::string& path, std::string channel_id) {
  return std::make_shared<FileChannel>(std::move(channel_id), path);
}

}  // namespace idbg
