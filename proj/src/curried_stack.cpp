#include "idbg/curried_stack.hpp"

#include <charconv>

#include "idbg/errors.hpp"
#include "idbg/escape.hpp"

namespace idbg {

namespace {

constexpr std::string_view kSegmentTag = "SEG";
constexpr std::string_view kFrameTag = "FRM";
constexpr std::string_view kNoLocation = "-";

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

std::string serialize_curried(const CurriedStack& stack) {
  std::string out(kEnvelopeMagic);
  out += '\n';
  for (const StackSegment& segment : stack.segments) {
    out += kSegmentTag;
    out += ' ';
    out += escape_spaced_field(segment.origin_id);
    out += ' ';
    out += escape_spaced_field(segment.thread_id);
    out += ' ';
    out += std::to_string(segment.captured_at_us);
    out += ' ';
    out += std::to_string(segment.frames.size());
    out += '\n';
    for (const CallSiteFrame& frame : segment.frames) {
      out += kFrameTag;
      out += ' ';
      out += escape_spaced_field(frame.class_id);
      out += ' ';
      out += escape_spaced_field(frame.operation);
      out += ' ';
      out += frame.location ? escape_spaced_field(*frame.location)
                            : std::string(kNoLocation);
      out += '\n';
    }
  }
  return out;
}

std::string export_envelope(const StackView& local, std::string_view origin_id,
                            std::string_view thread_id,
                            const CurriedStack* prior) {
  CurriedStack combined;
  if (prior != nullptr) {
    combined.segments = prior->segments;
  }
  StackSegment segment;
  segment.origin_id = std::string(origin_id);
  segment.thread_id = std::string(thread_id);
  segment.frames = local.frames();
  segment.captured_at_us = now_micros();
  combined.segments.push_back(std::move(segment));
  return serialize_curried(combined);
}

CurriedStack import_envelope(std::string_view bytes) {
  auto lines = split_lines(bytes);
  if (lines.empty() || lines[0] != kEnvelopeMagic) {
    throw ParseError("expected envelope header " + std::string(kEnvelopeMagic), 1);
  }
  CurriedStack stack;
  std::size_t i = 1;
  while (i < lines.size()) {
    std::size_t line_no = i + 1;
    auto fields = split_fields(lines[i], ' ');
    if (fields.empty() || fields[0] != kSegmentTag) {
      throw ParseError("expected segment record", line_no);
    }
    if (fields.size() != 5) {
      throw ParseError("segment record needs 5 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    StackSegment segment;
    segment.origin_id = unescape_field(fields[1], line_no);
    segment.thread_id = unescape_field(fields[2], line_no);
    segment.captured_at_us = parse_int<std::int64_t>(fields[3], "timestamp", line_no);
    auto frame_count = parse_int<std::uint64_t>(fields[4], "frame count", line_no);
    if (segment.origin_id.empty()) {
      throw ParseError("segment origin must be non-empty", line_no);
    }
    ++i;
    for (std::uint64_t f = 0; f < frame_count; ++f, ++i) {
      std::size_t frame_line_no = i + 1;
      if (i >= lines.size()) {
        throw ParseError("unexpected end: expected " + std::to_string(frame_count) +
                             " frame records",
                         frame_line_no);
      }
      auto frame_fields = split_fields(lines[i], ' ');
      if (frame_fields.size() != 4 || frame_fields[0] != kFrameTag) {
        throw ParseError("expected frame record", frame_line_no);
      }
      CallSiteFrame frame;
      frame.class_id = unescape_field(frame_fields[1], frame_line_no);
      frame.operation = unescape_field(frame_fields[2], frame_line_no);
      if (frame_fields[3] != kNoLocation) {
        frame.location = unescape_field(frame_fields[3], frame_line_no);
      }
      if (frame.class_id.empty()) {
        throw ParseError("empty class id in frame record", frame_line_no);
      }
      segment.frames.push_back(std::move(frame));
    }
    stack.segments.push_back(std::move(segment));
  }
  return stack;
}

std::string curried_dump(const StackView& local, const CurriedStack& remote) {
  std::string out = dump_stack(local);
  for (std::size_t i = remote.segments.size(); i > 0; --i) {
    const StackSegment& segment = remote.segments[i - 1];
    out += "--- curried from ";
    out += segment.origin_id;
    out += '/';
    out += segment.thread_id;
    out += " ---\n";
    out += dump_stack(StackView(segment.frames));
  }
  return out;
}

}  // namespace idbg
