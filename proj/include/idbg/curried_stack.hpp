#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idbg/stack.hpp"

namespace idbg {

/// One hop's worth of call stack: who captured it, on which thread, when.
struct StackSegment {
  std::string origin_id;  // non-empty
  std::string thread_id;
  std::vector<CallSiteFrame> frames;  // outermost to innermost; may be empty
  std::int64_t captured_at_us = 0;

  bool operator==(const StackSegment&) const = default;
};

/// Call stack carried across communication boundaries, earliest hop first.
struct CurriedStack {
  std::vector<StackSegment> segments;

  bool operator==(const CurriedStack&) const = default;
};

/// Magic first line of the envelope wire format.
inline constexpr std::string_view kEnvelopeMagic = "IDBGCURRY/1";

/// Envelope wire text for a curried stack: magic line, then per segment a
/// `SEG <origin> <thread> <captured_at> <frame_count>` line followed by
/// `FRM <class> <operation> <location|->` lines. Fields space-separated,
/// space escaped as \s.
std::string serialize_curried(const CurriedStack& stack);

/// Appends a segment captured from `local` onto `prior` (if any) and
/// serializes the result for transport. The new segment is stamped with the
/// current time.
std::string export_envelope(const StackView& local, std::string_view origin_id,
                            std::string_view thread_id,
                            const CurriedStack* prior = nullptr);

/// Inverse of serialize_curried; ParseError names the first bad line.
CurriedStack import_envelope(std::string_view bytes);

/// Local frames first (innermost first), then for each remote segment,
/// newest hop first, a `--- curried from <origin>/<thread> ---` line and
/// that hop's frames innermost first. With no remote segments this equals
/// dump_stack(local).
std::string curried_dump(const StackView& local, const CurriedStack& remote);

}  // namespace idbg
