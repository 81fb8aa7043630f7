#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idbg/event.hpp"

namespace idbg {

/// Immutable snapshot of an explicit call-site stack, outermost frame first.
class StackView {
 public:
  StackView() = default;
  explicit StackView(std::vector<CallSiteFrame> frames)
      : frames_(std::move(frames)) {}

  std::size_t depth() const noexcept { return frames_.size(); }
  bool empty() const noexcept { return frames_.empty(); }
  const CallSiteFrame& frame(std::size_t i) const { return frames_.at(i); }
  const std::vector<CallSiteFrame>& frames() const noexcept { return frames_; }

  bool operator==(const StackView&) const = default;

 private:
  std::vector<CallSiteFrame> frames_;
};

/// Snapshot of `frames` (outermost to innermost); later mutation of the
/// source leaves the view untouched.
StackView capture_stack(std::span<const CallSiteFrame> frames);

/// One line per frame, innermost first:
/// `at <class_id>.<operation> (<location|unknown>)`. Empty view, empty text.
std::string dump_stack(const StackView& view);

/// RAII frame on a per-thread stack, for call sites that prefer automatic
/// capture over passing frames explicitly.
class CallScope {
 public:
  CallScope(std::string class_id, std::string operation,
            std::optional<std::string> location = std::nullopt);
  ~CallScope();

  CallScope(const CallScope&) = delete;
  CallScope& operator=(const CallScope&) = delete;
};

/// Snapshot of the calling thread's CallScope frames.
StackView current_stack();

}  // namespace idbg
