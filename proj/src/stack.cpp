#include "idbg/stack.hpp"

namespace idbg {

namespace {

thread_local std::vector<CallSiteFrame> t_frames;

}  // namespace

StackView capture_stack(std::span<const CallSiteFrame> frames) {
  return StackView(std::vector<CallSiteFrame>(frames.begin(), frames.end()));
}

std::string dump_stack(const StackView& view) {
  std::string out;
  for (std::size_t i = view.depth(); i > 0; --i) {
    const CallSiteFrame& frame = view.frame(i - 1);
    out += "at ";
    out += frame.class_id;
    out += '.';
    out += frame.operation;
    out += " (";
    out += frame.location ? *frame.location : "unknown";
    out += ")\n";
  }
  return out;
}

CallScope::CallScope(std::string class_id, std::string operation,
                     std::optional<std::string> location) {
  t_frames.push_back(CallSiteFrame{std::move(class_id), std::move(operation),
                                   std::move(location)});
}

CallScope::~CallScope() { t_frames.pop_back(); }

StackView current_stack() { return StackView(t_frames); }

}  // namespace idbg
