#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idbg/channel.hpp"
#include "idbg/context.hpp"

namespace idbg {

/// Environment variable consulted at Registry construction: "0" starts the
/// registry with monitoring globally disabled, anything else (or unset)
/// starts it enabled. An out-of-band kill switch for shipped code.
inline constexpr const char* kEnableEnvVar = "IDBG_ENABLE";

/// Runtime owner of the global enable switch, thread and thread-group
/// bindings, the group hierarchy and the channel table.
///
/// Bindings hold references, not copies: threads bound to one context
/// observe each other's tuning changes immediately.
class Registry {
 public:
  explicit Registry(ContextPtr global_context, std::string origin_id = "local");

  bool global_enabled() const noexcept;
  /// Overrides every other setting when off; prior tuning stays intact.
  void set_global_enabled(bool on) noexcept;

  const std::string& origin_id() const noexcept { return origin_id_; }

  ContextPtr global_context() const;

  /// Rebinding replaces the prior binding silently.
  void bind_thread(std::string thread_id, ContextPtr ctx);
  void bind_group(std::string group_id, ContextPtr ctx);

  /// Declares `group_id` a child of `parent_id`. The hierarchy is supplied
  /// by the embedding application; cycles are a UsageError.
  void set_group_parent(std::string group_id, std::string parent_id);

  /// Chain from `group_id` to its outermost ancestor, innermost first.
  std::vector<std::string> group_chain(const std::string& group_id) const;

  /// The thread's bound context if any; else the context of the innermost
  /// bound group on `group_path` (ordered innermost to outermost); else the
  /// global context.
  ContextPtr resolve(std::string_view thread_id,
                     std::span<const std::string> group_path) const;

  void register_channel(ChannelPtr channel);  // UsageError on duplicate id
  ChannelPtr channel(std::string_view channel_id) const;  // nullptr when absent

 private:
  std::string origin_id_;
  std::atomic<bool> global_enabled_;

  mutable std::mutex mutex_;
  ContextPtr global_context_;
  std::map<std::string, ContextPtr, std::less<>> thread_bindings_;
  std::map<std::string, ContextPtr, std::less<>> group_bindings_;
  std::map<std::string, std::string, std::less<>> group_parents_;
  std::map<std::string, ChannelPtr, std::less<>> channels_;
};

}  // namespace idbg
