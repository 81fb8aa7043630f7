#include "idbg/registry.hpp"

#include <cstdlib>
#include <cstring>

#include "idbg/errors.hpp"

namespace idbg {

namespace {

bool initial_enable_state() {
  const char* value = std::getenv(kEnableEnvVar);
  return value == nullptr || std::strcmp(value, "0") != 0;
}

}  // namespace

Registry::Registry(ContextPtr global_context, std::string origin_id)
    : origin_id_(std::move(origin_id)),
      global_enabled_(initial_enable_state()),
      global_context_(std::move(global_context)) {
  if (!global_context_) {
    throw UsageError("registry requires a global context");
  }
}

bool Registry::global_enabled() const noexcept {
  return global_enabled_.load(std::memory_order_seq_cst);
}

void Registry::set_global_enabled(bool on) noexcept {
  global_enabled_.store(on, std::memory_order_seq_cst);
}

ContextPtr Registry::global_context() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return global_context_;
}

void Registry::bind_thread(std::string thread_id, ContextPtr ctx) {
  if (!ctx) {
    throw UsageError("cannot bind a null context");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  thread_bindings_[std::move(thread_id)] = std::move(ctx);
}

void Registry::bind_group(std::string group_id, ContextPtr ctx) {
  if (!ctx) {
    throw UsageError("cannot bind a null context");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  group_bindings_[std::move(group_id)] = std::move(ctx);
}

void Registry::set_group_parent(std::string group_id, std::string parent_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  // Reject anything that would close a cycle through group_id.
  std::string_view probe = parent_id;
  while (true) {
    if (probe == group_id) {
      throw UsageError("group hierarchy cycle through: " + group_id);
    }
    auto it = group_parents_.find(probe);
    if (it == group_parents_.end()) {
      break;
    }
    probe = it->second;
  }
  group_parents_[std::move(group_id)] = std::move(parent_id);
}

std::vector<std::string> Registry::group_chain(const std::string& group_id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<std::string> chain{group_id};
  std::string_view current = group_id;
  while (true) {
    auto it = group_parents_.find(current);
    if (it == group_parents_.end()) {
      break;
    }
    chain.push_back(it->second);
    current = it->second;
  }
  return chain;
}

ContextPtr Registry::resolve(std::string_view thread_id,
                             std::span<const std::string> group_path) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto thread_it = thread_bindings_.find(thread_id);
  if (thread_it != thread_bindings_.end()) {
    return thread_it->second;
  }
  for (const std::string& group : group_path) {
    auto group_it = group_bindings_.find(group);
    if (group_it != group_bindings_.end()) {
      return group_it->second;
    }
  }
  return global_context_;
}

void Registry::register_channel(ChannelPtr channel) {
  if (!channel) {
    throw UsageError("cannot register a null channel");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = channels_.emplace(channel->channel_id(), channel);
  if (!inserted) {
    throw UsageError("channel id already registered: " + channel->channel_id());
  }
}

ChannelPtr Registry::channel(std::string_view channel_id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = channels_.find(channel_id);
  return it == channels_.end() ? nullptr : it->second;
}

}  // namespace idbg
