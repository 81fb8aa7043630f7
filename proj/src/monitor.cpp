#include "idbg/monitor.hpp"

#include <array>
#include <cstdlib>

#include "idbg/errors.hpp"

namespace idbg {

bool should_emit(const Registry& r, std::string_view thread_id,
                 std::span<const std::string> group_path,
                 const CallSiteFrame& site, std::string_view category,
                 int level_value) {
  if (!r.global_enabled()) {
    return false;
  }
  ContextPtr ctx = r.resolve(thread_id, group_path);
  return ctx->admits(site.class_id, category, level_value);
}

bool should_emit(const Registry& r, std::string_view thread_id,
                 std::span<const std::string> group_path,
                 const CallSiteFrame& site, std::string_view category,
                 Level level) {
  return should_emit(r, thread_id, group_path, site, category, level.value());
}

namespace {

void deliver_event(Registry& r, const ContextPtr& ctx, std::string_view thread_id,
                   const CallSiteFrame& site, std::string_view category,
                   int level_value, std::string message) {
  ChannelPtr channel = r.channel(ctx->channel_id());
  if (!channel) {
    throw IoError("no channel registered under id: " + ctx->channel_id());
  }
  MonitorEvent e;
  e.thread_id = std::string(thread_id);
  e.origin_id = r.origin_id();
  e.category = std::string(category);
  e.level_value = level_value;
  e.level_label = ctx->semantics().level_label(level_value);
  e.call_site = site;
  e.message = std::move(message);
  channel->deliver(std::move(e));
}

}  // namespace

bool log(Registry& r, std::string_view thread_id,
         std::span<const std::string> group_path, const CallSiteFrame& site,
         std::string_view category, Level level, std::string_view message) {
  if (!should_emit(r, thread_id, group_path, site, category, level.value())) {
    return false;
  }
  ContextPtr ctx = r.resolve(thread_id, group_path);
  deliver_event(r, ctx, thread_id, site, category, level.value(),
                std::string(message));
  return true;
}

CheckOutcome check(Registry& r, std::string_view thread_id,
                   std::span<const std::string> group_path,
                   const CallSiteFrame& site, bool predicate,
                   std::string_view message, FailurePolicy policy) {
  if (predicate) {
    return CheckOutcome::Passed;
  }
  if (!r.global_enabled()) {
    return CheckOutcome::PassedInactive;
  }
  ContextPtr ctx = r.resolve(thread_id, group_path);
  if (!ctx->checks_active(site.class_id)) {
    return CheckOutcome::PassedInactive;
  }

  const Semantics& semantics = ctx->semantics();
  int failure_level = semantics.named_level(kLevelFailure).value();
  std::array<std::string, 1> args{std::string(message)};
  std::string text =
      semantics.render_template(kTemplateAssertionFailed, args)
          .value_or(std::string(message));

  // The event bypasses threshold and category tuning: assertions report
  // correctness, not verbosity.
  deliver_event(r, ctx, thread_id, site, std::string_view(kCategoryAssertion),
                failure_level, text);

  switch (policy) {
    case FailurePolicy::RaiseToCaller:
      throw AssertionFailure(text);
    case FailurePolicy::StopCurrentTask:
      throw TaskStopRequest(text);
    case FailurePolicy::HaltScope:
      ctx->set_enabled(false);
      return CheckOutcome::Failed;
    case FailurePolicy::HaltProcess:
      std::exit(kHaltProcessExitStatus);
  }
  return CheckOutcome::Failed;  // unreachable
}

}  // namespace idbg
