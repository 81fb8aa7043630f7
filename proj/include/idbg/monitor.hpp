#pragma once

#include <span>
#include <string>
#include <string_view>

#include "idbg/registry.hpp"
#include "idbg/stack.hpp"

namespace idbg {

/// What happens after a failed assertion has been logged.
enum class FailurePolicy {
  RaiseToCaller,    // throw AssertionFailure
  StopCurrentTask,  // throw TaskStopRequest, to be caught at the task boundary
  HaltScope,        // disable the resolved context
  HaltProcess,      // exit the process with kHaltProcessExitStatus
};

enum class CheckOutcome {
  Passed,          // predicate held
  PassedInactive,  // predicate failed but checking is off for this site
  Failed,          // policy applied without unwinding (HaltScope)
};

inline constexpr int kHaltProcessExitStatus = 70;

/// The emission decision: global enable, resolved context enabled, class
/// filter admits the site, category known and enabled, and
/// level >= max(threshold, category level). Pure; evaluating it any number
/// of times changes no observable state.
bool should_emit(const Registry& r, std::string_view thread_id,
                 std::span<const std::string> group_path,
                 const CallSiteFrame& site, std::string_view category,
                 Level level);

/// Replay form taking the raw level value (log records carry values, not
/// Level handles).
bool should_emit(const Registry& r, std::string_view thread_id,
                 std::span<const std::string> group_path,
                 const CallSiteFrame& site, std::string_view category,
                 int level_value);

/// Logs one event when should_emit allows it; returns whether it emitted.
/// The event is stamped with the registry origin, the thread id, and the
/// level label from the resolved context's semantics, then delivered to that
/// context's channel. An unresolvable channel binding or a channel write
/// failure is an IoError; registry state is untouched either way.
bool log(Registry& r, std::string_view thread_id,
         std::span<const std::string> group_path, const CallSiteFrame& site,
         std::string_view category, Level level, std::string_view message);

/// Assertion check. A true predicate passes without emission. A false
/// predicate with checking active for the site (global enable, context
/// enabled, class filter admits it) emits exactly one FAILURE-level event in
/// category ASSERTION - bypassing threshold and category tuning - and then
/// applies the policy. With checking inactive a false predicate is a silent
/// no-op, so instrumented code can ship with assertions disarmed.
CheckOutcome check(Registry& r, std::string_view thread_id,
                   std::span<const std::string> group_path,
                   const CallSiteFrame& site, bool predicate,
                   std::string_view message,
                   FailurePolicy policy = FailurePolicy::RaiseToCaller);

}  // namespace idbg
