#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace idbg::cli {

// Command implementations behind the idbg tool. Each returns a process exit
// status: 0 success, 1 invalid value or malformed input, 2 I/O failure.
// Commands run with monitoring forced on regardless of IDBG_ENABLE.

int run_ctx_init(const std::string& out_path, const std::string& semantics_kind,
                 const std::string& channel_id, std::ostream& err);

struct CtxSetOptions {
  std::optional<int> threshold;
  std::vector<std::string> enable_categories;
  std::vector<std::string> disable_categories;
  std::vector<std::string> include_classes;
  std::vector<std::string> exclude_classes;
  bool all_classes = false;
  bool no_classes = false;
};

/// Applies mutations to a context file and rewrites it. Wholesale filter
/// resets (--all-classes / --no-classes) run first, then per-class edits,
/// then threshold and category changes.
int run_ctx_set(const std::string& path, const CtxSetOptions& options,
                std::ostream& err);

/// Replays a log through the emission filter under the given context (global
/// enable on, the context as sole binding); surviving lines go to `out`.
int run_log_filter(const std::string& log_path, const std::string& ctx_path,
                   std::ostream& out, std::ostream& err);

int run_log_merge(const std::string& a_path, const std::string& b_path,
                  const std::string& out_path, std::ostream& err);

/// Two-node currying walkthrough: node A exports its stack in an envelope
/// over an in-process pipe, node B imports it, fails an assertion, and the
/// combined stack dump lands on `out`.
int run_demo_curry(std::ostream& out, std::ostream& err);

int run_stats_report(const std::string& stats_path, std::ostream& out,
                     std::ostream& err);

}  // namespace idbg::cli
