// Command-line front end: author and inspect context files, filter and merge
// debug logs, print statistics reports, and run the currying walkthrough.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "idbg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"idbg - structured monitoring and debugging toolkit"};
  app.require_subcommand(1);

  // ctx init
  auto* ctx_cmd = app.add_subcommand("ctx", "Author and edit context files");
  ctx_cmd->require_subcommand(1);

  std::string init_out;
  std::string init_semantics = "default";
  std::string init_channel = "console";
  auto* ctx_init = ctx_cmd->add_subcommand("init", "Write a fresh context file");
  ctx_init->add_option("--out", init_out, "Output path")->required();
  ctx_init->add_option("--semantics", init_semantics, "Semantics set")
      ->check(CLI::IsMember({"default", "wide"}));
  ctx_init->add_option("--channel", init_channel, "Output channel binding");

  // ctx set
  std::string set_path;
  idbg::cli::CtxSetOptions set_options;
  int set_threshold = 0;
  auto* ctx_set = ctx_cmd->add_subcommand("set", "Apply tuning to a context file");
  ctx_set->add_option("path", set_path, "Context file")->required();
  auto* threshold_opt =
      ctx_set->add_option("--threshold", set_threshold, "Monitoring level");
  ctx_set->add_option("--enable-cat", set_options.enable_categories,
                      "Enable a category");
  ctx_set->add_option("--disable-cat", set_options.disable_categories,
                      "Disable a category");
  ctx_set->add_option("--include-class", set_options.include_classes,
                      "Admit a class");
  ctx_set->add_option("--exclude-class", set_options.exclude_classes,
                      "Stop admitting a class");
  ctx_set->add_flag("--all-classes", set_options.all_classes,
                    "Admit every class, including ones not yet seen");
  ctx_set->add_flag("--no-classes", set_options.no_classes,
                    "Admit no class until some are included");

  // log filter / merge
  auto* log_cmd = app.add_subcommand("log", "Filter and merge debug logs");
  log_cmd->require_subcommand(1);

  std::string filter_log;
  std::string filter_ctx;
  auto* log_filter =
      log_cmd->add_subcommand("filter", "Replay a log through a context's filters");
  log_filter->add_option("logfile", filter_log, "Log file")->required();
  log_filter->add_option("--context", filter_ctx, "Context file")->required();

  std::string merge_a;
  std::string merge_b;
  std::string merge_out;
  auto* log_merge = log_cmd->add_subcommand("merge", "Merge two logs by timestamp");
  log_merge->add_option("a", merge_a, "First log")->required();
  log_merge->add_option("b", merge_b, "Second log")->required();
  log_merge->add_option("--out", merge_out, "Output path")->required();

  // demo curry
  auto* demo_cmd = app.add_subcommand("demo", "Demonstrations");
  demo_cmd->require_subcommand(1);
  auto* demo_curry = demo_cmd->add_subcommand(
      "curry", "Two-node call-stack currying walkthrough");

  // stats report
  auto* stats_cmd = app.add_subcommand("stats", "Statistics tooling");
  stats_cmd->require_subcommand(1);
  std::string stats_path;
  auto* stats_report =
      stats_cmd->add_subcommand("report", "Print a statistics snapshot report");
  stats_report->add_option("statsfile", stats_path, "Snapshot file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*ctx_init) {
    return idbg::cli::run_ctx_init(init_out, init_semantics, init_channel,
                                   std::cerr);
  }
  if (*ctx_set) {
    if (!threshold_opt->empty()) {
      set_options.threshold = set_threshold;
    }
    return idbg::cli::run_ctx_set(set_path, set_options, std::cerr);
  }
  if (*log_filter) {
    return idbg::cli::run_log_filter(filter_log, filter_ctx, std::cout,
                                     std::cerr);
  }
  if (*log_merge) {
    return idbg::cli::run_log_merge(merge_a, merge_b, merge_out, std::cerr);
  }
  if (*demo_curry) {
    return idbg::cli::run_demo_curry(std::cout, std::cerr);
  }
  if (*stats_report) {
    return idbg::cli::run_stats_report(stats_path, std::cout, std::cerr);
  }
  return 0;
}
