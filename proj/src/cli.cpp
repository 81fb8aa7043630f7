#include "idbg/cli.hpp"

#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "idbg/context_file.hpp"
#include "idbg/curried_stack.hpp"
#include "idbg/debug_log.hpp"
#include "idbg/errors.hpp"
#include "idbg/escape.hpp"
#include "idbg/monitor.hpp"
#include "idbg/statistics.hpp"

namespace idbg::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitIo = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) {
    throw IoError("cannot open: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed: " + path);
  }
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.is_open()) {
    throw IoError("cannot write: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

/// Single-slot blocking pipe; stands in for the communication medium in the
/// currying walkthrough.
class BytePipe {
 public:
  void push(std::string bytes) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      slot_ = std::move(bytes);
    }
    ready_.notify_one();
  }

  std::string pop() {
    std::unique_lock<std::mutex> lock(mutex_);
    ready_.wait(lock, [this] { return slot_.has_value(); });
    std::string bytes = std::move(*slot_);
    slot_.reset();
    return bytes;
  }

 private:
  std::mutex mutex_;
  std::condition_variable ready_;
  std::optional<std::string> slot_;
};

}  // namespace

int run_ctx_init(const std::string& out_path, const std::string& semantics_kind,
                 const std::string& channel_id, std::ostream& err) {
  Semantics semantics = make_default_semantics();
  if (semantics_kind == "wide") {
    semantics = make_wide_semantics();
  } else if (semantics_kind != "default") {
    err << "unknown semantics set: " << semantics_kind << "\n";
    return kExitBadInput;
  }
  try {
    ContextPtr ctx = make_context(std::move(semantics), channel_id);
    write_file(out_path, save_context(*ctx));
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_ctx_set(const std::string& path, const CtxSetOptions& options,
                std::ostream& err) {
  ContextPtr ctx;
  try {
    ctx = load_context(read_file(path));
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (options.all_classes) {
      ctx->class_filter_add_all();
    }
    if (options.no_classes) {
      ctx->class_filter_remove_all();
    }
    for (const std::string& name : options.include_classes) {
      ctx->class_filter_add(name);
    }
    for (const std::string& name : options.exclude_classes) {
      ctx->class_filter_remove(name);
    }
    if (options.threshold) {
      ctx->set_threshold_value(*options.threshold);
    }
    for (const std::string& name : options.enable_categories) {
      ctx->enable_category(name);
    }
    for (const std::string& name : options.disable_categories) {
      ctx->disable_category(name);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    write_file(path, save_context(*ctx));
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_log_filter(const std::string& log_path, const std::string& ctx_path,
                   std::ostream& out, std::ostream& err) {
  try {
    ContextPtr ctx = load_context(read_file(ctx_path));
    std::string log_text = read_file(log_path);

    Registry registry(ctx);
    registry.set_global_enabled(true);

    DebugLog log = import_log(log_text);
    for (const MonitorEvent& e : log.events) {
      if (should_emit(registry, e.thread_id, {}, e.call_site, e.category,
                      e.level_value)) {
        out << format_event(e) << '\n';
      }
    }
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int run_log_merge(const std::string& a_path, const std::string& b_path,
                  const std::string& out_path, std::ostream& err) {
  DebugLog merged;
  try {
    merged = merge_logs(import_log(read_file(a_path)),
                        import_log(read_file(b_path)));
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    write_file(out_path, export_log(merged));
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_demo_curry(std::ostream& out, std::ostream& err) {
  try {
    BytePipe pipe;

    // Node A: build the calling stack and ship it inside the envelope.
    std::thread node_a([&pipe] {
      std::vector<CallSiteFrame> frames{
          {"A", "main", "node_a.app:12"},
          {"A", "m", "node_a.app:27"},
      };
      StackView stack = capture_stack(frames);
      pipe.push(export_envelope(stack, "A", "main"));
    });

    // Node B: import the envelope, fail an assertion while handling the
    // call, and dump the combined stack.
    std::string dump;
    std::exception_ptr failure;
    std::thread node_b([&pipe, &dump, &failure] {
      try {
        CurriedStack remote = import_envelope(pipe.pop());
        std::vector<CallSiteFrame> frames{
            {"B", "main", "node_b.app:9"},
            {"B", "handle_request", "node_b.app:41"},
        };
        StackView local = capture_stack(frames);

        Registry registry(make_context(make_default_semantics(), "console"),
                          "B");
        registry.set_global_enabled(true);
        registry.register_channel(make_console_channel());
        try {
          check(registry, "svc", {}, frames.back(), false,
                "request state consistent with caller",
                FailurePolicy::RaiseToCaller);
        } catch (const AssertionFailure&) {
          dump = curried_dump(local, remote);
        }
      } catch (...) {
        failure = std::current_exception();
      }
    });

    node_a.join();
    node_b.join();
    if (failure) {
      std::rethrow_exception(failure);
    }
    out << dump;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int run_stats_report(const std::string& stats_path, std::ostream& out,
                     std::ostream& err) {
  try {
    StatisticsRegistry reg = load_statistics(read_file(stats_path));
    out << reg.report_all();
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace idbg::cli
